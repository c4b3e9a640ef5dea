#include <doctest.h>

#include "support.hpp"

using namespace toroidal;
using testing::random_scalar;

TEST_CASE("arith examples") {
  const GaussianRational one(1), i = GaussianRational::i();
  CHECK(arith(ArithOp::mul, one + i, one - i) == GaussianRational(2));
  CHECK(arith(ArithOp::div, one, i) == -i);
  CHECK(arith(ArithOp::mul, i, i) == GaussianRational(-1));
  CHECK(arith(ArithOp::neg, i, 0) == -i);
  CHECK(arith(ArithOp::sub, one, one).is_zero());
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(arith(ArithOp::div, GaussianRational(3), GaussianRational()), std::domain_error);
}

TEST_CASE("every construction of the imaginary unit squares to -1") {
  const GaussianRational a = GaussianRational::i();
  const GaussianRational b(Rational(0), Rational(1));
  const GaussianRational c = GaussianRational::parse("i");
  const GaussianRational d = GaussianRational::parse("0 + 1*i");
  for (const auto& x : {a, b, c, d}) CHECK(x * x == GaussianRational(-1));
}

TEST_CASE("parts are stored reduced") {
  GaussianRational x(Rational(6, 8), Rational(-10, 4));
  CHECK(x.re().get_num() == 3);
  CHECK(x.re().get_den() == 4);
  CHECK(x.im().get_num() == -5);
  CHECK(x.im().get_den() == 2);
  CHECK(x == GaussianRational(Rational(3, 4), Rational(-5, 2)));
}

TEST_CASE("field axioms on random triples") {
  for (int t = 0; t < 300; ++t) {
    const auto x = random_scalar(), y = random_scalar(), z = random_scalar();
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == GaussianRational());
    if (!x.is_zero()) {
      CHECK(x * (GaussianRational(1) / x) == GaussianRational(1));
      CHECK((y / x) * x == y);
    }
  }
}

TEST_CASE("text rendering") {
  CHECK(GaussianRational(Rational(3, 4)).to_string() == "3/4");
  CHECK(GaussianRational::i().to_string() == "i");
  CHECK((-GaussianRational::i()).to_string() == "-i");
  CHECK(GaussianRational(Rational(0), Rational(3)).to_string() == "3*i");
  CHECK(GaussianRational(Rational(1, 2), Rational(-3, 4)).to_string() == "1/2 - 3/4*i");
  CHECK(GaussianRational().to_string() == "0");
}

TEST_CASE("rendering re-parses to the same value") {
  for (int t = 0; t < 300; ++t) {
    const auto x = random_scalar();
    CHECK(GaussianRational::parse(x.to_string()) == x);
  }
  CHECK(GaussianRational::parse(" -1/2  +  -3/4*i ") == GaussianRational(Rational(-1, 2), Rational(-3, 4)));
  CHECK_THROWS_AS(GaussianRational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(GaussianRational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(GaussianRational::parse(""), std::invalid_argument);
}

TEST_CASE("large intermediate values stay exact") {
  GaussianRational x(1);
  for (int k = 1; k <= 40; ++k) x *= GaussianRational(Rational(k + 1, k));
  CHECK(x == GaussianRational(41));
  GaussianRational y(Rational(1), Rational(1));
  for (int k = 0; k < 64; ++k) y *= GaussianRational(Rational(1), Rational(1));
  // (1+i)^65 = 2^32 (1+i)
  CHECK(y == GaussianRational(Rational(mpz_class(1) << 32), Rational(mpz_class(1) << 32)));
}
