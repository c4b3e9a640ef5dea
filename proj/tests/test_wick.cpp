#include <doctest.h>

#include <chrono>

#include "support.hpp"
#include "toroidal/verify.hpp"

using namespace toroidal;
using namespace toroidal::wick;
using testing::eps;

namespace {

const RankParams P21{2, 1};
const RankParams P12{1, 2};

}  // namespace

TEST_CASE("contraction rules") {
  const LatticeVector e1 = eps(P21, 1), e2 = eps(P21, 2);
  auto f = contraction(Atom::fermion(e1), Atom::fermion(-e1));
  REQUIRE(f);
  CHECK(f->order == 1);
  CHECK(f->coef == GaussianRational(cocycle(e1, -e1)));
  CHECK_FALSE(contraction(Atom::fermion(e1), Atom::fermion(-e2)));
  CHECK_FALSE(contraction(Atom::fermion(e1), Atom::fermion(e1)));

  auto w = contraction(Atom::weyl(BosonLabel::delta(1)), Atom::weyl(BosonLabel::delta(1, true)));
  REQUIRE(w);
  CHECK(w->order == 1);
  CHECK(w->coef == GaussianRational(1));
  auto ws = contraction(Atom::weyl(BosonLabel::delta(1, true)), Atom::weyl(BosonLabel::delta(1)));
  REQUIRE(ws);
  CHECK(ws->coef == GaussianRational(-1));
  CHECK_FALSE(contraction(Atom::weyl(BosonLabel::delta(1)), Atom::weyl(BosonLabel::delta(2, true))));

  auto h = contraction(Atom::heis(e1 + e2), Atom::heis(e1));
  REQUIRE(h);
  CHECK(h->order == 2);
  CHECK(h->coef == GaussianRational(1));
  CHECK_FALSE(contraction(Atom::heis(e1), Atom::weyl(BosonLabel::delta(1))));
}

TEST_CASE("free-field brackets") {
  const LatticeVector e1 = eps(P21, 1), e2 = eps(P21, 2);
  const Poles ff = wick_bracket(Expr::monomial({Atom::fermion(e1)}), Expr::monomial({Atom::fermion(-e1)}));
  REQUIRE(ff.coeffs.size() == 1);
  CHECK(ff.coeffs[0] == Expr::scalar(cocycle(e1, -e1)));

  const Poles hh = wick_bracket(Expr::monomial({Atom::heis(e1 - e2)}), Expr::monomial({Atom::heis(e1)}));
  REQUIRE(hh.coeffs.size() == 2);
  CHECK(hh.coeffs[0].is_zero());
  CHECK(hh.coeffs[1] == Expr::scalar(1));

  CHECK(wick_bracket(Expr::monomial({Atom::fermion(e1)}), Expr::monomial({Atom::fermion(e2)})).is_zero());
  CHECK(wick_bracket(Expr::scalar(1), Expr::monomial({Atom::fermion(e1)})).is_zero());
}

TEST_CASE("missing contraction rules are reported") {
  const LatticeVector e1 = eps(P21, 1);
  CHECK_THROWS_WITH_AS(wick_bracket(Expr::monomial({Atom::heis(e1)}), Expr::monomial({Atom::fermion(e1)})),
                       doctest::Contains("missing contraction rule"), std::invalid_argument);
  CHECK_THROWS_AS(wick_nested({Expr::scalar(1)}), std::invalid_argument);
}

TEST_CASE("singular parts of generator brackets") {
  CHECK(ope(P21, GeneratorId::x(0, 1), GeneratorId::x(0, -1)) ==
        "-(alpha0(w))delta(z-w) - d_w delta(z-w)");
  CHECK(ope(P21, GeneratorId::x(1, 1), GeneratorId::x(1, -1)) ==
        "-(alpha1(w))delta(z-w) - d_w delta(z-w)");
  CHECK(ope(P21, GeneratorId::x(4, 1), GeneratorId::x(4, -1)) ==
        "(alpha4(w))delta(z-w) + d_w delta(z-w)");
  CHECK(ope(P21, GeneratorId::alpha(1), GeneratorId::x(1, 1)) == "2*(x1+(w))delta(z-w)");
  CHECK(ope(P21, GeneratorId::alpha(0), GeneratorId::alpha(0)) == "0");
  CHECK(ope(P21, GeneratorId::alpha(1), GeneratorId::alpha(2)) == "-d_w delta(z-w)");
  CHECK(ope(P21, GeneratorId::central(), GeneratorId::x(0, 1)) == "0");
  CHECK(ope(P12, GeneratorId::x(3, 1), GeneratorId::x(4, 1)) == "(:d1d3*:(w))delta(z-w)");
  CHECK_THROWS_AS(ope(P21, GeneratorId::x(7, 1), GeneratorId::x(0, 1)), std::out_of_range);
}

TEST_CASE("oracle forms are the representation fields") {
  for (const RankParams& p : {P21, P12}) {
    const Representation rep(p);
    const auto states = testing::small_states(p, 1, 1);
    for (const auto& g : generators(p)) {
      auto diff = fields_equal_on(to_field(oracle_form(p, g)), rep.field(g), -2, 2, states);
      CHECK_MESSAGE(!diff, g.name());
    }
  }
}

TEST_CASE("oracle brackets agree with direct mode computation for every pair") {
  for (const RankParams& p : {P21, P12}) {
    const Representation rep(p);
    const auto states = testing::small_states(p, 1, 1);
    const auto gens = generators(p);
    for (const auto& a : gens)
      for (const auto& b : gens) {
        const InstanceRecord r = verify_oracle_case(rep, OracleCase{{a, b}}, 1, states);
        CHECK_MESSAGE(r.pass, (r.id + ": " + r.counterexample));
      }
  }
}

TEST_CASE("nested oracle brackets") {
  const Representation rep(P21);
  const auto states = testing::small_states(P21, 1, 1);
  const auto x = [](int i) { return GeneratorId::x(i, 1); };
  const auto y = [](int i) { return GeneratorId::x(i, -1); };
  for (const auto& chain : std::vector<std::vector<GeneratorId>>{
           {x(0), x(0), x(1)}, {x(1), x(1), x(2)}, {x(3), x(3), x(4)}, {y(4), y(4), y(3)}, {x(0), y(0), x(0)}}) {
    const InstanceRecord r = verify_oracle_case(rep, OracleCase{chain}, 1, states);
    CHECK_MESSAGE(r.pass, (r.id + ": " + r.counterexample));
  }
  // the odd Serre chain at node 0 vanishes identically
  const NestedPoles serre = wick_nested({oracle_form(P21, x(0)), oracle_form(P21, x(0)), oracle_form(P21, x(1))});
  for (const auto& [orders, e] : serre) CHECK(e.is_zero());
}
