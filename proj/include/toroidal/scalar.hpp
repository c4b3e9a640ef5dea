#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace toroidal {

using Rational = mpq_class;

/// Exact element a + b*sqrt(-1) of the Gaussian rationals.
///
/// Both parts are kept canonical (reduced, positive denominator), so
/// structural equality is field equality. Values are immutable in use and
/// safe to share between threads.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im = 0);

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  /// a^2 + b^2
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws std::domain_error when o is zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text: "3/4", "-2*i", "1/2 - 3/4*i", "i". Round-trips through parse().
  std::string to_string() const;
  /// Inverse of to_string(); also accepts "a/b + c/d*i" with arbitrary spacing.
  /// Throws std::invalid_argument on malformed input.
  static GaussianRational parse(std::string_view text);

 private:
  Rational re_{0};
  Rational im_{0};
};

enum class ArithOp { add, sub, mul, div, neg };

/// Dispatching form of the field operations. `neg` ignores y.
GaussianRational arith(ArithOp op, const GaussianRational& x, const GaussianRational& y);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Multiplicative prefix for rendering c*expr: "" for 1, "-" for -1,
/// "sqrt(-1)*" for i, otherwise the value followed by '*'.
std::string coefficient_prefix(const GaussianRational& c);

}  // namespace toroidal
