#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toroidal/toroidal.hpp"

namespace toroidal::wick {

/// A free field admitted by the oracle.
///
/// `fermion`: X(+/-eps_i), odd. `weyl`: a generator of P + P*, even.
/// `heis`: a Heisenberg field alpha(z), even.
struct Atom {
  enum class Kind { fermion, weyl, heis };
  Kind kind = Kind::weyl;
  LatticeVector vec;
  BosonLabel label;

  static Atom fermion(LatticeVector v) { return {Kind::fermion, std::move(v), {}}; }
  static Atom weyl(BosonLabel l) { return {Kind::weyl, {}, l}; }
  static Atom heis(LatticeVector v) { return {Kind::heis, std::move(v), {}}; }

  int parity() const { return kind == Kind::fermion ? 1 : 0; }
  std::string render() const;
  auto operator<=>(const Atom&) const = default;
};

/// Normally ordered product of atoms; the empty monomial is the constant 1.
using Monomial = std::vector<Atom>;

/// Finite linear combination of normally ordered monomials, kept canonical:
/// atoms sorted with Koszul signs, repeated odd atoms removed, no zero terms.
class Expr {
 public:
  Expr() = default;
  static Expr scalar(const GaussianRational& c);
  static Expr monomial(Monomial atoms, const GaussianRational& c = 1);

  void add(Monomial atoms, const GaussianRational& c);
  Expr& operator+=(const Expr& o);
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b);
  friend Expr operator*(const GaussianRational& c, Expr a);
  friend bool operator==(const Expr&, const Expr&) = default;

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, GaussianRational>& terms() const { return terms_; }
  /// Parity of the (homogeneous) expression; 0 for the zero expression.
  int parity() const;
  /// "(:d1d1*:(w) - :d2d2*:(w))" style rendering with every field at `point`.
  std::string render(const std::string& point = "w") const;

 private:
  std::map<Monomial, GaussianRational> terms_;
};

/// Contraction a(z)b(w) ~ coef / (z-w)^order. Missing pairs contract to 0;
/// a Heisenberg field against a lattice fermion has no admitted rule.
struct ContractionRule {
  int order = 0;
  GaussianRational coef;
};
std::optional<ContractionRule> contraction(const Atom& a, const Atom& b);

/// [A(z), B(w)] = sum_j poles[j](w) d_w^{(j)} delta(z-w).
struct Poles {
  std::vector<Expr> coeffs;
  bool is_zero() const;
  bool operator==(const Poles&) const = default;
};

/// Wick expansion over all nonempty sets of cross contractions.
/// Throws std::invalid_argument for a missing rule, or for a pole of order
/// >= 2 whose residual still depends on z.
Poles wick_bracket(const Expr& a, const Expr& b);

/// Nested bracket [A1(z1), [A2(z2), ... B(w)]] as a sum over pole-order
/// vectors (j1, .., j_{r-1}) of coefficient fields.
using NestedPoles = std::map<std::vector<int>, Expr>;
NestedPoles wick_nested(const std::vector<Expr>& chain);

/// Oracle form of a generator image: every lattice field written through the
/// fermions X(+/-eps_i), e.g. eps_i = :X(eps_i)X(-eps_i):.
Expr oracle_form(const RankParams& p, const GeneratorId& g);

/// The same expression as an operator field (plain conventions).
Field to_field(const Expr& e);

/// Pole coefficients converted to fields once, for repeated mode evaluation.
using FieldPoles = std::vector<std::pair<std::vector<int>, Field>>;
FieldPoles to_fields(const NestedPoles& poles);

/// Right-hand side of the mode-translated nested relation at modes
/// (k1, .., k_{r-1}, l): sum prod_t binom(k_t, j_t) C^{j}(sum k + l - sum j) v.
State apply_nested(const FieldPoles& poles, const std::vector<int>& modes, const State& v);

/// Text form "-(alpha0(w))delta(z-w) - d_w delta(z-w)", or "0".
std::string render_poles(const RankParams& p, const Poles& poles);

/// Oracle bracket of two generators, rendered.
std::string ope(const RankParams& p, const GeneratorId& a, const GeneratorId& b);

}  // namespace toroidal::wick
