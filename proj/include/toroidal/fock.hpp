#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "toroidal/rootdata.hpp"
#include "toroidal/scalar.hpp"

namespace toroidal {

/// Mode convention of the Weyl (bosonic) oscillators.
///
/// `shifted`: [u(k), v(l)] = <u,v> delta_{k+l+1,0}, so u(k) with k <= -1 creates
/// and u(k) with k >= 0 contracts the creator u(-k-1). This is the convention
/// under which the bosonic fields u(z) = sum u(k) z^{-k-1} satisfy
/// [u(z), v(w)] = <u,v> delta(z-w).
/// `printed`: [u(k), v(l)] = <u,v> delta_{k,-l} with u(0) annihilating; kept
/// for regression tests only, it is not a representation of the relations.
enum class WeylPairing { shifted, printed };

/// One applied creator species(-mode), mode >= 1.
///
/// For Heisenberg oscillators `species` is the 1-based eps index; for Weyl
/// oscillators it is BosonLabel::code().
struct Oscillator {
  int species = 0;
  int mode = 1;
  auto operator<=>(const Oscillator&) const = default;
};

/// Basis element e^gamma (x) Heisenberg monomial (x) Weyl monomial of the
/// quotient space. Both monomials are kept sorted by (species, mode).
///
/// The plain cbar label never appears in `weyl`; the quotient removes it.
/// Every oscillator is even, so reordering monomials never costs a sign.
struct BasisState {
  LatticeVector gamma;
  std::vector<Oscillator> heis;
  std::vector<Oscillator> weyl;

  static BasisState vacuum(int lattice_rank);
  static BasisState lattice(LatticeVector gamma);

  /// (gamma,gamma) mod 2.
  int parity() const { return gamma.norm2() & 1; }
  /// Sum of all creator modes.
  int degree() const;
  int heis_degree() const;
  int lattice_height() const { return gamma.height(); }
  /// Twice the L0 eigenvalue: (gamma,gamma) + 2*heis modes + sum(2k-1) over Weyl
  /// modes (sum(2k) for the printed pairing). Never negative; used for support
  /// bounds of fields.
  int energy2(WeylPairing pairing = WeylPairing::shifted) const;

  /// Canonical text, e.g. "e[1,-1,0] * eps1(-2) * d1*(-1)".
  std::string to_string() const;

  auto operator<=>(const BasisState&) const = default;

  void insert_heis(Oscillator o);
  void insert_weyl(Oscillator o);
};

/// Finite linear combination of basis states with exact coefficients.
/// Zero coefficients are never stored.
class State {
 public:
  using Terms = std::map<BasisState, GaussianRational>;

  State() = default;
  State(BasisState b, GaussianRational c = 1);  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Coefficient of b (zero if absent).
  GaussianRational coeff(const BasisState& b) const;

  void add(const BasisState& b, const GaussianRational& c);
  void add(BasisState&& b, const GaussianRational& c);
  void add(const State& v, const GaussianRational& c = 1);

  State& operator+=(const State& v) { add(v); return *this; }
  State& operator-=(const State& v) { add(v, GaussianRational(-1)); return *this; }
  State& operator*=(const GaussianRational& c);

  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator-(State a, const State& b) { return a -= b; }
  friend State operator*(const GaussianRational& c, State a) { return a *= c; }
  friend bool operator==(const State&, const State&) = default;

  /// "0" or "c1 (b1) + c2 (b2)" in canonical order.
  std::string to_string() const;

 private:
  Terms terms_;
};

State vacuum(int lattice_rank);

/// Apply a basis-wise linear map to every term of v.
State apply_linear(const State& v, const std::function<State(const BasisState&)>& f);

/// Number of oscillator species in the quotient space: (m+1) + (2n+3).
int oscillator_species_count(const RankParams& p);

/// Weyl labels carried by states: delta_k, delta_k*, cbar* (plain cbar excluded).
std::vector<BosonLabel> state_weyl_labels(const RankParams& p);

/// Lattice points with height <= max_height, ordered by height then coordinates.
std::vector<LatticeVector> lattice_points(const RankParams& p, int max_height);

/// All basis states with gamma in `lattice` and oscillator degree <= max_degree,
/// in a deterministic canonical order (lattice order, then degree, then monomial).
std::vector<BasisState> enumerate_states(const RankParams& p, const std::vector<LatticeVector>& lattice,
                                         int max_degree);

}  // namespace toroidal
