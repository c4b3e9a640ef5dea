#pragma once

#include <compare>
#include <string>
#include <vector>

namespace toroidal {

/// Rank parameters of A(m,n): superspace C^{m|n+1}, m,n >= 1, m != n.
struct RankParams {
  int m = 2;
  int n = 1;

  /// Throws std::invalid_argument naming the violated restriction.
  void validate() const;
  /// Number of simple roots of the affine diagram, m+n+2.
  int num_nodes() const { return m + n + 2; }
  int lattice_rank() const { return m + 1; }
  friend bool operator==(const RankParams&, const RankParams&) = default;
};

/// Point of the odd lattice Z eps_1 + ... + Z eps_{m+1} (Euclidean form).
struct LatticeVector {
  std::vector<int> coords;

  static LatticeVector zero(int rank) { return {std::vector<int>(rank, 0)}; }
  /// eps_i, 1-based.
  static LatticeVector unit(int rank, int i, int sign = 1);

  int size() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
  int norm2() const { return dot(*this); }
  int dot(const LatticeVector& o) const;
  /// Sum of |coords|.
  int height() const;
  bool odd() const { return (norm2() & 1) != 0; }

  LatticeVector operator+(const LatticeVector& o) const;
  LatticeVector operator-(const LatticeVector& o) const;
  LatticeVector operator-() const;
  auto operator<=>(const LatticeVector&) const = default;

  /// "e[1,-1,0]"-style bracket without the leading e.
  std::string to_string() const;
};

/// Vector of the ambient space spanned by eps_1..eps_{m+1}, delta_1..delta_{n+1}
/// and the null vector cbar = eps_0 + delta_{n+2}.
struct AmbientVector {
  std::vector<int> eps;
  std::vector<int> delta;
  int cbar = 0;

  static AmbientVector zero(const RankParams& p);
  static AmbientVector epsilon(const RankParams& p, int i);
  static AmbientVector delta_vec(const RankParams& p, int i);
  static AmbientVector null_vec(const RankParams& p);
  /// beta = delta_{n+1} + cbar.
  static AmbientVector beta(const RankParams& p);

  AmbientVector operator+(const AmbientVector& o) const;
  AmbientVector operator-(const AmbientVector& o) const;
  AmbientVector operator-() const;
  friend bool operator==(const AmbientVector&, const AmbientVector&) = default;

  std::string to_string() const;
};

/// (eps_i,eps_j)=d_ij, (delta_i,delta_j)=-d_ij, everything else (cbar included) 0.
int ambient_form(const AmbientVector& u, const AmbientVector& v);

/// Distinguished simple root alpha_i, 0 <= i <= m+n+1.
AmbientVector simple_root(const RankParams& p, int i);

/// (alpha_i, alpha_j) from the ambient realization.
int cartan_pairing(const RankParams& p, int i, int j);

/// Symmetrizing signs d_i: +1 for i <= m, -1 otherwise.
int symmetrizer(const RankParams& p, int i);

/// a_ij := (alpha_i, alpha_j) / d_i.
int cartan_entry(const RankParams& p, int i, int j);

bool is_odd_node(const RankParams& p, int i);

/// Bimultiplicative sign F(a,b) = prod_{i>j} (-1)^{a_i b_j}.
int cocycle(const LatticeVector& a, const LatticeVector& b);

/// Generator of C = P + P*: base 0 is cbar, base k >= 1 is delta_k; dual marks the starred copy.
struct BosonLabel {
  int base = 1;
  bool dual = false;

  static BosonLabel cbar(bool dual = false) { return {0, dual}; }
  static BosonLabel delta(int k, bool dual = false) { return {k, dual}; }

  bool is_cbar() const { return base == 0; }
  /// Sort key: delta_1 < ... < delta_{n+1} < (cbar) < delta_1* < ... < cbar*.
  int code() const { return (dual ? 1024 : 0) + (base == 0 ? 1023 : base); }
  static BosonLabel from_code(int code);

  auto operator<=>(const BosonLabel& o) const { return code() <=> o.code(); }
  bool operator==(const BosonLabel& o) const { return code() == o.code(); }

  std::string to_string() const;
};

/// Antisymmetric pairing on C: <b*,a> = -<a,b*> = (a,b); <a,b> = <a*,b*> = 0.
int weyl_pairing(const BosonLabel& u, const BosonLabel& v);

/// Plain-text dump of simple roots, symmetrized Cartan table, derived a_ij and
/// the cocycle on lattice generators.
std::string rootdata_dump(const RankParams& p);

}  // namespace toroidal
