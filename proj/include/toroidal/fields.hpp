#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toroidal/oscillators.hpp"
#include "toroidal/vertex.hpp"

namespace toroidal {

/// A mode family n -> a(n) of operators on the state space, with a parity.
///
/// Fields are immutable trees shared by pointer; copying is cheap. Every
/// field reports, per basis state v, a bound N with a(n) v = 0 for n > N.
/// For composite fields the bound comes from the L0 grading: a field of
/// doubled weight h2 applied at mode n changes the doubled energy by at most
/// h2 - 2n - 2, and the doubled energy of a nonzero state is never negative.
class Field {
 public:
  enum class Kind { zero, identity, heis, weyl, vertex, normal_product, sum, scaled };

  Field();

  static Field zero();
  /// The constant field 1: 1(n) = delta_{n,-1}.
  static Field identity();
  static Field heis(LatticeVector vec);
  static Field weyl(BosonLabel label, WeylPairing pairing = WeylPairing::shifted);
  static Field vertex(VertexSpec spec);
  static Field vertex(LatticeVector alpha, VertexNormalization normalization = VertexNormalization::plain);

  Kind kind() const;
  int parity() const;
  /// Twice the conformal weight used for support bounds.
  int weight2() const;
  int support_bound(const BasisState& v) const;

  State apply(int n, const BasisState& v) const;
  State apply(int n, const State& v) const;

  std::string render() const;
  /// Same field, rendered as `name`.
  Field named(std::string name) const;

  Field operator-() const;
  friend Field operator+(const Field& a, const Field& b);
  friend Field operator-(const Field& a, const Field& b);
  friend Field operator*(const GaussianRational& c, const Field& a);
  /// :ab:(n) v = sum_{k<=-1} a(k) b(n-1-k) v + (-1)^{p(a)p(b)} sum_{k>=0} b(n-1-k) a(k) v.
  friend Field normal_product(const Field& a, const Field& b);

  /// Drops this thread's memo table of composite mode actions.
  static void clear_cache();

  struct Node;

 private:
  explicit Field(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// a(r) b(s) v - (-1)^{p(a)p(b)} b(s) a(r) v.
State bracket_apply(const Field& a, int r, const Field& b, int s, const State& v);

struct FieldMismatch {
  int mode = 0;
  BasisState state;
  State lhs;
  State rhs;
  std::string describe() const;
};

/// First (mode, state) in the window where a(n)v != b(n)v, or nullopt if none.
std::optional<FieldMismatch> fields_equal_on(const Field& a, const Field& b, int mode_lo, int mode_hi,
                                             const std::vector<BasisState>& states);

/// "eps1-eps2", "-eps1", "2*eps3", "0".
std::string lattice_text(const LatticeVector& v);

}  // namespace toroidal
