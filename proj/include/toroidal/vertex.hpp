#pragma once

#include "toroidal/fock.hpp"

namespace toroidal {

/// How the mode index n of X(alpha, n) is read off the vertex series.
///
/// `plain`: X(alpha, n) is the z^{-n-1} coefficient of Y(alpha, z) for every alpha.
/// `printed_half_norm`: X(alpha, z) = z^{(alpha,alpha)/2} Y(alpha, z) for even alpha.
/// The second reading breaks the bracket [X(a), X(-a)] = a(z)delta + d_w delta
/// by two modes and is kept only as a regression variant.
enum class VertexNormalization { plain, printed_half_norm };

struct VertexSpec {
  LatticeVector alpha;
  VertexNormalization normalization = VertexNormalization::plain;

  int norm_squared() const { return alpha.norm2(); }
  int parity() const { return norm_squared() & 1; }
  /// Extra power of z in front of Y (0 unless printed_half_norm on even alpha).
  int shift() const;
};

/// X(alpha, n) v: the z^{-n-1} coefficient of e^alpha z^{alpha(0)} E^-(z) E^+(z) v.
State vertex_apply(const VertexSpec& spec, int n, const BasisState& v);
State vertex_apply(const VertexSpec& spec, int n, const State& v);

/// N with vertex_apply(spec, n, v) = 0 for every n > N.
int vertex_support_bound(const VertexSpec& spec, const BasisState& v);

}  // namespace toroidal
