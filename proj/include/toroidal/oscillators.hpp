#pragma once

#include "toroidal/fock.hpp"

namespace toroidal {

/// Heisenberg mode alpha(k), alpha in the lattice. The central element acts as 1.
struct HeisMode {
  LatticeVector vec;
  int mode = 0;
};

/// Weyl mode u(k) for a generator u of C = P + P*.
struct WeylMode {
  BosonLabel label;
  int mode = 0;
};

/// Fock action on the V[Gamma] factor: alpha(k<0) multiplies by the creator,
/// alpha(0) = (alpha, gamma), alpha(k>0) is the derivation
/// alpha(k) eps_j(-k) = k (alpha, eps_j).
State heis_apply(const HeisMode& h, const BasisState& v);
State heis_apply(const HeisMode& h, const State& v);

/// Fock action on the bosonic factor. Plain cbar acts as zero (quotient); cbar*
/// creates but never contracts.
State weyl_apply(const WeylMode& w, const BasisState& v, WeylPairing pairing = WeylPairing::shifted);
State weyl_apply(const WeylMode& w, const State& v, WeylPairing pairing = WeylPairing::shifted);

/// Scalar c with [u(k), v(l)] = c under the given convention.
int weyl_commutator(const WeylMode& u, const WeylMode& v, WeylPairing pairing = WeylPairing::shifted);

}  // namespace toroidal
