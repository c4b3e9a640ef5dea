#pragma once

#include <random>

#include "toroidal/toroidal.hpp"

namespace testing {

using namespace toroidal;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline int uniform(int lo, int hi) {
  return lo + static_cast<int>(rng()() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline GaussianRational random_scalar() {
  auto q = [] { return Rational(uniform(-30, 30), uniform(1, 12)); };
  return {q(), q()};
}

inline LatticeVector random_lattice(int rank, int bound = 3) {
  LatticeVector v = LatticeVector::zero(rank);
  for (int& c : v.coords) c = uniform(-bound, bound);
  return v;
}

inline std::vector<BasisState> small_states(const RankParams& p, int height, int degree) {
  return enumerate_states(p, lattice_points(p, height), degree);
}

inline BasisState state_with(LatticeVector gamma, std::vector<Oscillator> heis = {}, std::vector<Oscillator> weyl = {}) {
  BasisState b{std::move(gamma), {}, {}};
  for (auto o : heis) b.insert_heis(o);
  for (auto o : weyl) b.insert_weyl(o);
  return b;
}

inline LatticeVector eps(const RankParams& p, int i, int sign = 1) { return LatticeVector::unit(p.lattice_rank(), i, sign); }

}  // namespace testing
