#include <doctest.h>

#include <map>
#include <set>

#include "support.hpp"

using namespace toroidal;
using testing::eps;
using testing::state_with;

namespace {

const RankParams P21{2, 1};

// Coefficients of prod_{k>=1} (1 - q^k)^{-species} up to q^max.
std::vector<long> partition_series(int species, int max) {
  std::vector<long> c(max + 1, 0);
  c[0] = 1;
  for (int s = 0; s < species; ++s)
    for (int k = 1; k <= max; ++k)
      for (int d = k; d <= max; ++d) c[d] += c[d - k];
  return c;
}

BasisState random_state(const RankParams& p) {
  BasisState b{testing::random_lattice(p.lattice_rank(), 2), {}, {}};
  const auto labels = state_weyl_labels(p);
  for (int t = testing::uniform(0, 3); t > 0; --t) b.insert_heis({testing::uniform(1, p.m + 1), testing::uniform(1, 3)});
  for (int t = testing::uniform(0, 3); t > 0; --t)
    b.insert_weyl({labels[testing::uniform(0, static_cast<int>(labels.size()) - 1)].code(), testing::uniform(1, 3)});
  return b;
}

}  // namespace

TEST_CASE("vacuum") {
  const State v = vacuum(P21.lattice_rank());
  CHECK(v.size() == 1);
  const BasisState& b = v.begin()->first;
  CHECK(v.begin()->second == GaussianRational(1));
  CHECK(b.gamma.is_zero());
  CHECK(b.heis.empty());
  CHECK(b.weyl.empty());
  CHECK(b.parity() == 0);
  CHECK(b.degree() == 0);
}

TEST_CASE("enumeration examples") {
  const auto zero = std::vector<LatticeVector>{LatticeVector::zero(3)};
  CHECK(enumerate_states(P21, zero, 0).size() == 1);
  CHECK(enumerate_states(P21, zero, 2).size() == 53);
  CHECK(enumerate_states(P21, {}, 2).empty());
  CHECK(oscillator_species_count(P21) == 8);
  CHECK(state_with(eps(P21, 1)).parity() == 1);
  CHECK(state_with(eps(P21, 1) + eps(P21, 2)).parity() == 0);
}

TEST_CASE("enumeration counts follow the partition generating function") {
  for (const auto& p : {P21, RankParams{1, 2}, RankParams{3, 1}}) {
    const int S = oscillator_species_count(p);
    const auto series = partition_series(S, 4);
    const auto states = enumerate_states(p, {LatticeVector::zero(p.lattice_rank())}, 4);
    std::map<int, long> by_degree;
    for (const auto& s : states) ++by_degree[s.degree()];
    for (int d = 0; d <= 4; ++d) CHECK(by_degree[d] == series[d]);
  }
  const auto s = partition_series(8, 2);
  CHECK(s[0] == 1);
  CHECK(s[1] == 8);
  CHECK(s[2] == 44);
}

TEST_CASE("enumeration is canonical and duplicate free") {
  const auto states = enumerate_states(P21, lattice_points(P21, 1), 3);
  std::set<BasisState> seen(states.begin(), states.end());
  CHECK(seen.size() == states.size());
  CHECK(states == enumerate_states(P21, lattice_points(P21, 1), 3));
  for (const auto& b : states) {
    CHECK(std::is_sorted(b.heis.begin(), b.heis.end()));
    CHECK(std::is_sorted(b.weyl.begin(), b.weyl.end()));
    for (const auto& o : b.weyl) CHECK_FALSE(BosonLabel::from_code(o.species) == BosonLabel::cbar());
  }
}

TEST_CASE("lattice points") {
  const auto pts = lattice_points(P21, 1);
  CHECK(pts.size() == 1 + 2 * 3);
  CHECK(pts.front().is_zero());
  CHECK(lattice_points(P21, 2).size() == 1 + 6 + 18);
  for (const auto& v : lattice_points(P21, 2)) CHECK(v.height() <= 2);
}

TEST_CASE("degree and parity are additive") {
  for (int t = 0; t < 200; ++t) {
    BasisState a = random_state(P21), b = random_state(P21);
    BasisState u{a.gamma, a.heis, a.weyl};
    for (auto o : b.heis) u.insert_heis(o);
    for (auto o : b.weyl) u.insert_weyl(o);
    CHECK(u.degree() == a.degree() + b.degree());
    CHECK(u.parity() == a.parity());
    CHECK(std::is_sorted(u.heis.begin(), u.heis.end()));
  }
}

TEST_CASE("state arithmetic is exactly linear") {
  for (int t = 0; t < 100; ++t) {
    State v, w;
    for (int k = 0; k < 4; ++k) {
      v.add(random_state(P21), testing::random_scalar());
      w.add(random_state(P21), testing::random_scalar());
    }
    const auto a = testing::random_scalar(), b = testing::random_scalar();
    const State lhs = a * v + b * v;
    const State rhs = (a + b) * v;
    CHECK(lhs == rhs);
    for (const auto& [s, c] : lhs) CHECK_FALSE(c.is_zero());
    CHECK((v + w) - w == v);
    CHECK((v - v).is_zero());
    CHECK((GaussianRational() * v).is_zero());
  }
}

TEST_CASE("canonical text") {
  const BasisState b = state_with(eps(P21, 1) - eps(P21, 2), {{1, 2}}, {{BosonLabel::delta(1, true).code(), 1}});
  CHECK(b.to_string() == "e[1,-1,0] * eps1(-2) * d1*(-1)");
  CHECK(vacuum(3).to_string() == "(1) e[0,0,0]");
}

TEST_CASE("doubled energy") {
  const BasisState b = state_with(eps(P21, 1), {{1, 2}}, {{BosonLabel::delta(1).code(), 1}});
  CHECK(b.energy2() == 1 + 4 + 1);
  CHECK(b.energy2(WeylPairing::printed) == 1 + 4 + 2);
}
