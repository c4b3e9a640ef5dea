#include "toroidal/fock.hpp"

#include <algorithm>

namespace toroidal {

BasisState BasisState::vacuum(int lattice_rank) { return {LatticeVector::zero(lattice_rank), {}, {}}; }

BasisState BasisState::lattice(LatticeVector gamma) { return {std::move(gamma), {}, {}}; }

int BasisState::degree() const {
  int d = heis_degree();
  for (const auto& o : weyl) d += o.mode;
  return d;
}

int BasisState::heis_degree() const {
  int d = 0;
  for (const auto& o : heis) d += o.mode;
  return d;
}

int BasisState::energy2(WeylPairing pairing) const {
  int e = gamma.norm2() + 2 * heis_degree();
  const int offset = pairing == WeylPairing::shifted ? 1 : 0;
  for (const auto& o : weyl) e += 2 * o.mode - offset;
  return e;
}

void BasisState::insert_heis(Oscillator o) { heis.insert(std::upper_bound(heis.begin(), heis.end(), o), o); }

void BasisState::insert_weyl(Oscillator o) { weyl.insert(std::upper_bound(weyl.begin(), weyl.end(), o), o); }

std::string BasisState::to_string() const {
  std::string s = "e" + gamma.to_string();
  for (const auto& o : heis) s += " * eps" + std::to_string(o.species) + "(-" + std::to_string(o.mode) + ")";
  for (const auto& o : weyl)
    s += " * " + BosonLabel::from_code(o.species).to_string() + "(-" + std::to_string(o.mode) + ")";
  return s;
}

State::State(BasisState b, GaussianRational c) {
  if (!c.is_zero()) terms_.emplace(std::move(b), std::move(c));
}

GaussianRational State::coeff(const BasisState& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void State::add(const BasisState& b, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void State::add(BasisState&& b, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(b);
  if (it == terms_.end()) {
    terms_.emplace(std::move(b), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void State::add(const State& v, const GaussianRational& c) {
  if (c.is_zero()) return;
  const bool unit = c == GaussianRational(1);
  for (const auto& [b, x] : v.terms_) add(b, unit ? x : x * c);
}

State& State::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, x] : terms_) x *= c;
  return *this;
}

std::string State::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += "(" + c.to_string() + ") " + b.to_string();
  }
  return s;
}

State vacuum(int lattice_rank) { return State(BasisState::vacuum(lattice_rank)); }

State apply_linear(const State& v, const std::function<State(const BasisState&)>& f) {
  State out;
  for (const auto& [b, c] : v) out.add(f(b), c);
  return out;
}

int oscillator_species_count(const RankParams& p) { return (p.m + 1) + (2 * p.n + 3); }

std::vector<BosonLabel> state_weyl_labels(const RankParams& p) {
  std::vector<BosonLabel> labels;
  for (int k = 1; k <= p.n + 1; ++k) labels.push_back(BosonLabel::delta(k));
  for (int k = 1; k <= p.n + 1; ++k) labels.push_back(BosonLabel::delta(k, true));
  labels.push_back(BosonLabel::cbar(true));
  return labels;
}

std::vector<LatticeVector> lattice_points(const RankParams& p, int max_height) {
  const int r = p.lattice_rank();
  std::vector<LatticeVector> out;
  LatticeVector cur = LatticeVector::zero(r);
  // Depth-first over coordinates with the remaining height budget.
  std::function<void(int, int)> rec = [&](int pos, int budget) {
    if (pos == r) {
      out.push_back(cur);
      return;
    }
    for (int c = -budget; c <= budget; ++c) {
      cur.coords[pos] = c;
      rec(pos + 1, budget - std::abs(c));
    }
    cur.coords[pos] = 0;
  };
  if (max_height >= 0) rec(0, max_height);
  std::stable_sort(out.begin(), out.end(), [](const LatticeVector& a, const LatticeVector& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a < b;
  });
  return out;
}

namespace {

struct Species {
  bool heis;
  int id;
};

// Multisets of (species, mode) with total mode exactly `degree`, emitted in
// canonical (sorted) order.
void monomials_of_degree(const std::vector<Species>& species, int degree,
                         std::vector<std::pair<std::vector<Oscillator>, std::vector<Oscillator>>>& out) {
  std::vector<std::pair<int, int>> chosen;  // (species position, mode), nondecreasing
  std::function<void(int, int, int)> rec = [&](int remaining, int min_pos, int min_mode) {
    if (remaining == 0) {
      std::vector<Oscillator> h, w;
      for (auto [pos, mode] : chosen) (species[pos].heis ? h : w).push_back({species[pos].id, mode});
      std::sort(h.begin(), h.end());
      std::sort(w.begin(), w.end());
      out.emplace_back(std::move(h), std::move(w));
      return;
    }
    for (int pos = min_pos; pos < static_cast<int>(species.size()); ++pos) {
      for (int mode = pos == min_pos ? min_mode : 1; mode <= remaining; ++mode) {
        chosen.emplace_back(pos, mode);
        rec(remaining - mode, pos, mode);
        chosen.pop_back();
      }
    }
  };
  rec(degree, 0, 1);
}

}  // namespace

std::vector<BasisState> enumerate_states(const RankParams& p, const std::vector<LatticeVector>& lattice,
                                         int max_degree) {
  std::vector<BasisState> out;
  if (lattice.empty() || max_degree < 0) return out;
  std::vector<Species> species;
  for (int i = 1; i <= p.m + 1; ++i) species.push_back({true, i});
  for (const auto& l : state_weyl_labels(p)) species.push_back({false, l.code()});

  std::vector<std::pair<std::vector<Oscillator>, std::vector<Oscillator>>> monos;
  for (int d = 0; d <= max_degree; ++d) monomials_of_degree(species, d, monos);

  for (const auto& gamma : lattice)
    for (const auto& [h, w] : monos) out.push_back(BasisState{gamma, h, w});
  return out;
}

}  // namespace toroidal
