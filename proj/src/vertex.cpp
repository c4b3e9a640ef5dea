#include "toroidal/vertex.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>

namespace toroidal {

namespace {

using Monomial = std::vector<Oscillator>;
using Poly = std::map<Monomial, GaussianRational>;

Monomial merge(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Coefficient S_d of z^d in exp(sum_{j>0} alpha(-j)/j z^j), via d S_d = sum_j alpha(-j) S_{d-j}.
const Poly& creation_coefficient(const LatticeVector& alpha, int d) {
  thread_local std::map<std::vector<int>, std::vector<Poly>> cache;
  auto& table = cache[alpha.coords];
  if (table.empty()) table.push_back(Poly{{Monomial{}, GaussianRational(1)}});
  while (static_cast<int>(table.size()) <= d) {
    const int e = static_cast<int>(table.size());
    Poly next;
    for (int j = 1; j <= e; ++j) {
      for (const auto& [mono, c] : table[e - j]) {
        for (int s = 0; s < alpha.size(); ++s) {
          if (alpha.coords[s] == 0) continue;
          Monomial m = mono;
          Oscillator o{s + 1, j};
          m.insert(std::upper_bound(m.begin(), m.end(), o), o);
          auto& slot = next[m];
          slot += c * GaussianRational(alpha.coords[s]);
        }
      }
    }
    Poly scaled;
    const GaussianRational inv = GaussianRational(1) / GaussianRational(e);
    for (auto& [mono, c] : next)
      if (!c.is_zero()) scaled.emplace(mono, c * inv);
    table.push_back(std::move(scaled));
  }
  return table[d];
}

}  // namespace

int VertexSpec::shift() const {
  if (normalization == VertexNormalization::plain || parity() != 0) return 0;
  return norm_squared() / 2;
}

State vertex_apply(const VertexSpec& spec, int n, const BasisState& v) {
  State out;
  const LatticeVector& alpha = spec.alpha;
  if (alpha.size() != v.gamma.size()) throw std::invalid_argument("vertex operator: lattice rank mismatch");
  const int base = alpha.dot(v.gamma) + spec.shift();
  // E^+ maps each creator b(-k) to b(-k) - (alpha,b) z^{-k}; expand over the
  // subsets of creators that get replaced by their scalar part.
  const std::size_t h = v.heis.size();
  if (h > 20) throw std::length_error("vertex operator: Heisenberg monomial too long");
  const BasisState* src = &v;
  const GaussianRational sign(cocycle(alpha, v.gamma));
  const LatticeVector target = v.gamma + alpha;
  for (std::size_t mask = 0; mask < (std::size_t{1} << h); ++mask) {
    long coef = 1;
    int d_plus = 0;
    Monomial kept;
    for (std::size_t t = 0; t < h; ++t) {
      const Oscillator& o = src->heis[t];
      if (mask & (std::size_t{1} << t)) {
        coef *= -alpha.coords[o.species - 1];
        d_plus += o.mode;
      } else {
        kept.push_back(o);
      }
    }
    if (coef == 0) continue;
    const int d_minus = -n - 1 - base + d_plus;
    if (d_minus < 0) continue;
    const Poly& creators = creation_coefficient(alpha, d_minus);
    for (const auto& [mono, c] : creators) {
      BasisState w{target, merge(kept, mono), v.weyl};
      out.add(std::move(w), c * GaussianRational(coef) * sign);
    }
  }
  return out;
}

State vertex_apply(const VertexSpec& spec, int n, const State& v) {
  State out;
  for (const auto& [b, c] : v) out.add(vertex_apply(spec, n, b), c);
  return out;
}

int vertex_support_bound(const VertexSpec& spec, const BasisState& v) {
  return v.heis_degree() - spec.alpha.dot(v.gamma) - spec.shift() - 1;
}

}  // namespace toroidal
