#include "toroidal/oscillators.hpp"

#include <algorithm>

namespace toroidal {

State heis_apply(const HeisMode& h, const BasisState& v) {
  State out;
  const int k = h.mode;
  if (k == 0) {
    out.add(v, GaussianRational(h.vec.dot(v.gamma)));
    return out;
  }
  if (k < 0) {
    for (int s = 0; s < h.vec.size(); ++s) {
      const int a = h.vec.coords[s];
      if (a == 0) continue;
      BasisState w = v;
      w.insert_heis({s + 1, -k});
      out.add(std::move(w), GaussianRational(a));
    }
    return out;
  }
  for (std::size_t t = 0; t < v.heis.size(); ++t) {
    const Oscillator& o = v.heis[t];
    if (o.mode != k) continue;
    if (t > 0 && v.heis[t - 1] == o) continue;  // one term per distinct entry, weighted by multiplicity
    const auto mult = std::count(v.heis.begin(), v.heis.end(), o);
    const int a = h.vec.coords[o.species - 1];
    if (a == 0) continue;
    BasisState w = v;
    w.heis.erase(w.heis.begin() + static_cast<std::ptrdiff_t>(t));
    out.add(std::move(w), GaussianRational(static_cast<long>(mult) * k * a));
  }
  return out;
}

State heis_apply(const HeisMode& h, const State& v) {
  State out;
  for (const auto& [b, c] : v) out.add(heis_apply(h, b), c);
  return out;
}

State weyl_apply(const WeylMode& w, const BasisState& v, WeylPairing pairing) {
  State out;
  if (w.label.is_cbar() && !w.label.dual) return out;
  const int k = w.mode;
  if (k < 0) {
    BasisState r = v;
    r.insert_weyl({w.label.code(), -k});
    out.add(std::move(r), GaussianRational(1));
    return out;
  }
  const int target = pairing == WeylPairing::shifted ? k + 1 : k;
  if (target <= 0) return out;
  for (std::size_t t = 0; t < v.weyl.size(); ++t) {
    const Oscillator& o = v.weyl[t];
    if (o.mode != target) continue;
    if (t > 0 && v.weyl[t - 1] == o) continue;
    const int c = weyl_pairing(w.label, BosonLabel::from_code(o.species));
    if (c == 0) continue;
    const auto mult = std::count(v.weyl.begin(), v.weyl.end(), o);
    BasisState r = v;
    r.weyl.erase(r.weyl.begin() + static_cast<std::ptrdiff_t>(t));
    out.add(std::move(r), GaussianRational(static_cast<long>(mult) * c));
  }
  return out;
}

State weyl_apply(const WeylMode& w, const State& v, WeylPairing pairing) {
  State out;
  for (const auto& [b, c] : v) out.add(weyl_apply(w, b, pairing), c);
  return out;
}

int weyl_commutator(const WeylMode& u, const WeylMode& v, WeylPairing pairing) {
  const int shift = pairing == WeylPairing::shifted ? 1 : 0;
  if (u.mode + v.mode + shift != 0) return 0;
  return weyl_pairing(u.label, v.label);
}

}  // namespace toroidal
