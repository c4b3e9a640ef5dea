#include "toroidal/wick.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace toroidal::wick {

std::string Atom::render() const {
  switch (kind) {
    case Kind::fermion: return "X(" + lattice_text(vec) + ")";
    case Kind::weyl: return label.to_string();
    case Kind::heis: return lattice_text(vec);
  }
  return "?";
}

namespace {

// Sorts the atoms, returning the Koszul sign, or 0 if an odd atom repeats or
// a plain cbar (which acts as zero) occurs.
int canonicalize(Monomial& atoms) {
  for (const auto& a : atoms)
    if (a.kind == Atom::Kind::weyl && a.label.is_cbar() && !a.label.dual) return 0;
  int sign = 1;
  for (std::size_t i = 1; i < atoms.size(); ++i) {
    for (std::size_t k = i; k > 0 && atoms[k] < atoms[k - 1]; --k) {
      if (atoms[k].parity() && atoms[k - 1].parity()) sign = -sign;
      std::swap(atoms[k], atoms[k - 1]);
    }
  }
  for (std::size_t i = 1; i < atoms.size(); ++i)
    if (atoms[i].parity() && atoms[i] == atoms[i - 1]) return 0;
  return sign;
}

}  // namespace

Expr Expr::scalar(const GaussianRational& c) {
  Expr e;
  e.add({}, c);
  return e;
}

Expr Expr::monomial(Monomial atoms, const GaussianRational& c) {
  Expr e;
  e.add(std::move(atoms), c);
  return e;
}

void Expr::add(Monomial atoms, const GaussianRational& c) {
  if (c.is_zero()) return;
  const int sign = canonicalize(atoms);
  if (sign == 0) return;
  auto& slot = terms_[atoms];
  slot += sign > 0 ? c : -c;
  if (slot.is_zero()) terms_.erase(atoms);
}

Expr& Expr::operator+=(const Expr& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Expr operator-(Expr a, const Expr& b) {
  for (const auto& [m, c] : b.terms_) a.add(m, -c);
  return a;
}

Expr operator*(const GaussianRational& c, Expr a) {
  if (c.is_zero()) return {};
  for (auto& [m, x] : a.terms_) x *= c;
  return a;
}

int Expr::parity() const {
  if (terms_.empty()) return 0;
  int p = 0;
  for (const auto& a : terms_.begin()->first) p ^= a.parity();
  return p;
}

std::string Expr::render(const std::string& point) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string body;
    if (m.empty()) {
      body = "1";
    } else if (m.size() == 1) {
      body = m[0].render() + "(" + point + ")";
    } else {
      body = ":";
      for (const auto& a : m) body += a.render();
      body += ":(" + point + ")";
    }
    std::string pre = coefficient_prefix(c);
    if (m.empty() && pre.size() > 1 && pre.back() == '*') {
      pre.pop_back();
      body.clear();
    } else if (m.empty() && pre == "-") {
      body = "1";
    }
    std::string t = pre + body;
    if (out.empty()) out = t;
    else if (t[0] == '-') out += " - " + t.substr(1);
    else out += " + " + t;
  }
  return out;
}

std::optional<ContractionRule> contraction(const Atom& a, const Atom& b) {
  using K = Atom::Kind;
  if (a.kind == K::fermion && b.kind == K::fermion) {
    if (!(a.vec + b.vec).is_zero()) return std::nullopt;
    return ContractionRule{1, GaussianRational(cocycle(a.vec, b.vec))};
  }
  if (a.kind == K::weyl && b.kind == K::weyl) {
    const int c = weyl_pairing(a.label, b.label);
    if (c == 0) return std::nullopt;
    return ContractionRule{1, GaussianRational(c)};
  }
  if (a.kind == K::heis && b.kind == K::heis) {
    const int c = a.vec.dot(b.vec);
    if (c == 0) return std::nullopt;
    return ContractionRule{2, GaussianRational(c)};
  }
  if ((a.kind == K::heis && b.kind == K::fermion) || (a.kind == K::fermion && b.kind == K::heis))
    throw std::invalid_argument("wick oracle: missing contraction rule for " + a.render() + " and " + b.render());
  return std::nullopt;
}

bool Poles::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Expr& e) { return e.is_zero(); });
}

namespace {

void bracket_monomials(const Monomial& ma, const Monomial& mb, const GaussianRational& coef, Poles& out) {
  const std::size_t p = ma.size(), q = mb.size();
  std::vector<std::vector<std::optional<ContractionRule>>> rules(p, std::vector<std::optional<ContractionRule>>(q));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) rules[i][j] = contraction(ma[i], mb[j]);

  std::vector<int> match(p, -1);
  std::vector<bool> used(q, false);
  auto emit = [&]() {
    int order = 0;
    GaussianRational value = coef;
    std::vector<std::size_t> target;  // positions in the sequence ma ++ mb
    bool any = false;
    for (std::size_t i = 0; i < p; ++i) {
      if (match[i] < 0) continue;
      any = true;
      const auto& r = *rules[i][match[i]];
      order += r.order;
      value *= r.coef;
      target.push_back(i);
      target.push_back(p + match[i]);
    }
    if (!any) return;
    Monomial residual;
    bool z_side = false;
    for (std::size_t i = 0; i < p; ++i)
      if (match[i] < 0) {
        target.push_back(i);
        residual.push_back(ma[i]);
        z_side = true;
      }
    for (std::size_t j = 0; j < q; ++j)
      if (!used[j]) {
        target.push_back(p + j);
        residual.push_back(mb[j]);
      }
    if (order >= 2 && z_side)
      throw std::invalid_argument("wick oracle: higher pole with a z-dependent residual is not supported");
    auto odd = [&](std::size_t pos) { return (pos < p ? ma[pos] : mb[pos - p]).parity() != 0; };
    int sign = 1;
    for (std::size_t x = 0; x < target.size(); ++x)
      for (std::size_t y = x + 1; y < target.size(); ++y)
        if (target[x] > target[y] && odd(target[x]) && odd(target[y])) sign = -sign;
    if (out.coeffs.size() < static_cast<std::size_t>(order)) out.coeffs.resize(order);
    out.coeffs[order - 1].add(std::move(residual), sign > 0 ? value : -value);
  };
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == p) {
      emit();
      return;
    }
    rec(i + 1);
    for (std::size_t j = 0; j < q; ++j) {
      if (used[j] || !rules[i][j]) continue;
      used[j] = true;
      match[i] = static_cast<int>(j);
      rec(i + 1);
      match[i] = -1;
      used[j] = false;
    }
  };
  rec(0);
}

}  // namespace

Poles wick_bracket(const Expr& a, const Expr& b) {
  Poles out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) bracket_monomials(ma, mb, ca * cb, out);
  while (!out.coeffs.empty() && out.coeffs.back().is_zero()) out.coeffs.pop_back();
  return out;
}

NestedPoles wick_nested(const std::vector<Expr>& chain) {
  if (chain.size() < 2) throw std::invalid_argument("wick_nested: need at least two fields");
  NestedPoles out;
  if (chain.size() == 2) {
    Poles p = wick_bracket(chain[0], chain[1]);
    for (std::size_t j = 0; j < p.coeffs.size(); ++j)
      if (!p.coeffs[j].is_zero()) out[{static_cast<int>(j)}] = p.coeffs[j];
    return out;
  }
  NestedPoles inner = wick_nested(std::vector<Expr>(chain.begin() + 1, chain.end()));
  for (const auto& [orders, d] : inner) {
    Poles p = wick_bracket(chain[0], d);
    for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
      if (p.coeffs[j].is_zero()) continue;
      std::vector<int> key{static_cast<int>(j)};
      key.insert(key.end(), orders.begin(), orders.end());
      out[key] += p.coeffs[j];
      if (out[key].is_zero()) out.erase(key);
    }
  }
  return out;
}

Expr oracle_form(const RankParams& p, const GeneratorId& g) {
  p.validate();
  check_generator(p, g);
  const int r = p.lattice_rank();
  const int m = p.m;
  const int n = p.n;
  const GaussianRational i_unit = GaussianRational::i();
  auto X = [r](int k, int sign) { return Atom::fermion(LatticeVector::unit(r, k, sign)); };
  auto D = [](int k, bool dual) { return Atom::weyl(BosonLabel::delta(k, dual)); };
  // eps_k(z) = :X(eps_k)X(-eps_k):
  auto eps = [&](int k) { return Expr::monomial({X(k, 1), X(k, -1)}); };
  // X(eps_a - eps_b) = F(eps_a, -eps_b) :X(eps_a)X(-eps_b):
  auto lattice_root = [&](int a, int b) {
    const int f = cocycle(LatticeVector::unit(r, a), LatticeVector::unit(r, b, -1));
    return Expr::monomial({X(a, 1), X(b, -1)}, f);
  };
  auto bilinear = [&](int a, int b) { return Expr::monomial({D(a, false), D(b, true)}); };
  const int i = g.index;
  switch (g.kind) {
    case GeneratorKind::central: return Expr::scalar(1);
    case GeneratorKind::alpha:
      if (i == 0) return bilinear(n + 1, n + 1) - eps(1);
      if (i <= m) return eps(i) - eps(i + 1);
      if (i == m + 1) return eps(m + 1) - bilinear(1, 1);
      return bilinear(i - m - 1, i - m - 1) - bilinear(i - m, i - m);
    case GeneratorKind::x_plus:
      if (i == 0) return Expr::monomial({X(1, -1), D(n + 1, false)}, i_unit);
      if (i <= m) return lattice_root(i, i + 1);
      if (i == m + 1) return Expr::monomial({X(m + 1, 1), D(1, true)});
      return i_unit * bilinear(i - m - 1, i - m);
    case GeneratorKind::x_minus:
      if (i == 0) return Expr::monomial({X(1, 1), D(n + 1, true)}, i_unit);
      if (i <= m) return lattice_root(i + 1, i);
      if (i == m + 1) return Expr::monomial({X(m + 1, -1), D(1, false)});
      return i_unit * bilinear(i - m, i - m - 1);
  }
  throw std::logic_error("unreachable");
}

Field to_field(const Expr& e) {
  Field out;
  for (const auto& [m, c] : e.terms()) {
    std::vector<Field> factors;
    for (const auto& a : m) {
      switch (a.kind) {
        case Atom::Kind::fermion: factors.push_back(Field::vertex(a.vec)); break;
        case Atom::Kind::weyl: factors.push_back(Field::weyl(a.label)); break;
        case Atom::Kind::heis: factors.push_back(Field::heis(a.vec)); break;
      }
    }
    Field f = Field::identity();
    if (!factors.empty()) {
      f = factors.back();
      for (std::size_t k = factors.size() - 1; k-- > 0;) f = normal_product(factors[k], f);
    }
    out = out + c * f;
  }
  return out;
}

FieldPoles to_fields(const NestedPoles& poles) {
  FieldPoles out;
  for (const auto& [orders, e] : poles) out.emplace_back(orders, to_field(e));
  return out;
}

State apply_nested(const FieldPoles& poles, const std::vector<int>& modes, const State& v) {
  State out;
  int total = 0;
  for (int k : modes) total += k;
  for (const auto& [orders, f] : poles) {
    if (orders.size() + 1 != modes.size()) throw std::invalid_argument("apply_nested: mode count mismatch");
    long coef = 1;
    int shift = 0;
    for (std::size_t t = 0; t < orders.size(); ++t) {
      coef *= binomial(modes[t], orders[t]);
      shift += orders[t];
    }
    if (coef == 0) continue;
    out.add(f.apply(total - shift, v), GaussianRational(coef));
  }
  return out;
}

namespace {

std::optional<std::pair<GeneratorId, GaussianRational>> recognize(const RankParams& p, const Expr& e) {
  if (e.is_zero()) return std::nullopt;
  const auto& [m0, c0] = *e.terms().begin();
  for (const auto& g : generators(p)) {
    const Expr f = oracle_form(p, g);
    auto it = f.terms().find(m0);
    if (it == f.terms().end()) continue;
    const GaussianRational ratio = c0 / it->second;
    if (ratio * f == e) return std::make_pair(g, ratio);
  }
  return std::nullopt;
}

}  // namespace

std::string render_poles(const RankParams& p, const Poles& poles) {
  std::string out;
  for (std::size_t j = 0; j < poles.coeffs.size(); ++j) {
    const Expr& c = poles.coeffs[j];
    if (c.is_zero()) continue;
    const std::string delta =
        j == 0 ? "delta(z-w)" : j == 1 ? "d_w delta(z-w)" : "d_w^(" + std::to_string(j) + ") delta(z-w)";
    std::string t;
    if (c.terms().size() == 1 && c.terms().begin()->first.empty()) {
      t = coefficient_prefix(c.terms().begin()->second) + delta;
    } else if (auto rec = recognize(p, c)) {
      t = coefficient_prefix(rec->second) + "(" + rec->first.name() + "(w))" + delta;
    } else {
      t = "(" + c.render("w") + ")" + delta;
    }
    if (out.empty()) out = t;
    else if (t[0] == '-') out += " - " + t.substr(1);
    else out += " + " + t;
  }
  return out.empty() ? "0" : out;
}

std::string ope(const RankParams& p, const GeneratorId& a, const GeneratorId& b) {
  return render_poles(p, wick_bracket(oracle_form(p, a), oracle_form(p, b)));
}

}  // namespace toroidal::wick
