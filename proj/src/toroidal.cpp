#include "toroidal/toroidal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace toroidal {

std::string GeneratorId::name() const {
  switch (kind) {
    case GeneratorKind::central: return "K";
    case GeneratorKind::alpha: return "alpha" + std::to_string(index);
    case GeneratorKind::x_plus: return "x" + std::to_string(index) + "+";
    case GeneratorKind::x_minus: return "x" + std::to_string(index) + "-";
  }
  return "?";
}

std::optional<GeneratorId> GeneratorId::parse(std::string_view text) {
  auto number = [](std::string_view s) -> std::optional<int> {
    if (s.empty() || s.size() > 6) return std::nullopt;
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return std::nullopt;
      v = v * 10 + (c - '0');
    }
    return v;
  };
  if (text == "K") return central();
  if (text.starts_with("alpha")) {
    if (auto v = number(text.substr(5))) return alpha(*v);
    return std::nullopt;
  }
  if (text.size() >= 3 && text.front() == 'x' && (text.back() == '+' || text.back() == '-')) {
    if (auto v = number(text.substr(1, text.size() - 2))) return x(*v, text.back() == '+' ? 1 : -1);
  }
  return std::nullopt;
}

void check_generator(const RankParams& p, const GeneratorId& g) {
  if (g.kind == GeneratorKind::central) return;
  if (g.index < 0 || g.index >= p.num_nodes())
    throw std::out_of_range("generator index out of range: " + g.name());
}

int generator_parity(const RankParams& p, const GeneratorId& g) {
  if (g.kind == GeneratorKind::x_plus || g.kind == GeneratorKind::x_minus) return is_odd_node(p, g.index) ? 1 : 0;
  return 0;
}

Field rep_field(const RankParams& p, const GeneratorId& g, const RepresentationVariant& variant) {
  p.validate();
  check_generator(p, g);
  const int r = p.lattice_rank();
  const int m = p.m;
  const int n = p.n;
  const GaussianRational i_unit = GaussianRational::i();
  auto eps = [r](int k, int sign = 1) { return LatticeVector::unit(r, k, sign); };
  auto X = [&](const LatticeVector& a) { return Field::vertex(a, variant.vertex); };
  auto W = [&](int k, bool dual) { return Field::weyl(BosonLabel::delta(k, dual), variant.weyl); };
  auto bilinear = [&](int a, int b) { return normal_product(W(a, false), W(b, true)); };  // :delta_a delta_b*:
  const Field beta = (W(n + 1, false) + Field::weyl(BosonLabel::cbar(), variant.weyl)).named("beta");
  const Field beta_star = variant.beta_star_keeps_cbar_star
                              ? (W(n + 1, true) + Field::weyl(BosonLabel::cbar(true), variant.weyl)).named("beta*")
                              : W(n + 1, true).named("beta*");
  const int i = g.index;

  switch (g.kind) {
    case GeneratorKind::central: return Field::identity();
    case GeneratorKind::alpha:
      if (i == 0) return normal_product(beta, beta_star) - Field::heis(eps(1));
      if (i <= m) return Field::heis(eps(i) - eps(i + 1));
      if (i == m + 1) return Field::heis(eps(m + 1)) - bilinear(1, 1);
      return bilinear(i - m - 1, i - m - 1) - bilinear(i - m, i - m);
    case GeneratorKind::x_plus:
      if (i == 0) return i_unit * normal_product(X(eps(1, -1)), beta);
      if (i <= m) return X(eps(i) - eps(i + 1));
      if (i == m + 1) return normal_product(X(eps(m + 1)), W(1, true));
      return i_unit * bilinear(i - m - 1, i - m);
    case GeneratorKind::x_minus:
      if (i == 0) return i_unit * normal_product(X(eps(1)), beta_star);
      if (i <= m) return X(eps(i + 1) - eps(i));
      if (i == m + 1) return normal_product(X(eps(m + 1, -1)), W(1, false));
      if (variant.printed_xminus) return i_unit * bilinear(i - m - 1, i - m);
      return i_unit * bilinear(i - m, i - m - 1);
  }
  throw std::logic_error("unreachable");
}

std::vector<GeneratorId> generators(const RankParams& p) {
  std::vector<GeneratorId> out;
  for (int i = 0; i < p.num_nodes(); ++i) out.push_back(GeneratorId::alpha(i));
  for (int i = 0; i < p.num_nodes(); ++i) out.push_back(GeneratorId::x(i, 1));
  for (int i = 0; i < p.num_nodes(); ++i) out.push_back(GeneratorId::x(i, -1));
  return out;
}

std::string GenMode::to_string() const {
  if (gen.kind == GeneratorKind::central) return "K";
  return gen.name() + "(" + std::to_string(mode) + ")";
}

std::vector<int> RelationInstance::modes() const {
  std::vector<int> out;
  for (const auto& op : lhs)
    if (op.gen.kind != GeneratorKind::central) out.push_back(op.mode);
  return out;
}

std::string RelationInstance::render() const {
  std::string l;
  for (std::size_t k = 0; k + 1 < lhs.size(); ++k) l += "[" + lhs[k].to_string() + ", ";
  l += lhs.back().to_string() + std::string(lhs.size() - 1, ']');
  std::string r;
  auto term = [&r](const GaussianRational& c, const std::string& what) {
    std::string cs = c.to_string();
    const bool neg = cs[0] == '-' && c.im() == 0;
    if (neg) cs.erase(0, 1);
    if (c.im() != 0 && c.re() != 0) cs = "(" + cs + ")";
    const std::string body = (cs == "1" ? "" : cs + "*") + what;
    if (r.empty()) r = (neg ? "-" : "") + body;
    else r += (neg ? " - " : " + ") + body;
  };
  for (const auto& t : rhs) term(t.coef, t.op.to_string());
  if (!central.is_zero()) term(central, "K");
  return l + " = " + (r.empty() ? "0" : r);
}

namespace {

std::string instance_id(int family, int i, int j, int sign, const std::vector<GenMode>& lhs) {
  const std::string s = sign > 0 ? "+" : "-";
  auto md = [](const GenMode& g) { return std::to_string(g.mode); };
  std::string head = "F" + std::to_string(family) + "[";
  switch (family) {
    case 1: return head + "g=" + lhs[1].gen.name() + ",k=" + md(lhs[1]) + "]";
    case 2: return head + "i=" + std::to_string(i) + ",j=" + std::to_string(j) + ",k=" + md(lhs[0]) + ",l=" + md(lhs[1]) + "]";
    case 3:
      return head + "i=" + std::to_string(i) + ",j=" + std::to_string(j) + ",s=" + s + ",k=" + md(lhs[0]) +
             ",l=" + md(lhs[1]) + "]";
    case 4:
      return head + "i=" + std::to_string(i) + (i == j ? "" : ",j=" + std::to_string(j)) + ",k=" + md(lhs[0]) +
             ",l=" + md(lhs[1]) + "]";
    default: break;
  }
  head += "i=" + std::to_string(i) + ",j=" + std::to_string(j) + ",s=" + s;
  if (lhs.size() == 2) return head + ",k=" + md(lhs[0]) + ",l=" + md(lhs[1]) + "]";
  for (std::size_t k = 0; k + 1 < lhs.size(); ++k) head += ",k" + std::to_string(k + 1) + "=" + md(lhs[k]);
  return head + ",l=" + md(lhs.back()) + "]";
}

// Depth of the Serre bracket ad(x_i)^depth x_j = 0, i != j.
int serre_depth(const RankParams& p, int i, int j) {
  const int aii = cartan_entry(p, i, i);
  const int aij = cartan_entry(p, i, j);
  if (aii == 0) return aij == 0 ? 1 : 2;
  return std::max(1, 1 - aij);
}

// Calls f(modes) for every vector of `count` modes in [-w, w], lexicographic.
template <class F>
void for_modes(int count, int w, F&& f) {
  std::vector<int> modes(count, -w);
  while (true) {
    f(modes);
    int k = count - 1;
    while (k >= 0 && modes[k] == w) modes[k--] = -w;
    if (k < 0) return;
    ++modes[k];
  }
}

}  // namespace

RelationInstance make_instance(int family, int i, int j, int sign, std::vector<GenMode> lhs, std::vector<RhsTerm> rhs,
                               GaussianRational central) {
  std::map<GenMode, GaussianRational> combined;
  for (auto& t : rhs) combined[t.op] += t.coef;
  RelationInstance inst;
  inst.family = family;
  inst.i = i;
  inst.j = j;
  inst.sign = sign;
  for (auto& [op, c] : combined)
    if (!c.is_zero()) inst.rhs.push_back({c, op});
  inst.central = std::move(central);
  inst.id = instance_id(family, i, j, sign, lhs);
  inst.lhs = std::move(lhs);
  return inst;
}

long binomial(long r, int j) {
  if (j < 0) return 0;
  long num = 1, den = 1;
  for (int t = 0; t < j; ++t) {
    num *= r - t;
    den *= t + 1;
  }
  return num / den;
}

namespace {

// Family-4 normalization -2/(alpha_i|alpha_i), with -1 in the isotropic case.
int family4_constant(const RankParams& p, int i) {
  const int aa = cartan_pairing(p, i, i);
  return aa == 0 ? -1 : -2 / aa;
}

}  // namespace

std::vector<RelationInstance> relation_catalog(const RankParams& p, int window) {
  p.validate();
  if (window < 0) throw std::invalid_argument("mode window must be >= 0");
  const int N = p.num_nodes();
  const GenMode K{GeneratorId::central(), 0};
  std::vector<RelationInstance> out;

  for (const auto& g : generators(p))
    for (int k = -window; k <= window; ++k) out.push_back(make_instance(1, 0, 0, 0, {K, {g, k}}, {}, 0));

  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for_modes(2, window, [&](const std::vector<int>& md) {
        const int k = md[0], l = md[1];
        out.push_back(make_instance(2, i, j, 0, {{GeneratorId::alpha(i), k}, {GeneratorId::alpha(j), l}}, {},
                                    k + l == 0 ? k * cartan_pairing(p, i, j) : 0));
      });

  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int s : {1, -1})
        for_modes(2, window, [&](const std::vector<int>& md) {
          const int k = md[0], l = md[1];
          out.push_back(make_instance(3, i, j, s, {{GeneratorId::alpha(i), k}, {GeneratorId::x(j, s), l}},
                                      {{GaussianRational(s * cartan_pairing(p, i, j)), {GeneratorId::x(j, s), k + l}}},
                                      0));
        });

  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for_modes(2, window, [&](const std::vector<int>& md) {
        const int k = md[0], l = md[1];
        std::vector<RhsTerm> rhs;
        GaussianRational central;
        if (i == j) {
          const int c = family4_constant(p, i);
          rhs.push_back({GaussianRational(c), {GeneratorId::alpha(i), k + l}});
          if (k + l == 0) central = GaussianRational(c * k);
        }
        out.push_back(make_instance(4, i, j, 0, {{GeneratorId::x(i, 1), k}, {GeneratorId::x(j, -1), l}}, rhs, central));
      });

  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int s : {1, -1}) {
        const int depth = i == j ? 1 : serre_depth(p, i, j);
        for_modes(depth + 1, window, [&](const std::vector<int>& md) {
          std::vector<GenMode> lhs;
          for (int t = 0; t < depth; ++t) lhs.push_back({GeneratorId::x(i, s), md[t]});
          lhs.push_back({GeneratorId::x(j, s), md[depth]});
          out.push_back(make_instance(5, i, j, s, std::move(lhs), {}, 0));
        });
      }
  return out;
}

std::vector<FieldRelation> field_relations(const RankParams& p) {
  p.validate();
  const int N = p.num_nodes();
  std::vector<FieldRelation> out;
  for (const auto& g : generators(p)) out.push_back({1, 0, 0, 0, {GeneratorId::central(), g}, {}});
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const GaussianRational c(cartan_pairing(p, i, j));
      FieldRelation fr{2, i, j, 0, {GeneratorId::alpha(i), GeneratorId::alpha(j)}, {}};
      fr.poles = {{}, {{c, GeneratorId::central()}}};
      out.push_back(fr);
    }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int s : {1, -1})
        out.push_back({3, i, j, s, {GeneratorId::alpha(i), GeneratorId::x(j, s)},
                       {{{GaussianRational(s * cartan_pairing(p, i, j)), GeneratorId::x(j, s)}}}});
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      FieldRelation fr{4, i, j, 0, {GeneratorId::x(i, 1), GeneratorId::x(j, -1)}, {}};
      if (i == j) {
        const GaussianRational c(family4_constant(p, i));
        fr.poles = {{{c, GeneratorId::alpha(i)}}, {{c, GeneratorId::central()}}};
      }
      out.push_back(fr);
    }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int s : {1, -1}) {
        const int depth = i == j ? 1 : serre_depth(p, i, j);
        FieldRelation fr{5, i, j, s, std::vector<GeneratorId>(depth, GeneratorId::x(i, s)), {}};
        fr.lhs.push_back(GeneratorId::x(j, s));
        out.push_back(fr);
      }
  return out;
}

std::vector<RelationInstance> mode_translate(const FieldRelation& fr, int window) {
  const bool has_rhs = std::any_of(fr.poles.begin(), fr.poles.end(), [](const auto& c) { return !c.empty(); });
  if (has_rhs && fr.lhs.size() != 2) throw std::invalid_argument("mode_translate: nested bracket with nonzero rhs");
  if (fr.lhs.size() < 2) throw std::invalid_argument("mode_translate: bracket needs two operands");
  // K is a scalar, not a series: it only occurs at mode 0.
  std::vector<int> free_slots;
  for (std::size_t t = 0; t < fr.lhs.size(); ++t)
    if (fr.lhs[t].kind != GeneratorKind::central) free_slots.push_back(static_cast<int>(t));

  std::vector<RelationInstance> out;
  for_modes(static_cast<int>(free_slots.size()), window, [&](const std::vector<int>& md) {
    std::vector<GenMode> lhs;
    for (const auto& g : fr.lhs) lhs.push_back({g, 0});
    for (std::size_t t = 0; t < free_slots.size(); ++t) lhs[free_slots[t]].mode = md[t];
    std::vector<RhsTerm> rhs;
    GaussianRational central;
    if (has_rhs) {
      const int r = lhs[0].mode, s = lhs[1].mode;
      for (std::size_t j = 0; j < fr.poles.size(); ++j) {
        const GaussianRational b(binomial(r, static_cast<int>(j)));
        const int target = r + s - static_cast<int>(j);
        for (const auto& term : fr.poles[j]) {
          if (term.gen.kind == GeneratorKind::central) {
            if (target == -1) central += b * term.coef;
          } else {
            rhs.push_back({b * term.coef, {term.gen, target}});
          }
        }
      }
    }
    out.push_back(make_instance(fr.family, fr.i, fr.j, fr.sign, std::move(lhs), std::move(rhs), central));
  });
  return out;
}

Representation::Representation(RankParams p, RepresentationVariant variant) : p_(p), variant_(variant) {
  p_.validate();
  for (int i = 0; i < p_.num_nodes(); ++i) {
    alpha_.push_back(rep_field(p_, GeneratorId::alpha(i), variant_));
    xplus_.push_back(rep_field(p_, GeneratorId::x(i, 1), variant_));
    xminus_.push_back(rep_field(p_, GeneratorId::x(i, -1), variant_));
  }
  central_ = Field::identity();
}

const Field& Representation::field(const GeneratorId& g) const {
  check_generator(p_, g);
  switch (g.kind) {
    case GeneratorKind::central: return central_;
    case GeneratorKind::alpha: return alpha_[g.index];
    case GeneratorKind::x_plus: return xplus_[g.index];
    case GeneratorKind::x_minus: return xminus_[g.index];
  }
  throw std::logic_error("unreachable");
}

State Representation::apply(const GenMode& op, const State& v) const {
  if (op.gen.kind == GeneratorKind::central) return v;
  return field(op.gen).apply(op.mode, v);
}

namespace {

State apply_chain(const Representation& rep, const std::vector<GenMode>& ops, std::size_t idx, const State& v) {
  if (idx + 1 == ops.size()) return rep.apply(ops[idx], v);
  int rest = 0;
  for (std::size_t t = idx + 1; t < ops.size(); ++t) rest += rep.parity(ops[t].gen);
  const int sign = (rep.parity(ops[idx].gen) & rest & 1) ? 1 : -1;
  State out = rep.apply(ops[idx], apply_chain(rep, ops, idx + 1, v));
  out.add(apply_chain(rep, ops, idx + 1, rep.apply(ops[idx], v)), GaussianRational(sign));
  return out;
}

}  // namespace

State Representation::evaluate_lhs(const RelationInstance& inst, const State& v) const {
  return apply_chain(*this, inst.lhs, 0, v);
}

State Representation::evaluate_rhs(const RelationInstance& inst, const State& v) const {
  State out;
  for (const auto& t : inst.rhs) out.add(apply(t.op, v), t.coef);
  out.add(v, inst.central);
  return out;
}

std::string catalog_dump(const RankParams& p, int window) {
  std::string out;
  for (const auto& inst : relation_catalog(p, window)) out += inst.id + ": " + inst.render() + "\n";
  return out;
}

}  // namespace toroidal
