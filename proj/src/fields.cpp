#include "toroidal/fields.hpp"

#include <atomic>
#include <climits>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace toroidal {

namespace {

constexpr int kNoModes = INT_MIN / 4;

std::uint64_t next_node_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

int floor_div2(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

struct MemoKey {
  std::uint64_t node;
  int mode;
  BasisState state;
  bool operator==(const MemoKey&) const = default;
};

struct MemoHash {
  std::size_t operator()(const MemoKey& k) const {
    std::size_t h = std::hash<std::uint64_t>{}(k.node) * 0x9E3779B97F4A7C15ULL;
    auto mix = [&h](long x) { h ^= std::hash<long>{}(x) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2); };
    mix(k.mode);
    for (int c : k.state.gamma.coords) mix(c);
    mix(-1000);
    for (const auto& o : k.state.heis) mix(o.species * 64 + o.mode);
    mix(-2000);
    for (const auto& o : k.state.weyl) mix(o.species * 64 + o.mode);
    return h;
  }
};

constexpr std::size_t kMemoLimit = 1u << 20;

std::unordered_map<MemoKey, State, MemoHash>& memo() {
  thread_local std::unordered_map<MemoKey, State, MemoHash> table;
  return table;
}

}  // namespace

struct Field::Node {
  Kind kind = Kind::zero;
  int parity = 0;
  int weight2 = 0;
  bool printed_grading = false;
  std::uint64_t id = next_node_id();
  LatticeVector vec;
  BosonLabel label;
  WeylPairing pairing = WeylPairing::shifted;
  VertexSpec spec;
  GaussianRational coef{1};
  std::vector<Field> children;
  std::string name;
};

std::string lattice_text(const LatticeVector& v) {
  std::string s;
  for (int k = 0; k < v.size(); ++k) {
    const int c = v.coords[k];
    if (c == 0) continue;
    if (c < 0) s += "-";
    else if (!s.empty()) s += "+";
    if (std::abs(c) != 1) s += std::to_string(std::abs(c)) + "*";
    s += "eps" + std::to_string(k + 1);
  }
  return s.empty() ? "0" : s;
}

Field::Field() : node_(std::make_shared<Node>()) {}

Field Field::zero() { return Field(); }

Field Field::identity() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::identity;
  return Field(n);
}

Field Field::heis(LatticeVector vec) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::heis;
  n->weight2 = 2;
  n->vec = std::move(vec);
  return Field(n);
}

Field Field::weyl(BosonLabel label, WeylPairing pairing) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::weyl;
  n->label = label;
  n->pairing = pairing;
  n->printed_grading = pairing == WeylPairing::printed;
  n->weight2 = pairing == WeylPairing::shifted ? 1 : 2;
  return Field(n);
}

Field Field::vertex(VertexSpec spec) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::vertex;
  n->parity = spec.parity();
  n->weight2 = spec.norm_squared() - 2 * spec.shift();
  n->spec = std::move(spec);
  return Field(n);
}

Field Field::vertex(LatticeVector alpha, VertexNormalization normalization) {
  return vertex(VertexSpec{std::move(alpha), normalization});
}

Field::Kind Field::kind() const { return node_->kind; }
int Field::parity() const { return node_->parity; }
int Field::weight2() const { return node_->weight2; }

int Field::support_bound(const BasisState& v) const {
  const Node& nd = *node_;
  switch (nd.kind) {
    case Kind::zero: return kNoModes;
    case Kind::identity: return -1;
    case Kind::heis: {
      int top = 0;
      for (const auto& o : v.heis) top = std::max(top, o.mode);
      return top;
    }
    case Kind::weyl: {
      if (nd.label.is_cbar() && !nd.label.dual) return kNoModes;
      int top = 0;
      for (const auto& o : v.weyl) top = std::max(top, o.mode);
      return std::max(-1, nd.pairing == WeylPairing::shifted ? top - 1 : top);
    }
    case Kind::vertex: return vertex_support_bound(nd.spec, v);
    case Kind::scaled: return nd.children[0].support_bound(v);
    case Kind::sum: {
      int best = kNoModes;
      for (const auto& c : nd.children) best = std::max(best, c.support_bound(v));
      return best;
    }
    case Kind::normal_product: {
      const int e2 = v.energy2(nd.printed_grading ? WeylPairing::printed : WeylPairing::shifted);
      return floor_div2(e2 + nd.weight2 - 2);
    }
  }
  return kNoModes;
}

State Field::apply(int n, const BasisState& v) const {
  const Node& nd = *node_;
  switch (nd.kind) {
    case Kind::zero: return {};
    case Kind::identity: return n == -1 ? State(v) : State();
    case Kind::heis: return heis_apply(HeisMode{nd.vec, n}, v);
    case Kind::weyl: return weyl_apply(WeylMode{nd.label, n}, v, nd.pairing);
    case Kind::vertex: return vertex_apply(nd.spec, n, v);
    case Kind::scaled: return nd.coef * nd.children[0].apply(n, v);
    case Kind::sum: {
      State out;
      for (const auto& c : nd.children) out += c.apply(n, v);
      return out;
    }
    case Kind::normal_product: break;
  }

  auto& table = memo();
  MemoKey key{nd.id, n, v};
  if (auto it = table.find(key); it != table.end()) return it->second;

  const Field& a = nd.children[0];
  const Field& b = nd.children[1];
  State out;
  if (n <= support_bound(v)) {
    const int nb = b.support_bound(v);
    for (int k = n - 1 - nb; k <= -1; ++k) {
      State w = b.apply(n - 1 - k, v);
      if (!w.is_zero()) out += a.apply(k, w);
    }
    const GaussianRational sign((a.parity() & b.parity()) ? -1 : 1);
    const int na = a.support_bound(v);
    for (int k = 0; k <= na; ++k) {
      State w = a.apply(k, v);
      if (!w.is_zero()) out.add(b.apply(n - 1 - k, w), sign);
    }
  }
  if (table.size() >= kMemoLimit) table.clear();
  table.emplace(std::move(key), out);
  return out;
}

State Field::apply(int n, const State& v) const {
  State out;
  for (const auto& [b, c] : v) out.add(apply(n, b), c);
  return out;
}

std::string Field::render() const {
  const Node& nd = *node_;
  if (!nd.name.empty()) return nd.name;
  switch (nd.kind) {
    case Kind::zero: return "0";
    case Kind::identity: return "1";
    case Kind::heis: return lattice_text(nd.vec);
    case Kind::weyl: return nd.label.to_string();
    case Kind::vertex: return "X(" + lattice_text(nd.spec.alpha) + ")";
    case Kind::normal_product: return ":" + nd.children[0].render() + nd.children[1].render() + ":";
    case Kind::scaled: {
      std::string inner = nd.children[0].render();
      if (nd.children[0].kind() == Kind::sum && nd.children[0].node_->name.empty()) inner = "(" + inner + ")";
      return coefficient_prefix(nd.coef) + inner;
    }
    case Kind::sum: {
      std::string s;
      for (const auto& c : nd.children) {
        std::string t = c.render();
        if (s.empty()) s = t;
        else if (!t.empty() && t[0] == '-') s += " - " + t.substr(1);
        else s += " + " + t;
      }
      return s;
    }
  }
  return "?";
}

Field Field::named(std::string name) const {
  auto n = std::make_shared<Node>(*node_);
  n->id = next_node_id();
  n->name = std::move(name);
  return Field(n);
}

Field Field::operator-() const { return GaussianRational(-1) * *this; }

Field operator+(const Field& a, const Field& b) {
  if (a.kind() == Field::Kind::zero) return b;
  if (b.kind() == Field::Kind::zero) return a;
  if (a.parity() != b.parity()) throw std::invalid_argument("sum of fields with different parity");
  auto n = std::make_shared<Field::Node>();
  n->kind = Field::Kind::sum;
  n->parity = a.parity();
  for (const Field* f : {&a, &b}) {
    if (f->kind() == Field::Kind::sum && f->node_->name.empty()) {
      for (const auto& c : f->node_->children) n->children.push_back(c);
    } else {
      n->children.push_back(*f);
    }
  }
  for (const auto& c : n->children) {
    n->weight2 = std::max(n->weight2, c.weight2());
    n->printed_grading = n->printed_grading || c.node_->printed_grading;
  }
  return Field(n);
}

Field operator-(const Field& a, const Field& b) { return a + (-b); }

Field operator*(const GaussianRational& c, const Field& a) {
  if (c.is_zero() || a.kind() == Field::Kind::zero) return Field::zero();
  if (c == GaussianRational(1)) return a;
  auto n = std::make_shared<Field::Node>();
  n->kind = Field::Kind::scaled;
  n->parity = a.parity();
  n->weight2 = a.weight2();
  n->printed_grading = a.node_->printed_grading;
  if (a.kind() == Field::Kind::scaled && a.node_->name.empty()) {
    n->coef = c * a.node_->coef;
    n->children.push_back(a.node_->children[0]);
  } else {
    n->coef = c;
    n->children.push_back(a);
  }
  return Field(n);
}

Field normal_product(const Field& a, const Field& b) {
  if (a.kind() == Field::Kind::zero || b.kind() == Field::Kind::zero) return Field::zero();
  auto n = std::make_shared<Field::Node>();
  n->kind = Field::Kind::normal_product;
  n->parity = (a.parity() + b.parity()) & 1;
  n->weight2 = a.weight2() + b.weight2();
  n->printed_grading = a.node_->printed_grading || b.node_->printed_grading;
  n->children = {a, b};
  return Field(n);
}

void Field::clear_cache() { memo().clear(); }

State bracket_apply(const Field& a, int r, const Field& b, int s, const State& v) {
  State out = a.apply(r, b.apply(s, v));
  const GaussianRational sign((a.parity() & b.parity()) ? 1 : -1);
  out.add(b.apply(s, a.apply(r, v)), sign);
  return out;
}

std::string FieldMismatch::describe() const {
  return "mode " + std::to_string(mode) + " on " + state.to_string() + ": lhs = " + lhs.to_string() +
         ", rhs = " + rhs.to_string();
}

std::optional<FieldMismatch> fields_equal_on(const Field& a, const Field& b, int mode_lo, int mode_hi,
                                             const std::vector<BasisState>& states) {
  for (int n = mode_lo; n <= mode_hi; ++n) {
    for (const auto& v : states) {
      State x = a.apply(n, v);
      State y = b.apply(n, v);
      if (!(x == y)) return FieldMismatch{n, v, std::move(x), std::move(y)};
    }
  }
  return std::nullopt;
}

}  // namespace toroidal
