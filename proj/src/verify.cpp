#include "toroidal/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

namespace toroidal {

void SuiteConfig::validate() const {
  params.validate();
  if (max_degree < 0) throw std::invalid_argument("max-degree must be >= 0");
  if (mode_window < 0) throw std::invalid_argument("mode-window must be >= 0");
  if (lattice_height < 0) throw std::invalid_argument("lattice-height must be >= 0");
  if (oracle_window < 0) throw std::invalid_argument("oracle window must be >= 0");
  for (int f : families)
    if (f < 1 || f > 5) throw std::invalid_argument("families must be a subset of 1..5 (got " + std::to_string(f) + ")");
}

InstanceRecord verify_instance(const Representation& rep, const RelationInstance& inst,
                               const std::vector<BasisState>& states) {
  InstanceRecord rec{inst.id, inst.family, inst.i, inst.j, inst.modes(), 0, true, {}};
  for (const auto& b : states) {
    ++rec.states_checked;
    const State v(b);
    State lhs = rep.evaluate_lhs(inst, v);
    State rhs = rep.evaluate_rhs(inst, v);
    if (!(lhs == rhs)) {
      rec.pass = false;
      rec.counterexample =
          inst.render() + " on " + b.to_string() + ": lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string();
      break;
    }
  }
  return rec;
}

std::string OracleCase::id() const {
  std::string s = "ORACLE[";
  for (std::size_t k = 0; k < chain.size(); ++k) s += (k ? "," : "") + chain[k].name();
  return s + "]";
}

std::vector<OracleCase> oracle_cases(const RankParams& p) {
  const int m = p.m;
  const int last = p.m + p.n + 1;
  auto a = [](int i) { return GeneratorId::alpha(i); };
  auto xp = [](int i) { return GeneratorId::x(i, 1); };
  auto xm = [](int i) { return GeneratorId::x(i, -1); };
  return {
      {{xp(0), xm(0)}},
      {{xp(m + 1), xm(m + 1)}},
      {{xp(m + 2), xm(m + 2)}},
      {{a(0), a(0)}},
      {{a(0), a(1)}},
      {{a(0), a(last)}},
      {{a(last), xp(0)}},
      {{xp(0), xp(0), xp(1)}},
      {{xp(0), xp(0), xp(last)}},
      {{xp(m + 1), xp(m + 1), xp(m)}},
      {{xp(m + 1), xp(m + 1), xp(m + 2)}},
  };
}

namespace {

State nested_bracket(const Representation& rep, const std::vector<GeneratorId>& chain, const std::vector<int>& modes,
                     std::size_t idx, const State& v) {
  const Field& f = rep.field(chain[idx]);
  if (idx + 1 == chain.size()) return f.apply(modes[idx], v);
  int rest = 0;
  for (std::size_t t = idx + 1; t < chain.size(); ++t) rest += rep.parity(chain[t]);
  State out = f.apply(modes[idx], nested_bracket(rep, chain, modes, idx + 1, v));
  const int sign = (f.parity() & rest & 1) ? 1 : -1;
  out.add(nested_bracket(rep, chain, modes, idx + 1, f.apply(modes[idx], v)), GaussianRational(sign));
  return out;
}

}  // namespace

InstanceRecord verify_oracle_case(const Representation& rep, const OracleCase& c, int window,
                                  const std::vector<BasisState>& states) {
  const RankParams& p = rep.params();
  InstanceRecord rec;
  rec.id = c.id();
  rec.i = c.chain.front().index;
  rec.j = c.chain.back().index;
  std::vector<wick::Expr> exprs;
  for (const auto& g : c.chain) exprs.push_back(wick::oracle_form(p, g));
  const wick::FieldPoles poles = wick::to_fields(wick::wick_nested(exprs));

  std::vector<int> modes(c.chain.size(), -window);
  for (const auto& b : states) {
    ++rec.states_checked;
    const State v(b);
    std::fill(modes.begin(), modes.end(), -window);
    while (true) {
      State lhs = nested_bracket(rep, c.chain, modes, 0, v);
      State rhs = wick::apply_nested(poles, modes, v);
      if (!(lhs == rhs)) {
        rec.pass = false;
        std::string ms;
        for (std::size_t k = 0; k < modes.size(); ++k) ms += (k ? "," : "") + std::to_string(modes[k]);
        rec.modes = modes;
        rec.counterexample = "modes (" + ms + ") on " + b.to_string() + ": direct = " + lhs.to_string() +
                             ", oracle = " + rhs.to_string();
        return rec;
      }
      int k = static_cast<int>(modes.size()) - 1;
      while (k >= 0 && modes[k] == window) modes[k--] = -window;
      if (k < 0) break;
      ++modes[k];
    }
  }
  return rec;
}

std::vector<BasisState> suite_states(const SuiteConfig& cfg) {
  return enumerate_states(cfg.params, lattice_points(cfg.params, cfg.lattice_height), cfg.max_degree);
}

namespace {

// Uniform draw in [0, n) by rejection, identical on every platform.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % n;
}

}  // namespace

std::vector<RelationInstance> suite_instances(const SuiteConfig& cfg) {
  std::vector<RelationInstance> all;
  for (auto& inst : relation_catalog(cfg.params, cfg.mode_window))
    if (cfg.families.count(inst.family)) all.push_back(std::move(inst));
  if (!cfg.sample || *cfg.sample >= all.size()) return all;
  std::vector<std::size_t> idx(all.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::mt19937_64 rng(cfg.seed);
  const std::size_t count = *cfg.sample;
  for (std::size_t k = 0; k < count; ++k) std::swap(idx[k], idx[k + bounded(rng, idx.size() - k)]);
  idx.resize(count);
  std::sort(idx.begin(), idx.end());
  std::vector<RelationInstance> out;
  for (std::size_t k : idx) out.push_back(std::move(all[k]));
  return out;
}

VerificationReport run_suite(const SuiteConfig& cfg, bool timing) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.config = cfg;

  const Representation rep(cfg.params, cfg.variant);
  const std::vector<BasisState> states = suite_states(cfg);
  const std::vector<RelationInstance> instances = suite_instances(cfg);
  const std::vector<OracleCase> oracles = cfg.oracle ? oracle_cases(cfg.params) : std::vector<OracleCase>{};

  // Oracle checks are the slowest jobs; they are scheduled first but stored last.
  const std::size_t total = instances.size() + oracles.size();
  report.instances.resize(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next.fetch_add(1); k < total; k = next.fetch_add(1)) {
      if (k < oracles.size()) {
        report.instances[instances.size() + k] = verify_oracle_case(rep, oracles[k], cfg.oracle_window, states);
      } else {
        const std::size_t t = k - oracles.size();
        report.instances[t] = verify_instance(rep, instances[t], states);
      }
    }
    Field::clear_cache();
  };
  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(total, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (const auto& r : report.instances) (r.pass ? report.pass : report.fail)++;
  if (timing)
    report.duration_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace toroidal
