#include "toroidal/report.hpp"

#include <map>
#include <sstream>

namespace toroidal {

namespace {

std::string families_text(const std::set<int>& fams) {
  std::string s;
  for (int f : fams) s += (s.empty() ? "" : ",") + std::to_string(f);
  return s;
}

}  // namespace

std::string variant_name(const RepresentationVariant& v) {
  std::string s;
  auto add = [&s](bool on, const char* name) {
    if (on) s += (s.empty() ? "" : "+") + std::string(name);
  };
  add(v.printed_xminus, "printed-xminus");
  add(v.vertex == VertexNormalization::printed_half_norm, "printed-vertex");
  add(v.weyl == WeylPairing::printed, "printed-weyl");
  add(v.beta_star_keeps_cbar_star, "beta-star-cbar");
  return s.empty() ? "standard" : s;
}

std::optional<RepresentationVariant> parse_variant(const std::string& name) {
  RepresentationVariant v;
  if (name == "standard") return v;
  if (name == "printed-xminus") v.printed_xminus = true;
  else if (name == "printed-vertex") v.vertex = VertexNormalization::printed_half_norm;
  else if (name == "printed-weyl") v.weyl = WeylPairing::printed;
  else if (name == "beta-star-cbar") v.beta_star_keeps_cbar_star = true;
  else return std::nullopt;
  return v;
}

nlohmann::json config_json(const SuiteConfig& cfg) {
  nlohmann::json j;
  j["m"] = cfg.params.m;
  j["n"] = cfg.params.n;
  j["max_degree"] = cfg.max_degree;
  j["mode_window"] = cfg.mode_window;
  j["lattice_height"] = cfg.lattice_height;
  j["families"] = std::vector<int>(cfg.families.begin(), cfg.families.end());
  if (cfg.sample) {
    j["mode"] = "sample";
    j["sample"] = *cfg.sample;
    j["seed"] = cfg.seed;
  } else {
    j["mode"] = "exhaustive";
  }
  j["oracle"] = cfg.oracle;
  if (cfg.oracle) j["oracle_window"] = cfg.oracle_window;
  j["variant"] = variant_name(cfg.variant);
  return j;
}

nlohmann::json report_json(const VerificationReport& report) {
  nlohmann::json j;
  j["config"] = config_json(report.config);
  j["instances"] = nlohmann::json::array();
  for (const auto& r : report.instances) {
    nlohmann::json e;
    e["id"] = r.id;
    e["family"] = r.family;
    e["i"] = r.i;
    e["j"] = r.j;
    e["modes"] = r.modes;
    e["states_checked"] = r.states_checked;
    e["status"] = r.pass ? "pass" : "fail";
    if (!r.pass) e["counterexample"] = r.counterexample;
    j["instances"].push_back(std::move(e));
  }
  j["summary"] = {{"pass", report.pass}, {"fail", report.fail}, {"duration_ms", report.duration_ms}};
  return j;
}

std::string report_text(const VerificationReport& report) {
  const SuiteConfig& c = report.config;
  std::ostringstream out;
  out << "config: m=" << c.params.m << " n=" << c.params.n << " max_degree=" << c.max_degree
      << " mode_window=" << c.mode_window << " lattice_height=" << c.lattice_height
      << " families=" << families_text(c.families);
  if (c.sample) out << " mode=sample sample=" << *c.sample << " seed=" << c.seed;
  else out << " mode=exhaustive";
  out << " oracle=" << (c.oracle ? "true" : "false");
  if (c.oracle) out << " oracle_window=" << c.oracle_window;
  out << " variant=" << variant_name(c.variant) << "\n";
  for (const auto& r : report.instances) {
    out << (r.pass ? "PASS " : "FAIL ") << r.id << " family=" << r.family << " i=" << r.i << " j=" << r.j
        << " modes=";
    for (std::size_t k = 0; k < r.modes.size(); ++k) out << (k ? "," : "") << r.modes[k];
    out << " states=" << r.states_checked;
    if (!r.pass) out << "\n  counterexample: " << r.counterexample;
    out << "\n";
  }
  out << "summary: pass=" << report.pass << " fail=" << report.fail << " duration_ms=" << report.duration_ms << "\n";
  return out.str();
}

std::vector<DimensionRow> graded_dimensions(const RankParams& p, int max_height, int max_degree) {
  p.validate();
  std::map<std::pair<int, int>, std::size_t> counts;
  for (int h = 0; h <= max_height; ++h)
    for (int d = 0; d <= max_degree; ++d) counts[{h, d}] = 0;
  for (const auto& s : enumerate_states(p, lattice_points(p, max_height), max_degree))
    ++counts[{s.lattice_height(), s.degree()}];
  std::vector<DimensionRow> rows;
  for (const auto& [key, c] : counts) rows.push_back({key.first, key.second, c});
  return rows;
}

nlohmann::json dimensions_json(const RankParams& p, const std::vector<DimensionRow>& rows) {
  nlohmann::json j;
  j["m"] = p.m;
  j["n"] = p.n;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) j["rows"].push_back({{"height", r.height}, {"degree", r.degree}, {"count", r.count}});
  return j;
}

std::string dimensions_text(const RankParams& p, const std::vector<DimensionRow>& rows) {
  std::ostringstream out;
  out << "graded dimensions for A(" << p.m << "," << p.n << "): states with lattice height h and degree d\n";
  out << "height degree count\n";
  for (const auto& r : rows) out << r.height << " " << r.degree << " " << r.count << "\n";
  return out.str();
}

}  // namespace toroidal
