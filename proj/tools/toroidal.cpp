#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "toroidal/report.hpp"

using namespace toroidal;

namespace {

std::set<int> parse_families(const std::string& text) {
  if (text == "all") return {1, 2, 3, 4, 5};
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int f = 0;
    try {
      f = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || f < 1 || f > 5)
      throw std::invalid_argument("families must be a comma-separated subset of 1..5 (got '" + item + "')");
    out.insert(f);
  }
  if (out.empty()) throw std::invalid_argument("families must not be empty");
  return out;
}

GeneratorId parse_generator(const RankParams& p, const std::string& text) {
  auto g = GeneratorId::parse(text);
  if (!g) throw std::invalid_argument("unknown generator '" + text + "' (expected K, alphaI, xI+ or xI-)");
  check_generator(p, *g);
  return *g;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free-field representation of the toroidal Lie superalgebra T(A(m,n)): exact relation checker"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read `key = value` settings; command-line flags take precedence");

  RankParams params;
  int max_degree = 2, mode_window = 1, lattice_height = 1, oracle_window = 2;
  std::string families = "1,2,3,4,5", format = "text", out_path, variant = "standard";
  std::size_t sample = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool no_oracle = false, no_timing = false;

  app.add_option("--m", params.m, "Even rank m (m >= 1, m != n)")->capture_default_str();
  app.add_option("--n", params.n, "Odd rank n (n >= 1, n != m)")->capture_default_str();
  app.add_option("--max-degree", max_degree, "Maximum oscillator degree of test states")->capture_default_str();
  app.add_option("--mode-window", mode_window, "Modes range over [-W, W]")->capture_default_str();
  app.add_option("--lattice-height", lattice_height, "Maximum lattice height of test states")->capture_default_str();
  app.add_option("--families", families, "Relation families, e.g. 1,2,4 or all")->capture_default_str();
  app.add_option("--sample", sample, "Check N seeded random instances instead of all");
  app.add_option("--seed", seed, "Seed for --sample")->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--out", out_path, "Write output to PATH instead of stdout");
  app.add_option("--threads", threads, "Worker threads (0 = hardware concurrency)")->capture_default_str();
  app.add_option("--oracle-window", oracle_window, "Mode window of the oracle cross-checks")->capture_default_str();
  app.add_flag("--no-oracle", no_oracle, "Skip the Wick-oracle cross-checks");
  app.add_flag("--no-timing", no_timing, "Report duration_ms = 0 for byte-identical reruns");
  app.add_option("--variant", variant, "Alternative conventions for regression runs")
      ->check(CLI::IsMember({"standard", "printed-xminus", "printed-vertex", "printed-weyl", "beta-star-cbar"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check the defining relations on enumerated states")->fallthrough();
  auto* dims = app.add_subcommand("dims", "Graded dimensions by lattice height and degree")->fallthrough();
  auto* ope = app.add_subcommand("ope", "Wick-oracle bracket of two generators")->fallthrough();
  auto* catalog = app.add_subcommand("catalog", "List relation instances in the mode window")->fallthrough();
  auto* rootdata = app.add_subcommand("rootdata", "Simple roots, Cartan data and cocycle table")->fallthrough();
  std::string left, right;
  ope->add_option("left", left, "Left generator, e.g. x0+")->required();
  ope->add_option("right", right, "Right generator, e.g. x0-")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  SuiteConfig cfg;
  try {
    cfg.params = params;
    cfg.max_degree = max_degree;
    cfg.mode_window = mode_window;
    cfg.lattice_height = lattice_height;
    cfg.families = parse_families(families);
    if (app.count("--sample") || sample) cfg.sample = sample;
    cfg.seed = seed;
    cfg.threads = threads;
    cfg.oracle = !no_oracle;
    cfg.oracle_window = oracle_window;
    cfg.variant = *parse_variant(variant);
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }
  const bool json = format == "json";

  try {
    if (*verify) {
      const VerificationReport report = run_suite(cfg, !no_timing);
      emit(json ? report_json(report).dump(2) + "\n" : report_text(report), out_path);
      if (!out_path.empty())
        std::cout << "pass=" << report.pass << " fail=" << report.fail << " duration_ms=" << report.duration_ms << "\n";
      return report.fail == 0 ? 0 : 1;
    }
    if (*dims) {
      const auto rows = graded_dimensions(cfg.params, cfg.lattice_height, cfg.max_degree);
      emit(json ? dimensions_json(cfg.params, rows).dump(2) + "\n" : dimensions_text(cfg.params, rows), out_path);
      return 0;
    }
    if (*ope) {
      GeneratorId a, b;
      try {
        a = parse_generator(cfg.params, left);
        b = parse_generator(cfg.params, right);
      } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
      }
      const std::string text = wick::ope(cfg.params, a, b);
      if (json) {
        nlohmann::json j{{"left", a.name()}, {"right", b.name()}, {"bracket", text}};
        emit(j.dump(2) + "\n", out_path);
      } else {
        emit("[" + a.name() + "(z), " + b.name() + "(w)] = " + text + "\n", out_path);
      }
      return 0;
    }
    if (*catalog) {
      if (json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& inst : relation_catalog(cfg.params, cfg.mode_window))
          if (cfg.families.count(inst.family))
            j.push_back({{"id", inst.id}, {"family", inst.family}, {"relation", inst.render()}});
        emit(j.dump(2) + "\n", out_path);
      } else {
        std::string text;
        for (const auto& inst : relation_catalog(cfg.params, cfg.mode_window))
          if (cfg.families.count(inst.family)) text += inst.id + ": " + inst.render() + "\n";
        emit(text, out_path);
      }
      return 0;
    }
    if (*rootdata) {
      emit(rootdata_dump(cfg.params), out_path);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
