#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TOROIDAL_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "toroidal_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const std::string small = "--max-degree 1 --lattice-height 1 --mode-window 1 --no-timing --oracle-window 1";

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run("--help").code == 0);
  CHECK(run("").code == 2);
  CHECK(run("verify --bogus").code == 2);
  CHECK(run("verify --format yaml").code == 2);
  CHECK(run("verify --families 1,9").code == 2);
  CHECK(run("verify --max-degree -1").code == 2);
  CHECK(run("ope x0+").code == 2);
  CHECK(run("ope x0+ y1").code == 2);
  CHECK(run("ope x9+ x0-").code == 2);
  const Run r = run("verify --m 1 --n 1");
  CHECK(r.code == 2);
  CHECK(r.out.find("m != n") != std::string::npos);
}

TEST_CASE("verify reports and exit codes") {
  const Run ok = run("verify --m 2 --n 1 --families 2,4 --format json " + small);
  REQUIRE(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["pass"] == j["instances"].size());
  CHECK(j["config"]["families"] == nlohmann::json::array({2, 4}));

  const Run bad = run("verify --m 1 --n 2 --families 4 --no-oracle --variant printed-xminus " + small);
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL F4[i=3,") != std::string::npos);
  CHECK(bad.out.find("counterexample: ") != std::string::npos);
}

TEST_CASE("text and json carry the same records") {
  const std::string args = "verify --m 1 --n 2 --families 3 " + small;
  const Run text = run(args);
  const Run json = run(args + " --format json");
  REQUIRE(text.code == 0);
  REQUIRE(json.code == 0);
  const auto j = nlohmann::json::parse(json.out);
  std::istringstream lines(text.out);
  std::string line;
  std::size_t k = 0;
  std::getline(lines, line);
  CHECK(line.starts_with("config: m=1 n=2"));
  while (std::getline(lines, line) && !line.starts_with("summary:")) {
    REQUIRE(k < j["instances"].size());
    const auto& e = j["instances"][k++];
    CHECK(line.starts_with((e["status"] == "pass" ? "PASS " : "FAIL ") + e["id"].get<std::string>() + " "));
  }
  CHECK(k == j["instances"].size());
  CHECK(line == "summary: pass=" + std::to_string(j["summary"]["pass"].get<int>()) + " fail=0 duration_ms=0");
}

TEST_CASE("sampled runs are reproducible") {
  const std::string args = "verify --m 2 --n 1 --sample 25 --seed 7 --format json --no-oracle " + small;
  const Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["instances"].size() == 25);
  CHECK(run("verify --m 2 --n 1 --sample 25 --seed 8 --format json --no-oracle " + small).out != a.out);
}

TEST_CASE("config file with flag overrides") {
  const auto cfg = scratch("run.cfg");
  {
    std::ofstream f(cfg);
    f << "m = 1\nn = 2\nmax-degree = 1\nlattice-height = 0\nfamilies = 4\nno-oracle = true\n";
  }
  const auto out = scratch("report.json");
  std::filesystem::remove(out);
  const Run r = run("verify --config " + cfg.string() + " --m 3 --format json --no-timing --out " + out.string());
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("pass="));
  const auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["config"]["m"] == 3);
  CHECK(j["config"]["n"] == 2);
  CHECK(j["config"]["max_degree"] == 1);
  CHECK(j["config"]["lattice_height"] == 0);
  CHECK(j["config"]["families"] == nlohmann::json::array({4}));
  CHECK(j["config"]["oracle"] == false);
  CHECK(run("verify --config " + scratch("missing.cfg").string()).code == 2);
}

TEST_CASE("ope output") {
  CHECK(run("ope x0+ x0-").out == "[x0+(z), x0-(w)] = -(alpha0(w))delta(z-w) - d_w delta(z-w)\n");
  CHECK(run("ope alpha0 alpha1").out == "[alpha0(z), alpha1(w)] = -d_w delta(z-w)\n");
  CHECK(run("ope x1+ x4+").out == "[x1+(z), x4+(w)] = 0\n");
  CHECK(run("ope --m 1 --n 2 x3+ x4+").out == "[x3+(z), x4+(w)] = (:d1d3*:(w))delta(z-w)\n");
  const auto j = nlohmann::json::parse(run("ope alpha0 alpha0 --format json").out);
  CHECK(j["bracket"] == "0");
}

TEST_CASE("dims, catalog and rootdata") {
  const Run d = run("dims --m 2 --n 1 --max-degree 2 --lattice-height 1");
  CHECK(d.code == 0);
  CHECK(d.out.find("\n0 0 1\n0 1 8\n0 2 44\n") != std::string::npos);
  CHECK(d.out.find("\n1 0 6\n") != std::string::npos);
  const auto dj = nlohmann::json::parse(run("dims --max-degree 1 --lattice-height 0 --format json").out);
  CHECK(dj["rows"].size() == 2);

  const Run c = run("catalog --families 4");
  CHECK(c.code == 0);
  CHECK(c.out.find("F4[i=0,k=1,l=-1]: [x0+(1), x0-(-1)] = -alpha0(0) - K\n") != std::string::npos);
  CHECK(c.out.find("F2[") == std::string::npos);

  const Run rd = run("rootdata --m 1 --n 2");
  CHECK(rd.code == 0);
  CHECK(rd.out.find("alpha0 = ") != std::string::npos);
}
