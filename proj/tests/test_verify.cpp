#include <doctest.h>

#include <algorithm>
#include <map>

#include "support.hpp"
#include "toroidal/report.hpp"

using namespace toroidal;
using testing::eps;
using testing::state_with;

namespace {

const RankParams P21{2, 1};

const RelationInstance& find(const std::vector<RelationInstance>& cat, const std::string& id) {
  auto it = std::find_if(cat.begin(), cat.end(), [&](const auto& inst) { return inst.id == id; });
  REQUIRE(it != cat.end());
  return *it;
}

SuiteConfig small_config() {
  SuiteConfig cfg;
  cfg.params = P21;
  cfg.max_degree = 1;
  cfg.mode_window = 1;
  cfg.lattice_height = 1;
  cfg.families = {2, 4};
  cfg.oracle_window = 1;
  cfg.threads = 3;
  return cfg;
}

}  // namespace

TEST_CASE("single instances") {
  const Representation rep(P21);
  const auto cat = relation_catalog(P21, 1);
  const std::vector<BasisState> vac{BasisState::vacuum(3)};

  const auto& f2 = find(cat, "F2[i=1,j=1,k=1,l=-1]");
  CHECK(rep.evaluate_lhs(f2, vacuum(3)) == 2 * vacuum(3));
  CHECK(verify_instance(rep, f2, vac).pass);

  const auto& f4 = find(cat, "F4[i=1,k=0,l=0]");
  const State e1(state_with(eps(P21, 1)));
  CHECK(rep.evaluate_lhs(f4, e1) == -1 * e1);
  CHECK(rep.evaluate_rhs(f4, e1) == -1 * e1);

  const auto& f1 = find(cat, "F1[g=x0+,k=1]");
  const auto rec = verify_instance(rep, f1, testing::small_states(P21, 1, 1));
  CHECK(rec.pass);
  CHECK(rec.modes == std::vector<int>{1});
  CHECK(rec.states_checked == testing::small_states(P21, 1, 1).size());
}

TEST_CASE("failures stop at the first counterexample") {
  const Representation rep(P21);
  auto wrong = make_instance(2, 1, 1, 0, {{GeneratorId::alpha(1), 1}, {GeneratorId::alpha(1), -1}}, {}, 3);
  const auto states = testing::small_states(P21, 1, 1);
  const auto rec = verify_instance(rep, wrong, states);
  CHECK_FALSE(rec.pass);
  CHECK(rec.states_checked == 1);
  CHECK(rec.counterexample.find(states.front().to_string()) != std::string::npos);
}

TEST_CASE("suite run on a small window") {
  const SuiteConfig cfg = small_config();
  const auto report = run_suite(cfg, false);
  const auto instances = suite_instances(cfg);
  const auto oracles = oracle_cases(P21);
  REQUIRE(report.instances.size() == instances.size() + oracles.size());
  CHECK(report.fail == 0);
  CHECK(report.pass == report.instances.size());
  for (std::size_t k = 0; k < instances.size(); ++k) CHECK(report.instances[k].id == instances[k].id);
  for (std::size_t k = 0; k < oracles.size(); ++k) {
    CHECK(report.instances[instances.size() + k].family == 0);
    CHECK(report.instances[instances.size() + k].id == oracles[k].id());
  }
  CHECK(oracles.front().id() == "ORACLE[x0+,x0-]");
}

TEST_CASE("reports do not depend on the worker count") {
  SuiteConfig a = small_config(), b = small_config();
  a.threads = 1;
  b.threads = 5;
  CHECK(report_json(run_suite(a, false)).dump() == report_json(run_suite(b, false)).dump());
}

TEST_CASE("sampling is reproducible") {
  SuiteConfig cfg = small_config();
  cfg.families = {1, 2, 3, 4, 5};
  cfg.sample = 40;
  cfg.seed = 7;
  cfg.oracle = false;
  const auto first = suite_instances(cfg);
  CHECK(first.size() == 40);
  CHECK(report_json(run_suite(cfg, false)).dump() == report_json(run_suite(cfg, false)).dump());
  cfg.seed = 8;
  const auto other = suite_instances(cfg);
  bool differs = false;
  for (std::size_t k = 0; k < first.size(); ++k) differs = differs || first[k].id != other[k].id;
  CHECK(differs);
  // a sample at least as large as the catalog is the catalog
  cfg.sample = 1u << 20;
  CHECK(suite_instances(cfg).size() == relation_catalog(P21, 1).size());
}

TEST_CASE("configuration errors") {
  SuiteConfig cfg = small_config();
  cfg.params = {1, 1};
  CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("m != n"), std::invalid_argument);
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.families = {0, 2};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.max_degree = -1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("report serialization") {
  SuiteConfig cfg = small_config();
  cfg.families = {4};
  cfg.oracle = false;
  cfg.variant.printed_xminus = true;
  const auto report = run_suite(cfg, false);
  CHECK(report.fail > 0);
  const auto j = report_json(report);
  CHECK(j["config"]["m"] == 2);
  CHECK(j["config"]["mode"] == "exhaustive");
  CHECK(j["summary"]["fail"] == report.fail);
  CHECK(j["summary"]["pass"] == report.pass);
  std::size_t failed = 0;
  for (const auto& e : j["instances"]) {
    for (const char* key : {"id", "family", "i", "j", "modes", "states_checked", "status"}) CHECK(e.contains(key));
    CHECK(e.contains("counterexample") == (e["status"] == "fail"));
    failed += e["status"] == "fail";
  }
  CHECK(failed == report.fail);

  const std::string text = report_text(report);
  CHECK(text.starts_with("config: m=2 n=1 "));
  CHECK(text.find("FAIL F4[i=4,") != std::string::npos);
  CHECK(text.find("summary: pass=" + std::to_string(report.pass) + " fail=" + std::to_string(report.fail)) !=
        std::string::npos);
}

TEST_CASE("graded dimensions") {
  const auto rows = graded_dimensions(P21, 1, 2);
  std::map<std::pair<int, int>, std::size_t> count;
  for (const auto& r : rows) count[{r.height, r.degree}] = r.count;
  CHECK(count[{0, 0}] == 1);
  CHECK(count[{0, 1}] == 8);
  CHECK(count[{0, 2}] == 44);
  CHECK(count[{1, 0}] == 2 * 3);
  CHECK(count[{1, 2}] == 6 * 44);
  CHECK(dimensions_json(P21, rows)["rows"].size() == rows.size());
}

TEST_CASE("the null direction acts as zero against fermions") {
  const auto states = testing::small_states(P21, 1, 2);
  const Field cbar = Field::weyl(BosonLabel::cbar());
  for (int sign : {1, -1}) {
    const Field prod = normal_product(Field::vertex(eps(P21, 1, sign)), cbar);
    CHECK_FALSE(fields_equal_on(prod, Field::zero(), -4, 4, states));
  }
  CHECK(cbar.apply(-3, vacuum(3)).is_zero());
}
