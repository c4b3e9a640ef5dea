#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toroidal/wick.hpp"

namespace toroidal {

struct SuiteConfig {
  RankParams params;
  int max_degree = 2;
  int mode_window = 1;
  int lattice_height = 1;
  std::set<int> families{1, 2, 3, 4, 5};
  /// Number of catalog instances to draw; nullopt checks every instance.
  std::optional<std::size_t> sample;
  std::uint64_t seed = 0;
  /// Run the Wick-oracle cross-checks on the displayed brackets.
  bool oracle = true;
  int oracle_window = 2;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
  RepresentationVariant variant;

  /// Throws std::invalid_argument describing the first violated bound.
  void validate() const;
};

struct InstanceRecord {
  std::string id;
  int family = 0;  ///< 0 for oracle cross-checks
  int i = 0;
  int j = 0;
  std::vector<int> modes;
  std::size_t states_checked = 0;
  bool pass = true;
  std::string counterexample;
};

struct VerificationReport {
  SuiteConfig config;
  std::vector<InstanceRecord> instances;
  std::size_t pass = 0;
  std::size_t fail = 0;
  long long duration_ms = 0;
};

/// Checks lhs == rhs on every state, stopping at the first counterexample.
InstanceRecord verify_instance(const Representation& rep, const RelationInstance& inst,
                               const std::vector<BasisState>& states);

/// A bracket [g0, [g1, ... g_last]] whose oracle expansion is compared with
/// direct mode computation.
struct OracleCase {
  std::vector<GeneratorId> chain;
  std::string id() const;
};

/// Generator brackets cross-checked against the Wick oracle:
/// the x^+/x^- pairs at 0, m+1, m+2, the alpha_0 brackets, [alpha_{m+n+1}, x_0^+]
/// and the four nested Serre brackets.
std::vector<OracleCase> oracle_cases(const RankParams& p);

/// mode_translate(wick oracle) versus direct evaluation for every mode in
/// [-window, window] on every state.
InstanceRecord verify_oracle_case(const Representation& rep, const OracleCase& c, int window,
                                  const std::vector<BasisState>& states);

/// States of the suite: lattice height <= latticeHeight, degree <= maxDegree.
std::vector<BasisState> suite_states(const SuiteConfig& cfg);

/// Catalog instances selected by the family filter and, when sampling, by a
/// seeded draw without replacement (kept in catalog order).
std::vector<RelationInstance> suite_instances(const SuiteConfig& cfg);

VerificationReport run_suite(const SuiteConfig& cfg, bool timing = true);

}  // namespace toroidal
