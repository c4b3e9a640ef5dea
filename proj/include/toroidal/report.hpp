#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "toroidal/verify.hpp"

namespace toroidal {

/// "standard", or the alternative conventions joined by '+', e.g. "printed-xminus".
std::string variant_name(const RepresentationVariant& v);
/// Inverse of variant_name for a single name; nullopt if unknown.
std::optional<RepresentationVariant> parse_variant(const std::string& name);

nlohmann::json config_json(const SuiteConfig& cfg);
nlohmann::json report_json(const VerificationReport& report);
/// One line per instance plus config and summary lines.
std::string report_text(const VerificationReport& report);

/// Graded dimensions: rows (height, degree, count) for the given bounds.
struct DimensionRow {
  int height = 0;
  int degree = 0;
  std::size_t count = 0;
};
std::vector<DimensionRow> graded_dimensions(const RankParams& p, int max_height, int max_degree);
nlohmann::json dimensions_json(const RankParams& p, const std::vector<DimensionRow>& rows);
std::string dimensions_text(const RankParams& p, const std::vector<DimensionRow>& rows);

}  // namespace toroidal
