#pragma once

#include "freedist/normalization.hpp"

#include <json.hpp>

#include <string>

namespace freedist {

// Frame slot label: "i" for singles, "[j,k]" for pairs.
std::string slot_label(const PairIndexer& pairs, std::size_t slot);
std::size_t slot_from_label(const PairIndexer& pairs, const std::string& label);

// Analysis report with sparse entries {"index": [...], "value": "<polynomial>"}.
nlohmann::json report_json(const Analysis& a);
// Inverse of report_json; polynomials are reparsed in the rank-l chart.
Analysis parse_report(const nlohmann::json& j);

std::string report_text(const Analysis& a);

}  // namespace freedist
