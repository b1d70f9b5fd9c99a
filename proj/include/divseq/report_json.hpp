#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "divseq/harness.hpp"

namespace divseq {

/// Fixed-key-order JSON object for one report; serialization is
/// byte-deterministic (no floats, values above word size as strings).
nlohmann::ordered_json report_to_json(const PropertyReport& report);

/// One compact JSON object per line.
std::string reports_to_json_lines(const std::vector<PropertyReport>& reports);

std::string csv_header();

/// All fields double-quoted; witness flattened to semicolon-separated k=v.
std::string report_to_csv_row(const PropertyReport& report);

/// Human-oriented single line; not a stable format.
std::string report_to_plain(const PropertyReport& report);

}  // namespace divseq
