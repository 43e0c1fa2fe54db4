#pragma once

// Serialization helpers shared by the CLI and tests: locale-independent CSV
// with 12 significant digits, and JSON codecs that round-trip losslessly.

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pqs/bec.hpp"
#include "pqs/bound.hpp"
#include "pqs/spin.hpp"

namespace pqs::io {

/// Shortest-general formatting with 12 significant digits, '.' decimal.
std::string format_double(double x);

/// One CSV line from already-formatted cells.
std::string csv_row(const std::vector<std::string>& cells);

/// Write header + rows; every invocation with equal inputs is byte-identical.
void write_csv(const std::filesystem::path& path, const std::string& header,
               const std::vector<std::vector<std::string>>& rows);

void write_text(const std::filesystem::path& path, const std::string& text);

nlohmann::json state_to_json(const SpinState& state);
SpinState state_from_json(const nlohmann::json& j);

nlohmann::json scan_point_to_json(const BecScanPoint& p);
BecScanPoint scan_point_from_json(const nlohmann::json& j);

nlohmann::json bound_to_json(const BoundResult& r);

}  // namespace pqs::io
