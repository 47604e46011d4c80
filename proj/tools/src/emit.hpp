#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace magnomech::cli {

/// Rounds to 12 significant digits — the precision every emitted result value
/// carries, fine enough that regression diffs stay meaningful below all
/// physical tolerances. NaN passes through.
double round_sig(double value);

/// "%.12g" rendering; NaN becomes "nan".
std::string format_number(double value);

/// Depth-first flattening of a result document into (dotted.path, cell) rows
/// for two-column CSV: objects join with '.', arrays index with [i], null
/// renders as "nan", booleans as true/false.
std::vector<std::pair<std::string, std::string>> flatten(const nlohmann::json& value);

/// Comment line carrying the resolved configuration, prepended to every CSV
/// artifact so each output is self-describing.
std::string resolved_config_comment(const nlohmann::json& resolved);

} // namespace magnomech::cli
