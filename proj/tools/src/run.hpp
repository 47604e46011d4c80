#pragma once

#include "run_config.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace magnomech::cli {

struct RunOutput {
    nlohmann::json document;  ///< {schema_version, command, resolved_config, result}
    std::string rendered;     ///< bytes to write, in the configured format
};

/// Executes the configured command and renders the artifact. Pipeline errors
/// propagate as exceptions.
RunOutput run_command(const RunConfig& config);

/// run_command, then writes the artifact to config.out_path (stdout when
/// empty). Returns 0.
int run_and_write(const RunConfig& config);

} // namespace magnomech::cli
