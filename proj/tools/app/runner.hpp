#pragma once

#include <filesystem>
#include <ostream>

namespace thermoform::app {

enum ExitStatus : int { kAllPassed = 0, kTaskFailed = 1, kConfigError = 2 };

/// Loads and validates the config, runs every task in order and writes
/// the reports. Nothing is written unless the whole config validates.
int run(const std::filesystem::path& config_file, std::ostream& out, std::ostream& err);

/// Human-readable catalog, or JSON when `as_json`.
void list_tasks(std::ostream& out, bool as_json);

}  // namespace thermoform::app
