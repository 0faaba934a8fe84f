#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "thermoform/thermoform.hpp"

namespace thermoform::app {

using json = nlohmann::json;

/// Malformed or invalid run configuration (exit status 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModelSpec {
  std::string name;  // ideal_gas | van_der_waals
  std::map<std::string, double> parameters;
  bool corrupted = false;
  std::optional<DomainBox> domain;
};

struct TaskSpec {
  std::string task;  // catalog name
  std::string id;    // unique within the run; names the report files
  json params;       // the task object minus "task" and "id"
};

struct RunConfig {
  json document;  // the config as loaded, embedded in every report
  ModelSpec model;
  Tolerances tolerances;
  DerivativeMode derivative_mode = DerivativeMode::analytic;
  std::filesystem::path output_dir = "thermoform-out";
  std::vector<TaskSpec> tasks;
};

/// Environment variable that overrides the configured output directory.
inline constexpr const char* kOutputDirEnv = "THERMOFORM_OUTPUT_DIR";

/// Parses and fully validates a config document, including every task's
/// parameters; nothing is executed.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& file);

EosModel build_model(const ModelSpec& spec);

/// Hex SHA-256 of the canonical serialization of the config document.
std::string config_hash(const json& document);

}  // namespace thermoform::app
