#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"

namespace thermoform::app {

/// Residual records of one task (or one Maxwell case) with their verdict.
struct Report {
  struct Row {
    std::vector<std::string> labels;
    std::vector<double> values;
  };

  std::string task_id;
  std::string task;
  std::string module;
  std::vector<std::string> label_columns;
  std::vector<std::string> value_columns;
  std::vector<Row> rows;
  std::string residual_column;  // one of value_columns
  double tolerance = 0.0;
  json summary = json::object();  // task-specific aggregates
  std::optional<std::string> error;

  // Filled by finalize().
  double max_residual = 0.0;
  double mean_residual = 0.0;
  std::string worst_record;
  bool pass = false;

  /// Computes max/mean of the residual column; pass iff no error, every
  /// residual is finite and the maximum is within tolerance.
  void finalize();
};

struct Provenance {
  std::string config_sha256;
  std::optional<std::uint64_t> seed;
  int task_index = 0;
  json config;
};

json to_json(const Report& report, const Provenance& provenance);
/// Comma-separated, header row, %.17g numbers, LF line endings.
std::string to_csv(const Report& report);

/// Writes <task_id>.json and <task_id>.csv into `dir`.
void write_report(const std::filesystem::path& dir, const Report& report, const Provenance& provenance);

}  // namespace thermoform::app
