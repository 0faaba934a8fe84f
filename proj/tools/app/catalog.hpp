#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "config.hpp"

namespace thermoform::app {

struct ParamInfo {
  std::string name;
  std::string description;
};

struct TaskInfo {
  std::string name;
  std::string module;  // library module the task exercises
  std::string summary;
  std::vector<ParamInfo> required;
  std::vector<ParamInfo> optional;
  bool randomized = false;  // a seed is mandatory
  json example;             // parameters that validate against the schema
};

const std::vector<TaskInfo>& task_catalog();
/// nullptr for unknown names.
const TaskInfo* find_task(std::string_view name);

/// Throws ConfigError naming the offending parameter.
void validate_task(const TaskSpec& spec, const EosModel& model);

/// A complete config exercising every task with its catalog example.
json example_config();

/// Catalog as JSON (name, module, summary, parameter lists, example).
json catalog_json();

}  // namespace thermoform::app
