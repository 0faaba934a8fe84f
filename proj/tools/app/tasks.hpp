#pragma once

#include <vector>

#include "config.hpp"
#include "report.hpp"

namespace thermoform::app {

/// Executes one validated task. check-maxwell yields one report per case,
/// every other task exactly one. Library errors raised while running are
/// recorded in the report (which then fails) rather than propagated.
std::vector<Report> run_task(const TaskSpec& spec, const RunConfig& config, const EosModel& model);

}  // namespace thermoform::app
