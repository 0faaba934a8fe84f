#include "runner.hpp"

#include <cstdlib>

#include "catalog.hpp"
#include "params.hpp"
#include "report.hpp"
#include "tasks.hpp"

namespace thermoform::app {

int run(const std::filesystem::path& config_file, std::ostream& out, std::ostream& err) {
  RunConfig config;
  EosModel model = ideal_gas();
  try {
    config = load_config(config_file);
    model = build_model(config.model);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  }
  if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') config.output_dir = dir;

  std::error_code ec;
  std::filesystem::create_directories(config.output_dir, ec);
  if (ec) {
    err << "config error: cannot create output directory '" << config.output_dir.string() << "': " << ec.message()
        << "\n";
    return kConfigError;
  }

  const std::string hash = config_hash(config.document);
  int status = kAllPassed;
  for (std::size_t i = 0; i < config.tasks.size(); ++i) {
    const TaskSpec& spec = config.tasks[i];
    const Provenance provenance{hash, task_seed(spec), static_cast<int>(i), config.document};
    for (Report& report : run_task(spec, config, model)) {
      report.finalize();
      write_report(config.output_dir, report, provenance);
      out << (report.pass ? "PASS " : "FAIL ") << report.task_id << ": max " << report.residual_column << " = "
          << report.max_residual << " (tolerance " << report.tolerance << ")\n";
      if (!report.pass) {
        status = kTaskFailed;
        err << "task " << report.task_id << " failed: ";
        if (report.error) {
          err << *report.error << "\n";
        } else {
          err << report.residual_column << " = " << report.max_residual << " exceeds " << report.tolerance
              << " at record " << report.worst_record << "\n";
        }
      }
    }
  }
  return status;
}

void list_tasks(std::ostream& out, bool as_json) {
  if (as_json) {
    out << catalog_json().dump(2) << "\n";
    return;
  }
  for (const TaskInfo& t : task_catalog()) {
    out << t.name << "  [module: " << t.module << "]" << (t.randomized ? "  (seeded)" : "") << "\n";
    out << "    " << t.summary << "\n";
    for (const ParamInfo& p : t.required) out << "    required  " << p.name << ": " << p.description << "\n";
    for (const ParamInfo& p : t.optional) out << "    optional  " << p.name << ": " << p.description << "\n";
    out << "    example   " << t.example.dump() << "\n";
  }
}

}  // namespace thermoform::app
