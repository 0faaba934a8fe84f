#include <iostream>

#include "CLI11.hpp"
#include "app/catalog.hpp"
#include "app/runner.hpp"

int main(int argc, char** argv) {
  CLI::App cli{"thermoform: numerical checks of thermodynamic 1-forms, Maxwell relations and cycles"};
  cli.require_subcommand(1);

  std::string config_file;
  auto* run = cli.add_subcommand("run", "Run the tasks of a config file and write reports");
  run->add_option("config", config_file, "JSON config file")->required();

  bool as_json = false;
  bool example = false;
  auto* list = cli.add_subcommand("list-tasks", "Print the task catalog with parameter schemas");
  list->add_flag("--json", as_json, "Print the catalog as JSON");
  list->add_flag("--example-config", example, "Print a config that runs every task with its example parameters");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : thermoform::app::kConfigError;
  }

  if (*run) return thermoform::app::run(config_file, std::cout, std::cerr);
  if (example) {
    std::cout << thermoform::app::example_config().dump(2) << "\n";
  } else {
    thermoform::app::list_tasks(std::cout, as_json);
  }
  return 0;
}
