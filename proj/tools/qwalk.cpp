#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "qwalk/harness/experiments.hpp"

namespace {

void apply_thread_env() {
  const char* v = std::getenv("QWALK_THREADS");
  if (!v || !*v) return;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1) throw qw::ConfigError("QWALK_THREADS must be a positive integer");
  omp_set_num_threads(static_cast<int>(n));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete-time quantum walk experiments"};
  std::string experiment, config_path, out, format = "csv";
  std::vector<std::string> overrides;
  bool list = false;
  app.add_option("experiment", experiment, "Experiment name");
  app.add_option("--config", config_path, "key = value config file");
  app.add_option("--set", overrides, "Override a config key (key=value), repeatable");
  app.add_option("--out", out, "Output path");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--list", list, "List experiments and exit");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (list) {
    for (const auto& n : qw::experiment_names()) std::cout << n << "\n";
    return 0;
  }
  if (experiment.empty() || out.empty()) {
    std::cerr << "usage: qwalk <experiment> [--config <file>] [--set key=value ...] --out <path> --format csv|json\n";
    return 2;
  }
  qw::RunResult result;
  try {
    apply_thread_env();
    qw::ExperimentConfig cfg = config_path.empty() ? qw::ExperimentConfig(experiment) : qw::load_config(config_path, experiment);
    for (const auto& o : overrides) cfg.apply_override(o);
    result = qw::run(cfg);
  } catch (const qw::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    qw::emit(result.table, out, qw::parse_format(format));
  } catch (const std::exception& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 4;
  }
  if (!result.property_ok) {
    std::cerr << "property check failed: " << result.property_message << "\n";
    return 3;
  }
  return 0;
}
