#pragma once

#include <string>
#include <vector>

#include "qwalk/harness/config.hpp"
#include "qwalk/harness/table.hpp"

namespace qw {

inline constexpr const char* code_version = "qwalk 1.0.0";

struct RunResult {
  ResultTable table;
  bool property_ok = true;  // false when a checked residual exceeds its tolerance
  std::string property_message;
};

const std::vector<std::string>& experiment_names();

// Dispatches to the named experiment and attaches the resolved configuration to the table metadata.
// Throws ConfigError for unknown experiments, unknown keys and violated preconditions.
RunResult run(const ExperimentConfig& config);

}  // namespace qw
