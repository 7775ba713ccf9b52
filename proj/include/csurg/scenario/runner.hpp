#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csurg/scenario/parser.hpp"
#include "csurg/scenario/verify.hpp"

namespace csurg::scenario {

struct RunOptions {
  std::uint64_t seed = 0;
  std::optional<std::size_t> samples;  // overrides per-command sample counts
  std::optional<double> tolerance;     // overrides numeric tolerances
};

struct OutputFile {
  std::string path;  // as written in the scenario
  std::string content;
};

struct RunResult {
  std::string report;
  std::vector<OutputFile> files;
  bool any_failed = false;
};

// Executes statements in order. Every command contributes a "# line N: ..."
// echo followed by its report lines. Downstream errors are rethrown as
// runtime ScenarioErrors at the command's position.
RunResult run_scenario(const Scenario& s, const RunOptions& opts = {});

}  // namespace csurg::scenario
