#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qseal/acceptance.hpp"
#include "qseal/config.hpp"

namespace qseal {

struct RunResult {
  int exit_code = 0;  // 0 ok, 2 asserted bound violated / criteria failed
  nlohmann::json report;
  std::vector<std::pair<std::string, std::string>> files;  // name -> content (CSV etc.)
  std::vector<CriterionResult> criteria;                   // verify-all only
};

// Executes a parsed scenario. Deterministic for a fixed (config, seed,
// workers) triple, except for the wall-time provenance field.
RunResult run_scenario(const ScenarioConfig& config);

// Writes report.json and any side files into the output directory.
void write_run_outputs(const RunResult& result, const std::string& out_dir);

}  // namespace qseal
