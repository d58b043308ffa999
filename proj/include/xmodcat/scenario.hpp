#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "xmodcat/json_io.hpp"

namespace xmodcat {

inline constexpr int kSchemaVersion = 1;

inline const char* const kScenarioKinds[] = {"validate",      "build-catgroup", "check-axioms",
                                             "factor-set",    "cohomology-h2",  "obstruction",
                                             "schreier",      "classify",       "roundtrip"};

struct RunOptions {
  std::optional<std::uint64_t> guard;  // overrides the scenario's options.guard
  std::optional<int> threads;          // overrides options.threads
};

struct ScenarioOutcome {
  int exit_code = 0;  // 0 pass, 1 claim failure, 2 input error, 3 guard trip
  io::Json report;
  std::string text;
};

/// Runs one scenario document. Never throws for input problems: they become
/// exit code 2 with the error in the report.
ScenarioOutcome run_scenario(const io::Json& scenario, const RunOptions& options = {});
/// Parses and runs; malformed JSON gives exit code 2 naming the location.
ScenarioOutcome run_scenario_text(const std::string& text, const RunOptions& options = {});

}  // namespace xmodcat
