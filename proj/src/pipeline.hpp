#pragma once

#include "report.hpp"

namespace modshor {

// Exit codes shared by the pipeline, the C API and the CLI.
inline constexpr int kExitFactorFound = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitNoFactor = 2;

// Full run: validate, plan, execute all blocks per attempt, stitch, recover.
// Attempts after the first draw fresh bases from the master seed stream.
// Throws ConfigError on invalid input; "no factor" is a report, not an error.
FactoringReport run_pipeline(const PipelineRequest& request);

int report_exit_code(const FactoringReport& report);

}  // namespace modshor
