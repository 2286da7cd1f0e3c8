#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planner.hpp"
#include "recovery.hpp"

namespace modshor {

enum class Method { shor_period, classical_gcd, none };

const char* method_name(Method m);

struct AttemptRecord {
  unsigned attempt = 1;
  std::uint64_t base = 0;
  bool base_sampled = false;
  std::optional<std::uint64_t> classical_factor;  // gcd shortcut, blocks empty
  std::vector<BlockResult> blocks;
  std::vector<StitchedCandidate> stitched;
  RecoveryResult recovery;
};

struct StageTimings {
  double blocks_ms = 0.0;
  double stitch_ms = 0.0;
  double recover_ms = 0.0;
  double total_ms = 0.0;
};

struct FactoringReport {
  RunConfig config;  // normalized echo; config.base is the user's input
  unsigned retries = 1;
  std::uint32_t n_total = 0;
  std::vector<AttemptRecord> attempts;
  Method method = Method::none;
  std::optional<std::uint64_t> factor;
  std::optional<std::uint64_t> cofactor;
  std::optional<std::uint64_t> period;
  StageTimings timings;  // excluded from the canonical serialization
};

// Everything needed to run the pipeline once; mirrors the config file format.
struct PipelineRequest {
  RunConfig config;
  unsigned retries = 1;
  unsigned jobs = 0;  // 0 = one worker per block
};

// Canonical serialization: fixed key order, phases as exact "num/den"
// strings. Identical (config, seed) yields identical bytes, independent of
// the worker count, so timing data stays out of this form.
std::string report_to_json(const FactoringReport& report);

// Short human-readable summary, including stage timings.
std::string report_summary(const FactoringReport& report);

// Two-column CSV for one block: (bitstring, probability) in exact mode,
// (bitstring, count) after sampling; rows ascend by bitstring.
std::string histogram_csv(const BlockResult& block);

// Parses the config-file/C-API JSON object. Throws ConfigError naming the
// field on malformed input; unknown fields are rejected.
PipelineRequest request_from_json(const std::string& json_text);

// Inverse of request_from_json (used by the CLI to assemble a request from
// flags layered over a config file).
std::string request_to_json(const PipelineRequest& request);

}  // namespace modshor
