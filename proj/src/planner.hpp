#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "blocksim.hpp"
#include "rng.hpp"

namespace modshor {

// One scheduled phase-estimation block. kappa follows the recurrence
// kappa_1 = 0, kappa_{i+1} = kappa_i + m_i - t_{i+1}.
struct BlockPlan {
  std::uint32_t index = 0;  // 1-based
  std::uint32_t m = 0;      // counting qubits
  std::uint32_t t = 0;      // overlap with the left neighbour (t_1 = 0)
  std::uint32_t kappa = 0;  // exponent offset
};

struct RunConfig {
  std::uint64_t n = 0;
  std::optional<std::uint64_t> base;  // sampled when absent
  std::vector<std::uint32_t> block_sizes;
  std::vector<std::uint32_t> overlaps;
  std::uint64_t shots = 1024;
  std::uint64_t top_k = 4;
  std::uint64_t max_combos = 16;
  std::uint64_t seed = 1;
  Backend backend = Backend::analytic;
  std::uint32_t n_target = 0;  // filled by validate_config
};

// Validates sizes/overlaps and builds the block schedule. ConfigError names
// the offending index. Enforces t_i < m_i strictly: the carry bit of a block
// is undefined when the overlap swallows it whole.
std::vector<BlockPlan> plan_blocks(const std::vector<std::uint32_t>& m,
                                   const std::vector<std::uint32_t>& t);

// n_total = sum(m_i - t_i): length of the stitched phase estimate.
std::uint32_t total_phase_bits(const std::vector<BlockPlan>& plans);

// Checks everything plan_blocks does plus the number-theoretic requirements
// on n (composite, odd, not a prime power) and fills n_target = ceil(log2 n).
RunConfig validate_config(RunConfig cfg);

// The base for one attempt: either the user's, or a fresh draw. A draw that
// shares a divisor with n short-circuits into a classical factor.
struct BaseChoice {
  std::uint64_t base = 0;
  bool sampled = false;
  std::optional<std::uint64_t> classical_factor;
};

BaseChoice choose_base(const RunConfig& cfg,
                       std::optional<std::uint64_t> forced_base,
                       SplitMix64& base_stream);

// Everything one block produced; CandidateSet is the ranked view, `support`
// the distribution restricted to outcomes above kSupportEpsilon (ascending).
struct BlockResult {
  BlockPlan plan;
  CandidateSet candidates;
  std::vector<std::string> selected;  // top_k, rank order
  std::vector<std::pair<std::uint64_t, double>> support;
};

// Runs every block with the configured backend, sampling each block from its
// own substream SplitMix64::mix(seed, block index). Blocks are farmed out to
// `jobs` workers (0 = one per block); results are ordered by block index
// regardless of scheduling.
std::vector<BlockResult> run_all_blocks(const RunConfig& cfg,
                                        std::uint64_t base,
                                        const std::vector<BlockPlan>& plans,
                                        unsigned jobs);

}  // namespace modshor
