#include "planner.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "errors.hpp"
#include "numtheory.hpp"

namespace modshor {

namespace {

std::uint32_t ceil_log2(std::uint64_t n) {
  std::uint32_t b = 0;
  while ((std::uint64_t{1} << b) < n) ++b;
  return b;
}

BlockResult run_one_block(const RunConfig& cfg, std::uint64_t base,
                          const BlockPlan& plan) {
  BlockCircuitParams params{cfg.n, base, plan.kappa, plan.m, cfg.n_target};
  const BlockDistribution dist = block_distribution(params, cfg.backend);

  BlockResult result;
  result.plan = plan;
  for (std::size_t b = 0; b < dist.p.size(); ++b) {
    if (dist.p[b] > kSupportEpsilon) result.support.emplace_back(b, dist.p[b]);
  }

  SplitMix64 stream(SplitMix64::mix(cfg.seed, plan.index));
  result.candidates.block_index = plan.index;
  result.candidates.exact = cfg.shots == 0;
  result.candidates.entries = sample_counts(dist, cfg.shots, stream);
  std::uint64_t total = 0;
  if (cfg.shots > 0) {
    total = cfg.shots;
  } else {
    for (const auto& e : result.candidates.entries) total += e.count;
  }
  result.candidates.total_shots = total;
  result.selected =
      select_top_candidates(result.candidates.entries, cfg.top_k);
  return result;
}

}  // namespace

std::vector<BlockPlan> plan_blocks(const std::vector<std::uint32_t>& m,
                                   const std::vector<std::uint32_t>& t) {
  if (m.empty()) throw ConfigError("blocks: at least one block is required");
  if (t.size() != m.size())
    throw ConfigError("overlaps: must have one entry per block");
  if (t[0] != 0) throw ConfigError("overlaps[1]: the first overlap must be 0");

  std::vector<BlockPlan> plans(m.size());
  std::uint32_t kappa = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const std::string at = "[" + std::to_string(i + 1) + "]";
    if (m[i] < 1 || m[i] > 24)
      throw ConfigError("blocks" + at + ": size must be in [1, 24]");
    if (i > 0) {
      if (t[i] > std::min(m[i - 1], m[i]))
        throw ConfigError("overlaps" + at +
                          ": overlap exceeds an adjacent block size");
      if (t[i] >= m[i])
        throw ConfigError("overlaps" + at +
                          ": overlap must be strictly smaller than the block");
      kappa += m[i - 1] - t[i];
    }
    plans[i] = BlockPlan{static_cast<std::uint32_t>(i + 1), m[i], t[i], kappa};
  }
  return plans;
}

std::uint32_t total_phase_bits(const std::vector<BlockPlan>& plans) {
  std::uint32_t total = 0;
  for (const auto& p : plans) total += p.m - p.t;
  return total;
}

RunConfig validate_config(RunConfig cfg) {
  if (cfg.n < 4) throw ConfigError("n: must be a composite integer >= 4");
  if (cfg.n % 2 == 0) throw ConfigError("n: must be odd");
  if (is_prime(cfg.n)) throw ConfigError("n: must be composite");
  if (is_prime_power(cfg.n)) throw ConfigError("n: must not be a prime power");
  if (cfg.top_k < 1) throw ConfigError("top_k: must be >= 1");
  if (cfg.max_combos < 1) throw ConfigError("max_combos: must be >= 1");
  if (cfg.base) {
    if (*cfg.base < 2 || *cfg.base >= cfg.n)
      throw ConfigError("base: must lie in [2, n-1]");
  }

  const auto plans = plan_blocks(cfg.block_sizes, cfg.overlaps);
  const std::uint32_t n_total = total_phase_bits(plans);
  if (n_total > 62)
    throw ConfigError("blocks: total phase length exceeds 62 bits");
  cfg.n_target = ceil_log2(cfg.n);
  if (cfg.backend == Backend::statevector) {
    for (const auto& p : plans) {
      if (p.m + cfg.n_target > 24)
        throw ConfigError("blocks[" + std::to_string(p.index) +
                          "]: m + n_target exceeds the statevector guard of "
                          "24 qubits");
    }
  }
  return cfg;
}

BaseChoice choose_base(const RunConfig& cfg,
                       std::optional<std::uint64_t> forced_base,
                       SplitMix64& base_stream) {
  BaseChoice choice;
  if (forced_base) {
    choice.base = *forced_base;
    choice.sampled = false;
    const std::uint64_t g = gcd(choice.base, cfg.n);
    if (g != 1) choice.classical_factor = g;
    return choice;
  }
  const CoprimeDraw draw = sample_coprime_base(cfg.n, base_stream);
  choice.base = draw.base;
  choice.sampled = true;
  choice.classical_factor = draw.factor;
  return choice;
}

std::vector<BlockResult> run_all_blocks(const RunConfig& cfg,
                                        std::uint64_t base,
                                        const std::vector<BlockPlan>& plans,
                                        unsigned jobs) {
  std::vector<BlockResult> results(plans.size());
  unsigned workers = jobs == 0 ? static_cast<unsigned>(plans.size()) : jobs;
  workers = std::min<unsigned>(workers, plans.size());

  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t i; (i = cursor.fetch_add(1)) < plans.size();) {
      results[i] = run_one_block(cfg, base, plans[i]);
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return results;
}

}  // namespace modshor
