#include "pipeline.hpp"

#include <chrono>

#include "errors.hpp"
#include "numtheory.hpp"

namespace modshor {

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point start) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - start)
      .count();
}

}  // namespace

FactoringReport run_pipeline(const PipelineRequest& request) {
  const auto t_start = clock_type::now();

  FactoringReport report;
  report.config = validate_config(request.config);
  report.retries = request.retries;
  const auto plans =
      plan_blocks(report.config.block_sizes, report.config.overlaps);
  report.n_total = total_phase_bits(plans);

  // Substream 0 feeds base draws; block i uses substream i (1-based).
  SplitMix64 base_stream(SplitMix64::mix(report.config.seed, 0));

  for (unsigned attempt = 1; attempt <= request.retries; ++attempt) {
    AttemptRecord rec;
    rec.attempt = attempt;
    const BaseChoice choice = choose_base(
        report.config, attempt == 1 ? report.config.base : std::nullopt,
        base_stream);
    rec.base = choice.base;
    rec.base_sampled = choice.sampled;

    if (choice.classical_factor) {
      rec.classical_factor = choice.classical_factor;
      report.attempts.push_back(std::move(rec));
      report.method = Method::classical_gcd;
      report.factor = choice.classical_factor;
      report.cofactor = report.config.n / *choice.classical_factor;
      break;
    }

    const auto t_blocks = clock_type::now();
    rec.blocks = run_all_blocks(report.config, rec.base, plans, request.jobs);
    report.timings.blocks_ms += ms_since(t_blocks);

    std::vector<std::vector<std::string>> selected;
    selected.reserve(rec.blocks.size());
    for (const auto& b : rec.blocks) selected.push_back(b.selected);

    const auto t_stitch = clock_type::now();
    rec.stitched =
        integrate_and_stitch(selected, report.config.block_sizes,
                             report.config.overlaps, report.config.max_combos);
    report.timings.stitch_ms += ms_since(t_stitch);

    const auto t_recover = clock_type::now();
    rec.recovery =
        recover_period_and_factor(rec.stitched, rec.base, report.config.n);
    report.timings.recover_ms += ms_since(t_recover);

    const bool found = rec.recovery.factor.has_value();
    if (found) {
      report.method = Method::shor_period;
      report.factor = rec.recovery.factor;
      report.cofactor = report.config.n / *rec.recovery.factor;
      report.period = rec.recovery.period;
    }
    report.attempts.push_back(std::move(rec));
    if (found) break;
  }

  report.timings.total_ms = ms_since(t_start);
  return report;
}

int report_exit_code(const FactoringReport& report) {
  return report.factor ? kExitFactorFound : kExitNoFactor;
}

}  // namespace modshor
