#include "modshor.h"

#include <cstdint>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "pipeline.hpp"

struct ms_run {
  int status = MS_ERR_CONFIG;
  std::string error;
  std::string report_json;
  std::string summary;
  std::optional<std::uint64_t> factor;
  std::optional<std::uint64_t> period;
  std::vector<std::vector<std::string>> histograms;  // [attempt][block]
};

extern "C" {

ms_run* ms_run_from_json(const char* config_json) {
  auto run = std::unique_ptr<ms_run>(new (std::nothrow) ms_run);
  if (!run) return nullptr;
  if (config_json == nullptr) {
    run->error = "config: null configuration";
    return run.release();
  }
  try {
    const modshor::PipelineRequest request =
        modshor::request_from_json(config_json);
    const modshor::FactoringReport report = modshor::run_pipeline(request);
    run->status = modshor::report_exit_code(report);
    run->report_json = modshor::report_to_json(report);
    run->summary = modshor::report_summary(report);
    run->factor = report.factor;
    run->period = report.period;
    for (const auto& attempt : report.attempts) {
      auto& per_block = run->histograms.emplace_back();
      for (const auto& block : attempt.blocks) {
        per_block.push_back(modshor::histogram_csv(block));
      }
    }
  } catch (const modshor::ConfigError& e) {
    run->status = MS_ERR_CONFIG;
    run->error = e.what();
  } catch (const std::exception& e) {
    run->status = MS_ERR_CONFIG;
    run->error = std::string("internal: ") + e.what();
  }
  return run.release();
}

void ms_run_free(ms_run* run) { delete run; }

int ms_run_status(const ms_run* run) {
  return run ? run->status : MS_ERR_CONFIG;
}

const char* ms_run_error(const ms_run* run) {
  if (!run || run->status != MS_ERR_CONFIG) return nullptr;
  return run->error.c_str();
}

const char* ms_run_report_json(const ms_run* run) {
  if (!run || run->status == MS_ERR_CONFIG) return nullptr;
  return run->report_json.c_str();
}

const char* ms_run_summary(const ms_run* run) {
  if (!run || run->status == MS_ERR_CONFIG) return nullptr;
  return run->summary.c_str();
}

int ms_run_factor(const ms_run* run, uint64_t* factor_out) {
  if (!run || !run->factor) return 1;
  if (factor_out) *factor_out = *run->factor;
  return 0;
}

int ms_run_period(const ms_run* run, uint64_t* period_out) {
  if (!run || !run->period) return 1;
  if (period_out) *period_out = *run->period;
  return 0;
}

size_t ms_run_attempt_count(const ms_run* run) {
  return run ? run->histograms.size() : 0;
}

size_t ms_run_block_count(const ms_run* run, size_t attempt) {
  if (!run || attempt == 0 || attempt > run->histograms.size()) return 0;
  return run->histograms[attempt - 1].size();
}

const char* ms_run_histogram_csv(const ms_run* run, size_t attempt,
                                 size_t block) {
  if (!run || attempt == 0 || attempt > run->histograms.size()) return nullptr;
  const auto& per_block = run->histograms[attempt - 1];
  if (block == 0 || block > per_block.size()) return nullptr;
  return per_block[block - 1].c_str();
}

const char* ms_version(void) { return "0.1.0"; }

}  // extern "C"
