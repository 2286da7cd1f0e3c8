// Command-line front end. Everything substantive happens behind the C API in
// libmodshor; this translation unit only parses flags, assembles the JSON
// request and writes the outputs.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "modshor.h"

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::uint32_t> parse_csv_u32(const std::string& text,
                                         const std::string& flag) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "expected comma-separated integers");
    }
  }
  if (out.empty())
    throw CLI::ValidationError(flag, "expected at least one integer");
  return out;
}

int write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  out << bytes;
  if (!out) {
    std::cerr << "error: cannot write " << path.string() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Windowed period-finding factorizer"};
  app.require_subcommand(1);

  CLI::App* factor = app.add_subcommand(
      "factor", "Factor a composite integer via windowed phase estimation");

  std::uint64_t n = 0;
  std::uint64_t base = 0;
  std::string blocks_text;
  std::string overlaps_text;
  std::uint64_t shots = 1024;
  std::uint64_t top_k = 4;
  std::uint64_t max_combos = 16;
  std::uint64_t seed = 1;
  std::string backend = "analytic";
  unsigned retries = 1;
  unsigned jobs = 0;
  std::string out_path;
  std::string histogram_dir;
  std::string config_path;

  auto* opt_n = factor->add_option("--n", n, "Composite integer to factor");
  auto* opt_base =
      factor->add_option("--base", base, "Base coprime to n (sampled if absent)");
  auto* opt_blocks = factor->add_option(
      "--blocks", blocks_text, "Comma-separated counting qubits per block");
  auto* opt_overlaps = factor->add_option(
      "--overlaps", overlaps_text,
      "Comma-separated overlaps with the left neighbour (first must be 0)");
  auto* opt_shots = factor->add_option(
      "--shots", shots, "Measurement shots per block; 0 = exact mode");
  auto* opt_top_k =
      factor->add_option("--top-k", top_k, "Candidates kept per block");
  auto* opt_max_combos = factor->add_option(
      "--max-combos", max_combos, "Stitched sequences kept while integrating");
  auto* opt_seed =
      factor->add_option("--seed", seed, "Master seed for all random streams");
  auto* opt_backend =
      factor->add_option("--backend", backend, "analytic | statevector");
  auto* opt_retries = factor->add_option(
      "--retries", retries, "Fresh-base re-runs when no factor is found");
  auto* opt_jobs = factor->add_option(
      "--jobs", jobs, "Worker threads for block execution; 0 = one per block");
  factor->add_option("--out", out_path, "Write the JSON report here");
  factor->add_option("--emit-histograms", histogram_dir,
                     "Write per-block histogram CSV files into this directory");
  factor->add_option("--config", config_path,
                     "JSON config file; explicit flags override its fields");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return MS_ERR_CONFIG;  // every usage error exits 1
  }

  // Layer flags over the config file (if any) and hand the merged JSON to
  // the library, which performs the real validation.
  ordered_json cfg = ordered_json::object();
  if (!config_path.empty()) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read config file " << config_path << "\n";
      return MS_ERR_CONFIG;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      cfg = ordered_json::parse(buffer.str());
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "error: config: invalid JSON: " << e.what() << "\n";
      return MS_ERR_CONFIG;
    }
  }
  try {
    if (opt_n->count()) cfg["n"] = n;
    if (opt_base->count()) cfg["base"] = base;
    if (opt_blocks->count())
      cfg["blocks"] = parse_csv_u32(blocks_text, "--blocks");
    if (opt_overlaps->count())
      cfg["overlaps"] = parse_csv_u32(overlaps_text, "--overlaps");
    if (opt_shots->count()) cfg["shots"] = shots;
    if (opt_top_k->count()) cfg["top_k"] = top_k;
    if (opt_max_combos->count()) cfg["max_combos"] = max_combos;
    if (opt_seed->count()) cfg["seed"] = seed;
    if (opt_backend->count()) cfg["backend"] = backend;
    if (opt_retries->count()) cfg["retries"] = retries;
    if (opt_jobs->count()) cfg["jobs"] = jobs;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return MS_ERR_CONFIG;
  }
  if (!cfg.contains("n")) {
    std::cerr << "error: n: required (pass --n or a config file)\n";
    return MS_ERR_CONFIG;
  }

  ms_run* run = ms_run_from_json(cfg.dump().c_str());
  if (!run) {
    std::cerr << "error: out of memory\n";
    return MS_ERR_CONFIG;
  }
  const int status = ms_run_status(run);
  if (status == MS_ERR_CONFIG) {
    std::cerr << "error: " << ms_run_error(run) << "\n";
    ms_run_free(run);
    return MS_ERR_CONFIG;
  }

  int io_failures = 0;
  const std::string report = ms_run_report_json(run);
  if (out_path.empty()) {
    std::cout << report;
  } else {
    io_failures += write_file(out_path, report);
  }

  if (!histogram_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(histogram_dir, ec);
    if (ec) {
      std::cerr << "error: cannot create " << histogram_dir << ": "
                << ec.message() << "\n";
      ++io_failures;
    } else {
      const std::size_t attempts = ms_run_attempt_count(run);
      for (std::size_t a = 1; a <= attempts; ++a) {
        const std::size_t blocks = ms_run_block_count(run, a);
        for (std::size_t b = 1; b <= blocks; ++b) {
          const char* csv = ms_run_histogram_csv(run, a, b);
          const auto name = "attempt-" + std::to_string(a) + "-block-" +
                            std::to_string(b) + ".csv";
          io_failures +=
              write_file(std::filesystem::path(histogram_dir) / name, csv);
        }
      }
    }
  }

  std::cerr << ms_run_summary(run);
  ms_run_free(run);
  if (io_failures > 0) return MS_ERR_CONFIG;
  return status;
}
