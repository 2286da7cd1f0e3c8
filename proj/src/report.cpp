#include "report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include <json.hpp>

#include "bitstring.hpp"
#include "errors.hpp"

namespace modshor {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

ordered_json block_to_json(const BlockResult& block) {
  ordered_json j;
  j["index"] = block.plan.index;
  j["size"] = block.plan.m;
  j["overlap"] = block.plan.t;
  j["kappa"] = block.plan.kappa;
  j["mode"] = block.candidates.exact ? "exact" : "sampled";
  if (block.candidates.exact) {
    ordered_json support = ordered_json::array();
    for (const auto& [value, prob] : block.support) {
      ordered_json row;
      row["bits"] = bits_of(value, block.plan.m);
      row["probability"] = prob;
      support.push_back(std::move(row));
    }
    j["support"] = std::move(support);
  } else {
    j["total_shots"] = block.candidates.total_shots;
    ordered_json counts = ordered_json::array();
    for (const auto& entry : block.candidates.entries) {
      ordered_json row;
      row["bits"] = entry.bits;
      row["count"] = entry.count;
      counts.push_back(std::move(row));
    }
    j["counts"] = std::move(counts);
  }
  j["selected"] = block.selected;
  return j;
}

ordered_json attempt_to_json(const AttemptRecord& attempt) {
  ordered_json j;
  j["attempt"] = attempt.attempt;
  j["base"] = attempt.base;
  j["base_source"] = attempt.base_sampled ? "sampled" : "provided";
  if (attempt.classical_factor) {
    j["classical_factor"] = *attempt.classical_factor;
  }
  ordered_json blocks = ordered_json::array();
  for (const auto& b : attempt.blocks) blocks.push_back(block_to_json(b));
  j["blocks"] = std::move(blocks);
  ordered_json stitched = ordered_json::array();
  for (const auto& cand : attempt.stitched) {
    ordered_json row;
    row["bits"] = cand.bits;
    row["y"] = cand.value;
    row["phase"] = cand.phase.str();
    stitched.push_back(std::move(row));
  }
  j["stitched"] = std::move(stitched);
  ordered_json rec;
  rec["period"] =
      attempt.recovery.period ? ordered_json(*attempt.recovery.period)
                              : ordered_json(nullptr);
  rec["factor"] =
      attempt.recovery.factor ? ordered_json(*attempt.recovery.factor)
                              : ordered_json(nullptr);
  rec["source"] = attempt.recovery.source
                      ? ordered_json(attempt.recovery.source->bits)
                      : ordered_json(nullptr);
  j["recovery"] = std::move(rec);
  return j;
}

template <typename T>
T field_as(const ordered_json& obj, const char* key, T fallback,
           bool* present = nullptr) {
  if (!obj.contains(key)) {
    if (present) *present = false;
    return fallback;
  }
  if (present) *present = true;
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(std::string(key) + ": malformed value");
  }
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::shor_period: return "shor-period";
    case Method::classical_gcd: return "classical-gcd";
    case Method::none: return "none";
  }
  return "none";
}

std::string report_to_json(const FactoringReport& report) {
  ordered_json j;
  ordered_json cfg;
  cfg["n"] = report.config.n;
  cfg["base"] = report.config.base ? ordered_json(*report.config.base)
                                   : ordered_json(nullptr);
  cfg["blocks"] = report.config.block_sizes;
  cfg["overlaps"] = report.config.overlaps;
  cfg["shots"] = report.config.shots;
  cfg["top_k"] = report.config.top_k;
  cfg["max_combos"] = report.config.max_combos;
  cfg["seed"] = report.config.seed;
  cfg["backend"] = backend_name(report.config.backend);
  cfg["retries"] = report.retries;
  j["config"] = std::move(cfg);
  j["n_target"] = report.config.n_target;
  j["n_total"] = report.n_total;
  ordered_json attempts = ordered_json::array();
  for (const auto& a : report.attempts) attempts.push_back(attempt_to_json(a));
  j["attempts"] = std::move(attempts);
  ordered_json res;
  res["status"] = report.factor ? "factor-found" : "no-factor";
  res["method"] = method_name(report.method);
  res["factor"] =
      report.factor ? ordered_json(*report.factor) : ordered_json(nullptr);
  res["cofactor"] =
      report.cofactor ? ordered_json(*report.cofactor) : ordered_json(nullptr);
  res["period"] =
      report.period ? ordered_json(*report.period) : ordered_json(nullptr);
  j["result"] = std::move(res);
  return j.dump(2) + "\n";
}

std::string report_summary(const FactoringReport& report) {
  std::string s;
  s += "n = " + std::to_string(report.config.n);
  if (report.factor) {
    s += " = " + std::to_string(*report.factor) + " x " +
         std::to_string(*report.cofactor) + " (method: ";
    s += method_name(report.method);
    if (report.period) s += ", period " + std::to_string(*report.period);
    s += ")";
  } else {
    s += ": no non-trivial factor found after " +
         std::to_string(report.attempts.size()) + " attempt(s)";
  }
  s += "\nattempts: " + std::to_string(report.attempts.size());
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "\ntimings: blocks %.3f ms, stitch %.3f ms, recover %.3f ms, "
                "total %.3f ms\n",
                report.timings.blocks_ms, report.timings.stitch_ms,
                report.timings.recover_ms, report.timings.total_ms);
  s += buf;
  return s;
}

std::string histogram_csv(const BlockResult& block) {
  std::string csv;
  if (block.candidates.exact) {
    csv = "bitstring,probability\n";
    for (const auto& [value, prob] : block.support) {
      csv += bits_of(value, block.plan.m);
      csv += ',';
      csv += format_double(prob);
      csv += '\n';
    }
  } else {
    csv = "bitstring,count\n";
    std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
    rows.reserve(block.candidates.entries.size());
    for (const auto& entry : block.candidates.entries) {
      rows.emplace_back(bits_to_int(entry.bits), entry.count);
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& [value, count] : rows) {
      csv += bits_of(value, block.plan.m);
      csv += ',';
      csv += std::to_string(count);
      csv += '\n';
    }
  }
  return csv;
}

PipelineRequest request_from_json(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");

  static const char* known[] = {"n",    "base",       "blocks", "overlaps",
                                "shots", "top_k",     "max_combos", "seed",
                                "backend", "retries", "jobs"};
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ConfigError("config: unknown field '" + key + "'");
  }

  PipelineRequest req;
  if (!j.contains("n")) throw ConfigError("n: required");
  req.config.n = field_as<std::uint64_t>(j, "n", 0);
  if (j.contains("base") && !j.at("base").is_null()) {
    req.config.base = field_as<std::uint64_t>(j, "base", 0);
  }
  if (!j.contains("blocks")) throw ConfigError("blocks: required");
  req.config.block_sizes =
      field_as<std::vector<std::uint32_t>>(j, "blocks", {});
  if (!j.contains("overlaps")) throw ConfigError("overlaps: required");
  req.config.overlaps =
      field_as<std::vector<std::uint32_t>>(j, "overlaps", {});
  req.config.shots = field_as<std::uint64_t>(j, "shots", req.config.shots);
  req.config.top_k = field_as<std::uint64_t>(j, "top_k", req.config.top_k);
  req.config.max_combos =
      field_as<std::uint64_t>(j, "max_combos", req.config.max_combos);
  req.config.seed = field_as<std::uint64_t>(j, "seed", req.config.seed);
  req.config.backend = backend_from_name(
      field_as<std::string>(j, "backend", backend_name(req.config.backend)));
  req.retries = field_as<unsigned>(j, "retries", req.retries);
  if (req.retries < 1) throw ConfigError("retries: must be >= 1");
  req.jobs = field_as<unsigned>(j, "jobs", req.jobs);
  return req;
}

std::string request_to_json(const PipelineRequest& request) {
  ordered_json j;
  j["n"] = request.config.n;
  if (request.config.base) j["base"] = *request.config.base;
  j["blocks"] = request.config.block_sizes;
  j["overlaps"] = request.config.overlaps;
  j["shots"] = request.config.shots;
  j["top_k"] = request.config.top_k;
  j["max_combos"] = request.config.max_combos;
  j["seed"] = request.config.seed;
  j["backend"] = backend_name(request.config.backend);
  j["retries"] = request.retries;
  j["jobs"] = request.jobs;
  return j.dump(2) + "\n";
}

}  // namespace modshor
