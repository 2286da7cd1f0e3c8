// End-to-end checks of the installed command line: exit codes, report files,
// histogram files and byte-level determinism. The binary path comes from the
// build system.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() / "modshor-cli-tests";
  fs::create_directories(dir);
  const fs::path out = dir / ("stdout-" + std::to_string(counter++) + ".txt");
  const std::string cmd = std::string(MODSHOR_CLI_PATH) + " " + args + " > " +
                          out.string() + " 2> /dev/null";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  r.stdout_text = ss.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "modshor-cli-tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("factoring 15 exits 0 and prints the report") {
  const auto r = run_cli(
      "factor --n 15 --base 2 --blocks 3,4,4,5 --overlaps 0,2,3,2 "
      "--shots 0 --top-k 2 --max-combos 2 --seed 7");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.stdout_text);
  const std::uint64_t factor = j["result"]["factor"];
  CHECK((factor == 3 || factor == 5));
  CHECK(j["result"]["period"] == 4);
}

TEST_CASE("factoring 221 exits 0") {
  const auto r = run_cli(
      "factor --n 221 --base 12 --blocks 3,3,4,3 --overlaps 0,2,2,2 "
      "--shots 0 --top-k 4 --max-combos 16 --seed 7");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.stdout_text);
  const std::uint64_t factor = j["result"]["factor"];
  CHECK((factor == 13 || factor == 17));
  CHECK(j["result"]["period"] == 16);
}

TEST_CASE("an overlap equal to its block size is a usage error") {
  const auto r = run_cli(
      "factor --n 15 --base 2 --blocks 3,3 --overlaps 0,3 --shots 0");
  CHECK(r.exit_code == 1);
}

TEST_CASE("a run without a factor exits 2") {
  const auto r = run_cli(
      "factor --n 15 --base 14 --blocks 2 --overlaps 0 --shots 0 "
      "--top-k 1 --max-combos 2 --seed 3 --retries 1");
  CHECK(r.exit_code == 2);
}

TEST_CASE("report and histogram files are byte-stable across reruns and jobs") {
  const auto dir = fresh_dir("determinism");
  const std::string common =
      "factor --n 221 --base 12 --blocks 3,3,4,3 --overlaps 0,2,2,2 "
      "--shots 100 --top-k 4 --max-combos 16 --seed 11 ";
  auto args = [&](const std::string& tag, int jobs) {
    return common + "--jobs " + std::to_string(jobs) + " --out " +
           (dir / (tag + ".json")).string() + " --emit-histograms " +
           (dir / tag).string();
  };
  CHECK(run_cli(args("a", 1)).exit_code == 0);
  CHECK(run_cli(args("b", 4)).exit_code == 0);
  const auto report_a = slurp(dir / "a.json");
  const auto report_b = slurp(dir / "b.json");
  REQUIRE(!report_a.empty());
  CHECK(report_a == report_b);
  for (int block = 1; block <= 4; ++block) {
    const auto name = "attempt-1-block-" + std::to_string(block) + ".csv";
    const auto csv_a = slurp(dir / "a" / name);
    CHECK(!csv_a.empty());
    CHECK(csv_a == slurp(dir / "b" / name));
  }
}

TEST_CASE("config files mirror flags and flags win") {
  const auto dir = fresh_dir("config");
  const fs::path cfg = dir / "run.json";
  {
    std::ofstream out(cfg);
    out << R"({"n": 15, "base": 2, "blocks": [3, 4, 4, 5],
               "overlaps": [0, 2, 3, 2], "shots": 0, "top_k": 2,
               "max_combos": 2, "seed": 7})";
  }
  auto r = run_cli("factor --config " + cfg.string());
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.stdout_text);
  CHECK(j["config"]["seed"] == 7);

  // The explicit flag overrides the file.
  r = run_cli("factor --config " + cfg.string() + " --seed 21");
  CHECK(r.exit_code == 0);
  j = nlohmann::json::parse(r.stdout_text);
  CHECK(j["config"]["seed"] == 21);

  // A config echo can be re-fed and reproduces the same outcome.
  const fs::path echo = dir / "echo.json";
  {
    std::ofstream out(echo);
    out << j["config"].dump();
  }
  const auto rerun = run_cli("factor --config " + echo.string());
  CHECK(rerun.exit_code == 0);
  const auto k = nlohmann::json::parse(rerun.stdout_text);
  CHECK(k["result"] == j["result"]);
}

TEST_CASE("missing n is a usage error") {
  const auto r = run_cli("factor --blocks 3 --overlaps 0");
  CHECK(r.exit_code == 1);
}

TEST_CASE("unknown flags and a missing subcommand exit 1") {
  CHECK(run_cli("factor --bogus 3").exit_code == 1);
  CHECK(run_cli("").exit_code == 1);
}
