// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

namespace {

std::string cli_path;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command = "'" + cli_path + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream stream(line);
  std::string cell;
  while (std::getline(stream, cell, ',')) cells.push_back(cell);
  return cells;
}

// Parses a two-column quantity,value report into a map.
std::map<std::string, std::string> parse_kv_csv(const std::string& text) {
  std::map<std::string, std::string> result;
  bool seen_header = false;
  for (const std::string& line : lines_of(text)) {
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> cells = split_csv(line);
    if (!seen_header) {
      REQUIRE(cells.size() == 2);
      REQUIRE(cells[0] == "quantity");
      seen_header = true;
      continue;
    }
    REQUIRE(cells.size() >= 2);
    result[cells[0]] = cells[1];
  }
  return result;
}

std::vector<std::vector<std::string>> parse_rows(const std::string& text,
                                                 std::vector<std::string>* header = nullptr) {
  std::vector<std::vector<std::string>> rows;
  bool seen_header = false;
  for (const std::string& line : lines_of(text)) {
    if (line.empty() || line[0] == '#') continue;
    if (!seen_header) {
      if (header) *header = split_csv(line);
      seen_header = true;
      continue;
    }
    rows.push_back(split_csv(line));
  }
  return rows;
}

}  // namespace

TEST_CASE("derive reports matching intervals and embeds its config") {
  const RunResult result = run_cli("derive --xbar 0 --s 1");
  REQUIRE(result.exit_code == 0);
  CHECK(result.output.find("# command=derive") != std::string::npos);
  CHECK(result.output.find("# n=5") != std::string::npos);
  CHECK(result.output.find("# seed=42") != std::string::npos);
  CHECK(result.output.find("(canonical)") != std::string::npos);

  const auto report = parse_kv_csv(result.output);
  CHECK(std::fabs(std::stod(report.at("closed_lo")) + 1.2416639982) < 1e-6);
  CHECK(std::fabs(std::stod(report.at("closed_hi")) - 1.2416639982) < 1e-6);
  CHECK(std::fabs(std::stod(report.at("k")) - 16.4331862) < 1e-5);
  CHECK(std::stod(report.at("endpoint_discrepancy")) < 1e-8);
}

TEST_CASE("derive handles the degenerate s = 0 input") {
  const RunResult result = run_cli("derive --xbar 2.5 --s 0");
  REQUIRE(result.exit_code == 0);
  const auto report = parse_kv_csv(result.output);
  CHECK(report.at("closed_lo") == "2.5");
  CHECK(report.at("closed_hi") == "2.5");
  CHECK(report.count("bayes_lo") == 0);
  CHECK(report.at("note").find("skipped") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("derive --xbar 0").exit_code == 2);          // missing --s
  CHECK(run_cli("derive --xbar 0 --s 1 --n 1").exit_code == 2);
  CHECK(run_cli("derive --xbar 0 --s 1 --alpha 1.5").exit_code == 2);
  CHECK(run_cli("derive --xbar 0 --s 1 --bogus 3").exit_code == 2);
  CHECK(run_cli("paradox --n 5").exit_code == 2);            // missing --k
  CHECK(run_cli("risk --rule bogus").exit_code == 2);
  CHECK(run_cli("coverage --reps 10").exit_code == 2);
  CHECK(run_cli("").exit_code != 0);
}

TEST_CASE("paradox sweep shows the collapse past the threshold") {
  const RunResult result = run_cli("paradox --n 5 --k 5 --s 1,2,4,4.2,8,100");
  REQUIRE(result.exit_code == 0);
  CHECK(result.output.find("# s_star=4.19262746") != std::string::npos);

  std::vector<std::string> header;
  const auto rows = parse_rows(result.output, &header);
  REQUIRE(header == std::vector<std::string>{"s", "half_width", "collapsed"});
  REQUIRE(rows.size() == 6);
  CHECK(std::fabs(std::stod(rows[0][1]) - 0.786977536) < 1e-6);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::stod(rows[i][1]) > 0.0);
    CHECK(rows[i][2] == "0");
  }
  for (int i = 3; i < 6; ++i) {
    CHECK(std::stod(rows[i][1]) == 0.0);
    CHECK(rows[i][2] == "1");
  }
}

TEST_CASE("paradox threshold is linear in k") {
  const RunResult result = run_cli("paradox --n 5 --k 10 --s 1");
  REQUIRE(result.exit_code == 0);
  CHECK(result.output.find("# s_star=8.38525492") != std::string::npos);
}

TEST_CASE("verify passes on defaults") {
  const RunResult result = run_cli("verify");
  REQUIRE(result.exit_code == 0);
  std::vector<std::string> header;
  const auto rows = parse_rows(result.output, &header);
  REQUIRE(header.size() == 5);
  CHECK(header[0] == "check");
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    CHECK(row.size() == 5);  // details must not break the CSV structure
    CHECK(row[3] == "pass");
    CHECK(std::stod(row[2]) <= std::stod(row[1]));
  }
}

TEST_CASE("verify reports the grid-too-coarse failure mode") {
  const RunResult result = run_cli("verify --grid 51");
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("grid too coarse") != std::string::npos);
}

TEST_CASE("risk output is byte-identical across runs with the same seed") {
  const std::string args = "risk --mu 0,5 --sigma 1,0.1 --reps 2000 --seed 7";
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  REQUIRE(first.exit_code == 0);
  CHECK(first.output == second.output);
  const RunResult other_seed = run_cli("risk --mu 0,5 --sigma 1,0.1 --reps 2000 --seed 8");
  CHECK(first.output != other_seed.output);
}

TEST_CASE("risk rows carry per-point seeds derived from the base seed") {
  const RunResult result = run_cli("risk --mu 0,5 --sigma 1,2 --reps 1000 --seed 100");
  REQUIRE(result.exit_code == 0);
  const auto rows = parse_rows(result.output);
  REQUIRE(rows.size() == 4);
  for (std::size_t p = 0; p < rows.size(); ++p) {
    CHECK(rows[p][5] == std::to_string(100 + p));
  }
}

TEST_CASE("coverage of the usual interval is close to its nominal level") {
  const RunResult result = run_cli("coverage --reps 20000 --seed 9");
  REQUIRE(result.exit_code == 0);
  const auto rows = parse_rows(result.output);
  REQUIRE(rows.size() == 1);
  const double mean = std::stod(rows[0][2]);
  const double se = std::stod(rows[0][3]);
  CHECK(std::fabs(mean - 0.95) <= 3.0 * se);
}

TEST_CASE("json reports carry the config and typed results") {
  const RunResult derive = run_cli("derive --xbar 0 --s 1 --format json");
  REQUIRE(derive.exit_code == 0);
  const auto derive_doc = nlohmann::json::parse(derive.output);
  CHECK(derive_doc.at("config").at("command") == "derive");
  CHECK(derive_doc.at("config").at("n") == 5);
  CHECK(derive_doc.at("config").at("seed") == 42);
  CHECK(derive_doc.at("config").at("k_is_canonical") == true);
  CHECK(derive_doc.at("results").is_array());

  const RunResult verify = run_cli("verify --format json");
  REQUIRE(verify.exit_code == 0);
  const auto verify_doc = nlohmann::json::parse(verify.output);
  for (const auto& record : verify_doc.at("results")) {
    CHECK(record.contains("check"));
    CHECK(record.contains("tolerance"));
    CHECK(record.contains("observed"));
    CHECK(record.at("status") == "pass");
  }
}

TEST_CASE("reports can be written to a file") {
  const std::string path = "/tmp/bayesint_cli_test_out.csv";
  std::remove(path.c_str());
  const RunResult result = run_cli("derive --xbar 1 --s 2 --out " + path);
  REQUIRE(result.exit_code == 0);
  CHECK(result.output.empty());
  FILE* file = std::fopen(path.c_str(), "r");
  REQUIRE(file != nullptr);
  char buffer[256];
  REQUIRE(std::fgets(buffer, sizeof buffer, file) != nullptr);
  CHECK(std::string(buffer).find("# command=derive") == 0);
  std::fclose(file);
  std::remove(path.c_str());
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-bayesint>\n");
    return 1;
  }
  cli_path = argv[1];
  doctest::Context context;
  context.applyCommandLine(1, argv);
  return context.run();
}
