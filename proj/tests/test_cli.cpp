#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sys/wait.h>
#include <unistd.h>

#include "symtensor/json_io.hpp"

// End-to-end tests of the command-line binary. The path comes from
// SYMTENSOR_CLI_BIN (set by ctest); falls back to ./symtensor for manual
// runs from the build directory.

namespace {

using nlohmann::json;

std::string cli_binary() {
  if (const char* env = std::getenv("SYMTENSOR_CLI_BIN")) return env;
  return "./symtensor";
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args, bool capture_stderr = false) {
  const std::string redirect = capture_stderr ? " 2>&1 1>/dev/null" : " 2>/dev/null";
  const std::string command = cli_binary() + " " + args + redirect;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  while (size_t got = fread(buffer, 1, sizeof buffer, pipe)) result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

class TempDir {
public:
  TempDir() {
    dir_ = std::filesystem::temp_directory_path() /
           ("symtensor_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  ~TempDir() { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) const {
    const auto path = dir_ / name;
    std::ofstream out(path);
    out << content;
    return path.string();
  }

private:
  std::filesystem::path dir_;
};

const char* kIdentity3 = R"({"n": 3, "entries": [[1,0,0],[0,1,0],[0,0,1]]})";

} // namespace

TEST_SUITE("cli") {

TEST_CASE("immanant of the identity under the principal character") {
  TempDir tmp;
  const std::string matrix = tmp.write("I3.json", kIdentity3);
  const CliResult r = run_cli("immanant --matrix " + matrix + " --partition 3");
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.output);
  CHECK(out["value"] == json::array({1.0, 0.0}));

  // identical invocations produce identical bytes
  const CliResult again = run_cli("immanant --matrix " + matrix + " --partition 3");
  CHECK(again.output == r.output);
}

TEST_CASE("derivative with method all") {
  TempDir tmp;
  const std::string matrix = tmp.write("I3.json", kIdentity3);
  const CliResult r = run_cli("derivative --order 1 --matrix " + matrix + " --directions " +
                              matrix + " --partition 1,1,1 --method all");
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.output);
  CHECK(out["value"] == json::array({3.0, 0.0}));
  CHECK(out["methods_agree"] == true);
  CHECK(out["degenerate_order"] == false);
}

TEST_CASE("degenerate derivative order is flagged") {
  TempDir tmp;
  const std::string matrix = tmp.write("I3.json", kIdentity3);
  const std::string dirs = matrix + "," + matrix + "," + matrix + "," + matrix;
  const CliResult r = run_cli("derivative --order 4 --matrix " + matrix + " --directions " +
                              dirs + " --partition 1,1,1 --method all");
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.output);
  CHECK(out["degenerate_order"] == true);
  CHECK(out["value"] == json::array({0.0, 0.0}));
}

TEST_CASE("character table output") {
  const CliResult r = run_cli("char-table --m 2 --format json");
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.output);
  CHECK(out["m"] == 2);
  REQUIRE(out["rows"].size() == 2);
  CHECK(out["rows"][0]["partition"] == json::array({2}));
  CHECK(out["rows"][0]["values"]["2"] == 1);
  CHECK(out["rows"][1]["values"]["2"] == -1);
  CHECK(out["rows"][1]["values"]["1,1"] == 1);

  const CliResult csv = run_cli("char-table --m 3 --format csv");
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.output.rfind("partition,\"3\",\"2,1\",\"1,1,1\"\n", 0) == 0);
  CHECK(csv.output.find("\"2,1\",-1,0,2") != std::string::npos);
}

TEST_CASE("index sets for the standard character of S_3 over two letters") {
  const CliResult r = run_cli("index-sets --m 3 --n 2 --partition 2,1");
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.output);
  const json& omega = out["omega"];
  for (const auto& alpha : omega) {
    CHECK(alpha != json::array({1, 1, 1}));
    CHECK(alpha != json::array({2, 2, 2}));
  }
  CHECK(out["delta"].size() == 4); // G_{3,2}
  // delta_hat is a subset of omega
  for (const auto& d : out["delta_hat"])
    CHECK(std::find(omega.begin(), omega.end(), d) != omega.end());
}

TEST_CASE("laplace expansion emits summand matrices") {
  TempDir tmp;
  json entries = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(10 * (i + 1) + (j + 1));
    entries.push_back(row);
  }
  const std::string matrix =
      tmp.write("A.json", json{{"n", 4}, {"entries", entries}}.dump());

  const CliResult r = run_cli("laplace --matrix " + matrix +
                              " --partition 2,1,1 --alpha 1,2 --k 2 --mode exact");
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.output);
  REQUIRE(out["summands"].size() == 6);
  CHECK(out["summands"][0]["beta"] == json::array({1, 2}));
  CHECK(out["summands"][5]["beta"] == json::array({3, 4}));
  // emitted braced matrices re-parse, and the total equals the immanant
  for (const auto& term : out["summands"]) symtensor::parse_matrix_exact(term["matrix"]);
  const CliResult whole =
      run_cli("immanant --matrix " + matrix + " --partition 2,1,1 --mode exact");
  REQUIRE(whole.exit_code == 0);
  CHECK(json::parse(whole.output)["value"] == out["value"]);

  const CliResult mismatch = run_cli("laplace --matrix " + matrix +
                                     " --partition 2,1,1 --alpha 1,2 --k 3 --mode exact");
  CHECK(mismatch.exit_code == 3);
}

TEST_CASE("exact mode round trip") {
  TempDir tmp;
  const std::string matrix = tmp.write(
      "R.json", R"({"n": 2, "entries": [["1/2", "1"], ["1", "2"]]})");
  const CliResult r = run_cli("immanant --matrix " + matrix + " --partition 2 --mode exact");
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.output)["value"] == "2");

  const CliResult adj = run_cli("adjoint --matrix " + matrix + " --partition 1,1 --mode exact");
  REQUIRE(adj.exit_code == 0);
  const json adj_out = json::parse(adj.output);
  const symtensor::ExactMatrix parsed = symtensor::parse_matrix_exact(adj_out);
  CHECK(parsed(0, 0) == symtensor::GaussianRational(2));
  CHECK(parsed(0, 1) == symtensor::GaussianRational(-1));
  // serialization round trip is lossless
  CHECK(symtensor::matrix_to_json(parsed) == adj_out);
}

TEST_CASE("tensor power output") {
  TempDir tmp;
  const std::string matrix = tmp.write("I3.json", kIdentity3);
  const CliResult r = run_cli("tensor-power --m 2 --partition 1,1 --matrix " + matrix);
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.output);
  CHECK(out["delta_hat"] ==
        json::array({json::array({1, 2}), json::array({1, 3}), json::array({2, 3})}));
  REQUIRE(out["matrix"].size() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double expected = i == j ? 1.0 : 0.0;
      CHECK(out["matrix"][i][j][0].get<double>() == doctest::Approx(expected).epsilon(1e-12));
      CHECK(out["matrix"][i][j][1].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("error paths and exit codes") {
  TempDir tmp;
  const std::string matrix = tmp.write("I3.json", kIdentity3);

  const CliResult missing = run_cli("immanant --matrix /nonexistent.json --partition 3", true);
  CHECK(missing.exit_code == 2);
  CHECK(json::parse(missing.output)["error"] == 2);

  const CliResult malformed_flag = run_cli("immanant --matrix", true);
  CHECK(malformed_flag.exit_code == 2);

  const CliResult weight = run_cli("immanant --matrix " + matrix + " --partition 2", true);
  CHECK(weight.exit_code == 3);
  CHECK(json::parse(weight.output)["error"] == 3);

  json big = {{"n", 11}, {"entries", json::array()}};
  for (int i = 0; i < 11; ++i) {
    json row = json::array();
    for (int j = 0; j < 11; ++j) row.push_back(i == j ? 1 : 0);
    big["entries"].push_back(row);
  }
  const std::string big_matrix = tmp.write("big.json", big.dump());
  const CliResult cap =
      run_cli("immanant --matrix " + big_matrix + " --partition 11", true);
  CHECK(cap.exit_code == 4);
}

TEST_CASE("float matrices survive a serialization round trip") {
  std::mt19937 rng(151u);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  symtensor::ComplexMatrix M(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M(i, j) = std::complex<double>(dist(rng), dist(rng));
  // through text, as the CLI emits it
  const json j = json::parse(symtensor::matrix_to_json(M).dump(2));
  const symtensor::ComplexMatrix back = symtensor::parse_matrix_float(j);
  CHECK(back == M);
}

TEST_CASE("verification suite runs clean") {
  const CliResult r = run_cli("verify --suite characters");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[FAIL]") == std::string::npos);
  CHECK(r.output.find("all checks passed") != std::string::npos);
}

} // TEST_SUITE("cli")
