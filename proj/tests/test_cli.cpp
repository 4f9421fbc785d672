#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "sixvertex/params.hpp"

using nlohmann::json;
using namespace sixv;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> csv_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  return lines;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("sixv_cli_" + name)).string();
}

}  // namespace

TEST_CASE("z with two methods reports both values and their gap") {
  const Run r = run({"z", "--n", "3", "--seed", "7", "--method", "oracle,tsuchiya"});
  REQUIRE(r.code == cli::kOk);
  const json j = json::parse(r.out);
  REQUIRE(j["results"].size() == 2);
  CHECK(j["results"][0]["method"] == "oracle");
  CHECK(j["results"][1]["method"] == "tsuchiya");
  CHECK(j["gaps"][0]["relative_gap"].get<double>() < 1e-9);
  CHECK(j["results"][0]["pivot_min"].is_null());
  CHECK(j["results"][1]["pivot_min"].get<double>() > 0.0);
}

TEST_CASE("single z method") {
  const Run r = run({"z", "--n", "2", "--seed", "3"});
  REQUIRE(r.code == cli::kOk);
  const json j = json::parse(r.out);
  CHECK(j["method"] == "tsuchiya");
  CHECK(j["params"].get<ModelParams>() == random_generic(2, 3));
}

TEST_CASE("degenerate parameter file names the family") {
  const std::string path = temp_path("bad.json");
  {
    std::ofstream f(path);
    f << R"({"n": 2, "eta": 0.7, "zeta_plus": 0.3, "lambdas": [0.2, 0.2], "nus": [0.1, 0.4]})";
  }
  const Run r = run({"z", "--params", path});
  CHECK(r.code == cli::kParameterError);
  CHECK(r.err.find("lambda-Vandermonde") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("malformed input exits 2") {
  const std::string path = temp_path("broken.json");
  {
    std::ofstream f(path);
    f << "{ not json";
  }
  CHECK(run({"z", "--params", path}).code == cli::kParameterError);
  CHECK(run({"z", "--params", temp_path("missing.json")}).code == cli::kParameterError);
  CHECK(run({"z"}).code == cli::kParameterError);
  CHECK(run({"z", "--n", "0"}).code == cli::kParameterError);
  CHECK(run({"z", "--n", "2", "--method", "guess"}).code == cli::kParameterError);
  CHECK(run({"profile", "--n", "2", "--method", "guess"}).code == cli::kParameterError);
  CHECK(run({"frobnicate"}).code == cli::kParameterError);
  CHECK(run({}).code == cli::kParameterError);
  std::remove(path.c_str());
}

TEST_CASE("size caps exit 3") {
  CHECK(run({"z", "--n", "4", "--method", "enumerate"}).code == cli::kCapExceeded);
  CHECK(run({"profile", "--n", "10", "--method", "ratio-perm"}).code == cli::kCapExceeded);
  CHECK(run({"bench", "--n-range", "9..11", "--method", "oracle"}).code == cli::kCapExceeded);
  CHECK(run({"validate", "--n", "9", "--trials", "1"}).code == cli::kCapExceeded);
}

TEST_CASE("profile csv has one row per column") {
  const Run r = run({"profile", "--n", "4", "--seed", "9", "--method", "ratio-det", "--format", "csv"});
  REQUIRE(r.code == cli::kOk);
  const auto lines = csv_lines(r.out);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "M,F,method");
  CHECK(lines[1].rfind("1,", 0) == 0);
  CHECK(lines[4].rfind("4,", 0) == 0);
  CHECK(r.out.find("# normalization_gap,") != std::string::npos);
}

TEST_CASE("profile json at N = 1") {
  const Run r = run({"profile", "--n", "1", "--seed", "1", "--method", "closed-form"});
  REQUIRE(r.code == cli::kOk);
  const json j = json::parse(r.out);
  REQUIRE(j["values"].size() == 1);
  CHECK(j["values"][0]["M"] == 1);
  CHECK(std::isfinite(j["values"][0]["F"].get<double>()));
}

TEST_CASE("validate passes at default tolerances and fails when overtightened") {
  CHECK(run({"validate", "--n", "3", "--trials", "10", "--seed", "0"}).code == cli::kOk);
  CHECK(run({"validate", "--n", "1", "--trials", "3"}).code == cli::kOk);
  const Run tight = run({"validate", "--n", "3", "--tol", "1e-15"});
  CHECK(tight.code == cli::kValidationFailed);
  CHECK(tight.out.find("FAIL") != std::string::npos);
}

TEST_CASE("validate json lists every check") {
  const Run r = run({"validate", "--n", "2", "--trials", "2", "--format", "json"});
  REQUIRE(r.code == cli::kOk);
  const json j = json::parse(r.out);
  CHECK(j["pass"] == true);
  std::vector<std::string> names;
  for (const auto& c : j["checks"]) names.push_back(c["check"]);
  for (const char* expected : {"ybe", "reflection", "sigma-expansion", "oracle-vs-tsuchiya", "enumerate-vs-oracle",
                               "izergin-vs-column", "psi-coordinate-vs-oracle", "column-form-gap", "column-vs-row",
                               "f-route-agreement", "normalization"}) {
    CAPTURE(expected);
    CHECK(std::find(names.begin(), names.end(), expected) != names.end());
  }
}

TEST_CASE("bench columns and term counts") {
  const Run r = run({"bench", "--n-range", "2..5", "--trials", "1"});
  REQUIRE(r.code == cli::kOk);
  const auto lines = csv_lines(r.out);
  REQUIRE(lines.size() == 1 + 4 * 3);
  CHECK(lines[0] == "n,method,median_ns,terms");
  bool saw_perm5 = false, saw_det5 = false;
  for (const auto& line : lines) {
    if (line.rfind("5,perm,", 0) == 0) {
      saw_perm5 = true;
      CHECK(line.substr(line.rfind(',') + 1) == "384");
    }
    if (line.rfind("5,det,", 0) == 0) {
      saw_det5 = true;
      CHECK(line.substr(line.rfind(',') + 1) == "16");
    }
  }
  CHECK(saw_perm5);
  CHECK(saw_det5);
  CHECK(run({"bench", "--n-range", "5..2"}).code == cli::kParameterError);
}

TEST_CASE("params round-trip bit-identically through a file") {
  const std::string path = temp_path("params.json");
  const ModelParams p = random_generic(4, 11);
  {
    std::ofstream f(path);
    f << json(p).dump();
  }
  const Run r = run({"z", "--params", path, "--method", "oracle"});
  REQUIRE(r.code == cli::kOk);
  CHECK(json::parse(r.out)["params"].get<ModelParams>() == p);
  std::remove(path.c_str());
}

TEST_CASE("repeated runs print identical bytes") {
  const std::vector<std::string> z = {"z", "--n", "4", "--seed", "2", "--method", "oracle,tsuchiya"};
  CHECK(run(z).out == run(z).out);
  const std::vector<std::string> prof = {"profile", "--n", "5", "--seed", "8", "--method", "closed-form", "--format", "csv"};
  CHECK(run(prof).out == run(prof).out);
  const std::vector<std::string> val = {"validate", "--n", "3", "--trials", "2", "--format", "json"};
  CHECK(run(val).out == run(val).out);
}

TEST_CASE("csv values carry 17 significant digits") {
  const Run r = run({"z", "--n", "3", "--seed", "5", "--format", "csv"});
  REQUIRE(r.code == cli::kOk);
  const auto lines = csv_lines(r.out);
  REQUIRE(lines.size() == 2);
  const std::string value = lines[1].substr(lines[1].find(',') + 1, lines[1].rfind(',') - lines[1].find(',') - 1);
  const double parsed = std::stod(value);
  const json j = json::parse(run({"z", "--n", "3", "--seed", "5"}).out);
  CHECK(parsed == j["Z"].get<double>());
}

TEST_CASE("out writes to a file") {
  const std::string path = temp_path("out.json");
  const Run r = run({"z", "--n", "2", "--out", path});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.empty());
  std::ifstream f(path);
  json j;
  f >> j;
  CHECK(j["method"] == "tsuchiya");
  std::remove(path.c_str());
}
