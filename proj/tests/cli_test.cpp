// Copyright 2026 The monocount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "monocount/cli.hpp"
#include "monocount/oracle.hpp"
#include "monocount/transform.hpp"

namespace monocount {

  namespace {
    struct Result {
      int         rc;
      std::string out;
      std::string err;
    };

    Result run(std::vector<std::string> args) {
      args.insert(args.begin(), "monocount");
      std::vector<char*> argv;
      for (auto& a : args) {
        argv.push_back(a.data());
      }
      std::ostringstream out;
      std::ostringstream err;
      int const rc = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
      return {rc, out.str(), err.str()};
    }

    std::string slurp(std::filesystem::path const& p) {
      std::ifstream      in(p);
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }
  }  // namespace

  TEST_CASE("count", "[cli]") {
    CHECK(run({"count", "--func", "i", "--n", "5"}).out == "17\n");
    CHECK(run({"count", "--func", "s", "--max", "2"}).out == "1\n1\n2\n");
    CHECK(run({"count", "--func", "semi-t", "--n", "2"}).out == "2\n");
    CHECK(run({"count", "--func", "semi-i", "--max", "3"}).out == "1\n3\n5\n");
    CHECK(run({"count", "--func", "t", "--n", "19"}).out == "414\n");

    auto const zero = run({"count", "--func", "semi-t", "--n", "0"});
    CHECK(zero.rc == 2);
    CHECK(zero.out.empty());
    CHECK(run({"count", "--func", "q", "--n", "1"}).rc == 2);
    CHECK(run({"count", "--func", "s"}).rc == 2);
    CHECK(run({"count", "--func", "s", "--n", "2", "--max", "3"}).rc == 2);
    CHECK(run({"count", "--func", "s", "--n", "-1"}).rc == 2);

    auto const overflow = run({"count", "--func", "t", "--n", "3000"});
    CHECK(overflow.rc == 1);
    CHECK(overflow.out.empty());
    CHECK_FALSE(overflow.err.empty());
  }

  TEST_CASE("table", "[cli]") {
    auto const csv = run({"table", "--max", "19", "--format", "csv"});
    REQUIRE(csv.rc == 0);
    std::istringstream lines(csv.out);
    std::string        header;
    std::string        first;
    std::getline(lines, header);
    std::getline(lines, first);
    CHECK(header == "n,s,t,i,semi_t,semi_i");
    CHECK(first == "0,1,1,1,,");

    auto const json = run({"table", "--max", "5", "--format", "json"});
    auto const rows = nlohmann::json::parse(json.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[5]["n"] == 5);
    CHECK(rows[5]["s"] == 6);
    CHECK(rows[5]["t"] == 16);
    CHECK(rows[5]["i"] == 17);

    CHECK(run({"table", "--max", "0"}).out == "n,s,t,i,semi_t,semi_i\n0,1,1,1,,\n");
    CHECK(run({"table", "--format", "xml"}).rc == 2);
  }

  TEST_CASE("table reproduces the golden reference table", "[cli]") {
    auto const golden
        = slurp(std::filesystem::path(MONOCOUNT_TEST_DATA_DIR) / "reference_table.md");
    REQUIRE_FALSE(golden.empty());
    CHECK(run({"table", "--max", "19", "--format", "md"}).out == golden);
    // 19 is the default.
    CHECK(run({"table", "--format", "md"}).out == golden);
  }

  TEST_CASE("table writes to a file", "[cli]") {
    auto const path
        = std::filesystem::temp_directory_path() / "monocount_cli_test_table.csv";
    std::filesystem::remove(path);
    auto const r = run({"table", "--max", "3", "-o", path.string()});
    CHECK(r.rc == 0);
    CHECK(r.out.empty());
    CHECK(slurp(path) == run({"table", "--max", "3"}).out);
    std::filesystem::remove(path);
  }

  TEST_CASE("classify", "[cli]") {
    CHECK(run({"classify", "--kind", "transformation", "--input", "2 3 1 1"}).out
          == "degree: 4\nthreshold: 1\nperiod: 3\nmonoid_size: 4\n");
    CHECK(run({"classify", "--kind", "pperm", "--input", "2 - 4 5 3"}).out
          == "degree: 5\nchains: [2]\ncycles: [3]\nchain_param: 2\n"
             "cycle_param: 3\nsize: 8\n");
    CHECK(run({"classify", "--kind", "pperm", "--input", "1 2 3"}).out
          == "degree: 3\nchains: []\ncycles: [1, 1, 1]\nchain_param: 0\n"
             "cycle_param: 1\nsize: 1\n");

    auto const repeated = run({"classify", "--kind", "pperm", "--input", "2 2"});
    CHECK(repeated.rc == 1);
    CHECK(repeated.err == "error: image 2 is repeated at position 2\n");
    auto const bad
        = run({"classify", "--kind", "transformation", "--input", "2 3 9"});
    CHECK(bad.rc == 1);
    CHECK(bad.err.find("position 4") != std::string::npos);
    CHECK(run({"classify", "--kind", "group", "--input", "1"}).rc == 2);
  }

  TEST_CASE("construct", "[cli]") {
    CHECK(run({"construct", "--threshold", "1", "--period", "2", "--degree", "3"})
              .out
          == "2 1 2\n");
    CHECK(run({"construct", "--threshold", "0", "--period", "6", "--degree", "5"})
              .out
          == "2 1 4 5 3\n");
    auto const r
        = run({"construct", "--threshold", "0", "--period", "6", "--degree", "4"});
    CHECK(r.rc != 0);
    CHECK(r.out.empty());
    CHECK(r.err.find("minimal degree 5") != std::string::npos);
  }

  TEST_CASE("construct then classify round trips", "[cli]") {
    for (std::size_t t = 0; t <= 4; ++t) {
      for (std::uint64_t p : {1, 2, 3, 4, 5, 6, 10, 12}) {
        auto const built = run({"construct",
                                "--threshold",
                                std::to_string(t),
                                "--period",
                                std::to_string(p),
                                "--degree",
                                "12"});
        REQUIRE(built.rc == 0);
        auto const input = built.out.substr(0, built.out.size() - 1);
        auto const f     = parse_transformation(input);
        REQUIRE(oracle::threshold_period_by_powers(f) == ThresholdPeriod{t, p});
        auto const c = run({"classify", "--kind", "transformation", "--input", input});
        CHECK(c.out.find("threshold: " + std::to_string(t) + "\n")
              != std::string::npos);
        CHECK(c.out.find("period: " + std::to_string(p) + "\n")
              != std::string::npos);
      }
    }
  }

  TEST_CASE("normal-form and cayley", "[cli]") {
    CHECK(run({"normal-form", "--n", "2", "--k", "3", "--word", "xxxx"}).out
          == "x^-0 x^2 x^-2 x^1\n");
    CHECK(run({"normal-form", "--n", "5", "--k", "1", "--word", "xX"}).out
          == "x^-0 x^1 x^-1 x^0\n");
    CHECK(run({"normal-form", "--n", "5", "--k", "1", "--word", ""}).out
          == "x^-0 x^0 x^-0 x^0\n");
    auto const bad = run({"normal-form", "--n", "2", "--k", "3", "--word", "xy"});
    CHECK(bad.rc == 1);
    CHECK(bad.err.find("position 1") != std::string::npos);

    CHECK(run({"cayley", "--n", "0", "--k", "2"}).out
          == "x^-0 x^0 x^-0 x^0,x^-0 x^0 x^-0 x^1\n0,1\n1,0\n");
    auto const json
        = nlohmann::json::parse(run({"cayley", "--n", "2", "--k", "3", "--format", "json"}).out);
    CHECK(json["elements"].size() == 8);
    CHECK(json["table"].size() == 8);
    CHECK(run({"cayley", "--n", "6", "--k", "5"}).rc == 1);
    CHECK(run({"cayley", "--n", "6", "--k", "5", "--limit", "11"}).rc == 0);
  }

  TEST_CASE("verify", "[cli]") {
    auto const r = run({"verify", "--max-degree", "2"});
    REQUIRE(r.rc == 0);
    auto const report = nlohmann::json::parse(r.out);
    CHECK(report["all_match"] == true);
    CHECK(report["transformations"][1]["degree"] == 2);
    CHECK(report["transformations"][1]["distinct_types"] == 3);
    CHECK(report["partial_perms"][1]["distinct_types"] == 4);

    auto const five = run({"verify", "--max-degree", "5"});
    CHECK(five.rc == 0);
    CHECK(nlohmann::json::parse(five.out)["all_match"] == true);

    CHECK(run({"verify", "--max-degree", "0"}).rc == 2);
    CHECK(run({"verify", "--max-degree", "8"}).rc == 2);
  }

  TEST_CASE("usage", "[cli]") {
    CHECK(run({}).rc == 2);
    auto const help = run({"--help"});
    CHECK(help.rc == 0);
    CHECK(help.out.find("verify") != std::string::npos);
    CHECK(run({"frobnicate"}).rc == 2);
  }

}  // namespace monocount
