// Copyright 2026 The hybridwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <catch_amalgamated.hpp>
#include <json.hpp>

#include "cli.hpp"

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = hybridwit::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> cells;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) {
        cells.push_back(cell);
    }
    return cells;
}

double json_value(const std::string &text) {
    return Json::parse(text)["records"][0]["value"].get<double>();
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path scratch(const std::string &name) {
    const auto dir = std::filesystem::temp_directory_path() / "hybridwit_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

const std::string kPiOver4 = "0.78539816339744830962";

} // namespace

TEST_CASE("correlator command", "[cli]") {
    Run r = run({"correlator", "--g", "0", "--eta", "1", "--p", "1", "--x", "0", "--p-quad", "0",
                 "--chi", "0", "--phi", "0"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "g,eta,p,x,p_quad,chi,phi,value");
    CHECK(split(rows[1]).back() == "1");

    r = run({"correlator", "--chi", kPiOver4, "--phi", "0", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK_THAT(json_value(r.out), WithinAbs(0.0, 1e-12));

    r = run({"correlator", "--chi", "45", "--phi", "0", "--degrees", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK_THAT(json_value(r.out), WithinAbs(0.0, 1e-12));

    r = run({"correlator", "--eta", "0"});
    CHECK(r.code == 2);
    CHECK_THAT(r.err, ContainsSubstring("eta"));
    r = run({"correlator", "--g", "-1"});
    CHECK(r.code == 2);
    CHECK_THAT(r.err, ContainsSubstring("g"));
    r = run({"correlator", "--p", "2"});
    CHECK(r.code == 2);
    CHECK_THAT(r.err, ContainsSubstring("p"));
    CHECK(run({"correlator", "--x", "nan"}).code == 2);
    CHECK(run({"correlator", "--bogus", "1"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("chsh and witness commands", "[cli]") {
    Run r = run({"chsh", "--g", "1.2", "--eta", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK_THAT(doc["records"][0]["value"].get<double>(), WithinAbs(2.828427, 1e-6));
    CHECK(doc["records"][0]["violated"].get<bool>());
    CHECK(doc["config"]["command"] == "chsh");

    r = run({"witness", "--g", "0", "--eta", "0.4", "--format", "json"});
    REQUIRE(r.code == 0);
    doc = Json::parse(r.out);
    CHECK_THAT(doc["records"][0]["value"].get<double>(), WithinAbs(2.262742, 1e-6));
    CHECK(doc["records"][0]["violated"].get<bool>());

    r = run({"chsh", "--g", "0", "--eta", "0.70", "--format", "json"});
    REQUIRE(r.code == 0);
    doc = Json::parse(r.out);
    CHECK_THAT(doc["records"][0]["value"].get<double>(), WithinAbs(1.979899, 1e-6));
    CHECK_FALSE(doc["records"][0]["violated"].get<bool>());

    // Degenerate explicit settings: every angle equal gives B = 2.
    r = run({"chsh", "--phi", "0.3", "--phi-prime", "0.3", "--chi", "0.3", "--chi-prime", "0.3",
             "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK_THAT(json_value(r.out), WithinAbs(2.0, 1e-12));

    r = run({"chsh", "--g", "0.5", "--eta", "0.9"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out).size() == 2);
}

TEST_CASE("sweep command", "[cli]") {
    Run r = run({"sweep", "--eta-min", "0.8", "--eta-max", "1.0", "--eta-steps", "2", "--g-min",
                 "0", "--g-max", "1", "--g-steps", "2"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "eta,g,nbar,mean_n,lost_photons,L,B_eta,h,W_eta,wigner_origin,negativity");
    const auto anchor = split(rows[3]);
    CHECK(anchor[0] == "1");
    CHECK(anchor[1] == "0");
    CHECK_THAT(std::stod(anchor[6]), WithinAbs(2.828427, 1e-6));

    r = run({"sweep", "--eta-min", "0.8", "--eta-max", "1.0", "--eta-steps", "2", "--g-min",
             "0", "--g-max", "1", "--g-steps", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const Json doc = Json::parse(r.out);
    REQUIRE(doc["records"].size() == 4);
    CHECK(doc["records"][0].contains("mean_n_total"));
    CHECK(doc.contains("config"));

    CHECK(run({"sweep", "--eta-steps", "1"}).code == 2);
    CHECK(run({"sweep", "--eta-min", "0.9", "--eta-max", "0.5"}).code == 2);
    CHECK(run({"sweep", "--eta-max", "1.5"}).code == 2);
    CHECK(run({"sweep", "--g-min", "-0.5"}).code == 2);
}

TEST_CASE("contour command", "[cli]") {
    Run r = run({"contour", "--test", "chsh", "--eta-min", "0.71", "--eta-max", "1.0",
                 "--eta-steps", "30", "--g-min", "0", "--g-max", "3", "--g-steps", "31"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() > 1);
    CHECK(rows[0] == "test,level,eta,g,value");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto cells = split(rows[i]);
        CHECK(std::stod(cells[3]) > 0.0);
        CHECK(std::abs(std::stod(cells[4]) - 2.0) < 1e-8);
    }

    r = run({"contour", "--test", "chsh", "--eta-min", "0.3", "--eta-max", "0.6"});
    CHECK(r.code == 0);
    CHECK_THAT(r.err, ContainsSubstring("no crossing"));
    CHECK(lines(r.out).size() == 1);

    CHECK(run({"contour", "--test", "bell"}).code == 2);
}

TEST_CASE("fig3 command", "[cli]") {
    Run r = run({"fig3", "--gains", "0,1", "--eta-min", "0.5", "--eta-max", "1", "--eta-steps",
                 "3"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    CHECK(rows[0] == "curve,g,eta,lost_photons,B_eta");
    // Two gains, three samples each, plus the reference rows.
    CHECK(rows.size() == 1 + 2 * 3 * 2);
    bool top = false;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto cells = split(rows[i]);
        if (cells[0] == "B_eta" && cells[2] == "1") {
            top = true;
            CHECK(cells[3] == "0");
            CHECK_THAT(std::stod(cells[4]), WithinAbs(2.0 * std::sqrt(2.0), 1e-12));
        }
    }
    CHECK(top);
    CHECK(run({"fig3", "--gains", "0,-1"}).code == 2);
}

TEST_CASE("oracle-check command", "[cli]") {
    Run r = run({"oracle-check", "--g", "0", "--eta", "1", "--tol", "1e-6", "--samples", "3"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "quantity,max_abs_discrepancy,samples");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(std::stod(split(rows[i])[1]) < 1e-8);
    }

    r = run({"oracle-check", "--g", "0.8", "--eta", "0.75", "--tol", "1e-6", "--samples", "3"});
    CHECK(r.code == 0);

    r = run({"oracle-check", "--g", "3"});
    CHECK(r.code == 2);
    CHECK_THAT(r.err, ContainsSubstring("above oracle ceiling"));

    // An impossible tolerance exercises the falsification channel.
    r = run({"oracle-check", "--g", "0.3", "--eta", "0.8", "--tol", "1e-300", "--samples", "1"});
    CHECK(r.code == 1);
}

TEST_CASE("help lists every flag with its domain", "[cli]") {
    const std::vector<std::pair<std::string, std::vector<std::string>>> commands = {
        {"correlator",
         {"--g", "--eta", "--p", "--x", "--p-quad", "--chi", "--phi", "--degrees", "--format",
          "--output", "--config"}},
        {"chsh",
         {"--g", "--eta", "--p", "--phi", "--phi-prime", "--chi", "--chi-prime", "--x",
          "--p-quad", "--x-prime", "--p-quad-prime", "--degrees", "--format", "--output"}},
        {"witness", {"--g", "--eta", "--p", "--phi", "--chi-prime", "--degrees"}},
        {"sweep",
         {"--eta-min", "--eta-max", "--eta-steps", "--g-min", "--g-max", "--g-steps", "--p",
          "--threads", "--format", "--output", "--config"}},
        {"contour", {"--test", "--tol", "--eta-min", "--g-steps", "--output"}},
        {"fig3", {"--gains", "--eta-min", "--eta-max", "--eta-steps", "--p", "--output"}},
        {"oracle-check",
         {"--g", "--eta", "--p", "--tol", "--dim", "--ceiling", "--samples", "--seed",
          "--output"}},
    };
    for (const auto &[command, flags] : commands) {
        const Run r = run({command, "--help"});
        INFO(command);
        CHECK(r.code == 0);
        for (const std::string &flag : flags) {
            CHECK_THAT(r.out, ContainsSubstring(flag));
        }
        // Every option line carries a description with its admissible range.
        for (const std::string &line : lines(r.out)) {
            if (line.find("  --") == 0 && line.find("--help") == std::string::npos) {
                CHECK(line.size() > 4);
            }
        }
    }
    CHECK_THAT(run({"sweep", "--help"}).out, ContainsSubstring("0 < eta-min"));
    CHECK_THAT(run({"correlator", "--help"}).out, ContainsSubstring("0 < eta <= 1"));
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic and JSON round-trips", "[cli]") {
    const std::vector<std::string> sweep = {"sweep",       "--eta-min", "0.4", "--eta-max",
                                            "1",           "--eta-steps", "13", "--g-min",
                                            "0",           "--g-max",   "2",   "--g-steps",
                                            "9",           "--format",  "json"};
    const Run a = run(sweep);
    std::vector<std::string> single = sweep;
    single.insert(single.end(), {"--threads", "1"});
    const Run b = run(single);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const Json doc = Json::parse(a.out);
    CHECK(doc.dump(2) + "\n" == a.out);

    for (const auto &args : std::vector<std::vector<std::string>>{
             {"chsh", "--g", "0.7", "--eta", "0.85", "--format", "json"},
             {"correlator", "--g", "0.3", "--x", "0.1", "--chi", "0.2", "--format", "json"},
             {"contour", "--test", "witness", "--eta-steps", "7", "--format", "json"}}) {
        const Run r = run(args);
        REQUIRE(r.code == 0);
        CHECK(Json::parse(r.out).dump(2) + "\n" == r.out);
        CHECK(run(args).out == r.out);
    }
}

TEST_CASE("file output and I/O errors", "[cli]") {
    const auto path = scratch("sweep.csv");
    std::filesystem::remove(path);
    Run r = run({"sweep", "--eta-steps", "3", "--g-steps", "3", "--output", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    const std::string first = read_file(path);
    CHECK(first == run({"sweep", "--eta-steps", "3", "--g-steps", "3"}).out);
    r = run({"sweep", "--eta-steps", "3", "--g-steps", "3", "--output", path.string()});
    CHECK(read_file(path) == first);

    r = run({"sweep", "--output", "/nonexistent-dir/out.csv"});
    CHECK(r.code == 3);
    CHECK_THAT(r.err, ContainsSubstring("/nonexistent-dir/out.csv"));
    r = run({"sweep", "--config", "/nonexistent-dir/config.json"});
    CHECK(r.code == 3);
}

TEST_CASE("config file defaults and overrides", "[cli]") {
    const auto path = scratch("config.json");
    {
        std::ofstream f(path);
        f << R"({"format": "json", "chsh": {"g": 0.0, "eta": 0.9}})";
    }
    Run r = run({"chsh", "--config", path.string()});
    REQUIRE(r.code == 0);
    CHECK_THAT(json_value(r.out), WithinAbs(2.0 * std::sqrt(2.0) * 0.9, 1e-12));
    r = run({"chsh", "--config", path.string(), "--eta", "1"});
    REQUIRE(r.code == 0);
    CHECK_THAT(json_value(r.out), WithinAbs(2.0 * std::sqrt(2.0), 1e-12));
    r = run({"chsh", "--config", path.string(), "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out).size() == 2);

    {
        std::ofstream f(path);
        f << "{not json";
    }
    CHECK(run({"chsh", "--config", path.string()}).code == 2);

    const std::string recipe = std::string(HYBRIDWIT_GOLDEN_DIR) + "/../../configs/fig3.json";
    r = run({"fig3", "--config", recipe});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out).size() == 1 + 4 * 101 * 2);
}

TEST_CASE("golden files", "[cli]") {
    const std::string dir = HYBRIDWIT_GOLDEN_DIR;
    const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
        {"sweep_grid.csv",
         {"sweep", "--eta-min", "0.5", "--eta-max", "1", "--eta-steps", "6", "--g-min", "0",
          "--g-max", "1.5", "--g-steps", "4"}},
        {"fig3.csv", {"fig3"}},
        {"contour_witness.csv",
         {"contour", "--test", "witness", "--eta-min", "0.36", "--eta-max", "1", "--eta-steps",
          "9", "--g-min", "0", "--g-max", "3", "--g-steps", "13"}},
    };
    for (const auto &[file, args] : cases) {
        INFO(file);
        const std::string golden = read_file(dir + "/" + file);
        REQUIRE_FALSE(golden.empty());
        const Run r = run(args);
        REQUIRE(r.code == 0);
        const auto want = lines(golden);
        const auto got = lines(r.out);
        REQUIRE(got.size() == want.size());
        CHECK(got[0] == want[0]);
        // Values compared to 1e-12 so that last-bit libm differences do
        // not fail the regression.
        for (std::size_t i = 1; i < want.size(); ++i) {
            const auto a = split(got[i]);
            const auto b = split(want[i]);
            REQUIRE(a.size() == b.size());
            for (std::size_t k = 0; k < a.size(); ++k) {
                char *end_a = nullptr;
                char *end_b = nullptr;
                const double x = std::strtod(a[k].c_str(), &end_a);
                const double y = std::strtod(b[k].c_str(), &end_b);
                if (*end_a == '\0' && *end_b == '\0' && !a[k].empty()) {
                    CHECK(std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(y)));
                } else {
                    CHECK(a[k] == b[k]);
                }
            }
        }
    }
}
