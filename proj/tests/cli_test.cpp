// Copyright 2026 The qfourier Authors.
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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qfourier/cli.hpp"

using namespace qfourier;
namespace fs = std::filesystem;
constexpr double kPi = std::numbers::pi;

namespace {

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("qfourier_cli_" +
                std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                "_" + ::testing::UnitTest::GetInstance()
                          ->current_test_info()
                          ->name());
        fs::create_directories(dir_);
        write_square_wave_series();
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }

    void write_square_wave_series() {
        FourierSeries s;
        for (int n : {1, 3, 5, 7})
            s.terms.push_back({n, 1.0 / n, -kPi / 2});
        write_text_file(path("series.json"), to_json(s).dump(2));
    }

    int cli(const std::vector<std::string> &args) {
        out_.str("");
        err_.str("");
        return run_cli(args, out_, err_);
    }

    static std::string slurp(const std::string &p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    fs::path dir_;
    std::ostringstream out_, err_;
};

} // namespace

TEST_F(CliTest, CompileWritesPlanAndSummary) {
    ASSERT_EQ(cli({"compile", "--series", path("series.json"), "--out",
                   path("plan.json")}),
              0)
        << err_.str();
    const auto j = read_json_file(path("plan.json"));
    EXPECT_EQ(j.at("format_version").get<int>(), 1);
    EXPECT_EQ(j.at("slots").size(), 4u);
    EXPECT_NE(out_.str().find("C = "), std::string::npos);
    EXPECT_NE(out_.str().find("census (decomposed)"), std::string::npos);
    // harmonics with zero residual amplitude produce no slot
    for (const auto &slot : j.at("slots"))
        EXPECT_EQ(slot.at("n").get<int>() % 2, 1);
}

TEST_F(CliTest, MalformedSeriesGivesValidationExit) {
    write_text_file(path("bad.json"), "{\"period\": 3.14");
    EXPECT_EQ(cli({"compile", "--series", path("bad.json"), "--out",
                   path("plan.json")}),
              2);
    write_text_file(path("empty.json"),
                    "{\"format_version\":1,\"period\":3.14,\"terms\":[]}");
    EXPECT_EQ(cli({"compile", "--series", path("empty.json"), "--out",
                   path("plan.json")}),
              2);
}

TEST_F(CliTest, InfeasiblePinGivesDistinctExit) {
    EXPECT_EQ(cli({"compile", "--series", path("series.json"), "--out",
                   path("plan.json"), "--pin-c", "0.5"}),
              3);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(cli({"compile"}), 2);
    EXPECT_EQ(cli({"frobnicate"}), 2);
    EXPECT_EQ(cli({"--help"}), 0);
}

TEST_F(CliTest, SweepMatchesInProcessRows) {
    ASSERT_EQ(cli({"compile", "--series", path("series.json"), "--out",
                   path("plan.json")}),
              0);
    ASSERT_EQ(cli({"sweep", "--plan", path("plan.json"), "--xmin", "0",
                   "--xmax", "3.141592653589793", "--steps", "16", "--out",
                   path("sweep.csv")}),
              0)
        << err_.str();
    const std::string csv = slurp(path("sweep.csv"));
    // header + 16 rows, LF endings
    EXPECT_EQ(static_cast<int>(std::count(csv.begin(), csv.end(), '\n')), 17);
    EXPECT_EQ(csv.find("\r"), std::string::npos);
    EXPECT_EQ(csv.substr(0, csv.find('\n')),
              "x,p1_sim,p1_theory,f_target,c_f_plus_half");

    // the plan re-read from disk reproduces the same rows byte for byte
    const auto plan = plan_from_json(read_json_file(path("plan.json")));
    const auto circuit = assemble(plan);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line); // header
    for (int i = 0; i < 16; ++i) {
        ASSERT_TRUE(std::getline(lines, line));
        const double x = kPi * i / 15;
        const State st = run(circuit, prepare_input(circuit, x));
        char buf[256];
        const double p1 = prob_of_outcome(st, plan.layout.readout(), 1);
        const double f = eval_series_canonical(plan.target, x);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g", x, p1,
                      eval_plan_probability(plan, x), f,
                      plan.scale_c * f + 0.5);
        EXPECT_EQ(line, std::string(buf)) << "row " << i;
    }
}

TEST_F(CliTest, SweepValidation) {
    ASSERT_EQ(cli({"compile", "--series", path("series.json"), "--out",
                   path("plan.json")}),
              0);
    EXPECT_EQ(cli({"sweep", "--plan", path("plan.json"), "--xmin", "1",
                   "--xmax", "1", "--steps", "4"}),
              2);
    EXPECT_EQ(cli({"sweep", "--plan", path("plan.json"), "--xmin", "0",
                   "--xmax", "1", "--steps", "1"}),
              2);
}

TEST_F(CliTest, ShotsEmitsJsonLine) {
    ASSERT_EQ(cli({"compile", "--series", path("series.json"), "--out",
                   path("plan.json")}),
              0);
    ASSERT_EQ(cli({"shots", "--plan", path("plan.json"), "--x", "0.7",
                   "--shots", "512", "--seed", "42"}),
              0)
        << err_.str();
    const auto line = nlohmann::json::parse(out_.str());
    EXPECT_EQ(line.at("shots").get<int>(), 512);
    EXPECT_EQ(line.at("seed").get<int>(), 42);
    EXPECT_GT(line.at("p_exact").get<double>(), 0.0);
    const std::string first = out_.str();
    ASSERT_EQ(cli({"shots", "--plan", path("plan.json"), "--x", "0.7",
                   "--shots", "512", "--seed", "42"}),
              0);
    EXPECT_EQ(out_.str(), first); // reproducible

    EXPECT_EQ(cli({"shots", "--plan", path("plan.json"), "--x", "0.7",
                   "--shots", "512"}),
              2); // seed required
}

TEST_F(CliTest, SuperposeSweeps) {
    ASSERT_EQ(cli({"superpose", "--x0", "3.4", "--x1", "0.2", "--sweep",
                   "theta", "--steps", "8", "--out", path("sup.csv")}),
              0)
        << err_.str();
    const std::string csv = slurp(path("sup.csv"));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "theta,p0_sim,p0_theory");
    EXPECT_EQ(static_cast<int>(std::count(csv.begin(), csv.end(), '\n')), 9);

    ASSERT_EQ(cli({"superpose", "--x0", "0", "--x1", "0", "--sweep", "x1",
                   "--steps", "5", "--theta", "3.141592653589793", "--shots",
                   "256", "--seed", "7", "--out", path("sup2.csv")}),
              0);
    const std::string csv2 = slurp(path("sup2.csv"));
    EXPECT_EQ(csv2.substr(0, csv2.find('\n')), "x1,p0_sim,p0_theory,p0_hat");

    EXPECT_EQ(cli({"superpose", "--x0", "0", "--x1", "0", "--sweep", "bogus",
                   "--steps", "5"}),
              2);
    EXPECT_EQ(cli({"superpose", "--x0", "0", "--x1", "0", "--sweep", "x1",
                   "--steps", "1"}),
              2);
}

TEST_F(CliTest, GatecountAndExport) {
    ASSERT_EQ(cli({"compile", "--series", path("series.json"), "--out",
                   path("plan.json")}),
              0);
    ASSERT_EQ(cli({"gatecount", "--plan", path("plan.json"), "--decomposed"}),
              0);
    EXPECT_NE(out_.str().find("census (IR)"), std::string::npos);
    EXPECT_NE(out_.str().find("census (decomposed)"), std::string::npos);

    ASSERT_EQ(cli({"export-qasm", "--plan", path("plan.json"), "--out",
                   path("circ.qasm")}),
              0)
        << err_.str();
    const std::string qasm = slurp(path("circ.qasm"));
    EXPECT_NE(qasm.find("OPENQASM 2.0;"), std::string::npos);
    EXPECT_NE(qasm.find("qreg q[11];"), std::string::npos);
    // gate lines restricted to the export set
    std::istringstream lines(qasm);
    std::string line;
    std::size_t gate_lines = 0;
    for (int skip = 0; skip < 3; ++skip)
        std::getline(lines, line);
    while (std::getline(lines, line)) {
        ++gate_lines;
        const bool ok = line.rfind("ry(", 0) == 0 || line.rfind("cry(", 0) == 0 ||
                        line.rfind("h ", 0) == 0 || line.rfind("x ", 0) == 0 ||
                        line.rfind("cx ", 0) == 0;
        EXPECT_TRUE(ok) << line;
    }
    // line census equals the decomposed-IR census
    const auto plan = plan_from_json(read_json_file(path("plan.json")));
    const auto lowered = lower_for_export(assemble(plan));
    EXPECT_EQ(gate_lines, lowered.size());
}

TEST_F(CliTest, QasmOfTinyPlanIsMinimal) {
    FourierSeries s;
    s.terms = {{1, 1.0, 0.0}};
    write_text_file(path("one.json"), to_json(s).dump());
    ASSERT_EQ(cli({"compile", "--series", path("one.json"), "--out",
                   path("one_plan.json")}),
              0);
    ASSERT_EQ(cli({"export-qasm", "--plan", path("one_plan.json"), "--out",
                   path("one.qasm")}),
              0);
    const std::string qasm = slurp(path("one.qasm"));
    // a single chain of length one: exactly one rotation on the readout
    // qubit, plus the two mixer preparation gates
    std::istringstream lines(qasm);
    std::string line;
    int ry_lines = 0, h_lines = 0, total = 0;
    for (int skip = 0; skip < 3; ++skip)
        std::getline(lines, line);
    while (std::getline(lines, line)) {
        ++total;
        ry_lines += line.rfind("ry(", 0) == 0;
        h_lines += line.rfind("h ", 0) == 0;
    }
    EXPECT_EQ(ry_lines, 1);
    EXPECT_EQ(h_lines, 2);
    EXPECT_EQ(total, 3);
}
