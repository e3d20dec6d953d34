// Copyright 2026 The gkp-magic Authors
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

#include "gkp/cli.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <locale>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = gkp::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("gkp_cli_test_" + name)).string();
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> v;
    std::stringstream s(text);
    std::string line;
    while (std::getline(s, line)) v.push_back(line);
    return v;
}

std::vector<double> csv_row(const std::string& line) {
    std::vector<double> v;
    std::stringstream s(line);
    std::string cell;
    while (std::getline(s, cell, ',')) v.push_back(std::stod(cell));
    return v;
}

double field(const std::string& text, const std::string& key) {
    auto pos = text.find(key + "=");
    EXPECT_NE(pos, std::string::npos) << key;
    return std::stod(text.substr(pos + key.size() + 1));
}

}  // namespace

TEST(cli, grid_parsing) {
    EXPECT_EQ(gkp::cli::parse_grid("4:18:2").size(), 8u);
    EXPECT_EQ(gkp::cli::parse_grid("6, 10,14"), (std::vector<double>{6, 10, 14}));
    EXPECT_TRUE(gkp::cli::parse_grid("").empty());
    EXPECT_THROW(gkp::cli::parse_grid("6,x"), std::invalid_argument);
    EXPECT_THROW(gkp::cli::parse_grid("1:2"), std::invalid_argument);
    EXPECT_THROW(gkp::cli::parse_grid("1:2:0"), std::invalid_argument);
}

TEST(cli, fixed_formatting) {
    EXPECT_EQ(gkp::cli::format_fixed(1.0, 12), "1.0");
    EXPECT_EQ(gkp::cli::format_fixed(0.9999999999999999, 12), "1.0");
    EXPECT_EQ(gkp::cli::format_fixed(0.25, 12), "0.25");
    EXPECT_EQ(gkp::cli::format_fixed(0.999, 12), "0.999");
}

TEST(cli, usage_errors) {
    EXPECT_EQ(run({}).code, gkp::cli::kUsageError);
    EXPECT_EQ(run({"bogus"}).code, gkp::cli::kUsageError);
    EXPECT_EQ(run({"ideal", "--nope"}).code, gkp::cli::kUsageError);
    EXPECT_EQ(run({"--help"}).code, gkp::cli::kSuccess);
}

TEST(cli, ideal_values) {
    auto r = run({"ideal", "zero"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("N(zero)=2.000000000000\n"), std::string::npos);
    r = run({"ideal", "h"});
    EXPECT_NE(r.out.find("N(h)=2.414213562373\n"), std::string::npos);
    EXPECT_NE(r.out.find("ratio [h / zero]=1.207106781187\n"), std::string::npos);
    r = run({"ideal", "h", "h", "/", "zero", "zero", "zero"});
    EXPECT_NE(r.out.find("ratio [h h / zero zero zero]=0.728553390593\n"), std::string::npos);
}

TEST(cli, ideal_rejects_unknown_state) {
    auto r = run({"ideal", "zero", "magic"});
    EXPECT_EQ(r.code, gkp::cli::kUsageError);
    EXPECT_NE(r.err.find("magic"), std::string::npos);
    EXPECT_EQ(run({"ideal", "/", "zero"}).code, gkp::cli::kUsageError);
}

TEST(cli, ideal_lattice_dump) {
    std::string path = temp_path("lattice.txt");
    ASSERT_EQ(run({"ideal", "zero", "--out", path}).code, 0);
    auto l = lines(slurp(path));
    ASSERT_EQ(l.size(), 9u);
    EXPECT_EQ(l[0], "# zero");
    EXPECT_EQ(l[1], "0 0 1");
    EXPECT_EQ(l[6], "2 1 -1");
    std::remove(path.c_str());
}

TEST(cli, inject_default_run) {
    auto r = run({"inject"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("t_injection min_fidelity=1.0; pi8_pair_to_zero min_fidelity=1.0\n"), std::string::npos);
    EXPECT_NE(r.out.find("resource_count=2"), std::string::npos);
}

TEST(cli, inject_branches) {
    auto r = run({"inject", "--branches"});
    int n = 0;
    for (const auto& l : lines(r.out)) n += l.rfind("branch ", 0) == 0;
    EXPECT_EQ(n, 4);
}

TEST(cli, inject_sampled_mode) {
    auto r = run({"inject", "--shots", "1000", "--seed", "17"});
    EXPECT_EQ(r.code, 0);
    for (const std::string name : {"t_injection shots=1000", "pi8_pair_to_zero shots=1000"}) {
        auto pos = r.out.find(name);
        ASSERT_NE(pos, std::string::npos);
        double ones = field(r.out.substr(pos), "ones");
        EXPECT_LE(std::abs(ones - 500.0), 5.0 * std::sqrt(250.0));
    }
    EXPECT_EQ(run({"inject", "--shots", "1000", "--seed", "17"}).out, r.out);
}

TEST(cli, sweep_empty_grid_is_header_only) {
    auto r = run({"negativity-sweep", "--grid", ""});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "db,sigma2,neg_zero,neg_h\n");
}

TEST(cli, sweep_rows) {
    std::string path = temp_path("sweep.csv");
    auto r = run({"negativity-sweep", "--grid", "6,10,14", "--out", path});
    ASSERT_EQ(r.code, 0);
    auto l = lines(slurp(path));
    ASSERT_EQ(l.size(), 4u);
    EXPECT_EQ(l[0], "db,sigma2,neg_zero,neg_h");
    EXPECT_EQ(l[2].substr(0, 8), "10,0.05,");
    std::vector<std::vector<double>> rows = {csv_row(l[1]), csv_row(l[2]), csv_row(l[3])};
    for (int k = 1; k < 3; ++k) {
        EXPECT_GE(rows[k][2], rows[k - 1][2]);
        EXPECT_GE(rows[k][3], rows[k - 1][3]);
    }
    const double ratio = rows[2][3] / rows[2][2];
    const double ideal = (1.0 + std::numbers::sqrt2) / 2.0;
    EXPECT_LE(std::abs(ratio - ideal), 0.05 * ideal);
    // Rerun is byte-identical.
    std::string first = slurp(path);
    ASSERT_EQ(run({"negativity-sweep", "--grid", "6,10,14", "--out", path}).code, 0);
    EXPECT_EQ(slurp(path), first);
    std::remove(path.c_str());
}

TEST(cli, sweep_log_negativity_columns) {
    auto r = run({"negativity-sweep", "--grid", "8", "--log-negativity"});
    auto l = lines(r.out);
    ASSERT_EQ(l.size(), 2u);
    EXPECT_EQ(l[0], "db,sigma2,neg_zero,neg_h,log_neg_zero,log_neg_h");
    auto row = csv_row(l[1]);
    EXPECT_NEAR(row[4], std::log(row[2]), 1e-9);
    EXPECT_NEAR(row[5], std::log(row[3]), 1e-9);
}

TEST(cli, sweep_errors) {
    EXPECT_EQ(run({"negativity-sweep", "--grid", "10,6"}).code, gkp::cli::kUsageError);
    EXPECT_EQ(run({"negativity-sweep", "--grid", "25"}).code, gkp::cli::kUsageError);
    EXPECT_EQ(run({"negativity-sweep", "--grid", "6,x"}).code, gkp::cli::kUsageError);
    EXPECT_EQ(run({"negativity-sweep", "--grid", "6", "--cell", "2.0"}).code, gkp::cli::kUsageError);
    EXPECT_EQ(run({"negativity-sweep", "--grid", "6", "--out", "/nonexistent-dir/x.csv"}).code,
              gkp::cli::kIoError);
}

TEST(cli, config_file_precedence) {
    std::string cfg = temp_path("prepare.cfg");
    {
        std::ofstream f(cfg);
        f << "# preparation defaults\nsigma2 = 0.02\nout=/dev/null\n";
    }
    auto r = run({"prepare", "--config", cfg});
    EXPECT_EQ(r.code, 0);
    EXPECT_NEAR(field(r.out, "sigma2"), 0.02, 1e-15);
    r = run({"prepare", "--config", cfg, "--sigma2", "0.01"});
    EXPECT_NEAR(field(r.out, "sigma2"), 0.01, 1e-15);
    r = run({"prepare", "--sigma2=0.03", "--config=" + cfg});
    EXPECT_NEAR(field(r.out, "sigma2"), 0.03, 1e-15);
    std::remove(cfg.c_str());
}

TEST(cli, config_file_errors) {
    EXPECT_EQ(run({"prepare", "--config", "/nonexistent-dir/none.cfg"}).code, gkp::cli::kIoError);
    std::string cfg = temp_path("bad.cfg");
    {
        std::ofstream f(cfg);
        f << "no_such_key=1\n";
    }
    EXPECT_EQ(run({"prepare", "--config", cfg}).code, gkp::cli::kUsageError);
    {
        std::ofstream f(cfg);
        f << "just words\n";
    }
    EXPECT_EQ(run({"prepare", "--config", cfg}).code, gkp::cli::kUsageError);
    std::remove(cfg.c_str());
}

TEST(cli, prepare_pi8_report) {
    auto r = run({"prepare", "--mode", "pi8", "--sigma2", "0.01", "--out", "/dev/null"});
    EXPECT_EQ(r.code, 0);
    EXPECT_GE(field(r.out, "overlap"), 0.99);
    EXPECT_NEAR(field(r.out, "probability"), 0.5, 1e-6);
    auto one = run({"prepare", "--outcomes", "1", "--out", "/dev/null"});
    EXPECT_GE(field(one.out, "overlap"), 0.99);
    EXPECT_EQ(run({"prepare", "--outcomes", "01"}).code, gkp::cli::kUsageError);
}

TEST(cli, prepare_codeword_dump_is_deterministic) {
    std::string a = temp_path("comb_a.txt"), b = temp_path("comb_b.txt");
    auto ra = run({"prepare", "--mode", "codeword", "--rounds", "4", "--outcomes", "0000", "--out", a});
    auto rb = run({"prepare", "--mode", "codeword", "--rounds", "4", "--outcomes", "0000", "--out", b});
    EXPECT_EQ(ra.code, 0);
    EXPECT_EQ(ra.out, rb.out);
    EXPECT_EQ(slurp(a), slurp(b));
    auto dump = lines(slurp(a));
    ASSERT_EQ(dump.size(), 5u);
    std::stringstream first(dump[0]);
    double c, re, im, w;
    first >> c >> re >> im >> w;
    EXPECT_FALSE(first.fail());
    EXPECT_GT(w, 0.0);
    EXPECT_GE(field(ra.out, "overlap"), 0.99);
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST(cli, prepare_codeword_seeded) {
    auto ra = run({"prepare", "--mode", "codeword", "--rounds", "5", "--seed", "42"});
    auto rb = run({"prepare", "--mode", "codeword", "--rounds", "5", "--seed", "42"});
    EXPECT_EQ(ra.code, 0);
    EXPECT_EQ(ra.out, rb.out);
    EXPECT_EQ(run({"prepare", "--mode", "codeword", "--rounds", "0"}).code, gkp::cli::kUsageError);
    EXPECT_EQ(run({"prepare", "--mode", "cat"}).code, gkp::cli::kUsageError);
}

TEST(cli, output_ignores_global_locale) {
    struct Comma : std::numpunct<char> {
        char do_decimal_point() const override { return ','; }
        char do_thousands_sep() const override { return '.'; }
        std::string do_grouping() const override { return "\3"; }
    };
    std::locale previous = std::locale::global(std::locale(std::locale::classic(), new Comma));
    auto ideal = run({"ideal", "h"});
    auto sweep = run({"negativity-sweep", "--grid", "10"});
    auto prep = run({"prepare", "--sigma2", "0.01", "--out", "/dev/null"});
    std::locale::global(previous);
    EXPECT_NE(ideal.out.find("N(h)=2.414213562373"), std::string::npos);
    EXPECT_NE(sweep.out.find("\n10,0.05,1.9034"), std::string::npos);
    EXPECT_NE(prep.out.find("sigma2=0.01 "), std::string::npos);
}
