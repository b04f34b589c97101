// Copyright 2026 The ote-otto Authors
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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "ote/errors.hpp"
#include "ote/io/config.hpp"
#include "ote/io/results.hpp"

using namespace ote;
using namespace ote::io;

namespace {

ResultTable sample() {
    ResultTable t;
    t.columns = {{"k", "1"}, {"W_wf", "J"}, {"T_env_b", "K"}};
    t.add_row({0.1, -2.8184357026382731e-23, 313.04396742});
    t.add_row({1.0 / 3.0, 5e-324, std::numeric_limits<double>::quiet_NaN()});
    t.add_row({1.0, 0.0, std::numeric_limits<double>::infinity()});
    t.set_metadata("command", "cycle");
    t.set_metadata("note", "a, \"quoted\" value");
    return t;
}

bool same_bits(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

void check_identical(const ResultTable& a, const ResultTable& b) {
    REQUIRE(a.columns.size() == b.columns.size());
    for (std::size_t i = 0; i < a.columns.size(); ++i) {
        CHECK(a.columns[i].name == b.columns[i].name);
        CHECK(a.columns[i].unit == b.columns[i].unit);
    }
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t r = 0; r < a.rows.size(); ++r)
        for (std::size_t c = 0; c < a.columns.size(); ++c) CHECK(same_bits(a.rows[r][c], b.rows[r][c]));
    CHECK(a.metadata == b.metadata);
}

std::string strip_timestamp(std::string s) {
    std::istringstream in(s);
    std::string line, out;
    while (std::getline(in, line))
        if (line.find("timestamp") == std::string::npos) out += line + "\n";
    return out;
}

} // namespace

TEST_CASE("csv round trip is bit-identical") {
    const auto t = sample();
    std::stringstream ss;
    write_csv(t, ss);
    check_identical(t, read_csv(ss));
}

TEST_CASE("json round trip is bit-identical") {
    const auto t = sample();
    std::stringstream ss;
    write_json(t, ss);
    check_identical(t, read_json(ss));
}

TEST_CASE("an empty table still carries its header") {
    ResultTable t;
    t.columns = {{"omega", "rad/s"}, {"gamma_plus", "1/s"}};
    std::stringstream ss;
    write_csv(t, ss, 17, false);
    const std::string text = ss.str();
    CHECK(text.find("omega") != std::string::npos);
    CHECK(text.find("gamma_plus") != std::string::npos);
    const auto back = read_csv(ss);
    CHECK(back.rows.empty());
    CHECK(back.columns.size() == 2);
}

TEST_CASE("rows must match the columns") {
    ResultTable t;
    t.columns = {{"a", "1"}};
    CHECK_THROWS_AS(t.add_row({1.0, 2.0}), DimensionError);
    t.add_row({4.0});
    CHECK(t.at(0, "a") == 4.0);
    CHECK_THROWS(t.column_index("b"));
}

TEST_CASE("identical runs differ only in the timestamp") {
    const auto cfg = parse_config("");
    auto a = sample(), b = sample();
    stamp_metadata(a, cfg, "cycle");
    stamp_metadata(b, cfg, "cycle");
    REQUIRE(a.find_metadata("config_digest"));
    CHECK(*a.find_metadata("config_digest") == config_digest(cfg));
    CHECK(a.find_metadata("code_version"));
    CHECK(a.find_metadata("timestamp"));
    std::stringstream sa, sb;
    write_csv(a, sa);
    write_csv(b, sb);
    CHECK(strip_timestamp(sa.str()) == strip_timestamp(sb.str()));
}

TEST_CASE("files are written and unwritable paths reported") {
    const auto path = (std::filesystem::temp_directory_path() / "ote_results_test.json").string();
    write_results(sample(), Format::json, path);
    std::ifstream in(path);
    check_identical(sample(), read_json(in));
    std::remove(path.c_str());
    CHECK_THROWS_AS(write_results(sample(), Format::csv, "/nonexistent/dir/out.csv"), IoError);
}
