// Copyright 2026 The temporal-cert Authors
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

#include "tcert/serialize.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "oracles.hpp"
#include "tcert/random.hpp"

namespace tcert::io {
namespace {

TEST(Dump, FloatsKeepSeventeenDigits) {
    const double x = 0.1 + 0.2;
    const std::string s = dump(json(x), -1);
    EXPECT_EQ(s, "0.30000000000000004");
    EXPECT_EQ(json::parse(s).get<double>(), x);
}

TEST(Dump, IntegralFloatsAndSpecials) {
    EXPECT_EQ(dump(json(2.0), -1), "2.0");
    EXPECT_EQ(dump(json(-0.0), -1), "0.0");
    EXPECT_EQ(dump(json(std::numeric_limits<double>::quiet_NaN()), -1), "null");
    EXPECT_EQ(dump(json(3), -1), "3");
}

TEST(Dump, SortedKeysAndFlatArrays) {
    const json j = {{"b", 1}, {"a", json::array({1.5, 2.5})}};
    EXPECT_EQ(dump(j, -1), "{\"a\":[1.5,2.5],\"b\":1}");
    EXPECT_EQ(dump(j), "{\n  \"a\": [1.5, 2.5],\n  \"b\": 1\n}\n");
}

TEST(Dump, RandomRoundTrip) {
    Rng rng = make_rng(41);
    std::normal_distribution<double> g(0.0, 1e3);
    for (int k = 0; k < 1000; ++k) {
        const double x = g(rng) * std::pow(10.0, k % 40 - 20);
        EXPECT_EQ(json::parse(dump(json(x), -1)).get<double>(), x);
    }
}

TEST(Dump, Deterministic) {
    const auto b = ncycle::certificate_bundle(5);
    EXPECT_EQ(dump(to_json(b)), dump(to_json(ncycle::certificate_bundle(5))));
}

TEST(Matrices, ComplexPairs) {
    const CMatrix m{{complex{1, 2}, complex{0, -1}}, {complex{0, 1}, complex{3, 0}}};
    const json j = to_json(m);
    EXPECT_EQ(dump(j[0][0], -1), "[1.0,2.0]");
    const CMatrix back = cmatrix_from_json(j);
    EXPECT_EQ(back, m);
    EXPECT_EQ(cmatrix_from_json(json::parse("[[1, 0], [0, 1]]")), CMatrix::identity(2));
}

TEST(Matrices, SymRoundTrip) {
    Rng rng = make_rng(42);
    const SymMatrix s(oracle::random_symmetric(rng, 6));
    EXPECT_EQ(sym_from_json(json::parse(dump(to_json(s)))), s);
    EXPECT_THROW(sym_from_json(json::parse("[[1, 2], [3]]")), DimensionError);
    EXPECT_THROW(sym_from_json(json::array()), std::invalid_argument);
}

TEST(Problem, RoundTrip) {
    const auto p = ncycle::build(7).problem();
    const json j = problem_to_json(p);
    EXPECT_EQ(j.at("schema").get<int>(), kSchemaVersion);
    const auto q = problem_from_json(json::parse(dump(j)));
    EXPECT_EQ(q.objective(), p.objective());
    EXPECT_THROW(problem_from_json(json::parse(R"({"dim": 3})")), std::invalid_argument);
    json bad = j;
    bad["dim"] = 4;
    EXPECT_THROW(problem_from_json(bad), DimensionError);
}

TEST(Pdm, Fields) {
    const json j = to_json(qsim::pseudo_bell(1));
    EXPECT_EQ(j.at("events").get<int>(), 2);
    EXPECT_NEAR(j.at("trace_norm").get<double>(), 2.0, 1e-12);
    EXPECT_EQ(j.at("eigenvalues").size(), 4u);
}

TEST(Csv, SweepHeaderAndRows) {
    const auto sw = certify::channel_sweep(8, 8);
    const std::string csv = sweep_to_csv(sw);
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, "u,v,s3_max,a1x,a1y,a1z,a2x,a2y,a2z,a3x,a3y,a3z");
    int rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 11);
    }
    EXPECT_EQ(rows, 64);
}

TEST(Report, OmitsSweepPoints) {
    certify::ReportOptions o;
    o.grid_u = 8;
    o.grid_v = 8;
    const json j = to_json(certify::full_report(o));
    EXPECT_FALSE(j.at("sweep").contains("points"));
    EXPECT_FALSE(j.at("verdict").get<bool>());
}

}  // namespace
}  // namespace tcert::io
