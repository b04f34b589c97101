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

#include <cmath>

#include <doctest.h>

#include "ote/constants.hpp"
#include "ote/em/quadrature.hpp"

using namespace ote::em;

TEST_CASE("Gauss-Kronrod integrates smooth functions to machine precision") {
    auto f = [](double x) {
        QVector<2> v;
        v << std::sin(x), std::exp(-x);
        return v;
    };
    const double pts[] = {0.0, ote::constants::pi};
    const ToleranceBlock b{0, 2, 1e-12, 0.0};
    const auto r = integrate_adaptive<2>(f, pts, std::span(&b, 1), 100);
    CHECK(r.converged);
    CHECK(r.value[0] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(r.value[1] == doctest::Approx(1.0 - std::exp(-ote::constants::pi)).epsilon(1e-14));
}

TEST_CASE("narrow Lorentzian is resolved once bracketed") {
    const double g = 1e-9, x0 = 0.3;
    auto f = [&](double x) {
        QVector<1> v;
        v << g / ((x - x0) * (x - x0) + g * g);
        return v;
    };
    const double pts[] = {0.0, x0 - 100 * g, x0, x0 + 100 * g, 1.0};
    const ToleranceBlock b{0, 1, 1e-10, 0.0};
    const auto r = integrate_adaptive<1>(f, pts, std::span(&b, 1), 2000);
    CHECK(r.converged);
    const double exact = std::atan((1.0 - x0) / g) + std::atan(x0 / g);
    CHECK(r.value[0] == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("each tolerance block is honoured separately") {
    // a tiny second component must still meet its relative tolerance
    auto f = [](double x) {
        QVector<2> v;
        v << 1e6 * std::cos(x), 1e-6 * std::exp(3 * x);
        return v;
    };
    const double pts[] = {0.0, 2.0};
    const ToleranceBlock b[2] = {{0, 1, 1e-12, 0.0}, {1, 1, 1e-12, 0.0}};
    const auto r = integrate_adaptive<2>(f, pts, b, 500);
    CHECK(r.converged);
    CHECK(r.value[1] == doctest::Approx(1e-6 * (std::exp(6.0) - 1.0) / 3.0).epsilon(1e-12));
}

TEST_CASE("non-convergence is reported, not hidden") {
    auto f = [](double x) {
        QVector<1> v;
        v << 1.0 / std::sqrt(std::abs(x - 0.5) + 1e-300);
        return v;
    };
    const double pts[] = {0.0, 1.0};
    const ToleranceBlock b{0, 1, 1e-14, 0.0};
    const auto r = integrate_adaptive<1>(f, pts, std::span(&b, 1), 20);
    CHECK_FALSE(r.converged);
    CHECK(r.intervals <= 21);
    CHECK(r.error[0] > 0.0);
}
