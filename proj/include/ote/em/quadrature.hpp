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

// quadrature.hpp - vector-valued globally adaptive Gauss-Kronrod (7/15) integration

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace ote::em {

template <int N>
using QVector = Eigen::Matrix<double, N, 1>;

/// Components [offset, offset + size) converge when
/// |error| <= max(abs_tol, rel_tol * |value|) in the Euclidean norm.
struct ToleranceBlock {
    int offset = 0;
    int size = 0;
    double rel_tol = 1e-8;
    double abs_tol = 0.0;
};

template <int N>
struct QuadratureResult {
    QVector<N> value = QVector<N>::Zero();
    QVector<N> error = QVector<N>::Zero();
    int intervals = 0;
    int evaluations = 0;
    bool converged = false;
};

namespace detail {

// Kronrod 15-point nodes (positive half) and weights; every other node is a Gauss 7-point node.
inline constexpr std::array<double, 8> kronrod_x = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_w = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gauss_w = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <int N>
struct Interval {
    double a, b;
    QVector<N> value;
    QVector<N> error;
};

template <int N, class F>
Interval<N> gauss_kronrod_15(F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    QVector<N> kronrod = QVector<N>::Zero();
    QVector<N> gauss = QVector<N>::Zero();
    const QVector<N> fc = f(center);
    kronrod += kronrod_w[7] * fc;
    gauss += gauss_w[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kronrod_x[j];
        const QVector<N> sum = f(center - dx) + f(center + dx);
        kronrod += kronrod_w[j] * sum;
        if (j % 2 == 1) gauss += gauss_w[j / 2] * sum;
    }
    return {a, b, half * kronrod, (half * (kronrod - gauss)).cwiseAbs()};
}

} // namespace detail

/// Integrates f over [breakpoints.front(), breakpoints.back()] starting from the given
/// partition and bisecting the interval with the largest tolerance-normalised error.
template <int N, class F>
QuadratureResult<N> integrate_adaptive(F&& f, std::span<const double> breakpoints,
                                       std::span<const ToleranceBlock> blocks, int max_subdivisions) {
    std::vector<detail::Interval<N>> parts;
    parts.reserve(static_cast<std::size_t>(max_subdivisions) + breakpoints.size());
    QuadratureResult<N> out;
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        if (breakpoints[i] > breakpoints[i - 1]) {
            parts.push_back(detail::gauss_kronrod_15<N>(f, breakpoints[i - 1], breakpoints[i]));
            out.evaluations += 15;
        }
    }

    auto tolerances = [&](const QVector<N>& value) {
        std::vector<double> tol(blocks.size());
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const auto& blk = blocks[b];
            tol[b] = std::max(blk.abs_tol, blk.rel_tol * value.segment(blk.offset, blk.size).norm());
            if (tol[b] <= 0.0) tol[b] = std::numeric_limits<double>::min();
        }
        return tol;
    };

    while (true) {
        out.value.setZero();
        out.error.setZero();
        for (const auto& p : parts) {
            out.value += p.value;
            out.error += p.error;
        }
        out.intervals = static_cast<int>(parts.size());
        const auto tol = tolerances(out.value);
        bool done = true;
        for (std::size_t b = 0; b < blocks.size(); ++b)
            if (out.error.segment(blocks[b].offset, blocks[b].size).norm() > tol[b]) done = false;
        if (done) {
            out.converged = true;
            return out;
        }
        if (static_cast<int>(parts.size()) >= max_subdivisions) return out;

        std::size_t worst = 0;
        double worst_score = -1.0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            double score = 0.0;
            for (std::size_t b = 0; b < blocks.size(); ++b)
                score += parts[i].error.segment(blocks[b].offset, blocks[b].size).norm() / tol[b];
            if (score > worst_score) {
                worst_score = score;
                worst = i;
            }
        }
        const auto target = parts[worst];
        const double mid = 0.5 * (target.a + target.b);
        if (!(mid > target.a && mid < target.b)) return out; // interval at machine resolution
        parts[worst] = detail::gauss_kronrod_15<N>(f, target.a, mid);
        parts.push_back(detail::gauss_kronrod_15<N>(f, mid, target.b));
        out.evaluations += 30;
    }
}

} // namespace ote::em
