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

// rate_table.hpp - tabulated single-emitter rates for time-dependent strokes

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "ote/em/environment.hpp"

namespace ote::cycle {

/// Monotone cubic (Fritsch-Carlson) interpolant.
class Pchip {
public:
    Pchip() = default;
    Pchip(std::vector<double> x, std::vector<double> y);
    double operator()(double x) const;
    bool empty() const { return x_.empty(); }

private:
    std::vector<double> x_, y_, d_;
};

/// gamma^+(omega), gamma^-(omega) of one transition sampled on a log-spaced grid and
/// interpolated in log-log space (linearly in the rates when a sample is not positive).
class RateTable {
public:
    RateTable() = default;
    RateTable(std::vector<double> omega, std::vector<double> gamma_plus, std::vector<double> gamma_minus);

    static RateTable build(const Eigen::Vector3d& dipole, const em::Position& position, const em::OteEnvironment& env,
                           double omega_min, double omega_max, int points = 64);

    /// Rates identically zero on [omega_min, omega_max].
    static RateTable zero(double omega_min, double omega_max);

    double gamma_plus(double omega) const;
    double gamma_minus(double omega) const;
    double omega_min() const { return omega_.front(); }
    double omega_max() const { return omega_.back(); }
    const std::vector<double>& omega() const { return omega_; }

    /// Largest relative deviation, at the dropped nodes, between these samples and the
    /// interpolant built from every other node. Bounds the error of the half-density table.
    double interpolation_error() const { return interpolation_error_; }

private:
    double eval(const Pchip& p, bool logarithmic, double omega) const;
    void check_range(double omega) const;

    std::vector<double> omega_, gp_, gm_;
    Pchip plus_, minus_;
    bool log_plus_ = true, log_minus_ = true;
    double interpolation_error_ = 0.0;
};

} // namespace ote::cycle
