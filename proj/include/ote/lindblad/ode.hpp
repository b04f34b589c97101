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

// ode.hpp - Dormand-Prince 5(4) with a fourth-order continuous extension

#pragma once

#include <cstddef>
#include <functional>

#include <Eigen/Dense>

namespace ote::lindblad {

using OdeRhs = std::function<void(double t, const Eigen::VectorXcd& y, Eigen::VectorXcd& dydt)>;

struct OdeOptions {
    double rtol = 1e-9;
    double atol = 1e-9;
    double initial_step = 0.0;          // 0 selects a step from the initial derivative
    double max_step = 0.0;              // 0 means unbounded
    double min_step_relative = 1e-13;   // underflow threshold relative to the span
    std::size_t max_steps = 5'000'000;
};

/// One accepted step with its interpolant; evaluate(t) is valid for t in [t0, t0 + h].
struct DenseStep {
    double t0 = 0.0;
    double h = 0.0;
    Eigen::VectorXcd r1, r2, r3, r4, r5;

    Eigen::VectorXcd evaluate(double t) const;
    double t1() const { return t0 + h; }
};

struct OdeStats {
    std::size_t accepted = 0;
    std::size_t rejected = 0;
    std::size_t evaluations = 0;
};

using StepObserver = std::function<void(const DenseStep& step, const Eigen::VectorXcd& y1)>;

/// Integrates from t0 to t1 (t1 > t0). Throws StiffnessError on step-size underflow or when
/// max_steps is exhausted; the message carries the time reached.
Eigen::VectorXcd dormand_prince(const OdeRhs& rhs, double t0, double t1, const Eigen::VectorXcd& y0,
                                const OdeOptions& options, const StepObserver& observer = {},
                                OdeStats* stats = nullptr);

} // namespace ote::lindblad
