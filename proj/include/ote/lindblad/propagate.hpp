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

// propagate.hpp - time evolution of density matrices under a (time-dependent) Liouvillian

#pragma once

#include <functional>
#include <vector>

#include "ote/lindblad/ode.hpp"
#include "ote/lindblad/steady_state.hpp"
#include "ote/lindblad/superoperator.hpp"

namespace ote::lindblad {

using Generator = std::function<Liouvillian(double t)>;

struct PropagateOptions {
    double tol = 1e-9;               // absolute and relative
    double trace_drift = 1e-8;       // allowed |tr rho - 1| along the trajectory
    std::vector<double> output_times; // empty: every accepted step
};

struct Trajectory {
    std::vector<double> times;
    std::vector<DensityMatrix> states;
    OdeStats stats;
};

/// Emitted states are checked, never renormalised: trace drift beyond the bound throws
/// InvalidStateError, step-size underflow throws StiffnessError.
Trajectory propagate(const Generator& generator, const DensityMatrix& rho0, double t0, double t1,
                     const PropagateOptions& options = {});

Trajectory propagate(const Liouvillian& constant, const DensityMatrix& rho0, double t0, double t1,
                     const PropagateOptions& options = {});

} // namespace ote::lindblad
