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

// steady_state.hpp - kernel extraction, density-matrix checks, emitter temperatures

#pragma once

#include <string>

#include "ote/lindblad/network.hpp"
#include "ote/lindblad/superoperator.hpp"
#include "ote/temperature.hpp"

namespace ote::lindblad {

struct SteadyStateOptions {
    double rank_tolerance = 1e-9;     // relative to the largest singular value
    double residual_tolerance = 1e-10; // ||L vec(rho)|| / ||L||
};

/// Unique normalised fixed point of L. Throws DegenerateSteadyStateError when the numerical
/// kernel is not one-dimensional, InvalidStateError when the result is not a valid state.
DensityMatrix steady_state(const Liouvillian& liouvillian, const SteadyStateOptions& options = {});

struct StateTolerances {
    double hermiticity = 1e-12;
    double trace = 1e-10;
    double positivity = 1e-10;
};

/// Throws InvalidStateError naming the violated property; `context` is prefixed to the message.
void check_density_matrix(const DensityMatrix& rho, const std::string& context = "density matrix",
                          const StateTolerances& tol = {});

/// Signed-beta Gibbs temperature of a two-level reduced state (basis g, e).
/// Throws NonGibbsStateError when |rho_ge| exceeds the threshold.
EffectiveTemperature emitter_temperature(const Eigen::MatrixXcd& reduced_two_level, double omega,
                                         double coherence_threshold = 1e-6);

/// Temperature of a transition of the network from the composite state. For an auxiliary
/// transition the two levels involved are taken from the reduced three-level state.
EffectiveTemperature emitter_temperature(const EmitterNetwork& network, const DensityMatrix& rho,
                                         TransitionId transition, double coherence_threshold = 1e-6);

/// Gibbs state of a diagonal Hamiltonian (joules) at temperature T (kelvin), T = 0 gives the ground state.
DensityMatrix gibbs_state(const Eigen::VectorXd& energies, double kelvin);

} // namespace ote::lindblad
