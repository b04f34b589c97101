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

// network.hpp - two-level working fluid plus optional three-level auxiliary emitter

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ote/em/environment.hpp"

namespace ote::lindblad {

using DensityMatrix = Eigen::MatrixXcd;

struct TwoLevelEmitter {
    double omega = 0.0; // rad/s
    Eigen::Vector3d dipole = Eigen::Vector3d::Zero(); // C m
    em::Position position;
};

/// Levels |0> < |1> < |2>. high: |0>-|2>, resonant: |1>-|2>, low: |0>-|1>.
struct ThreeLevelEmitter {
    double omega_high = 0.0;     // rad/s
    double omega_resonant = 0.0; // rad/s
    Eigen::Vector3d dipole_high = Eigen::Vector3d::Zero();
    Eigen::Vector3d dipole_resonant = Eigen::Vector3d::Zero();
    Eigen::Vector3d dipole_low = Eigen::Vector3d::Zero();
    em::Position position;

    double omega_low() const { return omega_high - omega_resonant; }
};

enum class TransitionId { working_fluid, aux_high, aux_resonant, aux_low };

std::string to_string(TransitionId id);

struct Transition {
    TransitionId id;
    int emitter; // 0 = working fluid, 1 = auxiliary
    double omega;
    Eigen::Vector3d dipole;
    em::Position position;
    Eigen::MatrixXcd lowering; // sigma^- on the composite space
};

/// Product space ordered working fluid (g, e) x auxiliary (|0>, |1>, |2>).
struct EmitterNetwork {
    TwoLevelEmitter working_fluid;
    std::optional<ThreeLevelEmitter> auxiliary;

    int dimension() const { return auxiliary ? 6 : 2; }
    std::vector<Transition> transitions() const;
    Transition transition(TransitionId id) const;

    /// Throws ConfigError on non-positive frequencies or omega_resonant >= omega_high.
    void validate() const;
};

/// |g><e|-type lowering operator on the working fluid, identity on the rest.
Eigen::MatrixXcd working_fluid_lowering(const EmitterNetwork& network);

/// Partial trace onto the working fluid (2x2) or the auxiliary emitter (3x3).
Eigen::MatrixXcd reduced_working_fluid(const EmitterNetwork& network, const DensityMatrix& rho);
Eigen::MatrixXcd reduced_auxiliary(const EmitterNetwork& network, const DensityMatrix& rho);

} // namespace ote::lindblad
