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

// correlation.hpp - normalised field correlation matrices alpha_1, alpha_2

#pragma once

#include <Eigen/Dense>

#include "ote/em/environment.hpp"

namespace ote::em {

/// Dimensionless 3x3 matrices splitting the field correlations into the part
/// sourced by the slab (alpha1, weighted by the slab temperature) and the part
/// sourced by the surrounding blackbody (alpha2). In vacuum alpha2(R, R) = I.
struct CorrelationMatrices {
    Eigen::Matrix3cd alpha1 = Eigen::Matrix3cd::Zero();
    Eigen::Matrix3cd alpha2 = Eigen::Matrix3cd::Zero();
    double omega = 0.0;
    Position pos_i;
    Position pos_j;
    /// Frobenius-norm error estimates, including the evanescent tail remainder.
    double error_alpha1 = 0.0;
    double error_alpha2 = 0.0;
    /// Estimated evanescent contribution beyond the integration cutoff.
    double tail_alpha1 = 0.0;
};

/// Requires z_i, z_j > 0 (vacuum side of the slab surface at z = 0).
/// Throws ConvergenceError when the quadrature does not reach the configured tolerance.
CorrelationMatrices correlation_matrices(double omega, const Position& pos_i, const Position& pos_j,
                                         const OteEnvironment& env);

/// Angular moments <exp(i u cos(phi - phi_r)) f(phi)> over the in-plane angle for
/// f in {1, cos^2, sin^2, cos sin, cos, sin}; exposed for cross-validation.
struct AngularMoments {
    std::complex<double> one, cc, ss, cs, c, s;
};
AngularMoments angular_moments(double u, double phi_r, AngularMode mode);

} // namespace ote::em
