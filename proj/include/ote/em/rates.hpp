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

// rates.hpp - transition rates, effective temperatures, dipole-dipole coupling

#pragma once

#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "ote/em/correlation.hpp"
#include "ote/em/environment.hpp"
#include "ote/temperature.hpp"

namespace ote::em {

/// Free-space spontaneous emission prefactor omega^3 / (3 pi hbar c^3 eps0), units 1/(s C^2 m^2).
double vacuum_rate_prefactor(double omega);

enum class FrequencySign { positive, negative };

/// c_lm^{ij}(+-omega): contracted with two dipoles (C m) gives a rate in 1/s.
struct FieldCorrelators {
    Eigen::Matrix3cd plus;
    Eigen::Matrix3cd minus;
};

FieldCorrelators field_correlators(const CorrelationMatrices& alpha, const OteEnvironment& env);
Eigen::Matrix3cd field_correlators(double omega, FrequencySign sign, const Position& pos_i,
                                   const Position& pos_j, const OteEnvironment& env);

struct TransitionRates {
    std::complex<double> gamma_plus;  // emission, 1/s
    std::complex<double> gamma_minus; // absorption, 1/s
    double lambda = 0.0;              // dipole-dipole coupling, rad/s (filled on request)
    double error_estimate = 0.0;      // absolute, 1/s, on gamma_plus
};

TransitionRates transition_rates(const Eigen::Vector3d& dipole_i, const Eigen::Vector3d& dipole_j,
                                 double omega, const Position& pos_i, const Position& pos_j,
                                 const OteEnvironment& env);

/// T_env from gamma_minus / gamma_plus = exp(-hbar omega beta). gamma_minus = 0 gives T = 0.
/// Throws InvertedRatesError when gamma_plus <= gamma_minus.
EffectiveTemperature effective_temperature(double gamma_plus, double gamma_minus, double omega);

/// Real part of the free-space resonant dipole-dipole Green-function coupling, or the override.
/// Throws GeometryError for coincident positions (unless overridden).
double dipole_coupling(const Eigen::Vector3d& dipole_i, const Eigen::Vector3d& dipole_j, double omega,
                       const Position& pos_i, const Position& pos_j, const OteEnvironment& env,
                       std::optional<double> override_value = std::nullopt);

} // namespace ote::em
