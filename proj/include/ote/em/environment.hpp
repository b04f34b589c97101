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

// environment.hpp - description of the slab + blackbody reservoir

#pragma once

#include <complex>
#include <variant>
#include <vector>

namespace ote::em {

struct Vacuum {};

/// eps(w) = eps_inf (wL^2 - w^2 - i g w) / (wT^2 - w^2 - i g w)
struct DrudeLorentz {
    double eps_inf = 1.0;
    double omega_L = 0.0; // rad/s
    double omega_T = 0.0; // rad/s
    double gamma = 0.0;   // rad/s
};

/// Linear interpolation in real and imaginary parts, no extrapolation.
struct Tabulated {
    std::vector<double> omega;                // strictly increasing, rad/s
    std::vector<std::complex<double>> values; // Im >= 0
};

using PermittivityModel = std::variant<Vacuum, DrudeLorentz, Tabulated>;

struct SlabGeometry {
    double thickness = 1e-6;   // m
    double temperature = 300;  // K, slab temperature T1
};

enum class AngularMode {
    quadrature, // adaptive quadrature of the in-plane angle
    bessel,     // closed-form Bessel moments
};

struct QuadratureConfig {
    double rel_tol = 1e-8;
    int max_subdivisions = 4000;
    /// Evanescent integration runs up to cutoff_multiplier * omega/c ...
    double cutoff_multiplier = 200.0;
    /// ... or further, until exp(-kappa (z_i + z_j)) has dropped by this many e-folds.
    double decay_efolds = 40.0;
    AngularMode angular = AngularMode::quadrature;
};

struct OteEnvironment {
    SlabGeometry slab;
    PermittivityModel material;
    double blackbody_temperature = 300; // K, T2
    QuadratureConfig quadrature;

    bool is_equilibrium() const { return slab.temperature == blackbody_temperature; }
};

/// Throws ConfigError naming the violated invariant.
void validate(const PermittivityModel& model);
void validate(const OteEnvironment& env);

std::complex<double> permittivity(const PermittivityModel& model, double omega);

/// In-plane coordinates x, y and height z above the slab surface (m).
struct Position {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

} // namespace ote::em
