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

// support.hpp - fixtures shared by the unit and acceptance suites

#pragma once

#include <complex>
#include <random>

#include <Eigen/Dense>

#include "ote/em/environment.hpp"
#include "ote/lindblad/network.hpp"

namespace ote::test {

inline em::DrudeLorentz sic() { return {6.7, 1.827e14, 1.495e14, 0.9e12}; }

inline constexpr double omega_s = 1.495e14;
inline constexpr double omega_a = 0.1 * omega_s;

inline em::OteEnvironment sic_environment(double t1 = 700.0, double t2 = 200.0, double thickness = 1e-6) {
    em::OteEnvironment env;
    env.material = sic();
    env.slab.thickness = thickness;
    env.slab.temperature = t1;
    env.blackbody_temperature = t2;
    return env;
}

inline lindblad::EmitterNetwork tls(double omega = omega_a, double z = 26e-6, double d = 1e-29) {
    lindblad::EmitterNetwork n;
    n.working_fluid = {omega, Eigen::Vector3d(d, 0, 0), {0, 0, z}};
    return n;
}

/// Working fluid plus auxiliary 1 um away along y, all dipoles along x.
inline lindblad::EmitterNetwork composite(double z = 26e-6, double separation = 1e-6, double d = 1e-29) {
    auto n = tls(omega_a, z, d);
    lindblad::ThreeLevelEmitter m;
    m.omega_high = omega_s;
    m.omega_resonant = omega_a;
    m.dipole_high = m.dipole_resonant = m.dipole_low = Eigen::Vector3d(d, 0, 0);
    m.position = {0, separation, z};
    n.auxiliary = m;
    return n;
}

inline Eigen::MatrixXcd random_matrix(std::mt19937& rng, int d) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = {g(rng), g(rng)};
    return m;
}

inline Eigen::MatrixXcd random_density(std::mt19937& rng, int d) {
    const Eigen::MatrixXcd a = random_matrix(rng, d);
    Eigen::MatrixXcd rho = a * a.adjoint();
    return rho / rho.trace();
}

inline Eigen::MatrixXcd random_hermitian(std::mt19937& rng, int d) {
    const Eigen::MatrixXcd a = random_matrix(rng, d);
    return 0.5 * (a + a.adjoint());
}

} // namespace ote::test
