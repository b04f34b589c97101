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

#include <cmath>
#include <sstream>

#include "ote/constants.hpp"
#include "ote/em/rates.hpp"
#include "ote/errors.hpp"

namespace ote::em {

using namespace ote::constants;

double vacuum_rate_prefactor(double omega) {
    return omega * omega * omega / (3.0 * pi * hbar * c * c * c * epsilon_0);
}

FieldCorrelators field_correlators(const CorrelationMatrices& alpha, const OteEnvironment& env) {
    const double n1 = photon_number(alpha.omega, env.slab.temperature);
    const double n2 = photon_number(alpha.omega, env.blackbody_temperature);
    const double g0 = vacuum_rate_prefactor(alpha.omega);
    return {g0 * ((1.0 + n1) * alpha.alpha1 + (1.0 + n2) * alpha.alpha2),
            g0 * (n1 * alpha.alpha1 + n2 * alpha.alpha2)};
}

Eigen::Matrix3cd field_correlators(double omega, FrequencySign sign, const Position& pos_i,
                                   const Position& pos_j, const OteEnvironment& env) {
    const auto c = field_correlators(correlation_matrices(omega, pos_i, pos_j, env), env);
    return sign == FrequencySign::positive ? c.plus : c.minus;
}

TransitionRates transition_rates(const Eigen::Vector3d& dipole_i, const Eigen::Vector3d& dipole_j,
                                 double omega, const Position& pos_i, const Position& pos_j,
                                 const OteEnvironment& env) {
    const auto alpha = correlation_matrices(omega, pos_i, pos_j, env);
    const auto c = field_correlators(alpha, env);
    const Eigen::Vector3cd di = dipole_i.cast<std::complex<double>>();
    const Eigen::Vector3cd dj = dipole_j.cast<std::complex<double>>();
    TransitionRates out;
    // sum_lm c_lm d_i^l d_j^m
    out.gamma_plus = di.transpose() * c.plus * dj;
    out.gamma_minus = di.transpose() * c.minus * dj;
    const double n1 = photon_number(omega, env.slab.temperature);
    const double n2 = photon_number(omega, env.blackbody_temperature);
    out.error_estimate = vacuum_rate_prefactor(omega) * dipole_i.norm() * dipole_j.norm() *
                         ((1.0 + n1) * alpha.error_alpha1 + (1.0 + n2) * alpha.error_alpha2);
    return out;
}

EffectiveTemperature effective_temperature(double gamma_plus, double gamma_minus, double omega) {
    if (!(gamma_plus > gamma_minus) || gamma_minus < 0.0) {
        std::ostringstream msg;
        msg << "effective temperature undefined for gamma_plus = " << gamma_plus
            << ", gamma_minus = " << gamma_minus << " (need gamma_plus > gamma_minus >= 0)";
        throw InvertedRatesError(msg.str());
    }
    if (gamma_minus == 0.0) return EffectiveTemperature::from_kelvin(0.0);
    // ln(1 + 1/n_env) with n_env = gm / (gp - gm) is ln(gp / gm).
    return EffectiveTemperature::from_beta(std::log(gamma_plus / gamma_minus) / (hbar * omega));
}

double dipole_coupling(const Eigen::Vector3d& dipole_i, const Eigen::Vector3d& dipole_j, double omega,
                       const Position& pos_i, const Position& pos_j, const OteEnvironment&,
                       std::optional<double> override_value) {
    if (override_value) return *override_value;
    const Eigen::Vector3d sep(pos_i.x - pos_j.x, pos_i.y - pos_j.y, pos_i.z - pos_j.z);
    const double r = sep.norm();
    if (!(r > 0.0)) throw GeometryError("dipole coupling: coincident emitter positions");
    const Eigen::Vector3d u = sep / r;
    const double k = omega / c;
    const double kr = k * r;
    // Re G0 = [cos(kr) A + sin(kr) B] / (4 pi r), split into transverse and longitudinal parts.
    const double cs = std::cos(kr), sn = std::sin(kr);
    const double g_t = (cs * (1.0 - 1.0 / (kr * kr)) - sn / kr) / (4.0 * pi * r);
    const double g_l = (cs * (-1.0 + 3.0 / (kr * kr)) + 3.0 * sn / kr) / (4.0 * pi * r);
    const double contraction = g_t * dipole_i.dot(dipole_j) + g_l * dipole_i.dot(u) * dipole_j.dot(u);
    return -k * k * contraction / (epsilon_0 * hbar);
}

} // namespace ote::em
