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
#include "ote/em/scattering.hpp"
#include "ote/errors.hpp"

namespace ote::em {

std::complex<double> decaying_sqrt(std::complex<double> x) {
    std::complex<double> s = std::sqrt(x);
    if (s.imag() < 0.0) s = -s;
    return s;
}

namespace {

struct NormalWavevectors {
    std::complex<double> kz;
    std::complex<double> kzm;
};

NormalWavevectors normal_wavevectors(double k, double omega, std::complex<double> eps) {
    const double k0 = omega / constants::c;
    return {decaying_sqrt(std::complex<double>(k0 * k0 - k * k, 0.0)),
            decaying_sqrt(eps * (k0 * k0) - k * k)};
}

// Fresnel coefficient as (a - b) / (a + b).
void fresnel_parts(Polarization p, const NormalWavevectors& w, std::complex<double> eps, std::complex<double>& a,
                   std::complex<double>& b) {
    a = p == Polarization::TE ? w.kz : eps * w.kz;
    b = w.kzm;
}

// exp(x) - 1 without cancellation for small |x|.
std::complex<double> expm1(std::complex<double> x) {
    const double s = std::sin(0.5 * x.imag());
    return {std::expm1(x.real()) * std::cos(x.imag()) - 2.0 * s * s, std::exp(x.real()) * std::sin(x.imag())};
}

const char* name(Polarization p) { return p == Polarization::TE ? "TE" : "TM"; }

SlabCoefficients slab_from_normal(Polarization p, const NormalWavevectors& w, double omega,
                                  std::complex<double> eps, double thickness) {
    std::complex<double> a, b;
    fresnel_parts(p, w, eps, a, b);
    const std::complex<double> i(0.0, 1.0);
    // With r = (a - b)/(a + b) and E = exp(2 i k_zm d) - 1:
    // 1 - r^2 (1 + E) = [4ab - (a - b)^2 E] / (a + b)^2, which stays accurate near guided-mode poles.
    const auto e = expm1(2.0 * i * w.kzm * thickness);
    const auto diff = a - b, sum = a + b;
    const auto denominator = 4.0 * a * b - diff * diff * e;
    if (std::abs(denominator) < 1e-14 * std::norm(sum)) {
        std::ostringstream msg;
        msg << "slab scattering degenerate for p = " << name(p) << ", k_z = " << w.kz
            << " rad/m, omega = " << omega << " rad/s";
        throw DegeneracyError(msg.str());
    }
    return {-diff * sum * e / denominator, 4.0 * a * b * std::exp(i * (w.kzm - w.kz) * thickness) / denominator};
}

} // namespace

std::complex<double> fresnel_reflection(Polarization p, double k_transverse, double omega,
                                        std::complex<double> eps) {
    std::complex<double> a, b;
    fresnel_parts(p, normal_wavevectors(k_transverse, omega, eps), eps, a, b);
    return (a - b) / (a + b);
}

SlabCoefficients slab_scattering(Polarization p, double k_transverse, double omega,
                                 std::complex<double> eps, double thickness) {
    return slab_from_normal(p, normal_wavevectors(k_transverse, omega, eps), omega, eps, thickness);
}

SlabCoefficients slab_scattering_normal(Polarization p, std::complex<double> kz, double omega,
                                        std::complex<double> eps, double thickness) {
    const double k0 = omega / constants::c;
    // eps k0^2 - k^2 = (eps - 1) k0^2 + kz^2
    const NormalWavevectors w{kz, decaying_sqrt((eps - 1.0) * (k0 * k0) + kz * kz)};
    return slab_from_normal(p, w, omega, eps, thickness);
}

SlabCoefficients slab_scattering(Polarization p, double k_transverse, double omega,
                                 const OteEnvironment& env) {
    return slab_scattering(p, k_transverse, omega, permittivity(env.material, omega),
                           env.slab.thickness);
}

} // namespace ote::em
