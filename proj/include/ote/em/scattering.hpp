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

// scattering.hpp - Fresnel and single-slab reflection/transmission amplitudes

#pragma once

#include <complex>

#include "ote/em/environment.hpp"

namespace ote::em {

enum class Polarization { TE, TM };

/// sqrt on the branch with Im >= 0 (decaying evanescent waves).
std::complex<double> decaying_sqrt(std::complex<double> x);

/// Vacuum-medium Fresnel coefficient for in-plane wavevector k (rad/m).
std::complex<double> fresnel_reflection(Polarization p, double k_transverse, double omega,
                                        std::complex<double> eps);

struct SlabCoefficients {
    std::complex<double> rho; // reflection
    std::complex<double> tau; // transmission
};

/// Multiple-reflection amplitudes of a slab of thickness `thickness` and permittivity `eps`.
/// Throws DegeneracyError when |1 - r^2 exp(2 i k_zm d)| < 1e-14.
SlabCoefficients slab_scattering(Polarization p, double k_transverse, double omega,
                                 std::complex<double> eps, double thickness);

SlabCoefficients slab_scattering(Polarization p, double k_transverse, double omega,
                                 const OteEnvironment& env);

/// Same amplitudes parameterised by the vacuum normal wavevector k_z (real for propagating,
/// i kappa for evanescent waves), which avoids the cancellation in k0^2 - k^2 near grazing.
SlabCoefficients slab_scattering_normal(Polarization p, std::complex<double> kz, double omega,
                                        std::complex<double> eps, double thickness);

} // namespace ote::em
