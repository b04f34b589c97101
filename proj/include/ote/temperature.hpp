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

// temperature.hpp - signed inverse temperature and thermal occupation helpers

#pragma once

#include <cmath>
#include <limits>

#include "ote/constants.hpp"

namespace ote {

/// Temperature stored as beta = 1/(k_B T) in 1/J.
///
/// beta = 0 is infinite temperature, beta = +inf is absolute zero and
/// beta < 0 describes population inversion. Going through beta keeps the
/// passage T -> +inf -> -inf continuous.
class EffectiveTemperature {
public:
    constexpr EffectiveTemperature() = default;

    static EffectiveTemperature from_beta(double beta) { return EffectiveTemperature(beta); }

    static EffectiveTemperature from_kelvin(double kelvin) {
        if (kelvin == 0.0) return EffectiveTemperature(std::numeric_limits<double>::infinity());
        if (std::isinf(kelvin)) return EffectiveTemperature(0.0);
        return EffectiveTemperature(1.0 / (constants::k_B * kelvin));
    }

    static EffectiveTemperature infinite() { return EffectiveTemperature(0.0); }

    double beta() const { return beta_; }

    /// Kelvin value; +inf for beta = 0 and 0 for beta = +inf.
    double kelvin() const {
        if (beta_ == 0.0) return std::numeric_limits<double>::infinity();
        if (std::isinf(beta_)) return 0.0;
        return 1.0 / (constants::k_B * beta_);
    }

    bool is_negative() const { return beta_ < 0.0; }

private:
    explicit constexpr EffectiveTemperature(double beta) : beta_(beta) {}
    double beta_ = 0.0;
};

/// Bose-Einstein occupation n(omega, T). T = 0 gives 0.
inline double photon_number(double omega, double kelvin) {
    if (kelvin <= 0.0) return 0.0;
    return 1.0 / std::expm1(constants::hbar * omega / (constants::k_B * kelvin));
}

/// Excited-state population of a two-level system of splitting hbar*omega.
///
/// Written through beta so that negative temperatures and omega -> 0 stay finite.
inline double excited_population(double omega, EffectiveTemperature temperature) {
    if (omega == 0.0) return 0.5;
    const double x = constants::hbar * omega * temperature.beta();
    if (x > 700.0) return std::exp(-x);
    return 1.0 / (1.0 + std::exp(x));
}

inline double excited_population(double omega, double kelvin) {
    return excited_population(omega, EffectiveTemperature::from_kelvin(kelvin));
}

} // namespace ote
