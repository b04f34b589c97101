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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ote/em/environment.hpp"
#include "ote/errors.hpp"

namespace ote::em {

namespace {

struct Validator {
    void operator()(const Vacuum&) const {}

    void operator()(const DrudeLorentz& m) const {
        if (!(m.eps_inf >= 1.0)) throw ConfigError("Drude-Lorentz: eps_inf must be >= 1");
        if (!(m.omega_T > 0.0)) throw ConfigError("Drude-Lorentz: omega_T must be > 0");
        if (!(m.omega_L > m.omega_T)) throw ConfigError("Drude-Lorentz: omega_L must exceed omega_T");
        if (!(m.gamma >= 0.0)) throw ConfigError("Drude-Lorentz: gamma must be >= 0");
    }

    void operator()(const Tabulated& m) const {
        if (m.omega.size() < 2 || m.omega.size() != m.values.size())
            throw ConfigError("tabulated permittivity: need >= 2 matching frequency/value entries");
        for (std::size_t i = 1; i < m.omega.size(); ++i)
            if (!(m.omega[i] > m.omega[i - 1]))
                throw ConfigError("tabulated permittivity: frequency grid must be strictly increasing");
        for (const auto& v : m.values)
            if (v.imag() < 0.0)
                throw ConfigError("tabulated permittivity: Im(eps) must be >= 0 (passive medium)");
    }
};

struct Evaluator {
    double omega;

    std::complex<double> operator()(const Vacuum&) const { return {1.0, 0.0}; }

    std::complex<double> operator()(const DrudeLorentz& m) const {
        const std::complex<double> damping(0.0, m.gamma * omega);
        const double w2 = omega * omega;
        return m.eps_inf * (m.omega_L * m.omega_L - w2 - damping) /
               (m.omega_T * m.omega_T - w2 - damping);
    }

    std::complex<double> operator()(const Tabulated& m) const {
        if (omega < m.omega.front() || omega > m.omega.back()) {
            std::ostringstream msg;
            msg << "permittivity requested at omega = " << omega << " rad/s outside tabulated range ["
                << m.omega.front() << ", " << m.omega.back() << "]";
            throw OutOfRangeError(msg.str());
        }
        auto it = std::upper_bound(m.omega.begin(), m.omega.end(), omega);
        std::size_t hi = std::min<std::size_t>(it - m.omega.begin(), m.omega.size() - 1);
        std::size_t lo = hi - 1;
        const double t = (omega - m.omega[lo]) / (m.omega[hi] - m.omega[lo]);
        return m.values[lo] + t * (m.values[hi] - m.values[lo]);
    }
};

} // namespace

void validate(const PermittivityModel& model) { std::visit(Validator{}, model); }

void validate(const OteEnvironment& env) {
    if (!(env.slab.thickness > 0.0)) throw ConfigError("slab thickness must be > 0");
    if (!(env.slab.temperature > 0.0)) throw ConfigError("slab temperature must be > 0");
    if (!(env.blackbody_temperature > 0.0)) throw ConfigError("blackbody temperature must be > 0");
    const auto& q = env.quadrature;
    if (!(q.rel_tol > 0.0 && q.rel_tol < 1.0)) throw ConfigError("quadrature tolerance must lie in (0, 1)");
    if (!(q.cutoff_multiplier > 1.0)) throw ConfigError("quadrature cutoff multiplier must be > 1");
    if (q.max_subdivisions < 1) throw ConfigError("quadrature max subdivisions must be >= 1");
    if (!(q.decay_efolds >= 0.0)) throw ConfigError("quadrature decay e-folds must be >= 0");
    validate(env.material);
}

std::complex<double> permittivity(const PermittivityModel& model, double omega) {
    if (!(omega > 0.0)) throw NumericalError("permittivity: omega must be > 0");
    return std::visit(Evaluator{omega}, model);
}

} // namespace ote::em
