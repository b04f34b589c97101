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

#include "ote/errors.hpp"
#include "ote/lindblad/network.hpp"

namespace ote::lindblad {

std::string to_string(TransitionId id) {
    switch (id) {
    case TransitionId::working_fluid: return "working_fluid";
    case TransitionId::aux_high: return "aux_high";
    case TransitionId::aux_resonant: return "aux_resonant";
    case TransitionId::aux_low: return "aux_low";
    }
    return "unknown";
}

namespace {

Eigen::MatrixXcd ket_bra(int dim, int row, int col) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    m(row, col) = 1.0;
    return m;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

} // namespace

Eigen::MatrixXcd working_fluid_lowering(const EmitterNetwork& network) {
    const Eigen::MatrixXcd s = ket_bra(2, 0, 1);
    if (!network.auxiliary) return s;
    return kron(s, Eigen::MatrixXcd::Identity(3, 3));
}

std::vector<Transition> EmitterNetwork::transitions() const {
    std::vector<Transition> out;
    out.push_back({TransitionId::working_fluid, 0, working_fluid.omega, working_fluid.dipole,
                   working_fluid.position, working_fluid_lowering(*this)});
    if (auxiliary) {
        const auto& m = *auxiliary;
        const Eigen::MatrixXcd id2 = Eigen::MatrixXcd::Identity(2, 2);
        out.push_back({TransitionId::aux_high, 1, m.omega_high, m.dipole_high, m.position,
                       kron(id2, ket_bra(3, 0, 2))});
        out.push_back({TransitionId::aux_resonant, 1, m.omega_resonant, m.dipole_resonant, m.position,
                       kron(id2, ket_bra(3, 1, 2))});
        out.push_back({TransitionId::aux_low, 1, m.omega_low(), m.dipole_low, m.position,
                       kron(id2, ket_bra(3, 0, 1))});
    }
    return out;
}

Transition EmitterNetwork::transition(TransitionId id) const {
    for (auto& t : transitions())
        if (t.id == id) return t;
    throw ConfigError("network has no transition " + to_string(id));
}

void EmitterNetwork::validate() const {
    if (!(working_fluid.omega > 0.0)) throw ConfigError("working fluid frequency must be > 0");
    if (auxiliary) {
        if (!(auxiliary->omega_resonant > 0.0)) throw ConfigError("auxiliary resonant frequency must be > 0");
        if (!(auxiliary->omega_high > auxiliary->omega_resonant))
            throw ConfigError("auxiliary |0>-|2> frequency must exceed the |1>-|2> frequency");
    }
}

Eigen::MatrixXcd reduced_working_fluid(const EmitterNetwork& network, const DensityMatrix& rho) {
    if (!network.auxiliary) return rho;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(2, 2);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int m = 0; m < 3; ++m) out(a, b) += rho(3 * a + m, 3 * b + m);
    return out;
}

Eigen::MatrixXcd reduced_auxiliary(const EmitterNetwork& network, const DensityMatrix& rho) {
    if (!network.auxiliary) throw ConfigError("network has no auxiliary emitter");
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(3, 3);
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n)
            for (int a = 0; a < 2; ++a) out(m, n) += rho(3 * a + m, 3 * a + n);
    return out;
}

} // namespace ote::lindblad
