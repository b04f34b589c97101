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
#include "ote/errors.hpp"
#include "ote/lindblad/superoperator.hpp"

namespace ote::lindblad {

namespace {

bool resonant(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)); }

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

} // namespace

Eigen::MatrixXcd build_hamiltonian(const EmitterNetwork& network, std::span<const Coupling> couplings,
                                   Frame frame) {
    const int d = network.dimension();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
    if (frame == Frame::lab) {
        Eigen::VectorXd wf(2);
        wf << 0.0, network.working_fluid.omega;
        Eigen::VectorXd aux = Eigen::VectorXd::Zero(1);
        if (network.auxiliary) {
            aux.resize(3);
            aux << 0.0, network.auxiliary->omega_low(), network.auxiliary->omega_high;
        }
        for (int q = 0; q < 2; ++q)
            for (Eigen::Index m = 0; m < aux.size(); ++m)
                h(q * aux.size() + m, q * aux.size() + m) = constants::hbar * (wf[q] + aux[m]);
    }
    for (const auto& c : couplings) {
        const auto ti = network.transition(c.first);
        const auto tj = network.transition(c.second);
        if (ti.emitter == tj.emitter || !resonant(ti.omega, tj.omega)) {
            std::ostringstream msg;
            msg << "coupling requested between non-resonant transitions " << to_string(c.first) << " ("
                << ti.omega << " rad/s) and " << to_string(c.second) << " (" << tj.omega << " rad/s)";
            throw ResonanceError(msg.str());
        }
        const Eigen::MatrixXcd x = ti.lowering * tj.lowering.adjoint();
        h += constants::hbar * c.lambda * (x + x.adjoint());
    }
    return h;
}

Liouvillian build_liouvillian(const Eigen::MatrixXcd& hamiltonian, std::span<const LindbladTerm> terms) {
    const Eigen::Index d = hamiltonian.rows();
    if (hamiltonian.cols() != d) throw DimensionError("Hamiltonian must be square");
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    const std::complex<double> minus_i_over_hbar(0.0, -1.0 / constants::hbar);
    Liouvillian l = minus_i_over_hbar * (kron(id, hamiltonian) - kron(hamiltonian.transpose(), id));
    for (const auto& t : terms) {
        if (t.a.rows() != d || t.a.cols() != d || t.b.rows() != d || t.b.cols() != d) {
            std::ostringstream msg;
            msg << "Lindblad term of size " << t.a.rows() << "x" << t.a.cols() << " does not match dimension " << d;
            throw DimensionError(msg.str());
        }
        const Eigen::MatrixXcd bda = t.b.adjoint() * t.a;
        l += t.rate * (kron(t.b.conjugate(), t.a) - 0.5 * kron(id, bda) - 0.5 * kron(bda.transpose(), id));
    }
    return l;
}

Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& rho) {
    return Eigen::Map<const Eigen::VectorXcd>(rho.data(), rho.size());
}

Eigen::MatrixXcd unvectorize(const Eigen::VectorXcd& v) {
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
    if (d * d != v.size()) throw DimensionError("vector length is not a perfect square");
    return Eigen::Map<const Eigen::MatrixXcd>(v.data(), d, d);
}

double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    const Eigen::MatrixXcd diff = a - b;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (diff + diff.adjoint()));
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

} // namespace ote::lindblad
