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
#include <limits>
#include <sstream>

#include "ote/constants.hpp"
#include "ote/errors.hpp"
#include "ote/lindblad/steady_state.hpp"

namespace ote::lindblad {

DensityMatrix steady_state(const Liouvillian& liouvillian, const SteadyStateOptions& options) {
    const Eigen::Index n = liouvillian.rows();
    if (liouvillian.cols() != n || n == 0) throw DimensionError("Liouvillian must be square and non-empty");
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(n))));
    if (d * d != n) throw DimensionError("Liouvillian size is not the square of a Hilbert-space dimension");

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(liouvillian, Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double smax = sv(0);
    if (!(smax > 0.0)) throw DegenerateSteadyStateError("Liouvillian is identically zero", static_cast<int>(n));
    int kernel = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) <= options.rank_tolerance * smax) ++kernel;
    if (kernel != 1) {
        std::ostringstream msg;
        msg << "steady state is not unique: numerical kernel dimension " << kernel << " (rank tolerance "
            << options.rank_tolerance << " * sigma_max = " << options.rank_tolerance * smax << ")";
        throw DegenerateSteadyStateError(msg.str(), kernel);
    }

    const Eigen::VectorXcd v = svd.matrixV().col(n - 1);
    Eigen::MatrixXcd rho = unvectorize(v);
    const std::complex<double> tr = rho.trace();
    if (std::abs(tr) < 1e-300) throw InvalidStateError("kernel vector of the Liouvillian is traceless");
    rho /= tr;

    const double residual = (liouvillian * vectorize(rho)).norm() / rho.norm();
    if (residual > options.residual_tolerance * smax) {
        std::ostringstream msg;
        msg << "steady-state residual " << residual << " exceeds " << options.residual_tolerance << " * ||L||";
        throw InvalidStateError(msg.str());
    }
    check_density_matrix(rho, "steady state", {1e-10, 1e-10, 1e-10});
    return 0.5 * (rho + rho.adjoint());
}

void check_density_matrix(const DensityMatrix& rho, const std::string& context, const StateTolerances& tol) {
    if (rho.rows() != rho.cols()) throw InvalidStateError(context + ": not square");
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm > tol.hermiticity) {
        std::ostringstream msg;
        msg << context << ": not Hermitian (max |rho - rho^dagger| = " << herm << ")";
        throw InvalidStateError(msg.str());
    }
    const std::complex<double> tr = rho.trace();
    if (std::abs(tr - 1.0) > tol.trace) {
        std::ostringstream msg;
        msg << context << ": trace " << tr.real() << " deviates from 1 by " << std::abs(tr - 1.0);
        throw InvalidStateError(msg.str());
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues().minCoeff();
    if (lmin < -tol.positivity) {
        std::ostringstream msg;
        msg << context << ": negative eigenvalue " << lmin;
        throw InvalidStateError(msg.str());
    }
}

EffectiveTemperature emitter_temperature(const Eigen::MatrixXcd& reduced, double omega,
                                         double coherence_threshold) {
    if (reduced.rows() != 2 || reduced.cols() != 2) throw DimensionError("two-level reduced state expected");
    const double coherence = std::abs(reduced(0, 1));
    if (coherence > coherence_threshold) {
        std::ostringstream msg;
        msg << "reduced state is not of Gibbs form: |rho_ge| = " << coherence;
        throw NonGibbsStateError(msg.str(), coherence);
    }
    const double pg = reduced(0, 0).real();
    const double pe = reduced(1, 1).real();
    if (pe <= 0.0) return EffectiveTemperature::from_kelvin(0.0);
    if (pg <= 0.0) return EffectiveTemperature::from_beta(-std::numeric_limits<double>::infinity());
    return EffectiveTemperature::from_beta(std::log(pg / pe) / (constants::hbar * omega));
}

EffectiveTemperature emitter_temperature(const EmitterNetwork& network, const DensityMatrix& rho,
                                         TransitionId transition, double coherence_threshold) {
    if (transition == TransitionId::working_fluid)
        return emitter_temperature(reduced_working_fluid(network, rho), network.working_fluid.omega,
                                   coherence_threshold);
    if (!network.auxiliary) throw DimensionError("network has no auxiliary emitter");
    const Eigen::MatrixXcd m = reduced_auxiliary(network, rho);
    int lo = 0, hi = 2;
    if (transition == TransitionId::aux_resonant) lo = 1;
    if (transition == TransitionId::aux_low) hi = 1;
    Eigen::MatrixXcd two(2, 2);
    two << m(lo, lo), m(lo, hi), m(hi, lo), m(hi, hi);
    two /= two.trace();
    return emitter_temperature(two, network.transition(transition).omega, coherence_threshold);
}

DensityMatrix gibbs_state(const Eigen::VectorXd& energies, double kelvin) {
    const Eigen::Index d = energies.size();
    DensityMatrix rho = DensityMatrix::Zero(d, d);
    Eigen::Index ground = 0;
    energies.minCoeff(&ground);
    if (kelvin <= 0.0) {
        rho(ground, ground) = 1.0;
        return rho;
    }
    const double e0 = energies(ground);
    double z = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) z += std::exp(-(energies(i) - e0) / (constants::k_B * kelvin));
    for (Eigen::Index i = 0; i < d; ++i)
        rho(i, i) = std::exp(-(energies(i) - e0) / (constants::k_B * kelvin)) / z;
    return rho;
}

} // namespace ote::lindblad
