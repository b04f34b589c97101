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

#include "ote/errors.hpp"
#include "ote/lindblad/model.hpp"

namespace ote::lindblad {

const em::TransitionRates& NetworkModel::local_rates(TransitionId id) const {
    for (const auto& c : local)
        if (c.id == id) return c.rates;
    throw ConfigError("model has no transition " + to_string(id));
}

std::vector<LindbladTerm> local_terms(const Eigen::MatrixXcd& lowering, double gamma_plus, double gamma_minus) {
    const Eigen::MatrixXcd raising = lowering.adjoint();
    return {{lowering, lowering, gamma_plus}, {raising, raising, gamma_minus}};
}

std::vector<std::pair<TransitionId, TransitionId>> resonant_pairs(const EmitterNetwork& network) {
    std::vector<std::pair<TransitionId, TransitionId>> out;
    const auto ts = network.transitions();
    for (std::size_t a = 0; a < ts.size(); ++a)
        for (std::size_t b = a + 1; b < ts.size(); ++b) {
            if (ts[a].emitter == ts[b].emitter) continue;
            const double scale = std::max(ts[a].omega, ts[b].omega);
            if (std::abs(ts[a].omega - ts[b].omega) <= 1e-12 * scale) out.emplace_back(ts[a].id, ts[b].id);
        }
    return out;
}

NetworkModel build_network_model(const EmitterNetwork& network, const em::OteEnvironment& env,
                                 const ModelOptions& options) {
    network.validate();
    em::validate(env);
    NetworkModel model;
    model.network = network;

    for (const auto& t : network.transitions()) {
        auto r = em::transition_rates(t.dipole, t.dipole, t.omega, t.position, t.position, env);
        model.local.push_back({t.id, r});
        for (auto& term : local_terms(t.lowering, r.gamma_plus.real(), r.gamma_minus.real()))
            model.terms.push_back(std::move(term));
    }

    for (const auto& [a, b] : resonant_pairs(network)) {
        const auto ti = network.transition(a);
        const auto tj = network.transition(b);
        ResonantPair pair{a, b,
                          em::transition_rates(ti.dipole, tj.dipole, ti.omega, ti.position, tj.position, env),
                          em::transition_rates(tj.dipole, ti.dipole, ti.omega, tj.position, ti.position, env)};
        const double lambda =
            em::dipole_coupling(ti.dipole, tj.dipole, ti.omega, ti.position, tj.position, env, options.lambda_override);
        pair.rates_ij.lambda = lambda;
        pair.rates_ji.lambda = lambda;
        if (options.coherent_coupling) model.couplings.push_back({a, b, lambda});
        if (options.cross_dissipators) {
            const Eigen::MatrixXcd& si = ti.lowering;
            const Eigen::MatrixXcd& sj = tj.lowering;
            model.terms.push_back({si, sj, pair.rates_ij.gamma_plus});
            model.terms.push_back({sj, si, pair.rates_ji.gamma_plus});
            model.terms.push_back({si.adjoint(), sj.adjoint(), pair.rates_ij.gamma_minus});
            model.terms.push_back({sj.adjoint(), si.adjoint(), pair.rates_ji.gamma_minus});
        }
        model.pairs.push_back(std::move(pair));
    }

    model.hamiltonian = build_hamiltonian(network, model.couplings, options.frame);
    model.liouvillian = build_liouvillian(model.hamiltonian, model.terms);
    return model;
}

} // namespace ote::lindblad
