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

// model.hpp - master equation of an emitter network in a given electromagnetic environment

#pragma once

#include <optional>
#include <vector>

#include "ote/em/environment.hpp"
#include "ote/em/rates.hpp"
#include "ote/lindblad/network.hpp"
#include "ote/lindblad/superoperator.hpp"

namespace ote::lindblad {

struct ModelOptions {
    Frame frame = Frame::interaction;
    std::optional<double> lambda_override; // rad/s
    bool coherent_coupling = true;
    bool cross_dissipators = true;
};

struct ChannelRates {
    TransitionId id;
    em::TransitionRates rates;
};

/// Ordered resonant pair (i, j) belonging to different emitters.
struct ResonantPair {
    TransitionId i;
    TransitionId j;
    em::TransitionRates rates_ij;
    em::TransitionRates rates_ji;
};

struct NetworkModel {
    EmitterNetwork network;
    std::vector<ChannelRates> local;
    std::vector<ResonantPair> pairs;
    std::vector<Coupling> couplings;
    Eigen::MatrixXcd hamiltonian;
    std::vector<LindbladTerm> terms;
    Liouvillian liouvillian;

    const em::TransitionRates& local_rates(TransitionId id) const;
};

/// gamma_plus L(sigma^-) + gamma_minus L(sigma^+) for one transition.
std::vector<LindbladTerm> local_terms(const Eigen::MatrixXcd& lowering, double gamma_plus, double gamma_minus);

/// Resonant transition pairs across distinct emitters.
std::vector<std::pair<TransitionId, TransitionId>> resonant_pairs(const EmitterNetwork& network);

NetworkModel build_network_model(const EmitterNetwork& network, const em::OteEnvironment& env,
                                 const ModelOptions& options = {});

} // namespace ote::lindblad
