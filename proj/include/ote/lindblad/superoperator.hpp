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

// superoperator.hpp - effective Hamiltonian and Lindblad generator assembly
//
// Vectorisation is column stacking: vec(A X B) = (B^T kron A) vec(X).

#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ote/lindblad/network.hpp"

namespace ote::lindblad {

using Liouvillian = Eigen::MatrixXcd;

/// Lambda (rad/s) between two resonant transitions of different emitters.
struct Coupling {
    TransitionId first;
    TransitionId second;
    double lambda = 0.0;
};

enum class Frame {
    lab,         // free part included
    interaction, // rotating with the free part; exact for resonant couplings and secular terms
};

/// H_eff in joules. Free energies follow the level structure (|1> = hbar omega_low,
/// |2> = hbar omega_high); couplings add hbar Lambda (s_i^- s_j^+ + s_j^- s_i^+).
/// Throws ResonanceError for couplings between non-resonant transitions.
Eigen::MatrixXcd build_hamiltonian(const EmitterNetwork& network, std::span<const Coupling> couplings,
                                   Frame frame = Frame::lab);

/// rate * R(A, B) with R(A, B) rho = A rho B^dagger - 1/2 {B^dagger A, rho}; L(K) = R(K, K).
struct LindbladTerm {
    Eigen::MatrixXcd a;
    Eigen::MatrixXcd b;
    std::complex<double> rate; // 1/s
};

/// d rho/dt = -(i/hbar)[H, rho] + sum rate R(A, B). Throws DimensionError on mismatched sizes.
Liouvillian build_liouvillian(const Eigen::MatrixXcd& hamiltonian, std::span<const LindbladTerm> terms);

Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& rho);
Eigen::MatrixXcd unvectorize(const Eigen::VectorXcd& v);

/// 1/2 || a - b ||_1 for Hermitian a, b.
double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

} // namespace ote::lindblad
