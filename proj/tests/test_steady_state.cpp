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

#include <doctest.h>

#include "ote/constants.hpp"
#include "ote/errors.hpp"
#include "ote/lindblad/model.hpp"
#include "ote/lindblad/steady_state.hpp"
#include "support.hpp"

using namespace ote;
using namespace ote::lindblad;
using ote::constants::hbar;
using ote::constants::k_B;

namespace {

using cplx = std::complex<double>;

// Row-stacked superoperator of K1 rho K2^dag - {K2^dag K1, rho}/2 and -(i/hbar)[H, .];
// an independent assembly of the same master equation.
Eigen::MatrixXcd row_kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd k(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return k;
}

struct RowGenerator {
    int d;
    Eigen::MatrixXcd l;

    explicit RowGenerator(const Eigen::MatrixXcd& h) : d(static_cast<int>(h.rows())) {
        const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
        l = cplx(0, -1 / hbar) * (row_kron(h, id) - row_kron(id, h.transpose()));
    }
    void add(const Eigen::MatrixXcd& k1, const Eigen::MatrixXcd& k2, cplx rate) {
        const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
        const Eigen::MatrixXcd n = k2.adjoint() * k1;
        l += rate * (row_kron(k1, k2.conjugate()) - 0.5 * row_kron(n, id) - 0.5 * row_kron(id, n.transpose()));
    }
    // one equation replaced by the trace condition
    Eigen::MatrixXcd solve() const {
        Eigen::MatrixXcd a = l;
        Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(d * d);
        a.row(0).setZero();
        for (int i = 0; i < d; ++i) a(0, i * d + i) = 1.0;
        rhs(0) = 1.0;
        const Eigen::VectorXcd x = a.fullPivLu().solve(rhs);
        Eigen::MatrixXcd rho(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) rho(i, j) = x(i * d + j);
        return rho;
    }
};

Eigen::MatrixXcd op(int d, int i, int j) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    m(i, j) = 1.0;
    return m;
}

} // namespace

TEST_CASE("two-level steady state balances emission and absorption") {
    const double gp = 4.8, gm = 1.3;
    const auto n = test::tls();
    const auto terms = local_terms(working_fluid_lowering(n), gp, gm);
    const auto rho = steady_state(build_liouvillian(Eigen::MatrixXcd::Zero(2, 2), terms));
    CHECK(rho(1, 1).real() == doctest::Approx(gm / (gp + gm)).epsilon(1e-12));
    CHECK(std::abs(rho(0, 1)) < 1e-14);
    const auto t = emitter_temperature(rho, test::omega_a);
    CHECK(t.beta() == doctest::Approx(std::log(gp / gm) / (hbar * test::omega_a)).epsilon(1e-10));
}

TEST_CASE("thermal rates on a ladder relax to the Gibbs state") {
    const double kelvin = 420.0;
    const Eigen::Vector3d e(0.0, 1.2e-21, 2.9e-21);
    std::vector<LindbladTerm> terms;
    for (auto [lo, hi] : {std::pair{0, 1}, {1, 2}, {0, 2}}) {
        const double gp = 3.0 + lo + hi;
        const double gm = gp * std::exp(-(e(hi) - e(lo)) / (k_B * kelvin));
        for (auto& t : local_terms(op(3, lo, hi), gp, gm)) terms.push_back(t);
    }
    const auto rho = steady_state(build_liouvillian(Eigen::MatrixXcd::Zero(3, 3), terms));
    CHECK(trace_distance(rho, gibbs_state(e, kelvin)) < 1e-12);
}

TEST_CASE("uncoupled composite factorizes") {
    auto env = test::sic_environment();
    const auto n = test::composite();
    ModelOptions o;
    o.coherent_coupling = false;
    o.cross_dissipators = false;
    const auto m = build_network_model(n, env, o);
    const auto rho = steady_state(m.liouvillian);
    const auto rq = reduced_working_fluid(n, rho), rm = reduced_auxiliary(n, rho);
    Eigen::MatrixXcd product(6, 6);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) product.block(3 * a, 3 * b, 3, 3) = rq(a, b) * rm;
    CHECK(trace_distance(rho, product) < 1e-12);
    // the working fluid alone then sits at the environment temperature
    const auto& r = m.local_rates(TransitionId::working_fluid);
    const double beta_env = std::log(r.gamma_plus.real() / r.gamma_minus.real()) / (hbar * test::omega_a);
    CHECK(emitter_temperature(n, rho, TransitionId::working_fluid).beta() == doctest::Approx(beta_env).epsilon(1e-10));
}

TEST_CASE("coupled composite steady state agrees with an independent assembly") {
    const auto env = test::sic_environment();
    const auto n = test::composite();
    const auto m = build_network_model(n, env);
    const auto rho = steady_state(m.liouvillian);

    RowGenerator g(m.hamiltonian);
    for (const auto& t : n.transitions()) {
        const auto r = em::transition_rates(t.dipole, t.dipole, t.omega, t.position, t.position, env);
        g.add(t.lowering, t.lowering, r.gamma_plus.real());
        g.add(t.lowering.adjoint(), t.lowering.adjoint(), r.gamma_minus.real());
    }
    const auto q = n.transition(TransitionId::working_fluid), a = n.transition(TransitionId::aux_resonant);
    const auto rqa = em::transition_rates(q.dipole, a.dipole, q.omega, q.position, a.position, env);
    const auto raq = em::transition_rates(a.dipole, q.dipole, q.omega, a.position, q.position, env);
    g.add(q.lowering, a.lowering, rqa.gamma_plus);
    g.add(a.lowering, q.lowering, raq.gamma_plus);
    g.add(q.lowering.adjoint(), a.lowering.adjoint(), rqa.gamma_minus);
    g.add(a.lowering.adjoint(), q.lowering.adjoint(), raq.gamma_minus);
    const auto oracle = g.solve();
    CHECK(trace_distance(rho, oracle) < 1e-9);

    // the working fluid ends up population-inverted
    const auto t = emitter_temperature(n, rho, TransitionId::working_fluid);
    CHECK(t.is_negative());
    CHECK(t.kelvin() == doctest::Approx(-538.809).epsilon(1e-5));
}

TEST_CASE("degenerate kernels are reported with their dimension") {
    try {
        steady_state(Eigen::MatrixXcd::Zero(4, 4));
        FAIL("expected a DegenerateSteadyStateError");
    } catch (const DegenerateSteadyStateError& e) {
        CHECK(e.kernel_dimension() == 4);
    }
    // level 2 is dark: any mixture with it is stationary
    const auto terms = local_terms(op(3, 0, 1), 1.0, 0.5);
    try {
        steady_state(build_liouvillian(Eigen::MatrixXcd::Zero(3, 3), terms));
        FAIL("expected a DegenerateSteadyStateError");
    } catch (const DegenerateSteadyStateError& e) {
        CHECK(e.kernel_dimension() > 1);
    }
    CHECK_THROWS_AS(steady_state(Eigen::MatrixXcd::Identity(5, 5)), DimensionError);
}

TEST_CASE("density-matrix checks") {
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Identity(2, 2) * 0.5;
    CHECK_NOTHROW(check_density_matrix(rho));
    rho(0, 0) = 0.6;
    CHECK_THROWS_AS(check_density_matrix(rho), InvalidStateError);
    rho(0, 0) = 1.1;
    rho(1, 1) = -0.1;
    CHECK_THROWS_AS(check_density_matrix(rho), InvalidStateError);
    rho = Eigen::MatrixXcd::Identity(2, 2) * 0.5;
    rho(0, 1) = cplx(0, 0.1);
    CHECK_THROWS_AS(check_density_matrix(rho), InvalidStateError);
}

TEST_CASE("emitter temperature edge cases") {
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(2, 2);
    r(0, 0) = 1.0;
    CHECK(emitter_temperature(r, 1e13).kelvin() == 0.0);
    r(0, 0) = 0.0;
    r(1, 1) = 1.0;
    CHECK(emitter_temperature(r, 1e13).beta() == -std::numeric_limits<double>::infinity());
    r(0, 0) = r(1, 1) = 0.5;
    CHECK(emitter_temperature(r, 1e13).kelvin() == std::numeric_limits<double>::infinity());
    r(0, 1) = r(1, 0) = 1e-3;
    CHECK_THROWS_AS(emitter_temperature(r, 1e13), NonGibbsStateError);
    const double t = 250.0;
    const Eigen::Vector2d e(0.0, hbar * 1e13);
    CHECK(emitter_temperature(gibbs_state(e, t), 1e13).kelvin() == doctest::Approx(t).epsilon(1e-12));
    CHECK(gibbs_state(e, 0.0)(0, 0) == 1.0);
}
