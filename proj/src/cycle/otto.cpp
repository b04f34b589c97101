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

#include "ote/constants.hpp"
#include "ote/cycle/otto.hpp"
#include "ote/em/rates.hpp"
#include "ote/errors.hpp"
#include "ote/lindblad/ode.hpp"
#include "ote/lindblad/superoperator.hpp"

namespace ote::cycle {

using constants::hbar;

namespace {

void check_frequencies(double omega_a, double omega_b) {
    if (!(omega_a > 0.0) || !(omega_b >= 0.0) || omega_b > omega_a) {
        std::ostringstream msg;
        msg << "cycle frequencies must satisfy 0 < omega_b <= omega_a (got omega_a = " << omega_a
            << ", omega_b = " << omega_b << ")";
        throw ConfigError(msg.str());
    }
}

// Strokes A and C at infinite speed, B and D as complete thermalisations.
void fill_ideal(CycleResult& r) {
    r.W_A = hbar * (r.omega_b - r.omega_a) * r.p_hot;
    r.W_C = hbar * (r.omega_a - r.omega_b) * r.p_cold;
    r.Q_B = hbar * r.omega_b * (r.p_cold - r.p_hot);
    r.Q_D = hbar * r.omega_a * (r.p_hot - r.p_cold);
    r.W_wf = r.W_A + r.W_C;
    r.Q_abs = r.Q_D;
    r.eta = 1.0 - r.omega_b / r.omega_a;
}

} // namespace

CycleResult si_qoc(double omega_a, double omega_b, double T1, double T2) {
    check_frequencies(omega_a, omega_b);
    if (!(T1 > T2) || !(T2 > 0.0)) throw ConfigError("si-QOC requires T1 > T2 > 0");
    CycleResult r;
    r.omega_a = omega_a;
    r.omega_b = omega_b;
    r.theta_wf = EffectiveTemperature::from_kelvin(T1);
    r.T_env_at_b = T2;
    r.p_hot = excited_population(omega_a, T1);
    r.p_cold = excited_population(omega_b, T2);
    fill_ideal(r);
    r.pwc_satisfied = omega_b / omega_a >= T2 / T1;
    return r;
}

OteContext::OteContext(const em::OteEnvironment& env, const lindblad::EmitterNetwork& network,
                       const ContextOptions& options)
    : env_(env), network_(network) {
    em::validate(env_);
    network_.validate();
    model_ = lindblad::build_network_model(network_, env_, options.model);
    rho_ss_ = lindblad::steady_state(model_.liouvillian, options.steady);
    theta_wf_ = lindblad::emitter_temperature(network_, rho_ss_, lindblad::TransitionId::working_fluid);
    if (options.build_rate_table) {
        const auto& wf = network_.working_fluid;
        table_ = RateTable::build(wf.dipole, wf.position, env_, options.omega_min_ratio * wf.omega, wf.omega,
                                  options.rate_points);
    }
}

const RateTable& OteContext::rate_table() const {
    if (!table_) throw ConfigError("context was built without a stroke rate table");
    return *table_;
}

em::TransitionRates OteContext::rates(double omega) const {
    const auto& wf = network_.working_fluid;
    return em::transition_rates(wf.dipole, wf.dipole, omega, wf.position, wf.position, env_);
}

EffectiveTemperature OteContext::t_env(double omega) const {
    const auto r = rates(omega);
    return em::effective_temperature(r.gamma_plus.real(), r.gamma_minus.real(), omega);
}

CycleResult ote_ideal_cycle(const OteContext& context, double omega_b, const CycleOverrides& overrides) {
    const double omega_a = context.omega_a();
    check_frequencies(omega_a, omega_b);
    CycleResult r;
    r.omega_a = omega_a;
    r.omega_b = omega_b;
    r.theta_wf = overrides.theta_wf.value_or(context.theta_wf());
    r.p_hot = excited_population(omega_a, r.theta_wf);
    if (omega_b == 0.0 && !overrides.t_env) {
        r.T_env_at_b = std::numeric_limits<double>::quiet_NaN();
        r.p_cold = 0.5;
    } else {
        const EffectiveTemperature tl = overrides.t_env ? *overrides.t_env : context.t_env(omega_b);
        r.T_env_at_b = tl.kelvin();
        r.p_cold = excited_population(omega_b, tl);
    }
    fill_ideal(r);
    r.pwc_satisfied = r.p_hot >= r.p_cold;
    return r;
}

StageResult finite_time_stage(Stage stage, double alpha, double omega_a, double omega_b, double p_start,
                              const RateTable& rates, const StageOptions& options) {
    check_frequencies(omega_a, omega_b);
    if (!(alpha > 0.0)) throw ConfigError("adiabatic parameter alpha must be > 0");
    if (p_start < 0.0 || p_start > 1.0) throw InvalidStateError("stroke start population outside [0, 1]");
    const double w_i = stage == Stage::A ? omega_a : omega_b;
    const double w_f = stage == Stage::A ? omega_b : omega_a;
    StageResult out;
    out.p_start = p_start;
    if (std::isinf(alpha)) {
        out.work = hbar * (w_f - w_i) * p_start;
        out.p_final = p_start;
        out.delta_u = out.work;
        return out;
    }

    const double duration = 1.0 / alpha;
    const double wdot = (w_f - w_i) * alpha;
    auto omega_at = [&](double t) { return std::clamp(w_i + wdot * t, std::min(w_i, w_f), std::max(w_i, w_f)); };
    const Eigen::MatrixXcd lower = (Eigen::MatrixXcd(2, 2) << 0, 1, 0, 0).finished();
    const Eigen::MatrixXcd excited = (Eigen::MatrixXcd(2, 2) << 0, 0, 0, 1).finished();

    // y = [vec rho, W / (hbar omega_a), Q / (hbar omega_a)]
    lindblad::OdeRhs rhs = [&](double t, const Eigen::VectorXcd& y, Eigen::VectorXcd& dy) {
        const double w = omega_at(t);
        const auto terms = lindblad::local_terms(lower, rates.gamma_plus(w), rates.gamma_minus(w));
        const auto l = lindblad::build_liouvillian(hbar * w * excited, terms);
        dy.resize(6);
        dy.head(4) = l * y.head(4);
        const double pe = y(3).real();
        dy(4) = pe * wdot / omega_a;
        dy(5) = dy(3).real() * w / omega_a;
    };
    Eigen::VectorXcd y0 = Eigen::VectorXcd::Zero(6);
    y0(0) = 1.0 - p_start;
    y0(3) = p_start;
    lindblad::OdeOptions oo;
    oo.rtol = options.tol;
    oo.atol = options.tol;
    lindblad::StepObserver check = [&](const lindblad::DenseStep& step, const Eigen::VectorXcd& y1) {
        lindblad::DensityMatrix rho = lindblad::unvectorize(y1.head(4));
        std::ostringstream ctx;
        ctx << "stroke state at t = " << step.t1() << " s";
        lindblad::check_density_matrix(rho, ctx.str(), {1e-10 + options.tol, options.trace_drift, 1e-10 + options.tol});
    };
    lindblad::OdeStats stats;
    const Eigen::VectorXcd y1 = lindblad::dormand_prince(rhs, 0.0, duration, y0, oo, check, &stats);
    out.steps = stats.accepted;
    out.p_final = y1(3).real();
    out.work = hbar * omega_a * y1(4).real();
    out.heat = hbar * omega_a * y1(5).real();
    out.delta_u = hbar * (w_f * out.p_final - w_i * p_start);
    return out;
}

CycleResult ote_finite_cycle(double alpha, const OteContext& context, double omega_b,
                             const CycleOverrides& overrides, const StageOptions& options) {
    if (std::isinf(alpha) && alpha > 0.0) return ote_ideal_cycle(context, omega_b, overrides);
    if (!(alpha > 0.0)) throw ConfigError("adiabatic parameter alpha must be > 0");
    if (!(omega_b > 0.0)) throw ConfigError("finite-time cycles require omega_b > 0");
    CycleResult r = ote_ideal_cycle(context, omega_b, overrides);
    r.alpha = alpha;
    const double omega_a = r.omega_a;
    const RateTable zero = RateTable::zero(std::min(omega_b, omega_a) * 0.5, omega_a);
    const RateTable& table = overrides.zero_stroke_rates ? zero : context.rate_table();
    r.interpolation_error = overrides.zero_stroke_rates ? 0.0 : table.interpolation_error();

    const StageResult a = finite_time_stage(Stage::A, alpha, omega_a, omega_b, r.p_hot, table, options);
    const StageResult c = finite_time_stage(Stage::C, alpha, omega_a, omega_b, r.p_cold, table, options);
    r.W_A = a.work;
    r.W_C = c.work;
    r.Q_A = a.heat;
    r.Q_C = c.heat;
    r.Q_B = hbar * omega_b * (r.p_cold - a.p_final);
    r.Q_D = hbar * omega_a * (r.p_hot - c.p_final);
    r.W_wf = r.W_A + r.W_C;
    // Heaviside accounting with Theta(0) = 0
    r.Q_abs = r.Q_D + (r.Q_A > 0.0 ? r.Q_A : 0.0) + (r.Q_C > 0.0 ? r.Q_C : 0.0);
    r.eta = r.Q_abs > 0.0 ? -r.W_wf / r.Q_abs : 0.0;
    r.first_law_residual = std::max(std::abs(a.first_law_residual()), std::abs(c.first_law_residual()));
    return r;
}

CycleResult evaluate_cycle(const CycleSpec& spec, const OteContext* context) {
    if (spec.mode == CycleMode::standard) return si_qoc(spec.omega_a, spec.omega_b, spec.T1, spec.T2);
    if (!context) throw ConfigError("out-of-equilibrium cycles need an environment context");
    if (spec.mode == CycleMode::ote_ideal) return ote_ideal_cycle(*context, spec.omega_b, spec.overrides);
    return ote_finite_cycle(spec.alpha, *context, spec.omega_b, spec.overrides, spec.stage);
}

} // namespace ote::cycle
