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

// otto.hpp - standard and out-of-equilibrium quantum Otto cycles

#pragma once

#include <limits>
#include <optional>

#include "ote/cycle/rate_table.hpp"
#include "ote/em/environment.hpp"
#include "ote/lindblad/model.hpp"
#include "ote/lindblad/steady_state.hpp"
#include "ote/temperature.hpp"

namespace ote::cycle {

inline constexpr double infinite_alpha = std::numeric_limits<double>::infinity();

enum class CycleMode { standard, ote_ideal, ote_finite };

struct CycleResult {
    double omega_a = 0.0;
    double omega_b = 0.0;
    double alpha = infinite_alpha;
    double W_wf = 0.0;  // J, work done on the fluid; extracted work is -W_wf
    double Q_abs = 0.0; // J
    double eta = 0.0;
    bool pwc_satisfied = false;
    EffectiveTemperature theta_wf; // hot-side temperature of the fluid
    double T_env_at_b = 0.0;       // K, NaN at omega_b = 0
    double p_hot = 0.0;            // p_e entering stroke A
    double p_cold = 0.0;           // p_e entering stroke C
    double W_A = 0.0, W_C = 0.0, Q_A = 0.0, Q_B = 0.0, Q_C = 0.0, Q_D = 0.0;
    double first_law_residual = 0.0; // max over strokes, J
    double interpolation_error = 0.0; // relative, rate table

    double k() const { return omega_b / omega_a; }
    double extracted_work() const { return -W_wf; }
};

/// Ideal cycle between T1 (hot bath at omega_a) and T2 (cold bath at omega_b).
CycleResult si_qoc(double omega_a, double omega_b, double T1, double T2);

struct ContextOptions {
    lindblad::ModelOptions model;
    lindblad::SteadyStateOptions steady;
    double omega_min_ratio = 1e-3; // lower end of the stroke rate table, relative to omega_a
    int rate_points = 64;
    bool build_rate_table = true;
};

/// Everything a cycle evaluation needs from the environment, computed once: the composite
/// steady state at omega_a and the working-fluid rate table. Immutable after construction and
/// safe to share between threads.
class OteContext {
public:
    OteContext(const em::OteEnvironment& env, const lindblad::EmitterNetwork& network,
               const ContextOptions& options = {});

    const em::OteEnvironment& environment() const { return env_; }
    const lindblad::EmitterNetwork& network() const { return network_; }
    double omega_a() const { return network_.working_fluid.omega; }
    EffectiveTemperature theta_wf() const { return theta_wf_; }
    const lindblad::DensityMatrix& steady_state() const { return rho_ss_; }
    const lindblad::NetworkModel& model() const { return model_; }
    const RateTable& rate_table() const;

    /// Single-emitter rates and temperature of the working fluid at omega (direct quadrature).
    em::TransitionRates rates(double omega) const;
    EffectiveTemperature t_env(double omega) const;

private:
    em::OteEnvironment env_;
    lindblad::EmitterNetwork network_;
    lindblad::NetworkModel model_;
    lindblad::DensityMatrix rho_ss_;
    EffectiveTemperature theta_wf_;
    std::optional<RateTable> table_;
};

struct CycleOverrides {
    std::optional<EffectiveTemperature> theta_wf;
    std::optional<EffectiveTemperature> t_env;
    bool zero_stroke_rates = false; // finite strokes without dissipation
};

CycleResult ote_ideal_cycle(const OteContext& context, double omega_b, const CycleOverrides& overrides = {});

enum class Stage { A, C };

struct StageOptions {
    double tol = 1e-9;
    double trace_drift = 1e-8;
};

struct StageResult {
    double work = 0.0; // J
    double heat = 0.0; // J
    double p_start = 0.0;
    double p_final = 0.0;
    double delta_u = 0.0; // J, from the endpoint states
    std::size_t steps = 0;

    double first_law_residual() const { return delta_u - work - heat; }
};

/// Linear ramp between omega_a and omega_b over 1/alpha (A: down, C: up) with the fluid coupled
/// to the field only. alpha = infinity is the frozen-population limit, evaluated without an ODE.
StageResult finite_time_stage(Stage stage, double alpha, double omega_a, double omega_b, double p_start,
                              const RateTable& rates, const StageOptions& options = {});

CycleResult ote_finite_cycle(double alpha, const OteContext& context, double omega_b,
                             const CycleOverrides& overrides = {}, const StageOptions& options = {});

struct CycleSpec {
    CycleMode mode = CycleMode::ote_ideal;
    double omega_a = 0.0;
    double omega_b = 0.0;
    double alpha = infinite_alpha;
    double T1 = 0.0; // standard mode
    double T2 = 0.0;
    CycleOverrides overrides;
    StageOptions stage;
};

/// Dispatches on spec.mode; context may be null for the standard cycle.
CycleResult evaluate_cycle(const CycleSpec& spec, const OteContext* context);

} // namespace ote::cycle
