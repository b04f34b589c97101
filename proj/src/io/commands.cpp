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
#include <filesystem>
#include <limits>
#include <memory>
#include <sstream>

#include "ote/cycle/sweep.hpp"
#include "ote/em/rates.hpp"
#include "ote/errors.hpp"
#include "ote/io/commands.hpp"

namespace ote::io {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

std::vector<Column> cycle_columns() {
    return {{"mode", "1"},     {"k", "1"},         {"omega_b", "rad/s"}, {"alpha", "1/s"},    {"W_wf", "J"},
            {"W_extracted", "J"}, {"Q_abs", "J"},  {"eta", "1"},         {"pwc", "1"},        {"theta_wf", "K"},
            {"T_env_b", "K"},  {"p_hot", "1"},     {"p_cold", "1"},      {"W_A", "J"},        {"W_C", "J"},
            {"Q_A", "J"},      {"Q_C", "J"},       {"Q_D", "J"},         {"first_law_residual", "J"},
            {"failed", "1"}};
}

double mode_code(cycle::CycleMode m) {
    return m == cycle::CycleMode::standard ? 0.0 : m == cycle::CycleMode::ote_ideal ? 1.0 : 2.0;
}

std::vector<double> cycle_row(cycle::CycleMode mode, double k, double omega_a, double alpha,
                              const std::optional<cycle::CycleResult>& r) {
    if (!r) {
        std::vector<double> row(cycle_columns().size(), nan);
        row[0] = mode_code(mode);
        row[1] = k;
        row[2] = k * omega_a;
        row[3] = alpha;
        row.back() = 1.0;
        return row;
    }
    return {mode_code(mode), r->k(),      r->omega_b, r->alpha,  r->W_wf,  -r->W_wf, r->Q_abs,
            r->eta,          r->pwc_satisfied ? 1.0 : 0.0, r->theta_wf.kelvin(), r->T_env_at_b, r->p_hot,
            r->p_cold,       r->W_A,      r->W_C,      r->Q_A,    r->Q_C,   r->Q_D,   r->first_law_residual,
            0.0};
}

cycle::CycleSpec spec_from(const RunConfig& c) {
    cycle::CycleSpec s;
    s.mode = c.cycle.mode;
    s.omega_a = c.omega_a();
    s.omega_b = c.cycle.k * s.omega_a;
    s.alpha = c.cycle.mode == cycle::CycleMode::ote_finite ? c.cycle.alpha : cycle::infinite_alpha;
    s.T1 = c.environment.slab.temperature;
    s.T2 = c.environment.blackbody_temperature;
    s.stage.tol = c.cycle.tol;
    return s;
}

std::unique_ptr<cycle::OteContext> make_context(const RunConfig& c, bool with_table) {
    auto opts = context_options(c);
    opts.build_rate_table = with_table;
    return std::make_unique<cycle::OteContext>(c.environment, build_network(c), opts);
}

void record_failures(ResultTable& t, const std::vector<cycle::SweepRow>& rows, const std::string& prefix) {
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].result) t.set_metadata(prefix + "error.row" + std::to_string(i), rows[i].error);
}

void record_metrics(ResultTable& t, const cycle::PerformanceMetrics& m, const std::string& prefix) {
    auto num = [](double v) {
        std::ostringstream s;
        s.precision(17);
        s << v;
        return s.str();
    };
    t.set_metadata(prefix + "max_work[J]", num(m.max_work));
    t.set_metadata(prefix + "k_at_max_work[1]", num(m.k_at_max_work));
    t.set_metadata(prefix + "eta_at_max_work[1]", num(m.eta_at_max_work));
    t.set_metadata(prefix + "work_at_max_eta[J]", num(m.work_at_max_eta));
    t.set_metadata(prefix + "positive_work", m.positive_work ? "true" : "false");
}

ResultTable run_rates(const RunConfig& c) {
    ResultTable t;
    t.columns = {{"omega", "rad/s"}, {"omega_over_omega_s", "1"}, {"gamma_plus", "1/s"}, {"gamma_minus", "1/s"},
                 {"T_env", "K"},     {"error", "1/s"},           {"failed", "1"}};
    const auto net = build_network(c);
    const double ws = c.omega_s();
    const int n = c.rates.points;
    for (int i = 0; i < n; ++i) {
        const double f = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
        const double ratio = c.rates.logarithmic
                                 ? c.rates.from_ratio * std::pow(c.rates.to_ratio / c.rates.from_ratio, f)
                                 : c.rates.from_ratio + (c.rates.to_ratio - c.rates.from_ratio) * f;
        const double w = ratio * ws;
        const auto& wf = net.working_fluid;
        const auto r = em::transition_rates(wf.dipole, wf.dipole, w, wf.position, wf.position, c.environment);
        double temp = nan, failed = 0.0;
        try {
            temp = em::effective_temperature(r.gamma_plus.real(), r.gamma_minus.real(), w).kelvin();
        } catch (const InvertedRatesError& e) {
            failed = 1.0;
            t.set_metadata("error.row" + std::to_string(i), e.what());
        }
        t.add_row({w, ratio, r.gamma_plus.real(), r.gamma_minus.real(), temp, r.error_estimate, failed});
    }
    return t;
}

ResultTable run_steady(const RunConfig& c) {
    const auto ctx = make_context(c, false);
    const auto& net = ctx->network();
    const auto& rho = ctx->steady_state();
    ResultTable t;
    t.columns = {{"omega_a", "rad/s"}, {"theta_wf", "K"}, {"beta_wf", "1/J"}, {"p_e", "1"},
                 {"p_aux0", "1"},      {"p_aux1", "1"},   {"p_aux2", "1"},    {"lambda", "rad/s"},
                 {"T_env_omega_a", "K"}, {"max_coherence", "1"}};
    const Eigen::MatrixXcd q = lindblad::reduced_working_fluid(net, rho);
    double pa[3] = {nan, nan, nan};
    if (net.auxiliary) {
        const Eigen::MatrixXcd m = lindblad::reduced_auxiliary(net, rho);
        for (int i = 0; i < 3; ++i) pa[i] = m(i, i).real();
    }
    double coh = 0.0;
    for (Eigen::Index i = 0; i < rho.rows(); ++i)
        for (Eigen::Index j = 0; j < rho.cols(); ++j)
            if (i != j) coh = std::max(coh, std::abs(rho(i, j)));
    const double lambda = ctx->model().couplings.empty() ? 0.0 : ctx->model().couplings.front().lambda;
    t.add_row({ctx->omega_a(), ctx->theta_wf().kelvin(), ctx->theta_wf().beta(), q(1, 1).real(), pa[0], pa[1], pa[2],
               lambda, ctx->t_env(ctx->omega_a()).kelvin(), coh});
    return t;
}

ResultTable run_cycle(const RunConfig& c) {
    const auto spec = spec_from(c);
    std::unique_ptr<cycle::OteContext> ctx;
    if (spec.mode != cycle::CycleMode::standard) ctx = make_context(c, spec.mode == cycle::CycleMode::ote_finite);
    ResultTable t;
    t.columns = cycle_columns();
    t.add_row(cycle_row(spec.mode, c.cycle.k, spec.omega_a, spec.alpha, cycle::evaluate_cycle(spec, ctx.get())));
    return t;
}

ResultTable run_sweep(const RunConfig& c, const RunOptions& o) {
    auto spec = spec_from(c);
    std::unique_ptr<cycle::OteContext> ctx;
    const bool over_alpha = c.cycle.sweep == SweepOver::alpha;
    if (over_alpha) {
        spec.mode = cycle::CycleMode::ote_finite;
        if (c.cycle.alpha_grid.empty()) throw ConfigError("config key 'cycle.alpha_grid': required for alpha sweeps");
    }
    if (spec.mode != cycle::CycleMode::standard) ctx = make_context(c, spec.mode == cycle::CycleMode::ote_finite);
    const auto grid = over_alpha ? c.cycle.alpha_grid : c.k_grid();
    const auto rows = cycle::sweep(spec, ctx.get(), over_alpha ? cycle::SweepVariable::alpha : cycle::SweepVariable::k,
                                   grid, o.threads);
    ResultTable t;
    t.columns = cycle_columns();
    for (const auto& r : rows)
        t.add_row(cycle_row(spec.mode, over_alpha ? c.cycle.k : r.value, spec.omega_a, over_alpha ? r.value : spec.alpha,
                            r.result));
    record_failures(t, rows, "");
    if (!over_alpha) record_metrics(t, cycle::performance_metrics(rows), "");
    return t;
}

// Long-format table of work and efficiency versus k for the standard cycle and every alpha.
ResultTable reproduce_k_curves(const RunConfig& c, const RunOptions& o) {
    const auto ctx = make_context(c, !c.cycle.alpha_grid.empty());
    auto spec = spec_from(c);
    const auto grid = c.k_grid();
    ResultTable t;
    t.columns = cycle_columns();
    auto add = [&](cycle::CycleMode mode, double alpha, const std::string& label) {
        spec.mode = mode;
        spec.alpha = alpha;
        const auto rows = cycle::sweep(spec, ctx.get(), cycle::SweepVariable::k, grid, o.threads);
        for (const auto& r : rows) t.add_row(cycle_row(mode, r.value, spec.omega_a, alpha, r.result));
        record_failures(t, rows, label + ".");
        record_metrics(t, cycle::performance_metrics(rows), label + ".");
    };
    add(cycle::CycleMode::standard, cycle::infinite_alpha, "si_qoc");
    add(cycle::CycleMode::ote_ideal, cycle::infinite_alpha, "ote_alpha_inf");
    for (double a : c.cycle.alpha_grid) {
        std::ostringstream label;
        label << "ote_alpha_" << a;
        add(cycle::CycleMode::ote_finite, a, label.str());
    }
    return t;
}

ResultTable reproduce_fig6(const RunConfig& c, const RunOptions& o) {
    if (c.cycle.alpha_grid.empty()) throw ConfigError("config key 'cycle.alpha_grid': required for fig6");
    const auto ctx = make_context(c, true);
    auto spec = spec_from(c);
    const auto grid = c.k_grid();
    spec.mode = cycle::CycleMode::standard;
    const auto qoc = cycle::performance_metrics(cycle::sweep(spec, nullptr, cycle::SweepVariable::k, grid, o.threads));
    ResultTable t;
    t.columns = {{"alpha", "1/s"},    {"eta_MW_ote", "1"}, {"W_Meta_ote", "J"}, {"W_max_ote", "J"},
                 {"eta_MW_qoc", "1"}, {"W_Meta_qoc", "J"}, {"W_max_qoc", "J"}, {"failed_points", "1"}};
    spec.mode = cycle::CycleMode::ote_finite;
    std::vector<double> alphas = c.cycle.alpha_grid;
    alphas.push_back(cycle::infinite_alpha);
    for (double a : alphas) {
        spec.alpha = a;
        const auto rows = cycle::sweep(spec, ctx.get(), cycle::SweepVariable::k, grid, o.threads);
        const auto m = cycle::performance_metrics(rows);
        double failed = 0.0;
        for (const auto& r : rows) failed += r.result ? 0.0 : 1.0;
        t.add_row({a, m.eta_at_max_work, m.work_at_max_eta, m.max_work, qoc.eta_at_max_work, qoc.work_at_max_eta,
                   qoc.max_work, failed});
    }
    return t;
}

ResultTable reproduce_sec4(const RunConfig& c, const RunOptions& o) {
    const auto ctx = make_context(c, false);
    auto spec = spec_from(c);
    const auto grid = c.k_grid();
    spec.mode = cycle::CycleMode::standard;
    const auto qoc = cycle::performance_metrics(cycle::sweep(spec, nullptr, cycle::SweepVariable::k, grid, o.threads));
    spec.mode = cycle::CycleMode::ote_ideal;
    const auto ote = cycle::performance_metrics(cycle::sweep(spec, ctx.get(), cycle::SweepVariable::k, grid, o.threads));
    const double T1 = c.environment.slab.temperature, T2 = c.environment.blackbody_temperature;
    ResultTable t;
    t.columns = {{"omega_s", "rad/s"}, {"omega_a", "rad/s"}, {"T_env_half", "K"}, {"theta_wf", "K"},
                 {"W_max_qoc", "J"},   {"k_max_qoc", "1"},   {"W_max_ote", "J"},  {"k_max_ote", "1"},
                 {"ratio", "1"},       {"eta_C", "1"}};
    t.add_row({c.omega_s(), ctx->omega_a(), ctx->t_env(0.5 * ctx->omega_a()).kelvin(), ctx->theta_wf().kelvin(),
               qoc.max_work, qoc.k_at_max_work, ote.max_work, ote.k_at_max_work,
               qoc.max_work > 0.0 ? ote.max_work / qoc.max_work : nan, 1.0 - T2 / T1});
    return t;
}

} // namespace

Command parse_command(const std::string& name) {
    if (name == "rates") return Command::rates;
    if (name == "steady") return Command::steady;
    if (name == "cycle") return Command::cycle;
    if (name == "sweep") return Command::sweep;
    if (name == "reproduce") return Command::reproduce;
    throw ConfigError("unknown command '" + name + "' (expected rates, steady, cycle, sweep or reproduce)");
}

std::string to_string(Command c) {
    switch (c) {
    case Command::rates: return "rates";
    case Command::steady: return "steady";
    case Command::cycle: return "cycle";
    case Command::sweep: return "sweep";
    case Command::reproduce: return "reproduce";
    }
    return "unknown";
}

ResultTable run(Command command, const RunConfig& config, const RunOptions& options) {
    ResultTable t;
    switch (command) {
    case Command::rates: t = run_rates(config); break;
    case Command::steady: t = run_steady(config); break;
    case Command::cycle: t = run_cycle(config); break;
    case Command::sweep: t = run_sweep(config, options); break;
    case Command::reproduce: throw ConfigError("reproduce needs a target (fig5, fig6, fig7 or sec4)");
    }
    stamp_metadata(t, config, to_string(command));
    return t;
}

ResultTable reproduce(const std::string& target, const RunConfig& config, const RunOptions& options) {
    ResultTable t;
    if (target == "fig5" || target == "fig7") t = reproduce_k_curves(config, options);
    else if (target == "fig6") t = reproduce_fig6(config, options);
    else if (target == "sec4") t = reproduce_sec4(config, options);
    else throw ConfigError("unknown reproduce target '" + target + "' (expected fig5, fig6, fig7 or sec4)");
    stamp_metadata(t, config, "reproduce " + target);
    return t;
}

std::string preset_path(const std::string& target, const std::string& preset_dir) {
    const std::string dir = preset_dir.empty() ? default_preset_dir() : preset_dir;
    return (std::filesystem::path(dir) / (target + ".yaml")).string();
}

} // namespace ote::io
