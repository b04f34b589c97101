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
#include <atomic>
#include <cmath>
#include <thread>

#include "ote/cycle/sweep.hpp"
#include "ote/errors.hpp"

namespace ote::cycle {

std::vector<SweepRow> sweep(const CycleSpec& spec, const OteContext* context, SweepVariable variable,
                            const std::vector<double>& grid, int threads) {
    if (grid.empty()) throw ConfigError("sweep grid is empty");
    for (double v : grid) {
        if (variable == SweepVariable::k && !(v >= 0.0 && v <= 1.0))
            throw ConfigError("k grid values must lie in [0, 1]");
        if (variable == SweepVariable::alpha && !(v > 0.0)) throw ConfigError("alpha grid values must be > 0");
    }
    const double omega_a = spec.mode == CycleMode::standard || !context ? spec.omega_a : context->omega_a();

    std::vector<SweepRow> rows(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            CycleSpec s = spec;
            s.omega_a = omega_a;
            if (variable == SweepVariable::k)
                s.omega_b = grid[i] * omega_a;
            else
                s.alpha = grid[i];
            rows[i].value = grid[i];
            try {
                rows[i].result = evaluate_cycle(s, context);
            } catch (const std::exception& e) {
                rows[i].error = e.what();
            }
        }
    };
    const int n = std::clamp(threads, 1, static_cast<int>(grid.size()));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return rows;
}

std::vector<double> uniform_k_grid(int n) {
    if (n < 1) throw ConfigError("k grid needs at least one point");
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = static_cast<double>(i + 1) / n;
    return out;
}

std::vector<double> geometric_grid(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi >= lo) || n < 1) throw ConfigError("geometric grid needs 0 < lo <= hi and n >= 1");
    if (n == 1) return {lo};
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    out.back() = hi;
    return out;
}

PerformanceMetrics performance_metrics(const std::vector<SweepRow>& rows) {
    std::vector<double> k, w, eta;
    for (const auto& r : rows) {
        if (!r.result) continue;
        k.push_back(r.value);
        w.push_back(r.result->extracted_work());
        eta.push_back(r.result->eta);
    }
    // sort by k so neighbours are grid neighbours
    std::vector<std::size_t> idx(k.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return k[a] < k[b]; });
    auto permute = [&](std::vector<double>& v) {
        std::vector<double> o(v.size());
        for (std::size_t i = 0; i < idx.size(); ++i) o[i] = v[idx[i]];
        v = std::move(o);
    };
    permute(k);
    permute(w);
    permute(eta);

    PerformanceMetrics m;
    const std::size_t n = k.size();
    std::size_t imax = n;
    for (std::size_t i = 0; i < n; ++i)
        if (w[i] > 0.0 && (imax == n || w[i] > w[imax])) imax = i;
    if (imax == n) return m;
    m.positive_work = true;
    m.max_work = w[imax];
    m.k_at_max_work = k[imax];
    m.eta_at_max_work = eta[imax];
    if (imax > 0 && imax + 1 < n) {
        const double x0 = k[imax - 1], x1 = k[imax], x2 = k[imax + 1];
        const double y0 = w[imax - 1], y1 = w[imax], y2 = w[imax + 1];
        const double denom = (x0 - x1) * (x0 - x2) * (x1 - x2);
        const double a = (x2 * (y1 - y0) + x1 * (y0 - y2) + x0 * (y2 - y1)) / denom;
        const double b = (x2 * x2 * (y0 - y1) + x1 * x1 * (y2 - y0) + x0 * x0 * (y1 - y2)) / denom;
        if (a < 0.0) {
            const double xs = std::clamp(-b / (2.0 * a), x0, x2);
            auto lagrange = [&](double e0, double e1, double e2) {
                return e0 * (xs - x1) * (xs - x2) / ((x0 - x1) * (x0 - x2)) +
                       e1 * (xs - x0) * (xs - x2) / ((x1 - x0) * (x1 - x2)) +
                       e2 * (xs - x0) * (xs - x1) / ((x2 - x0) * (x2 - x1));
            };
            m.k_at_max_work = xs;
            m.max_work = std::max(y1, lagrange(y0, y1, y2));
            m.eta_at_max_work = lagrange(eta[imax - 1], eta[imax], eta[imax + 1]);
        }
    }

    std::size_t ieta = n;
    for (std::size_t i = 0; i < n; ++i)
        if (w[i] > 0.0 && (ieta == n || eta[i] > eta[ieta])) ieta = i;
    m.k_at_max_eta = k[ieta];
    m.work_at_max_eta = w[ieta];
    // the higher-efficiency neighbour is the one with the larger eta
    std::optional<std::size_t> up;
    if (ieta > 0 && eta[ieta - 1] > eta[ieta]) up = ieta - 1;
    if (ieta + 1 < n && eta[ieta + 1] > eta[ieta] && (!up || eta[ieta + 1] > eta[*up])) up = ieta + 1;
    const auto producing = std::count_if(w.begin(), w.end(), [](double x) { return x > 0.0; });
    if (producing > 1 && up && w[*up] <= 0.0) m.work_at_max_eta = 0.0;
    return m;
}

} // namespace ote::cycle
