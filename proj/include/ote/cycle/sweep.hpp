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

// sweep.hpp - parameter sweeps over k or alpha and the metrics read off them

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ote/cycle/otto.hpp"

namespace ote::cycle {

enum class SweepVariable { k, alpha };

struct SweepRow {
    double value = 0.0; // k or alpha
    std::optional<CycleResult> result;
    std::string error; // set when the point failed
};

/// One row per grid point in grid order. Points may be evaluated concurrently on up to
/// `threads` workers; failures are recorded in the row and do not stop the sweep.
std::vector<SweepRow> sweep(const CycleSpec& spec, const OteContext* context, SweepVariable variable,
                            const std::vector<double>& grid, int threads = 1);

/// n uniform points in (0, 1]: k_i = i / n.
std::vector<double> uniform_k_grid(int n = 200);

/// n log-spaced values from lo to hi inclusive.
std::vector<double> geometric_grid(double lo, double hi, int n);

struct PerformanceMetrics {
    double max_work = 0.0;        // J, extracted
    double k_at_max_work = 0.0;
    double eta_at_max_work = 0.0;
    double work_at_max_eta = 0.0; // J, extracted
    double k_at_max_eta = 0.0;
    bool positive_work = false;   // false: no grid point extracts work
};

/// Expects a k-sweep at fixed alpha. The maximum-work point is refined with a parabola through
/// its neighbours. work_at_max_eta is 0 when the most efficient producing point borders a
/// point that no longer produces work in the direction of higher efficiency, which is the
/// zero crossing of the work curve. A single producing point supplies both metrics.
PerformanceMetrics performance_metrics(const std::vector<SweepRow>& rows);

} // namespace ote::cycle
