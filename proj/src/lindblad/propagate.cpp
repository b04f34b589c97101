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

#include "ote/errors.hpp"
#include "ote/lindblad/propagate.hpp"

namespace ote::lindblad {

namespace {

void check_emitted(const DensityMatrix& rho, double t, const PropagateOptions& o) {
    const double drift = std::abs(rho.trace() - 1.0);
    if (drift > o.trace_drift) {
        std::ostringstream msg;
        msg << "trace drift " << drift << " at t = " << t << " s exceeds " << o.trace_drift;
        throw InvalidStateError(msg.str());
    }
    std::ostringstream ctx;
    ctx << "state at t = " << t << " s";
    // hermiticity and positivity are only resolved to the integration tolerance
    check_density_matrix(rho, ctx.str(), {1e-10 + o.tol, o.trace_drift, 1e-10 + o.tol});
}

} // namespace

Trajectory propagate(const Generator& generator, const DensityMatrix& rho0, double t0, double t1,
                     const PropagateOptions& options) {
    check_density_matrix(rho0, "initial state");
    const Eigen::Index d = rho0.rows();
    if (!(t1 >= t0)) throw DimensionError("propagate: t1 must not precede t0");

    std::vector<double> outs = options.output_times;
    std::sort(outs.begin(), outs.end());
    for (double to : outs)
        if (to < t0 || to > t1) throw DimensionError("propagate: output time outside the span");

    Trajectory traj;
    auto emit = [&](double t, const Eigen::VectorXcd& v) {
        DensityMatrix rho = unvectorize(v);
        check_emitted(rho, t, options);
        traj.times.push_back(t);
        traj.states.push_back(std::move(rho));
    };

    const Eigen::VectorXcd v0 = vectorize(rho0);
    std::size_t next = 0;
    while (next < outs.size() && outs[next] <= t0) emit(outs[next++], v0);
    if (outs.empty()) emit(t0, v0);
    if (t1 == t0) return traj;

    OdeRhs rhs = [&](double t, const Eigen::VectorXcd& y, Eigen::VectorXcd& dy) {
        const Liouvillian l = generator(t);
        if (l.rows() != d * d || l.cols() != d * d) throw DimensionError("generator size does not match the state");
        dy.noalias() = l * y;
    };
    OdeOptions oo;
    oo.rtol = options.tol;
    oo.atol = options.tol;
    StepObserver obs = [&](const DenseStep& step, const Eigen::VectorXcd& y1) {
        if (outs.empty()) {
            emit(step.t1(), y1);
            return;
        }
        while (next < outs.size() && outs[next] <= step.t1()) {
            const double to = outs[next++];
            emit(to, to == step.t1() ? y1 : step.evaluate(to));
        }
    };
    dormand_prince(rhs, t0, t1, v0, oo, obs, &traj.stats);
    return traj;
}

Trajectory propagate(const Liouvillian& constant, const DensityMatrix& rho0, double t0, double t1,
                     const PropagateOptions& options) {
    return propagate([&constant](double) -> const Liouvillian& { return constant; }, rho0, t0, t1, options);
}

} // namespace ote::lindblad
