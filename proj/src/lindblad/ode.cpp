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
#include "ote/lindblad/ode.hpp"

namespace ote::lindblad {

namespace {

// Dormand-Prince tableau
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                 a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;
// continuous extension (Hairer, Norsett, Wanner)
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

double error_norm(const Eigen::VectorXcd& err, const Eigen::VectorXcd& y0, const Eigen::VectorXcd& y1,
                  const OdeOptions& o) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < err.size(); ++i) {
        const double sc = o.atol + o.rtol * std::max(std::abs(y0(i)), std::abs(y1(i)));
        const double r = std::abs(err(i)) / sc;
        s += r * r;
    }
    return std::sqrt(s / std::max<Eigen::Index>(1, err.size()));
}

} // namespace

Eigen::VectorXcd DenseStep::evaluate(double t) const {
    const double th = h == 0.0 ? 0.0 : (t - t0) / h;
    const double th1 = 1.0 - th;
    return r1 + th * (r2 + th1 * (r3 + th * (r4 + th1 * r5)));
}

Eigen::VectorXcd dormand_prince(const OdeRhs& rhs, double t0, double t1, const Eigen::VectorXcd& y0,
                                const OdeOptions& o, const StepObserver& observer, OdeStats* stats) {
    OdeStats local;
    OdeStats& st = stats ? *stats : local;
    const Eigen::Index n = y0.size();
    Eigen::VectorXcd y = y0;
    if (!(t1 > t0)) return y;

    Eigen::VectorXcd k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), yt(n), y1(n), err(n);
    auto f = [&](double t, const Eigen::VectorXcd& x, Eigen::VectorXcd& d) {
        d.resize(n);
        rhs(t, x, d);
        ++st.evaluations;
    };

    const double span = t1 - t0;
    double h = o.initial_step;
    f(t0, y, k1);
    if (h <= 0.0) {
        // Hairer's starting-step heuristic, first stage only
        double d0 = 0.0, dd = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double sc = o.atol + o.rtol * std::abs(y(i));
            d0 += std::norm(y(i)) / (sc * sc);
            dd += std::norm(k1(i)) / (sc * sc);
        }
        d0 = std::sqrt(d0 / std::max<Eigen::Index>(1, n));
        dd = std::sqrt(dd / std::max<Eigen::Index>(1, n));
        h = (d0 < 1e-5 || dd < 1e-5) ? 1e-6 * span : 0.01 * d0 / dd;
        h = std::min(h, span);
    }
    if (o.max_step > 0.0) h = std::min(h, o.max_step);

    double t = t0;
    double fac_prev = 1e-4;
    bool last_rejected = false;
    const double hmin = o.min_step_relative * std::max(span, std::abs(t0));
    while (t < t1) {
        if (st.accepted + st.rejected >= o.max_steps) {
            std::ostringstream msg;
            msg << "integrator exhausted " << o.max_steps << " steps at t = " << t;
            throw StiffnessError(msg.str(), t);
        }
        bool final_step = false;
        if (t + h >= t1 || t1 - (t + h) < hmin) {
            h = t1 - t;
            final_step = true;
        }
        if (h < hmin && !final_step) {
            std::ostringstream msg;
            msg << "step size underflow (h = " << h << ") at t = " << t;
            throw StiffnessError(msg.str(), t);
        }
        yt = y + h * a21 * k1;
        f(t + c2 * h, yt, k2);
        yt = y + h * (a31 * k1 + a32 * k2);
        f(t + c3 * h, yt, k3);
        yt = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
        f(t + c4 * h, yt, k4);
        yt = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
        f(t + c5 * h, yt, k5);
        yt = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
        f(t + h, yt, k6);
        y1 = y + h * (a71 * k1 + a73 * k3 + a74 * k4 + a75 * k5 + a76 * k6);
        f(t + h, y1, k7);
        err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        const double en = error_norm(err, y, y1, o);
        if (!std::isfinite(en)) {
            std::ostringstream msg;
            msg << "non-finite error estimate at t = " << t;
            throw StiffnessError(msg.str(), t);
        }
        if (en <= 1.0) {
            // PI step-size control
            double fac = 0.9 * std::pow(std::max(en, 1e-10), -0.7 / 5.0) * std::pow(fac_prev, 0.4 / 5.0);
            fac = std::clamp(fac, 0.2, 10.0);
            if (last_rejected) fac = std::min(fac, 1.0);
            fac_prev = std::max(en, 1e-4);
            if (observer) {
                DenseStep ds;
                ds.t0 = t;
                ds.h = h;
                ds.r1 = y;
                ds.r2 = y1 - y;
                ds.r3 = h * k1 - ds.r2;
                ds.r4 = ds.r2 - h * k7 - ds.r3;
                ds.r5 = h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);
                observer(ds, y1);
            }
            t = final_step ? t1 : t + h;
            y = y1;
            k1 = k7;
            ++st.accepted;
            last_rejected = false;
            h *= fac;
            if (o.max_step > 0.0) h = std::min(h, o.max_step);
        } else {
            ++st.rejected;
            last_rejected = true;
            h *= std::max(0.2, 0.9 * std::pow(en, -0.2));
            if (h < hmin) {
                std::ostringstream msg;
                msg << "step size underflow (h = " << h << ") at t = " << t;
                throw StiffnessError(msg.str(), t);
            }
        }
    }
    return y;
}

} // namespace ote::lindblad
