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

#include "ote/cycle/rate_table.hpp"
#include "ote/em/rates.hpp"
#include "ote/errors.hpp"

namespace ote::cycle {

namespace {

double pchip_end_slope(double h0, double h1, double m0, double m1) {
    double d = ((2.0 * h0 + h1) * m0 - h0 * m1) / (h0 + h1);
    if (d * m0 <= 0.0) return 0.0;
    if (m0 * m1 <= 0.0 && std::abs(d) > 3.0 * std::abs(m0)) return 3.0 * m0;
    return d;
}

bool all_positive(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x > 0.0; });
}

std::vector<double> maybe_log(const std::vector<double>& v, bool logarithmic) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = logarithmic ? std::log(v[i]) : v[i];
    return out;
}

} // namespace

Pchip::Pchip(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n) throw ConfigError("pchip: need at least two matching samples");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1])) throw ConfigError("pchip: abscissae must be strictly increasing");
    d_.assign(n, 0.0);
    std::vector<double> h(n - 1), m(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x_[i + 1] - x_[i];
        m[i] = (y_[i + 1] - y_[i]) / h[i];
    }
    if (n == 2) {
        d_[0] = d_[1] = m[0];
        return;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (m[i - 1] * m[i] <= 0.0) continue;
        const double w1 = 2.0 * h[i] + h[i - 1], w2 = h[i] + 2.0 * h[i - 1];
        d_[i] = (w1 + w2) / (w1 / m[i - 1] + w2 / m[i]);
    }
    d_[0] = pchip_end_slope(h[0], h[1], m[0], m[1]);
    d_[n - 1] = pchip_end_slope(h[n - 2], h[n - 3], m[n - 2], m[n - 3]);
}

double Pchip::operator()(double x) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = it == x_.begin() ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
    i = std::min(i, x_.size() - 2);
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y_[i] + (t3 - 2 * t2 + t) * h * d_[i] + (-2 * t3 + 3 * t2) * y_[i + 1] +
           (t3 - t2) * h * d_[i + 1];
}

RateTable::RateTable(std::vector<double> omega, std::vector<double> gamma_plus, std::vector<double> gamma_minus)
    : omega_(std::move(omega)), gp_(std::move(gamma_plus)), gm_(std::move(gamma_minus)) {
    if (omega_.size() < 2 || gp_.size() != omega_.size() || gm_.size() != omega_.size())
        throw ConfigError("rate table: need at least two samples with matching rates");
    if (!(omega_.front() > 0.0)) throw ConfigError("rate table: frequencies must be > 0");
    log_plus_ = all_positive(gp_);
    log_minus_ = all_positive(gm_);
    const auto x = maybe_log(omega_, true);
    plus_ = Pchip(x, maybe_log(gp_, log_plus_));
    minus_ = Pchip(x, maybe_log(gm_, log_minus_));

    // half-density comparison, endpoints always kept
    const std::size_t n = omega_.size();
    if (n >= 5) {
        std::vector<double> hx, hp, hm;
        for (std::size_t i = 0; i < n; i += 2) {
            hx.push_back(x[i]);
            hp.push_back(gp_[i]);
            hm.push_back(gm_[i]);
        }
        if ((n - 1) % 2 != 0) {
            hx.push_back(x[n - 1]);
            hp.push_back(gp_[n - 1]);
            hm.push_back(gm_[n - 1]);
        }
        const Pchip half_p(hx, maybe_log(hp, log_plus_)), half_m(hx, maybe_log(hm, log_minus_));
        for (std::size_t i = 1; i < n - 1; i += 2) {
            const double vp = log_plus_ ? std::exp(half_p(x[i])) : half_p(x[i]);
            const double vm = log_minus_ ? std::exp(half_m(x[i])) : half_m(x[i]);
            if (gp_[i] != 0.0) interpolation_error_ = std::max(interpolation_error_, std::abs(vp / gp_[i] - 1.0));
            if (gm_[i] != 0.0) interpolation_error_ = std::max(interpolation_error_, std::abs(vm / gm_[i] - 1.0));
        }
    }
}

RateTable RateTable::build(const Eigen::Vector3d& dipole, const em::Position& position, const em::OteEnvironment& env,
                           double omega_min, double omega_max, int points) {
    if (!(omega_min > 0.0) || !(omega_max > omega_min)) throw ConfigError("rate table: need 0 < omega_min < omega_max");
    if (points < 2) throw ConfigError("rate table: need at least two points");
    std::vector<double> w(points), gp(points), gm(points);
    const double lmin = std::log(omega_min), lmax = std::log(omega_max);
    for (int i = 0; i < points; ++i) {
        w[i] = i == points - 1 ? omega_max : std::exp(lmin + (lmax - lmin) * i / (points - 1));
        if (i == 0) w[i] = omega_min;
        const auto r = em::transition_rates(dipole, dipole, w[i], position, position, env);
        gp[i] = r.gamma_plus.real();
        gm[i] = r.gamma_minus.real();
    }
    return RateTable(std::move(w), std::move(gp), std::move(gm));
}

RateTable RateTable::zero(double omega_min, double omega_max) {
    return RateTable({omega_min, omega_max}, {0.0, 0.0}, {0.0, 0.0});
}

void RateTable::check_range(double omega) const {
    const double slack = 1e-12 * omega_.back();
    if (omega < omega_.front() - slack || omega > omega_.back() + slack) {
        std::ostringstream msg;
        msg << "rate table queried at " << omega << " rad/s outside [" << omega_.front() << ", " << omega_.back()
            << "]";
        throw OutOfRangeError(msg.str());
    }
}

double RateTable::eval(const Pchip& p, bool logarithmic, double omega) const {
    check_range(omega);
    const double x = std::log(std::clamp(omega, omega_.front(), omega_.back()));
    return logarithmic ? std::exp(p(x)) : p(x);
}

double RateTable::gamma_plus(double omega) const { return eval(plus_, log_plus_, omega); }
double RateTable::gamma_minus(double omega) const { return eval(minus_, log_minus_, omega); }

} // namespace ote::cycle
