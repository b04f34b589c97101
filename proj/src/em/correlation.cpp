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
#include <complex>
#include <sstream>
#include <vector>

#include "ote/constants.hpp"
#include "ote/em/correlation.hpp"
#include "ote/em/quadrature.hpp"
#include "ote/em/scattering.hpp"
#include "ote/errors.hpp"

namespace ote::em {

namespace {

using cplx = std::complex<double>;
constexpr cplx I{0.0, 1.0};
constexpr int kAlphaDim = 36; // alpha1 then alpha2, 9 complex entries each as (re, im)

AngularMoments isotropic_moments() { return {1.0, 0.5, 0.5, 0.0, 0.0, 0.0}; }

AngularMoments bessel_moments(double u, double phi_r) {
    const double j0 = std::cyl_bessel_j(0.0, u);
    const double j1 = std::cyl_bessel_j(1.0, u);
    const double j2 = std::cyl_bessel_j(2.0, u);
    // Averages in the frame psi = phi - phi_r, then rotated back.
    const cplx a_c = I * j1;
    const double a_cc = 0.5 * (j0 - j2);
    const double a_ss = 0.5 * (j0 + j2);
    const double cr = std::cos(phi_r), sr = std::sin(phi_r);
    return {j0,
            a_cc * cr * cr + a_ss * sr * sr,
            a_ss * cr * cr + a_cc * sr * sr,
            (a_cc - a_ss) * cr * sr,
            a_c * cr,
            a_c * sr};
}

AngularMoments quadrature_moments(double u, double phi_r, double rel_tol) {
    auto f = [&](double phi) {
        QVector<12> v;
        const double c = std::cos(phi), s = std::sin(phi);
        const cplx w = std::exp(I * (u * std::cos(phi - phi_r)));
        const cplx vals[6] = {w, w * (c * c), w * (s * s), w * (c * s), w * c, w * s};
        for (int i = 0; i < 6; ++i) {
            v[2 * i] = vals[i].real();
            v[2 * i + 1] = vals[i].imag();
        }
        return v;
    };
    // Split every quarter turn plus roughly one panel per oscillation.
    const int panels = 4 * std::max(1, static_cast<int>(std::ceil(u / (2.0 * constants::pi))));
    std::vector<double> pts(panels + 1);
    for (int i = 0; i <= panels; ++i) pts[i] = 2.0 * constants::pi * i / panels;
    const ToleranceBlock block{0, 12, 0.1 * rel_tol, 1e-3 * rel_tol};
    auto res = integrate_adaptive<12>(f, pts, std::span(&block, 1), 2000);
    if (!res.converged)
        throw ConvergenceError("angular quadrature did not converge", res.error.norm());
    const QVector<12> m = res.value / (2.0 * constants::pi);
    auto at = [&](int i) { return cplx(m[2 * i], m[2 * i + 1]); };
    return {at(0), at(1), at(2), at(3), at(4), at(5)};
}

Eigen::Matrix3cd te_projector(const AngularMoments& m) {
    Eigen::Matrix3cd x = Eigen::Matrix3cd::Zero();
    x(0, 0) = m.ss;
    x(0, 1) = -m.cs;
    x(1, 0) = -m.cs;
    x(1, 1) = m.cc;
    return x;
}

/// <e_TM^mu (e_TM^nu)^dagger> with e_TM^mu = (k z_hat - mu k_z k_hat) / k0, in units k0 = 1.
Eigen::Matrix3cd tm_projector(int mu, int nu, double q, cplx qz, const AngularMoments& m) {
    Eigen::Matrix3cd x;
    const cplx a = static_cast<double>(mu * nu) * qz * std::conj(qz);
    x(0, 0) = a * m.cc;
    x(0, 1) = a * m.cs;
    x(1, 0) = a * m.cs;
    x(1, 1) = a * m.ss;
    x(0, 2) = -static_cast<double>(mu) * qz * q * m.c;
    x(1, 2) = -static_cast<double>(mu) * qz * q * m.s;
    x(2, 0) = -static_cast<double>(nu) * q * std::conj(qz) * m.c;
    x(2, 1) = -static_cast<double>(nu) * q * std::conj(qz) * m.s;
    x(2, 2) = q * q * m.one;
    return x;
}

void pack(QVector<kAlphaDim>& v, int offset, const Eigen::Matrix3cd& m) {
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            v[offset + 2 * (3 * r + c)] = m(r, c).real();
            v[offset + 2 * (3 * r + c) + 1] = m(r, c).imag();
        }
}

Eigen::Matrix3cd unpack(const QVector<kAlphaDim>& v, int offset) {
    Eigen::Matrix3cd m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            m(r, c) = cplx(v[offset + 2 * (3 * r + c)], v[offset + 2 * (3 * r + c) + 1]);
    return m;
}

/// Normalised slab resonance denominator; its zeros are the poles of rho_p.
double pole_measure(Polarization p, double q_kappa, double k0, cplx eps, double thickness) {
    const cplx kz = I * (q_kappa * k0);
    const cplx kzm = decaying_sqrt((eps - 1.0) * (k0 * k0) + kz * kz);
    const cplx a = p == Polarization::TE ? kz : eps * kz;
    const cplx diff = a - kzm, sum = a + kzm;
    const cplx x = 2.0 * I * kzm * thickness;
    const double sh = std::sin(0.5 * x.imag());
    const cplx e(std::expm1(x.real()) * std::cos(x.imag()) - 2.0 * sh * sh, std::exp(x.real()) * std::sin(x.imag()));
    return std::abs(4.0 * a * kzm - diff * diff * e) / (std::norm(sum) + std::norm(diff));
}

/// Breakpoints bracketing guided-mode and surface-mode poles of the evanescent integrand.
void add_pole_breakpoints(std::vector<double>& pts, double q_max, double k0, cplx eps, double thickness) {
    std::vector<double> grid;
    const int n_lin = 400, n_log = 200;
    const double lin_top = std::min(q_max, std::sqrt(std::abs(eps)) + 2.0);
    for (int i = 1; i <= n_lin; ++i) grid.push_back(lin_top * i / n_lin);
    const double lo = 1e-7;
    for (int i = 0; i <= n_log; ++i) grid.push_back(lo * std::pow(q_max / lo, static_cast<double>(i) / n_log));
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    for (Polarization p : {Polarization::TE, Polarization::TM}) {
        auto f = [&](double q) { return pole_measure(p, q, k0, eps, thickness); };
        std::vector<double> vals(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = f(grid[i]);
        for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
            if (!(vals[i] < vals[i - 1] && vals[i] <= vals[i + 1])) continue;
            // Golden-section refinement of the minimum.
            double a = grid[i - 1], b = grid[i + 1];
            const double g = 0.5 * (std::sqrt(5.0) - 1.0);
            double x1 = b - g * (b - a), x2 = a + g * (b - a);
            double f1 = f(x1), f2 = f(x2);
            for (int it = 0; it < 80 && (b - a) > 1e-14 * b; ++it) {
                if (f1 < f2) {
                    b = x2; x2 = x1; f2 = f1; x1 = b - g * (b - a); f1 = f(x1);
                } else {
                    a = x1; x1 = x2; f1 = f2; x2 = a + g * (b - a); f2 = f(x2);
                }
            }
            const double q0 = 0.5 * (a + b);
            const double h = 1e-6 * q0;
            const double slope = std::abs(f(q0 + h) - f(std::max(q0 - h, 0.0))) / (2.0 * h);
            const double f0 = f(q0);
            if (f0 > 0.2) continue; // shallow dip, not a resonance
            double width = slope > 0.0 ? std::max(f0 / slope, 1e-12 * q0) : 1e-6 * q0;
            width = std::min(width, 0.1 * q0);
            pts.push_back(q0);
            for (double s : {1.0, 4.0, 16.0, 64.0, 256.0}) {
                if (q0 - s * width > 0.0) pts.push_back(q0 - s * width);
                if (q0 + s * width < q_max) pts.push_back(q0 + s * width);
            }
        }
    }
}

} // namespace

AngularMoments angular_moments(double u, double phi_r, AngularMode mode) {
    if (u == 0.0) return isotropic_moments();
    return mode == AngularMode::bessel ? bessel_moments(u, phi_r) : quadrature_moments(u, phi_r, 1e-10);
}

CorrelationMatrices correlation_matrices(double omega, const Position& pos_i, const Position& pos_j,
                                         const OteEnvironment& env) {
    if (!(omega > 0.0)) throw NumericalError("correlation_matrices: omega must be > 0");
    if (!(pos_i.z > 0.0 && pos_j.z > 0.0))
        throw GeometryError("correlation_matrices: emitters must sit above the slab (z > 0)");

    const auto& qc = env.quadrature;
    const double k0 = omega / constants::c;
    const cplx eps = permittivity(env.material, omega);
    const double thickness = env.slab.thickness;
    const double dx = pos_i.x - pos_j.x, dy = pos_i.y - pos_j.y;
    const double separation = std::hypot(dx, dy);
    const double phi_r = separation > 0.0 ? std::atan2(dy, dx) : 0.0;
    const double zi = pos_i.z, zj = pos_j.z;
    const double z_sum = zi + zj;

    auto moments_at = [&](double q) {
        if (separation == 0.0) return isotropic_moments();
        return qc.angular == AngularMode::bessel
                   ? bessel_moments(k0 * q * separation, phi_r)
                   : quadrature_moments(k0 * q * separation, phi_r, qc.rel_tol);
    };

    // Propagating sector, q = sin(theta).
    auto propagating = [&](double theta) {
        const double q = std::sin(theta), qz = std::cos(theta);
        const auto m = moments_at(q);
        const cplx ph_minus = std::exp(I * (k0 * qz * (zi - zj)));
        const cplx ph_plus = std::exp(I * (k0 * qz * z_sum));
        Eigen::Matrix3cd a1 = Eigen::Matrix3cd::Zero(), a2 = Eigen::Matrix3cd::Zero();
        for (Polarization p : {Polarization::TE, Polarization::TM}) {
            const auto sc = slab_scattering_normal(p, k0 * qz, omega, eps, thickness);
            const double scattered = std::norm(sc.rho) + std::norm(sc.tau);
            Eigen::Matrix3cd pp, pm, mp, mm;
            if (p == Polarization::TE) {
                pp = pm = mp = mm = te_projector(m);
            } else {
                pp = tm_projector(+1, +1, q, qz, m);
                pm = tm_projector(+1, -1, q, qz, m);
                mp = tm_projector(-1, +1, q, qz, m);
                mm = tm_projector(-1, -1, q, qz, m);
            }
            a1 += ((1.0 - scattered) * ph_minus) * pp;
            a2 += (scattered * ph_minus) * pp + (sc.rho * ph_plus) * pm +
                  (std::conj(sc.rho) * std::conj(ph_plus)) * mp + std::conj(ph_minus) * mm;
        }
        QVector<kAlphaDim> v;
        pack(v, 0, a1 * q);
        pack(v, 18, a2 * q);
        return v;
    };

    // Evanescent sector, q = sqrt(1 + q_kappa^2); only slab emission contributes.
    auto evanescent = [&](double q_kappa) {
        const double q = std::sqrt(1.0 + q_kappa * q_kappa);
        const cplx qz = I * q_kappa;
        const auto m = moments_at(q);
        const double decay = std::exp(-k0 * q_kappa * z_sum);
        Eigen::Matrix3cd a1 = Eigen::Matrix3cd::Zero();
        for (Polarization p : {Polarization::TE, Polarization::TM}) {
            const auto sc = slab_scattering_normal(p, k0 * qz, omega, eps, thickness);
            const Eigen::Matrix3cd x = p == Polarization::TE ? te_projector(m) : tm_projector(+1, +1, q, qz, m);
            a1 += (2.0 * sc.rho.imag() * decay) * x;
        }
        QVector<kAlphaDim> v = QVector<kAlphaDim>::Zero();
        pack(v, 0, a1);
        return v;
    };

    const double abs_floor = 1e-15;
    const ToleranceBlock blocks[2] = {{0, 18, qc.rel_tol, abs_floor}, {18, 18, qc.rel_tol, abs_floor}};

    std::vector<double> pw_pts;
    for (int i = 0; i <= 8; ++i) pw_pts.push_back(0.5 * constants::pi * i / 8);
    auto pw = integrate_adaptive<kAlphaDim>(propagating, pw_pts, blocks, qc.max_subdivisions);

    const double decay_scale = 1.0 / (k0 * z_sum);
    const double q_max = std::max(std::sqrt(qc.cutoff_multiplier * qc.cutoff_multiplier - 1.0),
                                  qc.decay_efolds * decay_scale);
    std::vector<double> ew_pts{0.0, q_max};
    for (double s : {0.25, 1.0, 4.0, 16.0})
        if (s * decay_scale < q_max) ew_pts.push_back(s * decay_scale);
    add_pole_breakpoints(ew_pts, q_max, k0, eps, thickness);
    std::sort(ew_pts.begin(), ew_pts.end());
    ew_pts.erase(std::unique(ew_pts.begin(), ew_pts.end()), ew_pts.end());
    auto ew = integrate_adaptive<kAlphaDim>(evanescent, ew_pts, std::span(blocks, 1), qc.max_subdivisions);

    if (!pw.converged || !ew.converged) {
        std::ostringstream msg;
        msg << "correlation quadrature did not converge within " << qc.max_subdivisions
            << " subdivisions at omega = " << omega << " rad/s";
        throw ConvergenceError(msg.str(), (pw.error + ew.error).norm() * 0.75);
    }

    // Remainder beyond q_max: exp(-k0 z_sum q) decay times the q^2 growth of the TM projector.
    const double edge = evanescent(q_max).norm();
    const double rate = k0 * z_sum - 2.0 / q_max;
    const double tail = rate > 0.0 ? edge / rate : edge * q_max;

    CorrelationMatrices out;
    out.omega = omega;
    out.pos_i = pos_i;
    out.pos_j = pos_j;
    const double norm = 0.75;
    out.alpha1 = norm * (unpack(pw.value, 0) + unpack(ew.value, 0));
    out.alpha2 = norm * unpack(pw.value, 18);
    out.tail_alpha1 = norm * tail;
    out.error_alpha1 = norm * (pw.error.segment<18>(0).norm() + ew.error.segment<18>(0).norm() + tail);
    out.error_alpha2 = norm * pw.error.segment<18>(18).norm();
    return out;
}

} // namespace ote::em
