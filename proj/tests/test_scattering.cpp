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

#include <boost/multiprecision/cpp_complex.hpp>
#include <doctest.h>

#include "ote/constants.hpp"
#include "ote/em/scattering.hpp"
#include "ote/errors.hpp"
#include "support.hpp"

using namespace ote;
using boost::multiprecision::cpp_complex_50;

namespace {

cpp_complex_50 decaying(const cpp_complex_50& x) {
    cpp_complex_50 s = sqrt(x);
    if (s.imag() < 0) s = -s;
    return s;
}

// Textbook Airy sums evaluated with 50 digits, where the cancellation near poles is harmless.
em::SlabCoefficients airy_oracle_kz(em::Polarization p, const cpp_complex_50& kz, double omega,
                                    std::complex<double> eps_d, double d) {
    const cpp_complex_50 eps(eps_d.real(), eps_d.imag()), i(0, 1);
    const cpp_complex_50 k0 = cpp_complex_50(omega) / constants::c;
    const cpp_complex_50 kzm = decaying((eps - 1) * k0 * k0 + kz * kz);
    const cpp_complex_50 r = p == em::Polarization::TE ? (kz - kzm) / (kz + kzm) : (eps * kz - kzm) / (eps * kz + kzm);
    const cpp_complex_50 e = exp(2 * i * kzm * d);
    const cpp_complex_50 den = 1 - r * r * e;
    const cpp_complex_50 rho = r * (1 - e) / den;
    const cpp_complex_50 tau = (1 - r * r) * exp(i * (kzm - kz) * d) / den;
    return {{static_cast<double>(rho.real()), static_cast<double>(rho.imag())},
            {static_cast<double>(tau.real()), static_cast<double>(tau.imag())}};
}

em::SlabCoefficients airy_oracle(em::Polarization p, double k, double omega, std::complex<double> eps, double d) {
    const cpp_complex_50 k0 = cpp_complex_50(omega) / constants::c, kk(k);
    return airy_oracle_kz(p, decaying(k0 * k0 - kk * kk), omega, eps, d);
}

} // namespace

TEST_CASE("slab coefficients agree with a high-precision Airy sum") {
    const auto env = test::sic_environment();
    for (double w : {1.495e11, 1.495e13, 1.4e14, 1.6e14}) {
        const double k0 = w / constants::c;
        const auto eps = em::permittivity(env.material, w);
        for (double q : {0.0, 0.3, 0.99, 1.01, 1.5, 3.0, 30.0}) {
            for (auto p : {em::Polarization::TE, em::Polarization::TM}) {
                const auto s = em::slab_scattering(p, q * k0, w, eps, env.slab.thickness);
                const auto o = airy_oracle(p, q * k0, w, eps, env.slab.thickness);
                CHECK(std::abs(s.rho - o.rho) <= 1e-9 * std::max(1.0, std::abs(o.rho)));
                CHECK(std::abs(s.tau - o.tau) <= 1e-9 * std::max(1.0, std::abs(o.tau)));
            }
        }
    }
}

TEST_CASE("slab coefficients stay accurate next to a weakly damped guided mode") {
    // thin, nearly lossless slab far below the phonon band
    const double w = 1.495e11;
    const double k0 = w / constants::c;
    const auto eps = em::permittivity(test::sic(), w);
    const double d = 1e-6;
    // the TM guided mode sits near q_kappa = 2.244e-4
    for (double qk : {2.2442e-4, 2.24420914e-4, 2.2443e-4}) {
        const std::complex<double> kz(0.0, qk * k0);
        const auto s = em::slab_scattering_normal(em::Polarization::TM, kz, w, eps, d);
        const auto o = airy_oracle_kz(em::Polarization::TM, cpp_complex_50(0.0, qk * k0), w, eps, d);
        CHECK(std::abs(s.rho - o.rho) <= 1e-6 * std::abs(o.rho));
    }
}

TEST_CASE("vacuum slab is transparent") {
    const double w = 1e14, k0 = w / constants::c;
    for (double q : {0.0, 0.5, 2.0})
        for (auto p : {em::Polarization::TE, em::Polarization::TM}) {
            const auto s = em::slab_scattering(p, q * k0, w, {1.0, 0.0}, 1e-6);
            CHECK(std::abs(s.rho) < 1e-15);
            CHECK(std::abs(s.tau - 1.0) < 1e-12);
        }
}

TEST_CASE("lossless slab conserves propagating energy") {
    const double w = 1e14, k0 = w / constants::c;
    for (double q : {0.0, 0.4, 0.9})
        for (auto p : {em::Polarization::TE, em::Polarization::TM}) {
            const auto s = em::slab_scattering(p, q * k0, w, {4.0, 0.0}, 2.3e-6);
            CHECK(std::norm(s.rho) + std::norm(s.tau) == doctest::Approx(1.0).epsilon(1e-13));
        }
}

TEST_CASE("Fresnel coefficients at normal incidence") {
    const std::complex<double> eps(9.0, 0.0);
    const double w = 1e14;
    CHECK(std::abs(em::fresnel_reflection(em::Polarization::TE, 0.0, w, eps) - (-0.5)) < 1e-15);
    CHECK(std::abs(em::fresnel_reflection(em::Polarization::TM, 0.0, w, eps) - 0.5) < 1e-15);
}

TEST_CASE("normal-wavevector form equals the in-plane form") {
    const double w = 2e13, k0 = w / constants::c;
    const auto eps = em::permittivity(test::sic(), w);
    for (double theta : {0.1, 0.7, 1.3}) {
        const auto a = em::slab_scattering(em::Polarization::TM, k0 * std::sin(theta), w, eps, 1e-6);
        const auto b = em::slab_scattering_normal(em::Polarization::TM, k0 * std::cos(theta), w, eps, 1e-6);
        CHECK(std::abs(a.rho - b.rho) < 1e-12);
        CHECK(std::abs(a.tau - b.tau) < 1e-12);
    }
}

TEST_CASE("lossless Fabry-Perot pole is reported as a degeneracy") {
    // even TE mode with k_zm d / 2 = pi / 4, hence kappa = k_zm and r^2 exp(2 i k_zm d) = 1
    const double d = 1e-6, k0 = 1e6;
    const double kzm = constants::pi / (2.0 * d);
    const double eps = 1.0 + 2.0 * kzm * kzm / (k0 * k0);
    const double w = k0 * constants::c;
    const double k = std::sqrt(k0 * k0 + kzm * kzm);
    CHECK_THROWS_AS(em::slab_scattering(em::Polarization::TE, k, w, {eps, 0.0}, d), DegeneracyError);
    CHECK_NOTHROW(em::slab_scattering(em::Polarization::TE, 1.01 * k, w, {eps, 0.0}, d));
}
