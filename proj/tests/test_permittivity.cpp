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

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <doctest.h>

#include "ote/em/environment.hpp"
#include "ote/errors.hpp"
#include "support.hpp"

using namespace ote;
using boost::multiprecision::cpp_complex_50;

namespace {

// 50-digit evaluation of the same closed form
std::complex<double> drude_lorentz_oracle(const em::DrudeLorentz& m, double omega) {
    const cpp_complex_50 w(omega), i(0, 1);
    const cpp_complex_50 num = cpp_complex_50(m.omega_L) * m.omega_L - w * w - i * m.gamma * w;
    const cpp_complex_50 den = cpp_complex_50(m.omega_T) * m.omega_T - w * w - i * m.gamma * w;
    const cpp_complex_50 e = cpp_complex_50(m.eps_inf) * num / den;
    return {static_cast<double>(e.real()), static_cast<double>(e.imag())};
}

} // namespace

TEST_CASE("vacuum permittivity is one") {
    CHECK(em::permittivity(em::Vacuum{}, 1e14) == std::complex<double>(1.0, 0.0));
}

TEST_CASE("Drude-Lorentz matches a 50-digit evaluation") {
    const auto m = test::sic();
    for (double w : {1e10, 1e12, 1.4e14, 1.495e14, 1.6e14, 1.827e14, 5e14}) {
        const auto e = em::permittivity(m, w);
        const auto o = drude_lorentz_oracle(m, w);
        CHECK(std::abs(e - o) <= 1e-13 * std::abs(o));
        CHECK(e.imag() >= 0.0);
    }
}

TEST_CASE("Drude-Lorentz static and high-frequency limits") {
    const auto m = test::sic();
    const auto e0 = em::permittivity(m, 1.0);
    CHECK(e0.real() == doctest::Approx(m.eps_inf * m.omega_L * m.omega_L / (m.omega_T * m.omega_T)).epsilon(1e-12));
    CHECK(em::permittivity(m, 1e18).real() == doctest::Approx(m.eps_inf).epsilon(1e-6));
    // Reststrahlen band: negative real part between omega_T and omega_L
    CHECK(em::permittivity(m, 1.6e14).real() < 0.0);
}

TEST_CASE("tabulated permittivity interpolates linearly and refuses extrapolation") {
    em::Tabulated t{{1e13, 2e13, 4e13}, {{2.0, 0.1}, {4.0, 0.3}, {8.0, 0.0}}};
    const auto e = em::permittivity(t, 1.5e13);
    CHECK(e.real() == doctest::Approx(3.0));
    CHECK(e.imag() == doctest::Approx(0.2));
    CHECK(em::permittivity(t, 2e13) == std::complex<double>(4.0, 0.3));
    CHECK_THROWS_AS(em::permittivity(t, 5e13), OutOfRangeError);
    CHECK_THROWS_AS(em::permittivity(t, 0.5e13), OutOfRangeError);
}

TEST_CASE("non-positive frequency is rejected") {
    CHECK_THROWS_AS(em::permittivity(test::sic(), 0.0), NumericalError);
    CHECK_THROWS_AS(em::permittivity(test::sic(), -1.0), NumericalError);
}

TEST_CASE("material invariants are validated") {
    auto bad = test::sic();
    bad.eps_inf = 0.5;
    CHECK_THROWS_AS(em::validate(em::PermittivityModel{bad}), ConfigError);
    bad = test::sic();
    bad.omega_L = bad.omega_T;
    CHECK_THROWS_AS(em::validate(em::PermittivityModel{bad}), ConfigError);
    bad = test::sic();
    bad.gamma = -1.0;
    CHECK_THROWS_AS(em::validate(em::PermittivityModel{bad}), ConfigError);
    CHECK_NOTHROW(em::validate(em::PermittivityModel{test::sic()}));

    CHECK_THROWS_AS(em::validate(em::PermittivityModel{em::Tabulated{{2.0, 1.0}, {{1, 0}, {1, 0}}}}), ConfigError);
    CHECK_THROWS_AS(em::validate(em::PermittivityModel{em::Tabulated{{1.0, 2.0}, {{1, 0}, {1, -0.1}}}}), ConfigError);
}

TEST_CASE("environment invariants are validated") {
    auto env = test::sic_environment();
    CHECK_NOTHROW(em::validate(env));
    env.slab.thickness = 0.0;
    CHECK_THROWS_AS(em::validate(env), ConfigError);
    env = test::sic_environment();
    env.slab.temperature = -1.0;
    CHECK_THROWS_AS(em::validate(env), ConfigError);
    env = test::sic_environment();
    env.blackbody_temperature = 0.0;
    CHECK_THROWS_AS(em::validate(env), ConfigError);
    env = test::sic_environment();
    env.quadrature.rel_tol = 1.0;
    CHECK_THROWS_AS(em::validate(env), ConfigError);
    env = test::sic_environment();
    env.quadrature.cutoff_multiplier = 1.0;
    CHECK_THROWS_AS(em::validate(env), ConfigError);
    CHECK(test::sic_environment(300, 300).is_equilibrium());
    CHECK_FALSE(test::sic_environment().is_equilibrium());
}
