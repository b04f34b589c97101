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

#include <doctest.h>

#include "ote/constants.hpp"
#include "ote/em/correlation.hpp"
#include "ote/errors.hpp"
#include "support.hpp"

using namespace ote;

namespace {

struct LocalReference {
    double ratio; // omega / omega_s
    double a1_xx, a1_zz, a2_xx, a2_zz;
};

// tests/oracles/local_alpha.py, z = 26 um, 1 um SiC slab
constexpr LocalReference kLocal[] = {
    {0.05, 2.281067368590e-01, 5.218362339280e-02, 7.832445085873e-01, 9.908841833498e-01},
    {0.10, 2.923239639706e-01, 1.000581079994e-01, 6.354130952762e-01, 9.810087208685e-01},
    {0.90, 7.132336783822e-03, 1.832701481895e-02, 1.048729188590e+00, 9.811159962382e-01},
    {1.00, 4.236403051534e-02, 2.511125904694e-01, 9.151203569119e-01, 7.462665957478e-01},
};

double hermitian_defect(const Eigen::Matrix3cd& m) { return (m - m.adjoint()).norm(); }

} // namespace

TEST_CASE("local correlations match the independent SciPy evaluation") {
    const auto env = test::sic_environment();
    const em::Position p{0, 0, 26e-6};
    for (const auto& ref : kLocal) {
        CAPTURE(ref.ratio);
        const auto a = em::correlation_matrices(ref.ratio * test::omega_s, p, p, env);
        CHECK(a.alpha1(0, 0).real() == doctest::Approx(ref.a1_xx).epsilon(1e-6));
        CHECK(a.alpha1(1, 1).real() == doctest::Approx(ref.a1_xx).epsilon(1e-6));
        CHECK(a.alpha1(2, 2).real() == doctest::Approx(ref.a1_zz).epsilon(1e-5));
        CHECK(a.alpha2(0, 0).real() == doctest::Approx(ref.a2_xx).epsilon(1e-6));
        CHECK(a.alpha2(2, 2).real() == doctest::Approx(ref.a2_zz).epsilon(1e-6));
        // no off-diagonal correlation at a single point
        CHECK(std::abs(a.alpha1(0, 2)) < 1e-9);
        CHECK(std::abs(a.alpha2(0, 1)) < 1e-9);
        CHECK(a.error_alpha1 < 1e-6);
    }
}

TEST_CASE("vacuum correlations are the free-space identity") {
    em::OteEnvironment env;
    env.material = em::Vacuum{};
    const em::Position p{0, 0, 5e-6};
    const auto a = em::correlation_matrices(1e14, p, p, env);
    CHECK(a.alpha1.norm() < 1e-12);
    CHECK((a.alpha2 - Eigen::Matrix3cd::Identity()).norm() < 1e-8);
}

TEST_CASE("correlation matrices are Hermitian and positive at a single point") {
    const auto env = test::sic_environment();
    const em::Position p{1e-6, -2e-6, 7e-6};
    for (double w : {1e13, 1.495e14, 1.7e14}) {
        const auto a = em::correlation_matrices(w, p, p, env);
        CHECK(hermitian_defect(a.alpha1) < 1e-9 * a.alpha1.norm());
        CHECK(hermitian_defect(a.alpha2) < 1e-9 * a.alpha2.norm());
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> e1(a.alpha1), e2(a.alpha2);
        CHECK(e1.eigenvalues().minCoeff() > -1e-9 * a.alpha1.norm());
        CHECK(e2.eigenvalues().minCoeff() > -1e-9 * a.alpha2.norm());
    }
}

TEST_CASE("swapping the two points gives the adjoint") {
    const auto env = test::sic_environment();
    const em::Position pi{0, 0, 26e-6}, pj{0, 1e-6, 26e-6};
    const auto a = em::correlation_matrices(test::omega_a, pi, pj, env);
    const auto b = em::correlation_matrices(test::omega_a, pj, pi, env);
    CHECK((a.alpha1 - b.alpha1.adjoint()).norm() < 1e-8 * a.alpha1.norm());
    CHECK((a.alpha2 - b.alpha2.adjoint()).norm() < 1e-8 * a.alpha2.norm());
}

TEST_CASE("closed-form angular moments agree with quadrature") {
    for (double u : {0.0, 0.3, 4.0, 25.0})
        for (double phi : {0.0, 0.6, 2.2}) {
            const auto b = em::angular_moments(u, phi, em::AngularMode::bessel);
            const auto q = em::angular_moments(u, phi, em::AngularMode::quadrature);
            CHECK(std::abs(b.one - q.one) < 1e-9);
            CHECK(std::abs(b.cc - q.cc) < 1e-9);
            CHECK(std::abs(b.ss - q.ss) < 1e-9);
            CHECK(std::abs(b.cs - q.cs) < 1e-9);
            CHECK(std::abs(b.c - q.c) < 1e-9);
            CHECK(std::abs(b.s - q.s) < 1e-9);
        }
}

TEST_CASE("both angular modes give the same two-point correlations") {
    auto env = test::sic_environment();
    const em::Position pi{0, 0, 26e-6}, pj{0, 1e-6, 26e-6};
    const auto q = em::correlation_matrices(test::omega_a, pi, pj, env);
    env.quadrature.angular = em::AngularMode::bessel;
    const auto b = em::correlation_matrices(test::omega_a, pi, pj, env);
    CHECK((q.alpha1 - b.alpha1).norm() < 1e-6 * q.alpha1.norm());
    CHECK((q.alpha2 - b.alpha2).norm() < 1e-6 * q.alpha2.norm());
}
