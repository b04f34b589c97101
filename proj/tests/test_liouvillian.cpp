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
#include "ote/errors.hpp"
#include "ote/lindblad/superoperator.hpp"
#include "support.hpp"

using namespace ote;
using namespace ote::lindblad;

TEST_CASE("amplitude damping in column-stacked form") {
    const double g = 2.5;
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(2, 2);
    s(0, 1) = 1.0;
    const LindbladTerm t[] = {{s, s, g}};
    const auto l = build_liouvillian(Eigen::MatrixXcd::Zero(2, 2), t);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
    expected(0, 3) = g;
    expected(1, 1) = -0.5 * g;
    expected(2, 2) = -0.5 * g;
    expected(3, 3) = -g;
    CHECK((l - expected).norm() < 1e-15);
}

TEST_CASE("Hamiltonian part is the commutator") {
    std::mt19937 rng(7);
    const auto h = test::random_hermitian(rng, 3);
    const auto rho = test::random_density(rng, 3);
    const auto l = build_liouvillian(h, {});
    const Eigen::MatrixXcd direct = std::complex<double>(0, -1) / ote::constants::hbar * (h * rho - rho * h);
    CHECK((unvectorize(l * vectorize(rho)) - direct).norm() < 1e-12 * direct.norm());
}

TEST_CASE("non-diagonal term matches its operator form") {
    std::mt19937 rng(11);
    const auto a = test::random_matrix(rng, 3), b = test::random_matrix(rng, 3);
    const auto rho = test::random_density(rng, 3);
    const std::complex<double> rate(0.7, -0.2);
    const LindbladTerm t[] = {{a, b, rate}};
    const auto l = build_liouvillian(Eigen::MatrixXcd::Zero(3, 3), t);
    const Eigen::MatrixXcd bda = b.adjoint() * a;
    const Eigen::MatrixXcd direct = rate * (a * rho * b.adjoint() - 0.5 * (bda * rho + rho * bda));
    CHECK((unvectorize(l * vectorize(rho)) - direct).norm() < 1e-12 * direct.norm());
}

TEST_CASE("every generated Liouvillian preserves the trace") {
    std::mt19937 rng(2026);
    for (int d : {2, 3, 6}) {
        std::vector<LindbladTerm> terms;
        for (int k = 0; k < 5; ++k)
            terms.push_back({test::random_matrix(rng, d), test::random_matrix(rng, d), {1.0 + k, 0.3 * k}});
        const auto l = build_liouvillian(1e-34 * test::random_hermitian(rng, d), terms);
        const Eigen::VectorXcd one = vectorize(Eigen::MatrixXcd::Identity(d, d));
        CHECK((one.adjoint() * l).norm() < 1e-12 * l.norm());
    }
}

TEST_CASE("empty generator is zero") {
    CHECK(build_liouvillian(Eigen::MatrixXcd::Zero(3, 3), {}).norm() == 0.0);
}

TEST_CASE("mismatched operator sizes are rejected") {
    const LindbladTerm t[] = {{Eigen::MatrixXcd::Identity(3, 3), Eigen::MatrixXcd::Identity(3, 3), 1.0}};
    CHECK_THROWS_AS(build_liouvillian(Eigen::MatrixXcd::Zero(2, 2), t), DimensionError);
}

TEST_CASE("vectorization helpers") {
    std::mt19937 rng(3);
    const auto m = test::random_matrix(rng, 4);
    const auto v = vectorize(m);
    CHECK(v(1) == m(1, 0)); // column stacking
    CHECK(unvectorize(v) == m);
    Eigen::MatrixXcd p0 = Eigen::MatrixXcd::Zero(2, 2), p1 = p0;
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    CHECK(trace_distance(p0, p1) == doctest::Approx(1.0));
    CHECK(trace_distance(p0, p0) == 0.0);
}
