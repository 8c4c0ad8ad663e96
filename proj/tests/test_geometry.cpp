// Copyright 2026 The qgeom Authors
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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "qgeom/error.hpp"
#include "qgeom/geometry.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

double gaussian_curvature_scalar(int n, double theta, double h) {
    auto root_cc = [n](double th) { return std::sqrt(qgeom::metric_reduced(n, th).g_cc); };
    const double root_tt = std::sqrt(n / 4.0);
    auto inner = [&](double th) {
        return (root_cc(th + h) - root_cc(th - h)) / (2 * h) / root_tt;
    };
    const double outer = (inner(theta + h) - inner(theta - h)) / (2 * h);
    return -2.0 * outer / (root_tt * root_cc(theta));
}

} // namespace

TEST_SUITE("geometry") {

TEST_CASE("closed-form metric against the dense geometric tensor") {
    for (int n = 2; n <= 6; ++n) {
        for (const double theta : {0.1, 0.6, 1.2, kPi / 2, 2.3, 3.0}) {
            for (const double chi : {0.0, 0.9}) {
                const auto m = qgeom::metric_full(n, theta);
                const auto q = oracle::geometric_tensor(n, theta, chi);
                CHECK(std::abs(m.g_tt - q.tt) < 1e-6);
                CHECK(std::abs(m.g_pp - q.pp) < 1e-6);
                CHECK(std::abs(m.g_cc - q.cc) < 1e-6);
                CHECK(std::abs(m.g_pc - q.pc) < 1e-6);
                CHECK(std::abs(q.tc) < 1e-6);
                CHECK(std::abs(q.tp) < 1e-6);
                CHECK(std::abs(m.g_cc - oracle::energy_variance(n, theta)) < 1e-10);
            }
        }
    }
}

TEST_CASE("numeric metric reproduces the closed form") {
    for (int n = 2; n <= 8; ++n) {
        for (const double theta : {0.05, 0.8, 1.9, kPi - 0.05}) {
            const auto m = qgeom::metric_full(n, theta);
            const auto q = qgeom::metric_numeric({n, 1.0, theta, 0.3}, 0.4);
            CHECK(std::abs(m.g_tt - q.g_tt) < 1e-6);
            CHECK(std::abs(m.g_pp - q.g_pp) < 1e-6);
            CHECK(std::abs(m.g_pc - q.g_pc) < 1e-6);
            CHECK(std::abs(m.g_cc - q.g_cc) < 1e-10);
            CHECK(std::abs(q.g_tc) < 1e-8);
        }
    }
}

TEST_CASE("known metric values") {
    const auto m = qgeom::metric_full(2, kPi / 4);
    CHECK(m.g_tt == doctest::Approx(0.5));
    CHECK(m.g_pp == doctest::Approx(0.25));
    CHECK(m.g_cc == doctest::Approx(0.1875));
    CHECK(m.g_pc == doctest::Approx(std::sqrt(2.0) / 8));
    const auto r = qgeom::metric_reduced(3, kPi / 2);
    CHECK(r.g_cc == doctest::Approx(0.75));
    CHECK(r.g_tc == 0.0);
}

TEST_CASE("g_cc derivative and Christoffel symbols") {
    for (int n = 2; n <= 6; ++n) {
        for (const double theta : {0.3, 1.0, 2.0}) {
            const double h = 1e-5;
            const double fd = (qgeom::metric_reduced(n, theta + h).g_cc -
                               qgeom::metric_reduced(n, theta - h).g_cc) /
                              (2 * h);
            CHECK(qgeom::metric_cc_derivative(n, theta) == doctest::Approx(fd).epsilon(1e-8));
            const auto gamma = qgeom::christoffel(n, theta);
            CHECK(gamma.gamma_c_tt == 0.0);
            CHECK(gamma.gamma_c_tc ==
                  doctest::Approx(fd / (2 * qgeom::metric_reduced(n, theta).g_cc))
                      .epsilon(1e-8));
        }
    }
    CHECK_THROWS_AS(qgeom::christoffel(2, 0.0), qgeom::Error);
    CHECK_THROWS_AS(qgeom::christoffel(1, 1.0), qgeom::Error);
}

TEST_CASE("closed curvature equals twice the Gaussian curvature") {
    for (int n = 2; n <= 9; ++n) {
        for (double theta = 0.25; theta < kPi - 0.2; theta += 0.15) {
            const double r = qgeom::curvature_closed(n, theta).value;
            const double k = gaussian_curvature_scalar(n, theta, 1e-4);
            CHECK(std::abs(r - k) <= 1e-5 * std::max(1.0, std::abs(r)));
        }
    }
}

TEST_CASE("numeric curvature with and without Richardson") {
    for (int n = 2; n <= 6; ++n) {
        for (const double theta : {0.2, 0.7, kPi / 2, 2.5, kPi - 0.2}) {
            const double closed = qgeom::curvature_closed(n, theta).value;
            const double plain = qgeom::curvature_numeric(n, theta);
            const double rich = qgeom::curvature_numeric(n, theta, {1e-3, true});
            CHECK(std::abs(plain - closed) <= 1e-5 * std::max(1.0, std::abs(closed)));
            CHECK(std::abs(rich - closed) <= 1e-7 * std::max(1.0, std::abs(closed)));
        }
    }
    CHECK_THROWS_AS(qgeom::curvature_numeric(3, 0.1), qgeom::Error);
}

TEST_CASE("curvature landmarks") {
    CHECK(qgeom::curvature_closed(2, 0.0).value == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(qgeom::curvature_closed(2, 0.0).metric_degenerate);
    CHECK_FALSE(qgeom::curvature_closed(2, 1.0).metric_degenerate);
    CHECK(qgeom::curvature_closed(3, kPi / 2).value == doctest::Approx(-16.0 / 3));
    for (int n = 2; n <= 12; ++n) {
        for (double theta = 0.0; theta <= kPi / 2; theta += 0.1) {
            CHECK(qgeom::curvature_closed(n, theta).value ==
                  doctest::Approx(qgeom::curvature_closed(n, kPi - theta).value)
                      .epsilon(1e-10));
        }
        if (n >= 3) {
            CHECK(qgeom::curvature_closed(n, kPi / 2).value < 0.0);
        }
    }
    CHECK(std::abs(qgeom::curvature_closed(2, kPi / 2).value) < 1e-12);
    CHECK_THROWS_AS(qgeom::curvature_closed(1, 1.0), qgeom::Error);
}

}
