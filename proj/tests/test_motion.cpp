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
#include "qgeom/motion.hpp"

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("motion") {

TEST_CASE("speed is J sqrt(g_cc)") {
    for (int n = 1; n <= 10; ++n) {
        for (const double theta : {0.0, 0.3, 1.0, kPi / 2, 2.2, kPi}) {
            const double g = qgeom::metric_reduced(n, theta).g_cc;
            CHECK(qgeom::speed(n, theta, 1.3) == doctest::Approx(1.3 * std::sqrt(g)));
        }
    }
    CHECK(qgeom::speed(1, 1.0, 1.0) == 0.0);
}

TEST_CASE("speed maximum by search") {
    for (int n = 2; n <= 16; ++n) {
        auto v = [n](double th) { return qgeom::speed(n, th, 1.0); };
        const double found = oracle::level_peak(v, 0.0, n == 2 ? kPi : kPi / 2);
        CHECK(std::abs(found - qgeom::theta_max(n)) < 1e-6);
        CHECK(std::abs(v(found) - qgeom::speed_max(n, 1.0)) < 1e-10);
    }
    CHECK(qgeom::theta_max(2) == doctest::Approx(kPi / 2));
}

TEST_CASE("distance and its minimum") {
    CHECK(qgeom::fs_distance(3, 1.0, 2.0) ==
          doctest::Approx(2.0 * qgeom::speed(3, 1.0, 1.0)));
    CHECK(qgeom::fs_distance(4, 1.0, 0.0) == 0.0);
    for (int n = 2; n <= 20; ++n) {
        const double at_peak = qgeom::fs_distance(n, qgeom::theta_max(n), 1.0);
        CHECK(qgeom::fs_distance_min(n, 1.0) <= at_peak + 1e-12);
    }
    CHECK(qgeom::fs_distance_min(2, 1.0) == doctest::Approx(0.5));
    CHECK_THROWS_AS(qgeom::fs_distance(3, 1.0, -0.1), qgeom::Error);
}

TEST_CASE("brachistochrone time") {
    CHECK(qgeom::brachistochrone_time(2, 0.37) == 0.37);
    CHECK(std::abs(qgeom::brachistochrone_time(3, 1.0) - std::sqrt(3.0) / 2) < 1e-12);
    double previous = 1.0;
    for (int n = 2; n <= 32; ++n) {
        const double t = 1.7;
        const double chi = 2.3 * t;
        const double ratio =
            qgeom::fs_distance_min(n, chi) / qgeom::speed_max(n, 2.3);
        CHECK(std::abs(ratio - qgeom::brachistochrone_time(n, t)) < 1e-12);
        const double r = qgeom::brachistochrone_time(n, 1.0);
        if (n >= 3) {
            CHECK(r < previous);
            CHECK(r < 1.0);
        }
        previous = r;
    }
    CHECK_THROWS_AS(qgeom::brachistochrone_time(1, 1.0), qgeom::Error);
    CHECK_THROWS_AS(qgeom::brachistochrone_time(3, -1.0), qgeom::Error);
}

TEST_CASE("report bundles consistent values") {
    const auto r = qgeom::brachistochrone_report(4, 0.8, 2.0, 0.5);
    CHECK(r.v == qgeom::speed(4, 0.8, 2.0));
    CHECK(r.s == qgeom::fs_distance(4, 0.8, 1.0));
    CHECK(r.t_min == qgeom::brachistochrone_time(4, 0.5));
    CHECK(r.chi_min == doctest::Approx(2.0 * r.t_min));
    CHECK(r.t_min == doctest::Approx(r.s_min / r.v_max));
    CHECK(qgeom::optimal_metric(4, 0.8) == qgeom::metric_reduced(4, 0.8).g_cc);
}

}
