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
#include "qgeom/entanglement.hpp"
#include "qgeom/error.hpp"
#include "qgeom/geometry.hpp"
#include "qgeom/motion.hpp"
#include "qgeom/numeric.hpp"
#include "qgeom/phases.hpp"
#include "qgeom/statevector.hpp"

using doctest::Approx;
using qgeom::Complex;

namespace {

constexpr double kPi = std::numbers::pi;

bool same(Complex a, Complex b, double tol = 1e-14) { return std::abs(a - b) <= tol; }

double mod_dist(double a, double b) { return qgeom::numeric::angular_distance(a, b); }

} // namespace

TEST_SUITE("landmarks") {

TEST_CASE("initial states and spectrum") {
    auto a = qgeom::build_initial_state({1, 1.0, 0.0, 0.0});
    CHECK(same(a[0], 1.0));
    CHECK(same(a[1], 0.0));
    a = qgeom::build_initial_state({1, 1.0, kPi / 2, 0.0});
    CHECK(same(a[0], std::sqrt(0.5)));
    CHECK(same(a[1], std::sqrt(0.5)));
    a = qgeom::build_initial_state({2, 1.0, kPi / 2, 0.0});
    for (std::size_t b = 0; b < 4; ++b) {
        CHECK(same(a[b], 0.5));
    }

    const auto h2_op = qgeom::hamiltonian(2, 1.0);
    const auto h2 = h2_op.entries();
    CHECK(h2[0] == 1.0);
    CHECK(h2[1] == 0.0);
    CHECK(h2[2] == 0.0);
    CHECK(h2[3] == 1.0);
    const auto h1_op = qgeom::hamiltonian(1, 1.0);
    const auto h1 = h1_op.entries();
    CHECK(h1[0] == 0.25);
    CHECK(h1[1] == 0.25);
    const auto h3_op = qgeom::hamiltonian(3, 2.0);
    const auto h3 = h3_op.entries();
    const double expect3[] = {4.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 4.5};
    for (std::size_t b = 0; b < 8; ++b) {
        CHECK(h3[b] == expect3[b]);
    }
}

TEST_CASE("evolution and overlaps") {
    const qgeom::EnsembleParams eq{2, 1.0, kPi / 2, 0.0};
    const auto s = qgeom::build_initial_state(eq);
    const auto e = qgeom::evolve(s, 1.0, kPi);
    CHECK(same(e[0], -0.5));
    CHECK(same(e[1], 0.5));
    CHECK(same(e[2], 0.5));
    CHECK(same(e[3], -0.5));
    const auto still = qgeom::evolve(s, 1.0, 0.0);
    for (std::size_t b = 0; b < 4; ++b) {
        CHECK(still[b] == s[b]);
    }
    const auto p = qgeom::build_initial_state({2, 1.0, 0.9, 0.4});
    const auto cyc = qgeom::evolve(p, 1.0, 2 * kPi);
    for (std::size_t b = 0; b < 4; ++b) {
        CHECK(same(cyc[b], p[b]));
    }

    CHECK(same(qgeom::overlap(s, s), 1.0));
    CHECK(std::abs(qgeom::overlap(s, e)) < 1e-15);
    const auto pole = qgeom::build_initial_state({2, 1.0, 0.0, 0.0});
    CHECK(same(qgeom::overlap(pole, qgeom::evolve(pole, 1.0, 0.8)), std::polar(1.0, -0.8)));
}

TEST_CASE("energy moments and Bloch vectors") {
    const auto h = qgeom::hamiltonian(2, 1.0);
    const auto eq = qgeom::energy_moments(qgeom::build_initial_state({2, 1.0, kPi / 2, 0.0}), h);
    CHECK(eq.mean == Approx(0.5));
    CHECK(eq.variance() == Approx(0.25));
    const auto pole = qgeom::energy_moments(qgeom::build_initial_state({2, 1.0, 0.0, 0.0}), h);
    CHECK(pole.mean == 1.0);
    CHECK(pole.second_moment == 1.0);
    CHECK(pole.variance() == 0.0);

    const auto x = qgeom::reduced_bloch_vector(qgeom::evolved_state({2, 1.0, kPi / 2, 0.0}, 0.0), 0);
    CHECK(x[0] == Approx(1.0));
    CHECK(std::abs(x[1]) < 1e-15);
    CHECK(std::abs(x[2]) < 1e-15);
    const auto cat = qgeom::reduced_bloch_vector(qgeom::evolved_state({2, 1.0, kPi / 2, 0.0}, kPi / 2), 0);
    CHECK(std::hypot(cat[0], cat[1], cat[2]) < 1e-15);
    const auto one = qgeom::reduced_bloch_vector(qgeom::evolved_state({1, 1.0, 1.2, 0.3}, 2.5), 0);
    CHECK(std::hypot(one[0], one[1], one[2]) == Approx(1.0));
}

TEST_CASE("parametric derivatives") {
    const auto dc = qgeom::parametric_derivative({2, 1.0, 0.0, 0.0}, 0.0, qgeom::Coordinate::Chi);
    CHECK(same(dc[0], Complex(0, -1)));
    CHECK(same(dc[1], 0.0));
    CHECK(same(dc[3], 0.0));
    const auto dp = qgeom::parametric_derivative({2, 1.0, 0.0, 0.0}, 0.3, qgeom::Coordinate::Phi);
    for (std::size_t b = 0; b < 4; ++b) {
        CHECK(std::abs(dp[b]) < 1e-12);
    }
    const auto dt = qgeom::parametric_derivative({1, 1.0, kPi / 2, 0.0}, 0.0,
                                                 qgeom::Coordinate::Theta);
    CHECK(same(dt[0], -std::sqrt(2.0) / 4, 1e-9));
    CHECK(same(dt[1], std::sqrt(2.0) / 4, 1e-9));
}

TEST_CASE("metric values") {
    const auto m2 = qgeom::metric_reduced(2, kPi / 2);
    CHECK(m2.g_tt == 0.5);
    CHECK(m2.g_cc == Approx(0.25));
    CHECK(qgeom::metric_reduced(1, 0.7).g_cc == 0.0);
    CHECK(qgeom::metric_reduced(4, kPi / 2).g_cc == Approx(1.5));
    const auto f1 = qgeom::metric_full(1, kPi / 2);
    CHECK(f1.g_pp == 0.25);
    CHECK(f1.g_pc == 0.0);
    CHECK(std::abs(qgeom::metric_full(2, kPi / 2).g_pc) < 1e-16);
    CHECK(qgeom::metric_full(2, kPi / 4).g_pc == Approx(std::sqrt(2.0) / 8));
    CHECK(qgeom::metric_numeric({2, 1.0, kPi / 2, 0.0}, 0.7).g_cc == Approx(0.25).epsilon(1e-10));
    CHECK(std::abs(qgeom::metric_numeric({3, 1.0, 1.0, 0.0}, 0.5).g_tc) < 1e-8);
    CHECK(std::abs(qgeom::christoffel(2, kPi / 2).gamma_c_tc) < 1e-15);
    const double h = 1e-6;
    auto log_root = [](double th) { return std::log(std::sqrt(qgeom::metric_reduced(2, th).g_cc)); };
    CHECK(qgeom::christoffel(2, kPi / 4).gamma_c_tc ==
          Approx((log_root(kPi / 4 + h) - log_root(kPi / 4 - h)) / (2 * h)).epsilon(1e-8));
}

TEST_CASE("curvature values") {
    CHECK(qgeom::curvature_closed(2, 0.0).value == Approx(10.0));
    CHECK(std::abs(qgeom::curvature_closed(2, kPi / 2).value) < 1e-14);
    CHECK(qgeom::curvature_closed(3, kPi / 2).value == Approx(-16.0 / 3));
    CHECK(qgeom::curvature_numeric(2, 1.0) ==
          Approx(qgeom::curvature_closed(2, 1.0).value).epsilon(1e-5));
    CHECK(qgeom::curvature_numeric(5, kPi / 2) ==
          Approx(qgeom::curvature_closed(5, kPi / 2).value).epsilon(1e-5));
    CHECK(std::abs(qgeom::curvature_closed(3, 0.4).value -
                   qgeom::curvature_closed(3, kPi - 0.4).value) < 1e-8);
}

TEST_CASE("phase values") {
    CHECK(qgeom::total_phase_closed(2, 0.0, kPi / 2) == Approx(-kPi / 2));
    CHECK(qgeom::total_phase_closed(5, 1.3, 0.0) == 0.0);
    CHECK_THROWS_AS(qgeom::total_phase_closed(2, kPi / 2, kPi), qgeom::Error);
    CHECK(mod_dist(qgeom::total_phase_numeric({3, 1.0, 1.1, 0.0}, 0.8),
                   qgeom::total_phase_closed(3, 1.1, 0.8)) < 1e-9);
    CHECK(std::abs(qgeom::total_phase_closed(2, 0.3, 4 * kPi)) < 1e-12);
    CHECK(mod_dist(qgeom::total_phase_numeric({1, 1.0, kPi / 2, 0.0}, kPi),
                   qgeom::total_phase_closed(1, kPi / 2, kPi)) < 1e-9);

    CHECK(qgeom::dynamical_phase(2, kPi / 2, 1.0) == Approx(-0.5));
    CHECK(qgeom::dynamical_phase(3, 0.8, 0.0) == 0.0);
    CHECK(qgeom::dynamical_phase(2, 0.0, 1.0) == Approx(-1.0));

    CHECK(qgeom::geometric_phase(4, 1.0, 0.0) == 0.0);
    for (const double chi : {0.3, 1.9, 3.0, 5.5}) {
        CHECK(mod_dist(qgeom::geometric_phase(2, 0.0, chi), 0.0) < 1e-12);
    }
    CHECK(mod_dist(qgeom::geometric_phase(2, kPi / 2, 0.5),
                   qgeom::total_phase_numeric({2, 1.0, kPi / 2, 0.0}, 0.5) + 0.25) < 1e-9);

    CHECK(qgeom::aa_phase_closed(2, kPi / 2) == Approx(-kPi));
    CHECK(qgeom::aa_phase_closed(7, 0.0) == 0.0);
    CHECK(qgeom::aa_phase_closed(4, kPi / 2) == Approx(-6 * kPi));
    CHECK(mod_dist(qgeom::aa_phase_numeric(2, kPi / 2).value, -kPi) < 1e-6);
    CHECK(mod_dist(qgeom::aa_phase_numeric(3, 0.9).value, -3 * kPi * std::pow(std::sin(0.9), 2)) <
          1e-6);
    CHECK(mod_dist(qgeom::aa_phase_numeric(2, 0.0).value, 0.0) < 1e-6);

    CHECK(qgeom::topological_phase(2) == -2 * kPi);
    CHECK(qgeom::topological_phase(1) == -kPi / 2);
    CHECK(qgeom::topological_phase(4) == -8 * kPi);
}

TEST_CASE("motion values") {
    CHECK(qgeom::speed(2, kPi / 2, 1.0) == Approx(0.5));
    CHECK(qgeom::speed(6, 0.0, 2.0) == 0.0);
    CHECK(qgeom::speed(1, 0.8, 1.0) == 0.0);
    CHECK(qgeom::theta_max(2) == Approx(kPi / 2));
    CHECK(qgeom::theta_max(3) == Approx(std::acos(std::sqrt(1.0 / 3))));
    CHECK(qgeom::theta_max(100000) == Approx(kPi / 4).epsilon(1e-5));
    CHECK(qgeom::speed_max(2, 1.0) == Approx(0.5));
    CHECK(qgeom::speed_max(3, 1.0) == Approx(1.0));
    CHECK(qgeom::speed_max(2, 2.0) == Approx(1.0));
    CHECK(qgeom::fs_distance(2, kPi / 2, kPi) == Approx(kPi / 2));
    CHECK(qgeom::fs_distance(5, 1.0, 0.0) == 0.0);
    CHECK(qgeom::fs_distance(2, kPi / 2, 1.0) == Approx(qgeom::fs_distance_min(2, 1.0)));
    CHECK(qgeom::fs_distance_min(2, 1.0) == Approx(0.5));
    CHECK(qgeom::fs_distance_min(3, 2.0) == Approx(std::sqrt(3.0)));
    CHECK(qgeom::fs_distance_min(9, 0.0) == 0.0);
    CHECK(qgeom::brachistochrone_time(2, 2.5) == 2.5);
    CHECK(qgeom::brachistochrone_time(3, 1.0) == Approx(std::sqrt(3.0) / 2));
    CHECK(qgeom::brachistochrone_time(1000000, 1.0) < 2e-3);
    CHECK(qgeom::optimal_metric(2, kPi / 2) == Approx(0.25));
    CHECK(qgeom::optimal_metric(2, 0.0) == 0.0);
    CHECK(qgeom::optimal_metric(4, kPi / 2) == Approx(1.5));
}

TEST_CASE("two-spin values") {
    const auto pole = qgeom::two_spin_state(0.0, 0.0, 0.9);
    CHECK(same(pole[0], std::polar(1.0, -0.9)));
    CHECK(same(pole[1], 0.0));
    CHECK(same(pole[3], 0.0));
    const auto eq = qgeom::two_spin_state(kPi / 2, 0.0, 0.0);
    for (std::size_t b = 0; b < 4; ++b) {
        CHECK(same(eq[b], 0.5));
    }
    CHECK(qgeom::entanglement(kPi / 2, kPi / 2) == 0.5);
    CHECK(qgeom::entanglement(1.3, 0.0) == 0.0);
    CHECK(qgeom::entanglement(kPi / 2, kPi / 3) == Approx(0.25));
    CHECK(qgeom::entanglement_max(kPi / 2) == 0.5);
    CHECK(qgeom::entanglement_max(0.0) == 0.0);
    CHECK(qgeom::entanglement_max(kPi / 4) == Approx(0.5 * (1 - std::sqrt(3.0) / 2)));

    for (const double chi : {0.4, 1.2, 2.5}) {
        const double e = qgeom::entanglement(kPi / 2, chi);
        CHECK(qgeom::reduced_entanglement({e, chi}).e_r == Approx(1.0));
    }
    CHECK(qgeom::reduced_entanglement({0.0, kPi / 2}).e_r == 0.0);
    CHECK(qgeom::reduced_entanglement({qgeom::entanglement(kPi / 4, kPi / 2), kPi / 2}).e_r ==
          Approx(0.5));

    CHECK(qgeom::metric_ent_diagonal({1e-12}).g_cc < 1e-12);
    CHECK(std::abs(qgeom::metric_ent({0.2, kPi / 2}).g_ec) < 1e-15);
    CHECK(qgeom::metric_ent_diagonal({1.0}).g_cc == 0.25);
    CHECK(qgeom::metric_ent_diagonal({0.0}).g_cc == 0.0);

    CHECK(qgeom::curvature_ent({0.0, 0.7}) == Approx(10.0));
    CHECK(qgeom::curvature_ent({0.0, 0.0}, qgeom::ChiLimit::Static) == 16.0);
    CHECK(std::abs(qgeom::curvature_ent({0.5, kPi / 2})) < 1e-14);
    CHECK_FALSE(qgeom::curvature_negative({0.0, kPi / 2}));
    for (const double e : {0.05, 0.2, 0.4}) {
        CHECK(qgeom::curvature_negative({e, kPi / 2}) == (qgeom::curvature_ent({e, kPi / 2}) < 0));
    }
    CHECK(std::abs(qgeom::curvature_min(kPi / 2, kPi / 2)) < 1e-14);
    CHECK(qgeom::curvature_min(kPi / 2, 1e-9) == Approx(16.0));

    CHECK(std::abs(qgeom::geometric_phase_ent({0.0, 0.4})) < 1e-15);
    CHECK(mod_dist(qgeom::geometric_phase_ent({0.5, kPi / 2}),
                   qgeom::geometric_phase(2, kPi / 2, kPi / 2)) < 1e-12);
    CHECK(mod_dist(qgeom::geometric_phase_ent({0.25, kPi / 3}),
                   qgeom::geometric_phase(2, kPi / 2, kPi / 3)) < 1e-12);

    CHECK(qgeom::aa_phase_ent({0.0, kPi / 2}) == 0.0);
    CHECK(qgeom::aa_phase_ent({0.5, kPi / 2}) == Approx(-kPi));

    CHECK(qgeom::speed_ent({0.0, 1.1}, 2.0) == 0.0);
    for (const double chi : {0.3, 1.0, kPi / 2}) {
        CHECK(qgeom::speed_ent({std::pow(std::sin(chi / 2), 2), chi}, 1.0) == Approx(0.5));
    }
    CHECK(qgeom::speed_ent({qgeom::entanglement(kPi / 4, 1.0), 1.0}, 1.0) ==
          Approx(qgeom::speed(2, kPi / 4, 1.0)));
    CHECK(qgeom::critical_entanglement_speed(kPi / 2) == Approx(0.5));
    CHECK(qgeom::critical_entanglement_speed(kPi / 3) == Approx(0.25));

    CHECK(qgeom::distance_ent({0.0, 1.3}) == 0.0);
    CHECK(qgeom::distance_ent({0.5, kPi / 2}) == Approx(kPi / 4));
    CHECK(qgeom::optimal_time_ent({0.0, 0.9}, 1.0) == 0.0);
    CHECK(qgeom::optimal_time_ent({std::pow(std::sin(0.5), 2), 1.0}, 1.0) == Approx(1.0));
    for (const double e : {0.01, 0.1, 0.2}) {
        CHECK(qgeom::optimal_time_ent({e, 1.0}, 1.0) < 1.0);
    }
    CHECK(qgeom::optimal_metric_ent({0.0, 1.0}) == 0.0);
    CHECK(qgeom::optimal_metric_ent({std::pow(std::sin(0.5), 2), 1.0}) == Approx(0.25));
}

}
