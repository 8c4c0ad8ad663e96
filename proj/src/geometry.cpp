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

#include "qgeom/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qgeom/error.hpp"
#include "qgeom/numeric.hpp"

namespace qgeom {

namespace {

constexpr double kPoleInset = 1e-3;
constexpr double kCurvatureInset = 0.2;

void check_theta(int n, double theta) {
    validate(EnsembleParams{n, 1.0, theta, 0.0});
}

double g_cc_closed(int n, double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    return n * (n - 1.0) * s * s * (1.0 + (2.0 * n - 3.0) * c * c) / 8.0;
}

double chi_variance(const StateVector &psi) {
    // Var(H/J) with J = 1, exact.
    const auto m = energy_moments(psi, hamiltonian(psi.spins(), 1.0));
    return m.variance();
}

double qgt_real(const StateVector &a, const StateVector &b,
                const StateVector &psi) {
    const Complex ab = overlap(a, b);
    const Complex a_psi = overlap(a, psi);
    const Complex psi_b = overlap(psi, b);
    return (ab - a_psi * psi_b).real();
}

} // namespace

Metric2 metric_reduced(int n, double theta) {
    check_theta(n, theta);
    return {n / 4.0, g_cc_closed(n, theta), 0.0};
}

Metric3 metric_full(int n, double theta) {
    check_theta(n, theta);
    const double s = std::sin(theta);
    return {
        .g_tt = n / 4.0,
        .g_pp = n / 4.0 * s * s,
        .g_cc = g_cc_closed(n, theta),
        .g_pc = n * (n - 1.0) * std::sin(2.0 * theta) * s / 8.0,
        .g_tp = 0.0,
        .g_tc = 0.0,
    };
}

double metric_cc_derivative(int n, double theta) {
    check_theta(n, theta);
    return n * (n - 1.0) / 8.0 *
           (std::sin(2.0 * theta) +
            (2.0 * n - 3.0) * 0.5 * std::sin(4.0 * theta));
}

Metric3 metric_numeric(const EnsembleParams &params, double chi, double step) {
    validate_oracle(params);
    require(params.theta >= kPoleInset &&
                params.theta <= std::numbers::pi - kPoleInset,
            ErrorKind::InvalidArgument,
            "theta too close to a pole for finite differencing");

    // J = 1, t = chi.
    EnsembleParams p = params;
    p.J = 1.0;
    const StateVector psi = evolved_state(p, chi);
    const StateVector d_theta =
        parametric_derivative(p, chi, Coordinate::Theta, step);
    const StateVector d_phi = parametric_derivative(p, chi, Coordinate::Phi, step);
    const StateVector d_chi = parametric_derivative(p, chi, Coordinate::Chi);

    return {
        .g_tt = qgt_real(d_theta, d_theta, psi),
        .g_pp = qgt_real(d_phi, d_phi, psi),
        .g_cc = chi_variance(psi),
        .g_pc = qgt_real(d_phi, d_chi, psi),
        .g_tp = qgt_real(d_theta, d_phi, psi),
        .g_tc = qgt_real(d_theta, d_chi, psi),
    };
}

Christoffel christoffel(int n, double theta) {
    check_theta(n, theta);
    const double g_cc = g_cc_closed(n, theta);
    require(n >= 2 && g_cc > 0.0, ErrorKind::SingularMetric,
            "g_chichi vanishes (pole or n < 2)");
    return {0.0, metric_cc_derivative(n, theta) / (2.0 * g_cc)};
}

ScalarCurvature curvature_closed(int n, double theta) {
    check_theta(n, theta);
    require(n >= 2, ErrorKind::InvalidArgument, "curvature needs n >= 2");
    const double s2 = std::sin(theta) * std::sin(theta);
    const double a = 2.0 * n - 3.0;
    const double den = a * s2 - 2.0 * (n - 1.0);
    const double value = 16.0 / n * (2.0 + (a * s2 - 3.0 * (n - 1.0)) / (den * den));
    const bool degenerate = theta == 0.0 || theta == std::numbers::pi;
    return {value, degenerate};
}

double curvature_numeric(int n, double theta, CurvatureOptions opts) {
    check_theta(n, theta);
    require(n >= 2, ErrorKind::InvalidArgument, "curvature needs n >= 2");
    require(theta >= kCurvatureInset && theta <= std::numbers::pi - kCurvatureInset,
            ErrorKind::InvalidArgument,
            "theta outside the finite-difference window [0.2, pi - 0.2]");

    using numeric::ScalarFn;
    const double h = opts.step;
    auto diff = [&](const ScalarFn &f, double x) {
        return opts.richardson ? numeric::richardson_difference(f, x, h)
                               : numeric::central_difference(f, x, h);
    };

    auto g_tt = [n](double, double) { return n / 4.0; };
    auto g_cc = [n](double th, double) { return g_cc_closed(n, th); };

    auto gamma_tt = [&](double th, double ch) {
        const double d = diff([&](double c) { return g_tt(th, c); }, ch);
        return -d / (2.0 * g_cc(th, ch));
    };
    auto gamma_tc = [&](double th, double ch) {
        const double d = diff([&](double t) { return g_cc(t, ch); }, th);
        return d / (2.0 * g_cc(th, ch));
    };
    auto ratio = [&](double th, double ch) {
        return std::sqrt(g_cc(th, ch) / g_tt(th, ch));
    };

    const double chi = 0.0;
    const double d_chi_term =
        diff([&](double c) { return gamma_tt(theta, c) * ratio(theta, c); }, chi);
    const double d_theta_term =
        diff([&](double t) { return gamma_tc(t, chi) * ratio(t, chi); }, theta);
    return 2.0 / std::sqrt(g_tt(theta, chi) * g_cc(theta, chi)) *
           (d_chi_term - d_theta_term);
}

} // namespace qgeom
