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

#pragma once

/**
 * @file
 * Fubini-Study metric, Christoffel symbols and scalar curvature of the
 * evolving n-spin state manifold, in (theta, chi) and (theta, phi, chi)
 * coordinates. Each closed form has a numeric counterpart built either on
 * the statevector engine or on finite differences.
 */

#include "qgeom/statevector.hpp"

namespace qgeom {

/// Reduced (theta, chi) metric.
struct Metric2 {
    double g_tt;
    double g_cc;
    double g_tc;
};

/// Full (theta, phi, chi) metric as a symmetric tensor.
struct Metric3 {
    double g_tt;
    double g_pp;
    double g_cc;
    double g_pc;
    double g_tp;
    double g_tc;
};

/// The two non-trivial Christoffel symbols Gamma^chi_{theta theta} and
/// Gamma^chi_{theta chi}.
struct Christoffel {
    double gamma_c_tt;
    double gamma_c_tc;
};

struct ScalarCurvature {
    double value;
    /// g_chichi vanishes here; the closed form is finite but the metric is
    /// degenerate (theta in {0, pi}).
    bool metric_degenerate;
};

/// g_tt = n/4, g_cc = n(n-1) sin^2(theta) [1 + (2n-3) cos^2(theta)] / 8.
Metric2 metric_reduced(int n, double theta);

/// Adds g_pp = (n/4) sin^2(theta) and g_pc = n(n-1) sin(2 theta) sin(theta) / 8.
Metric3 metric_full(int n, double theta);

/// d g_cc / d theta, analytic.
double metric_cc_derivative(int n, double theta);

/**
 * Re[<psi_a|psi_b> - <psi_a|psi><psi|psi_b>] from statevector tangents.
 *
 * g_cc is the exact variance of H/J; every other component uses central
 * differences of the state with `step`. Requires theta in [1e-3, pi - 1e-3].
 */
Metric3 metric_numeric(const EnsembleParams &params, double chi,
                       double step = 1e-5);

/// Requires n >= 2 and theta away from the poles (g_cc > 0).
Christoffel christoffel(int n, double theta);

/// (16/n) [2 + ((2n-3) s^2 - 3(n-1)) / ((2n-3) s^2 - 2(n-1))^2], s = sin(theta).
ScalarCurvature curvature_closed(int n, double theta);

struct CurvatureOptions {
    double step = 1e-4;
    bool richardson = false;
};

/**
 * R = 2/sqrt(g_tt g_cc) [d_chi(G^chi_tt sqrt(g_cc/g_tt))
 *                         - d_theta(G^chi_tc sqrt(g_cc/g_tt))]
 * with every derivative (including the ones inside the Christoffel symbols)
 * taken by finite differences of the metric components. Valid on
 * theta in [0.2, pi - 0.2].
 */
double curvature_numeric(int n, double theta, CurvatureOptions opts = {});

} // namespace qgeom
