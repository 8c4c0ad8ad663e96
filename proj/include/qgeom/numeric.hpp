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
 * Small numerical toolkit shared by the closed-form modules and their
 * oracles: finite differences, golden-section search, phase branch
 * handling and trapezoidal quadrature.
 */

#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace qgeom::numeric {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

using ScalarFn = std::function<double(double)>;

/// Central difference (f(x+h) - f(x-h)) / 2h.
double central_difference(const ScalarFn &f, double x, double h);

/// One Richardson step on top of central differences: O(h^4).
double richardson_difference(const ScalarFn &f, double x, double h);

struct Extremum {
    double x;
    double value;
};

/// Golden-section minimisation of a unimodal function on [lo, hi].
Extremum golden_section_min(const ScalarFn &f, double lo, double hi,
                            double tol = 1e-8);
Extremum golden_section_max(const ScalarFn &f, double lo, double hi,
                            double tol = 1e-8);

/// Principal branch (-pi, pi].
double wrap_to_pi(double angle);

/// Distance between two angles on the circle, in [0, pi].
double angular_distance(double a, double b);

/// Nearest-branch continuation of a sequence of principal values.
std::vector<double> unwrap(std::span<const double> principal);

/// Composite trapezoidal rule with `steps` panels.
double trapezoid(const ScalarFn &f, double a, double b, int steps);

/// Evenly spaced grid including both endpoints (count >= 2).
std::vector<double> linspace(double start, double stop, int count);

/// log of the binomial coefficient C(n, k).
double log_binomial(int n, int k);

} // namespace qgeom::numeric
