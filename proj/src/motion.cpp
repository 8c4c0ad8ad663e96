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

#include "qgeom/motion.hpp"

#include <cmath>

#include "qgeom/error.hpp"
#include "qgeom/geometry.hpp"
#include "qgeom/statevector.hpp"

namespace qgeom {

namespace {

void require_pair(int n) {
    require(n >= 2, ErrorKind::InvalidArgument,
            "brachistochrone quantities need n > 1");
}

// n(n-1) sin^2 [1/2 + (n - 3/2) cos^2]; non-negative for n >= 1.
double speed_radicand(int n, double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    return n * (n - 1.0) * s * s * (0.5 + (n - 1.5) * c * c);
}

} // namespace

double speed(int n, double theta, double J) {
    validate(EnsembleParams{n, J, theta, 0.0});
    return 0.5 * J * std::sqrt(speed_radicand(n, theta));
}

double theta_max(int n) {
    require_pair(n);
    return std::acos(std::sqrt((n - 2.0) / (2.0 * n - 3.0)));
}

double speed_max(int n, double J) {
    require_pair(n);
    return 0.5 * J * (n - 1.0) * std::sqrt(n * (n - 1.0) / (2.0 * (2.0 * n - 3.0)));
}

double fs_distance(int n, double theta, double chi) {
    validate(EnsembleParams{n, 1.0, theta, 0.0});
    require(chi >= 0.0, ErrorKind::InvalidArgument, "chi must be >= 0");
    return 0.5 * chi * std::sqrt(speed_radicand(n, theta));
}

double fs_distance_min(int n, double chi) {
    require_pair(n);
    require(chi >= 0.0, ErrorKind::InvalidArgument, "chi must be >= 0");
    return n * chi / 2.0 * std::sqrt(0.5 * (1.0 - 1.0 / n));
}

double brachistochrone_time(int n, double t) {
    require_pair(n);
    require(t >= 0.0, ErrorKind::InvalidArgument, "t must be >= 0");
    return t * std::sqrt(2.0 * n - 3.0) / (n - 1.0);
}

double optimal_metric(int n, double theta) {
    require_pair(n);
    return metric_reduced(n, theta).g_cc;
}

BrachistochroneReport brachistochrone_report(int n, double theta, double J,
                                             double t) {
    require_pair(n);
    const double chi = J * t;
    const double t_min = brachistochrone_time(n, t);
    return {
        .v = speed(n, theta, J),
        .v_max = speed_max(n, J),
        .theta_max = theta_max(n),
        .s = fs_distance(n, theta, chi),
        .s_min = fs_distance_min(n, chi),
        .t_min = t_min,
        .chi_min = J * t_min,
    };
}

} // namespace qgeom
