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
 * Evolution speed, Fubini-Study distance and brachistochrone time.
 * Speeds are FS-length per unit time; distances use chi = J t.
 */

namespace qgeom {

struct BrachistochroneReport {
    double v;
    double v_max;
    double theta_max;
    double s;
    double s_min;
    double t_min;
    double chi_min;
};

/// (J/2) sqrt(n(n-1) sin^2 [1/2 + (n - 3/2) cos^2]); zero for n = 1.
double speed(int n, double theta, double J);

/// arccos sqrt((n-2)/(2n-3)) in (0, pi/2]; pi - theta_max is equally maximal.
double theta_max(int n);

/// (J/2)(n-1) sqrt(n(n-1) / (2(2n-3))).
double speed_max(int n, double J);

/// speed * chi / J; requires chi >= 0.
double fs_distance(int n, double theta, double chi);

/// (n chi / 2) sqrt((1 - 1/n) / 2), attained at theta = pi/2.
double fs_distance_min(int n, double chi);

/// t sqrt(2n-3) / (n-1); requires n >= 2 and t >= 0.
double brachistochrone_time(int n, double t);

/// Metric component attached to d chi_min^2; same as g_cc.
double optimal_metric(int n, double theta);

BrachistochroneReport brachistochrone_report(int n, double theta, double J,
                                             double t);

} // namespace qgeom
