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
 * Two-spin toolkit in entanglement coordinates.
 *
 * E = (1 - |<sigma>|)/2 is treated together with chi as an independent
 * coordinate pair. Because E(theta, chi) folds the two theta branches onto
 * each other, points are only valid inside the reachable region
 * 2 sqrt(E(1-E)) <= |sin chi|, whose boundary is the theta = pi/2 family.
 * All chi dependence goes through |sin chi|.
 */

#include "qgeom/statevector.hpp"

namespace qgeom {

struct EntCoord {
    double e;
    double chi;
};

struct ReducedEnt {
    double e_r;
};

/// Components in (E, chi); g_ec is half the dE dchi coefficient.
struct EntMetric {
    double g_ee;
    double g_ec;
    double g_cc;
};

/// Diagonal chart (E_r, chi).
struct ReducedEntMetric {
    double g_rr;
    double g_cc;
};

struct CriticalPhase {
    double closed;  ///< verbatim closed form, NaN if its radicand is negative
    double numeric; ///< golden-section argmin of geometric_phase_ent
    [[nodiscard]] double deviation() const { return closed - numeric; }
};

enum class ChiLimit { None, Static };

inline constexpr double kReachSlack = 1e-12;

bool reachable(const EntCoord &c);
/// Throws Unreachable for E outside [0, 1/2] or outside the reachable region.
EntCoord make_ent_coord(double e, double chi);
/// Largest reachable E at chi: (1 - |cos chi|) / 2.
double entanglement_reach(double chi);

/// Evolved two-spin state with the global phase e^{i chi} factored as in
/// [e^{-i chi} c^2, e^{i phi} s c, e^{i phi} s c, e^{i(2phi - chi)} s^2].
StateVector two_spin_state(double theta, double phi, double chi);

/// (1/2)[1 - sqrt(1 - sin^4(theta) sin^2(chi))].
double entanglement(double theta, double chi);
double entanglement_max(double theta);

ReducedEnt reduced_entanglement(const EntCoord &c);
EntMetric metric_ent(const EntCoord &c);
ReducedEntMetric metric_ent_diagonal(ReducedEnt r);

/**
 * 8(2 + (2x - 3|s|)|s| / (4(x - |s|)^2)), x = sqrt(E(1-E)), s = sin chi.
 * At sin chi = 0 the expression is 0/0; ChiLimit::Static returns the static
 * value 16 there instead of throwing.
 */
double curvature_ent(const EntCoord &c, ChiLimit limit = ChiLimit::None);
bool curvature_negative(const EntCoord &c);
double curvature_min(double theta, double chi);

double geometric_phase_ent(const EntCoord &c);
CriticalPhase critical_entanglement_phase(double chi);
/// The closed-form E_c on its own.
double critical_entanglement_phase_closed(double chi);

/// -2 pi sqrt(E(1-E)) / |sin chi| = -pi E_r.
double aa_phase_ent(const EntCoord &c);

double speed_ent(const EntCoord &c, double J);
/// sin^2(chi/2) on (0, pi/2]; reflected through chi -> pi - chi beyond.
double critical_entanglement_speed(double chi);
double distance_ent(const EntCoord &c);
double optimal_time_ent(const EntCoord &c, double J);
double optimal_metric_ent(const EntCoord &c);

} // namespace qgeom
