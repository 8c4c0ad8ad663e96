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
 * Total, dynamical and geometric phases of the evolving ensemble, plus the
 * cyclic (Aharonov-Anandan) and topological phases.
 *
 * Principal values live on (-pi, pi]; comparisons between independent
 * routes are done modulo 2 pi. The total phase is undefined when the evolved
 * state is orthogonal to the initial one (|overlap| < kOverlapFloor) and the
 * functions throw ErrorKind::PhaseUndefined there.
 */

#include <optional>
#include <span>
#include <vector>

#include "qgeom/statevector.hpp"

namespace qgeom {

inline constexpr double kOverlapFloor = 1e-10;

struct PhaseSet {
    double total;     ///< principal branch
    double dynamical; ///< linear in chi, unbounded
    double geometric; ///< total - dynamical, total on its principal branch
    std::optional<double> unwrapped_total;
};

struct CyclicPhase {
    double aa;
    double topological;
    double period_chi;
};

/// sum_p C(n,p) tan^{2p}(theta/2) cos^{2n}(theta/2) exp(-i chi (n-2p)^2/4).
Complex overlap_closed(int n, double theta, double chi);

/// arg of overlap_closed via the two-argument arctangent.
double total_phase_closed(int n, double theta, double chi);

/// arg <psi_i|psi(t)> from the statevector engine.
double total_phase_numeric(const EnsembleParams &params, double t);

/// -(n chi / 4) [(n-1) cos^2(theta) + 1].
double dynamical_phase(int n, double theta, double chi);

/// total_phase_closed - dynamical_phase (not branch-reduced).
double geometric_phase(int n, double theta, double chi);

PhaseSet phase_set(int n, double theta, double chi);

/**
 * Phases along an increasing chi grid with the total phase unwrapped by
 * nearest-branch continuation. Points with vanishing overlap carry NaN
 * phases and do not break the continuation.
 */
std::vector<PhaseSet> phase_sweep(int n, double theta,
                                  std::span<const double> chis);

/// -(n pi / 2)(n-1) sin^2(theta).
double aa_phase_closed(int n, double theta);

struct AaIntegral {
    /// Unwrapped change of arg <psi_i|psi(chi)> over chi in [0, 2 pi].
    double total_phase_change;
    /// Trapezoid of <H> over one period (J = 1).
    double dynamical_integral;
    /// total_phase_change + dynamical_integral.
    double value;
};

/// Cyclic phase from the statevector engine over one chi period.
AaIntegral aa_phase_numeric(int n, double theta, int steps = 10000,
                            Exec exec = Exec::Parallel);

/// -pi n^2 / 2.
double topological_phase(int n);

CyclicPhase cyclic_phase(int n, double theta);

} // namespace qgeom
