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

#include "qgeom/phases.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qgeom/error.hpp"
#include "qgeom/numeric.hpp"

namespace qgeom {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double phase_of(Complex z) {
    if (std::abs(z) < kOverlapFloor) {
        fail(ErrorKind::PhaseUndefined,
             "evolved state is orthogonal to the initial state");
    }
    return std::atan2(z.imag(), z.real());
}

} // namespace

Complex overlap_closed(int n, double theta, double chi) {
    validate(EnsembleParams{n, 1.0, theta, 0.0});
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    Complex sum{0.0, 0.0};
    for (int p = 0; p <= n; ++p) {
        // C(n,p) tan^{2p}(theta/2) cos^{2n}(theta/2) = C(n,p) c^{2(n-p)} s^{2p}
        double weight = 0.0;
        if (s == 0.0) {
            weight = p == 0 ? 1.0 : 0.0;
        } else if (c == 0.0) {
            weight = p == n ? 1.0 : 0.0;
        } else {
            weight = std::exp(numeric::log_binomial(n, p) +
                              2.0 * (n - p) * std::log(c) +
                              2.0 * p * std::log(s));
        }
        const double m = n - 2.0 * p;
        sum += std::polar(weight, -chi * m * m / 4.0);
    }
    return sum;
}

double total_phase_closed(int n, double theta, double chi) {
    return phase_of(overlap_closed(n, theta, chi));
}

double total_phase_numeric(const EnsembleParams &params, double t) {
    const StateVector initial = build_initial_state(params);
    const StateVector later = evolve(initial, params.J, t);
    return phase_of(overlap(initial, later));
}

double dynamical_phase(int n, double theta, double chi) {
    validate(EnsembleParams{n, 1.0, theta, 0.0});
    const double c = std::cos(theta);
    return -n * chi / 4.0 * ((n - 1.0) * c * c + 1.0);
}

double geometric_phase(int n, double theta, double chi) {
    return total_phase_closed(n, theta, chi) - dynamical_phase(n, theta, chi);
}

PhaseSet phase_set(int n, double theta, double chi) {
    const double total = total_phase_closed(n, theta, chi);
    const double dyn = dynamical_phase(n, theta, chi);
    return {total, dyn, total - dyn, std::nullopt};
}

std::vector<PhaseSet> phase_sweep(int n, double theta,
                                  std::span<const double> chis) {
    std::vector<PhaseSet> out;
    out.reserve(chis.size());
    std::vector<double> principal;
    principal.reserve(chis.size());
    for (const double chi : chis) {
        const double dyn = dynamical_phase(n, theta, chi);
        double total = kNaN;
        try {
            total = total_phase_closed(n, theta, chi);
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::PhaseUndefined) {
                throw;
            }
        }
        out.push_back({total, dyn, total - dyn, std::nullopt});
        principal.push_back(total);
    }
    const auto unwrapped = numeric::unwrap(principal);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!std::isnan(unwrapped[i])) {
            out[i].unwrapped_total = unwrapped[i];
        }
    }
    return out;
}

double aa_phase_closed(int n, double theta) {
    validate(EnsembleParams{n, 1.0, theta, 0.0});
    const double s = std::sin(theta);
    return -n * std::numbers::pi / 2.0 * (n - 1.0) * s * s;
}

AaIntegral aa_phase_numeric(int n, double theta, int steps, Exec exec) {
    require(steps >= 1000, ErrorKind::InvalidArgument,
            "aa_phase_numeric needs at least 1000 steps, got " +
                std::to_string(steps));
    const EnsembleParams params{n, 1.0, theta, 0.0};
    const StateVector initial = build_initial_state(params, exec);
    const DiagonalHamiltonian h = hamiltonian(n, 1.0);
    const double period = numeric::two_pi;

    std::vector<double> principal(static_cast<std::size_t>(steps) + 1);
    std::vector<double> energy(principal.size());
    for (int k = 0; k <= steps; ++k) {
        const double chi = period * k / steps;
        const StateVector psi = evolve(initial, 1.0, chi, exec);
        const Complex ov = overlap(initial, psi, exec);
        principal[static_cast<std::size_t>(k)] =
            std::abs(ov) < kOverlapFloor ? kNaN : std::arg(ov);
        energy[static_cast<std::size_t>(k)] = energy_moments(psi, h, exec).mean;
    }
    const auto unwrapped = numeric::unwrap(principal);
    const double change = unwrapped.back() - unwrapped.front();

    double integral = 0.5 * (energy.front() + energy.back());
    for (std::size_t k = 1; k + 1 < energy.size(); ++k) {
        integral += energy[k];
    }
    integral *= period / steps;

    return {change, integral, change + integral};
}

double topological_phase(int n) {
    require(n >= 1, ErrorKind::InvalidArgument, "particle count must be >= 1");
    return -std::numbers::pi * n * n / 2.0;
}

CyclicPhase cyclic_phase(int n, double theta) {
    return {aa_phase_closed(n, theta), topological_phase(n), numeric::two_pi};
}

} // namespace qgeom
