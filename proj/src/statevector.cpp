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

#include "qgeom/statevector.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "qgeom/error.hpp"

namespace qgeom {

namespace {

namespace ser = kernels::serial;
namespace par = kernels::parallel;

void fill_by_level(Exec exec, std::span<Complex> out,
                   std::span<const Complex> levels) {
    exec == Exec::Serial ? ser::fill_by_level(out, levels)
                         : par::fill_by_level(out, levels);
}

void scale_by_level(Exec exec, std::span<Complex> amps,
                    std::span<const Complex> levels) {
    exec == Exec::Serial ? ser::scale_by_level(amps, levels)
                         : par::scale_by_level(amps, levels);
}

std::size_t dim_of(int n) { return std::size_t{1} << n; }

} // namespace

void validate(const EnsembleParams &params) {
    require(params.n >= 1, ErrorKind::InvalidArgument,
            "particle count must be >= 1, got " + std::to_string(params.n));
    require(std::isfinite(params.theta) && params.theta >= 0.0 &&
                params.theta <= std::numbers::pi,
            ErrorKind::InvalidArgument,
            "theta must lie in [0, pi], got " + std::to_string(params.theta));
    require(std::isfinite(params.phi) && std::isfinite(params.J),
            ErrorKind::InvalidArgument, "phi and J must be finite");
}

void validate_oracle(const EnsembleParams &params) {
    validate(params);
    require(params.n <= kOracleMaxSpins, ErrorKind::OracleRange,
            "statevector oracle supports n <= " +
                std::to_string(kOracleMaxSpins) + ", got " +
                std::to_string(params.n));
}

StateVector::StateVector(int n, std::vector<Complex> amplitudes)
    : n_(n), amps_(std::move(amplitudes)) {
    require(n >= 1 && n <= kOracleMaxSpins, ErrorKind::OracleRange,
            "state vector spin count out of range");
    require(amps_.size() == dim_of(n), ErrorKind::DimensionMismatch,
            "expected 2^n amplitudes");
}

double StateVector::norm() const {
    return std::sqrt(std::abs(ser::inner_product(amps_, amps_)));
}

DiagonalHamiltonian::DiagonalHamiltonian(int n, double J)
    : n_(n), J_(J), entries_(dim_of(n)) {
    for (std::size_t b = 0; b < entries_.size(); ++b) {
        entries_[b] = level(std::popcount(static_cast<std::uint64_t>(b)));
    }
}

double DiagonalHamiltonian::level(int p) const noexcept {
    const double m = n_ - 2.0 * p;
    return J_ * m * m / 4.0;
}

StateVector build_initial_state(const EnsembleParams &params, Exec exec) {
    validate_oracle(params);
    std::vector<Complex> amps(dim_of(params.n));
    const auto levels =
        kernels::product_state_levels(params.n, params.theta, params.phi);
    fill_by_level(exec, amps, levels);
    return {params.n, std::move(amps)};
}

DiagonalHamiltonian hamiltonian(int n, double J) {
    require(n >= 1 && n <= kOracleMaxSpins, ErrorKind::OracleRange,
            "hamiltonian needs 1 <= n <= " + std::to_string(kOracleMaxSpins));
    require(std::isfinite(J), ErrorKind::InvalidArgument, "J must be finite");
    return {n, J};
}

StateVector evolve(const StateVector &state, double J, double t, Exec exec) {
    StateVector out = state;
    const auto phases = kernels::ising_phase_levels(state.spins(), J * t);
    scale_by_level(exec, out.amplitudes(), phases);
    return out;
}

Complex overlap(const StateVector &a, const StateVector &b, Exec exec) {
    require(a.spins() == b.spins(), ErrorKind::DimensionMismatch,
            "overlap of states with different spin counts");
    return exec == Exec::Serial ? ser::inner_product(a.amplitudes(), b.amplitudes())
                                : par::inner_product(a.amplitudes(), b.amplitudes());
}

EnergyMoments energy_moments(const StateVector &state,
                             const DiagonalHamiltonian &h, Exec exec) {
    require(state.spins() == h.spins(), ErrorKind::DimensionMismatch,
            "state and hamiltonian sizes differ");
    const auto m = exec == Exec::Serial
                       ? ser::diagonal_moments(state.amplitudes(), h.entries())
                       : par::diagonal_moments(state.amplitudes(), h.entries());
    require(m.weight > 0.0, ErrorKind::InvalidArgument, "zero state has no energy moments");
    return {m.mean / m.weight, m.second / m.weight};
}

std::array<double, 3> reduced_bloch_vector(const StateVector &state, int site,
                                           Exec exec) {
    require(site >= 0 && site < state.spins(), ErrorKind::InvalidArgument,
            "site index " + std::to_string(site) + " out of range");
    return exec == Exec::Serial ? ser::bloch_vector(state.amplitudes(), site)
                                : par::bloch_vector(state.amplitudes(), site);
}

StateVector evolved_state(const EnsembleParams &params, double chi, Exec exec) {
    validate_oracle(params);
    std::vector<Complex> amps(dim_of(params.n));
    auto levels =
        kernels::product_state_levels(params.n, params.theta, params.phi);
    const auto phases = kernels::ising_phase_levels(params.n, chi);
    for (std::size_t p = 0; p < levels.size(); ++p) {
        levels[p] *= phases[p];
    }
    fill_by_level(exec, amps, levels);
    return {params.n, std::move(amps)};
}

StateVector parametric_derivative(const EnsembleParams &params, double t,
                                  Coordinate which, double step) {
    validate_oracle(params);
    const double chi = params.J * t;
    const int n = params.n;
    auto levels = kernels::product_state_levels(n, params.theta, params.phi);
    const auto phases = kernels::ising_phase_levels(n, chi);

    // Differentiate the level table, then broadcast.
    std::vector<Complex> tangent(levels.size());
    switch (which) {
    case Coordinate::Chi:
        for (std::size_t p = 0; p < levels.size(); ++p) {
            const double m = n - 2.0 * static_cast<double>(p);
            tangent[p] = Complex{0.0, -m * m / 4.0} * levels[p] * phases[p];
        }
        break;
    case Coordinate::Theta:
    case Coordinate::Phi: {
        require(step > 0.0, ErrorKind::InvalidArgument,
                "finite-difference step must be positive");
        double plus_theta = params.theta;
        double minus_theta = params.theta;
        double plus_phi = params.phi;
        double minus_phi = params.phi;
        if (which == Coordinate::Theta) {
            plus_theta += step;
            minus_theta -= step;
            require(minus_theta >= 0.0 && plus_theta <= std::numbers::pi,
                    ErrorKind::InvalidArgument,
                    "theta +- step leaves [0, pi]");
        } else {
            plus_phi += step;
            minus_phi -= step;
        }
        const auto hi = kernels::product_state_levels(n, plus_theta, plus_phi);
        const auto lo = kernels::product_state_levels(n, minus_theta, minus_phi);
        for (std::size_t p = 0; p < levels.size(); ++p) {
            tangent[p] = (hi[p] - lo[p]) / (2.0 * step) * phases[p];
        }
        break;
    }
    }
    std::vector<Complex> amps(dim_of(n));
    par::fill_by_level(amps, tangent);
    return {n, std::move(amps)};
}

} // namespace qgeom
