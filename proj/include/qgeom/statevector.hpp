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
 * Exact statevector engine for H = J (sum_i S^z_i)^2 (hbar = 1).
 *
 * This is the ground truth the closed forms in the other modules are checked
 * against. H is diagonal, so evolution is a per-amplitude phase that depends
 * on the index only through its popcount.
 */

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qgeom/kernels.hpp"

namespace qgeom {

using Complex = std::complex<double>;

/// Memory bound of the oracle: 2^24 amplitudes ~ 256 MB.
inline constexpr int kOracleMaxSpins = 24;

enum class Exec { Serial, Parallel };

struct EnsembleParams {
    int n = 1;
    double J = 1.0;
    double theta = 0.0;
    double phi = 0.0;
};

/// Checks n >= 1 and theta in [0, pi]. Out-of-range theta is an error.
void validate(const EnsembleParams &params);
/// validate() plus n <= kOracleMaxSpins.
void validate_oracle(const EnsembleParams &params);

class StateVector {
  public:
    StateVector(int n, std::vector<Complex> amplitudes);

    [[nodiscard]] int spins() const noexcept { return n_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }
    [[nodiscard]] const Complex &operator[](std::size_t b) const {
        return amps_[b];
    }

    [[nodiscard]] double norm() const;

  private:
    int n_;
    std::vector<Complex> amps_;
};

class DiagonalHamiltonian {
  public:
    DiagonalHamiltonian(int n, double J);

    [[nodiscard]] int spins() const noexcept { return n_; }
    [[nodiscard]] double coupling() const noexcept { return J_; }
    [[nodiscard]] std::span<const double> entries() const noexcept {
        return entries_;
    }
    /// Energy of the popcount-p sector, J (n - 2p)^2 / 4.
    [[nodiscard]] double level(int p) const noexcept;

  private:
    int n_;
    double J_;
    std::vector<double> entries_;
};

/// |S>^{tensor n} with |S> = cos(theta/2)|+> + e^{i phi} sin(theta/2)|->.
StateVector build_initial_state(const EnsembleParams &params,
                                Exec exec = Exec::Parallel);

DiagonalHamiltonian hamiltonian(int n, double J);

/// exp(-i H t) applied to `state`; only chi = J t enters.
StateVector evolve(const StateVector &state, double J, double t,
                   Exec exec = Exec::Parallel);

/// <a|b>.
Complex overlap(const StateVector &a, const StateVector &b,
                Exec exec = Exec::Parallel);

struct EnergyMoments {
    double mean;
    double second_moment;
    [[nodiscard]] double variance() const noexcept {
        return second_moment - mean * mean;
    }
};

EnergyMoments energy_moments(const StateVector &state,
                             const DiagonalHamiltonian &h,
                             Exec exec = Exec::Parallel);

/// (<sigma^x>, <sigma^y>, <sigma^z>) of one spin's reduced state.
std::array<double, 3> reduced_bloch_vector(const StateVector &state, int site,
                                           Exec exec = Exec::Parallel);

enum class Coordinate { Theta, Phi, Chi };

/**
 * Unnormalised tangent d|psi>/d(coordinate) at (theta, phi, chi = J t).
 *
 * Theta and phi use central differences with the given step; chi is exact,
 * -i (H/J)|psi>, and ignores `step`.
 */
StateVector parametric_derivative(const EnsembleParams &params, double t,
                                  Coordinate which, double step = 1e-5);

/// Convenience: build_initial_state followed by evolution to chi.
StateVector evolved_state(const EnsembleParams &params, double chi,
                          Exec exec = Exec::Parallel);

} // namespace qgeom
