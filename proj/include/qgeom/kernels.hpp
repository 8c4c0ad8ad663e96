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
 * Amplitude-level kernels over the 2^n computational basis.
 *
 * Every kernel exists twice: `serial` is the plain reference loop kept for
 * testing, `parallel` is the OpenMP version used by default. Both operate on
 * spans so the StateVector wrapper stays a thin value type.
 *
 * Basis convention: bit i of the index is spin i, 0 <-> m_i = +1/2, so the
 * number of down spins is popcount(index).
 */

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qgeom::kernels {

using Complex = std::complex<double>;

/// Per-popcount amplitude table cos^{n-p}(theta/2) sin^p(theta/2) e^{i p phi}.
std::vector<Complex> product_state_levels(int n, double theta, double phi);

/// Per-popcount phase table exp(-i chi (n-2p)^2 / 4).
std::vector<Complex> ising_phase_levels(int n, double chi);

/// Unnormalised sums: weight = <psi|psi>, mean = <psi|H|psi>, second = <psi|H^2|psi>.
struct Moments {
    double weight = 0.0;
    double mean = 0.0;
    double second = 0.0;
};

namespace serial {
void fill_by_level(std::span<Complex> out, std::span<const Complex> levels);
void scale_by_level(std::span<Complex> amps, std::span<const Complex> levels);
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);
Moments diagonal_moments(std::span<const Complex> amps,
                         std::span<const double> entries);
std::array<double, 3> bloch_vector(std::span<const Complex> amps, int site);
/// Total probability in each popcount sector, size n + 1.
std::vector<double> level_populations(std::span<const Complex> amps, int n);
} // namespace serial

namespace parallel {
void fill_by_level(std::span<Complex> out, std::span<const Complex> levels);
void scale_by_level(std::span<Complex> amps, std::span<const Complex> levels);
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);
Moments diagonal_moments(std::span<const Complex> amps,
                         std::span<const double> entries);
std::array<double, 3> bloch_vector(std::span<const Complex> amps, int site);
std::vector<double> level_populations(std::span<const Complex> amps, int n);
} // namespace parallel

/// True when the parallel kernels were compiled with OpenMP.
bool openmp_enabled() noexcept;

} // namespace qgeom::kernels
