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

#include <bit>
#include <cmath>
#include <cstdint>

#include "qgeom/kernels.hpp"

namespace qgeom::kernels {

namespace {
int level_of(std::size_t b) { return std::popcount(static_cast<std::uint64_t>(b)); }
} // namespace

std::vector<Complex> product_state_levels(int n, double theta, double phi) {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    std::vector<Complex> levels(static_cast<std::size_t>(n) + 1);
    for (int p = 0; p <= n; ++p) {
        const double mag = std::pow(c, n - p) * std::pow(s, p);
        levels[static_cast<std::size_t>(p)] = std::polar(mag, p * phi);
    }
    return levels;
}

std::vector<Complex> ising_phase_levels(int n, double chi) {
    std::vector<Complex> levels(static_cast<std::size_t>(n) + 1);
    for (int p = 0; p <= n; ++p) {
        const double m = n - 2.0 * p;
        levels[static_cast<std::size_t>(p)] = std::polar(1.0, -chi * m * m / 4.0);
    }
    return levels;
}

namespace serial {

void fill_by_level(std::span<Complex> out, std::span<const Complex> levels) {
    for (std::size_t b = 0; b < out.size(); ++b) {
        out[b] = levels[static_cast<std::size_t>(level_of(b))];
    }
}

void scale_by_level(std::span<Complex> amps, std::span<const Complex> levels) {
    for (std::size_t b = 0; b < amps.size(); ++b) {
        amps[b] *= levels[static_cast<std::size_t>(level_of(b))];
    }
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

Moments diagonal_moments(std::span<const Complex> amps,
                         std::span<const double> entries) {
    long double weight = 0.0L;
    long double mean = 0.0L;
    long double second = 0.0L;
    for (std::size_t b = 0; b < amps.size(); ++b) {
        const long double w = std::norm(amps[b]);
        const long double e = entries[b];
        weight += w;
        mean += w * e;
        second += w * e * e;
    }
    return {static_cast<double>(weight), static_cast<double>(mean),
            static_cast<double>(second)};
}

std::array<double, 3> bloch_vector(std::span<const Complex> amps, int site) {
    const std::size_t mask = std::size_t{1} << site;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    for (std::size_t b = 0; b < amps.size(); ++b) {
        if (b & mask) {
            continue;
        }
        const Complex up = amps[b];
        const Complex down = amps[b | mask];
        const Complex coherence = std::conj(up) * down;
        x += 2.0 * coherence.real();
        y += 2.0 * coherence.imag();
        z += std::norm(up) - std::norm(down);
    }
    return {x, y, z};
}

std::vector<double> level_populations(std::span<const Complex> amps, int n) {
    std::vector<double> pop(static_cast<std::size_t>(n) + 1, 0.0);
    for (std::size_t b = 0; b < amps.size(); ++b) {
        pop[static_cast<std::size_t>(level_of(b))] += std::norm(amps[b]);
    }
    return pop;
}

} // namespace serial
} // namespace qgeom::kernels
