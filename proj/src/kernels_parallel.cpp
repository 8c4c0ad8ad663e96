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
#include <cstdint>

#include "qgeom/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

// Same loops as kernels_serial.cpp with OpenMP work sharing. Complex sums are
// reduced through their real and imaginary parts.

namespace qgeom::kernels {

bool openmp_enabled() noexcept {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

namespace parallel {

namespace {
using Index = std::int64_t;
int level_of(Index b) { return std::popcount(static_cast<std::uint64_t>(b)); }
} // namespace

void fill_by_level(std::span<Complex> out, std::span<const Complex> levels) {
    const auto dim = static_cast<Index>(out.size());
#pragma omp parallel for schedule(static)
    for (Index b = 0; b < dim; ++b) {
        out[static_cast<std::size_t>(b)] = levels[static_cast<std::size_t>(level_of(b))];
    }
}

void scale_by_level(std::span<Complex> amps, std::span<const Complex> levels) {
    const auto dim = static_cast<Index>(amps.size());
#pragma omp parallel for schedule(static)
    for (Index b = 0; b < dim; ++b) {
        amps[static_cast<std::size_t>(b)] *= levels[static_cast<std::size_t>(level_of(b))];
    }
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    const auto dim = static_cast<Index>(a.size());
    double re = 0.0;
    double im = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : re, im)
    for (Index i = 0; i < dim; ++i) {
        const Complex t = std::conj(a[static_cast<std::size_t>(i)]) * b[static_cast<std::size_t>(i)];
        re += t.real();
        im += t.imag();
    }
    return {re, im};
}

Moments diagonal_moments(std::span<const Complex> amps,
                         std::span<const double> entries) {
    const auto dim = static_cast<Index>(amps.size());
    long double weight = 0.0L;
    long double mean = 0.0L;
    long double second = 0.0L;
#pragma omp parallel for schedule(static) reduction(+ : weight, mean, second)
    for (Index b = 0; b < dim; ++b) {
        const auto k = static_cast<std::size_t>(b);
        const long double w = std::norm(amps[k]);
        const long double e = entries[k];
        weight += w;
        mean += w * e;
        second += w * e * e;
    }
    return {static_cast<double>(weight), static_cast<double>(mean),
            static_cast<double>(second)};
}

std::array<double, 3> bloch_vector(std::span<const Complex> amps, int site) {
    const auto dim = static_cast<Index>(amps.size());
    const Index mask = Index{1} << site;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : x, y, z)
    for (Index b = 0; b < dim; ++b) {
        if (b & mask) {
            continue;
        }
        const Complex up = amps[static_cast<std::size_t>(b)];
        const Complex down = amps[static_cast<std::size_t>(b | mask)];
        const Complex coherence = std::conj(up) * down;
        x += 2.0 * coherence.real();
        y += 2.0 * coherence.imag();
        z += std::norm(up) - std::norm(down);
    }
    return {x, y, z};
}

std::vector<double> level_populations(std::span<const Complex> amps, int n) {
    const auto dim = static_cast<Index>(amps.size());
    const auto levels = static_cast<std::size_t>(n) + 1;
    std::vector<double> pop(levels, 0.0);
#pragma omp parallel
    {
        std::vector<double> local(levels, 0.0);
#pragma omp for schedule(static) nowait
        for (Index b = 0; b < dim; ++b) {
            local[static_cast<std::size_t>(level_of(b))] +=
                std::norm(amps[static_cast<std::size_t>(b)]);
        }
#pragma omp critical
        for (std::size_t p = 0; p < levels; ++p) {
            pop[p] += local[p];
        }
    }
    return pop;
}

} // namespace parallel
} // namespace qgeom::kernels
