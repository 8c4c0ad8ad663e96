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

#include <benchmark/benchmark.h>

#include <numbers>

#include "qgeom/kernels.hpp"
#include "qgeom/statevector.hpp"
#include "qgeom/sweep.hpp"

namespace {

template <qgeom::Exec E>
void BM_Evolve(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const auto psi = qgeom::build_initial_state({n, 1.0, 1.1, 0.3}, E);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qgeom::evolve(psi, 1.0, 0.7, E));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(psi.dim()));
}

template <qgeom::Exec E>
void BM_Overlap(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const qgeom::EnsembleParams p{n, 1.0, 1.1, 0.3};
    const auto a = qgeom::build_initial_state(p, E);
    const auto b = qgeom::evolve(a, 1.0, 0.7, E);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qgeom::overlap(a, b, E));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(a.dim()));
}

template <qgeom::Exec E>
void BM_EnergyMoments(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const auto psi = qgeom::build_initial_state({n, 1.0, 1.1, 0.3}, E);
    const auto h = qgeom::hamiltonian(n, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qgeom::energy_moments(psi, h, E));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(psi.dim()));
}

template <qgeom::Exec E>
void BM_CurvatureSweep(benchmark::State &state) {
    qgeom::SweepConfig c;
    c.quantity = qgeom::Quantity::Curvature;
    c.axes = {qgeom::Axis::range(qgeom::Param::Theta, 0.0, std::numbers::pi,
                                 static_cast<int>(state.range(0))),
              qgeom::Axis::list(qgeom::Param::N, {2, 3, 4, 5, 6, 7, 8})};
    for (auto _ : state) {
        benchmark::DoNotOptimize(qgeom::run_sweep(c, E));
    }
}

} // namespace

BENCHMARK(BM_Evolve<qgeom::Exec::Serial>)->DenseRange(12, 22, 5);
BENCHMARK(BM_Evolve<qgeom::Exec::Parallel>)->DenseRange(12, 22, 5);
BENCHMARK(BM_Overlap<qgeom::Exec::Serial>)->DenseRange(12, 22, 5);
BENCHMARK(BM_Overlap<qgeom::Exec::Parallel>)->DenseRange(12, 22, 5);
BENCHMARK(BM_EnergyMoments<qgeom::Exec::Serial>)->DenseRange(12, 22, 5);
BENCHMARK(BM_EnergyMoments<qgeom::Exec::Parallel>)->DenseRange(12, 22, 5);
BENCHMARK(BM_CurvatureSweep<qgeom::Exec::Serial>)->Arg(1000);
BENCHMARK(BM_CurvatureSweep<qgeom::Exec::Parallel>)->Arg(1000);

BENCHMARK_MAIN();
