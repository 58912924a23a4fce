// Copyright 2026 The amplenc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial vs OpenMP state-vector kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "amplenc/compiler.hpp"
#include "amplenc/kernels.hpp"
#include "amplenc/simulator.hpp"

using namespace amplenc;
namespace k = amplenc::kernels;

namespace {

std::vector<Complex> random_state(unsigned qubits) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    std::vector<Complex> v(Index{1} << qubits);
    for (auto& a : v) a = Complex(g(rng), g(rng));
    return v;
}

// One control below the target, as in the CRY onto the flag.
template <void (*Apply)(std::span<Complex>, unsigned, Index, const k::Matrix2&)>
void BM_ApplyMatrix(benchmark::State& state) {
    const auto qubits = static_cast<unsigned>(state.range(0));
    auto v = random_state(qubits);
    const auto m = k::ry(0.3);
    for (auto _ : state) {
        Apply(v, qubits / 2, Index{1} << (qubits - 1), m);
        benchmark::DoNotOptimize(v.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}

template <void (*Apply)(std::span<Complex>, unsigned, Index)>
void BM_ApplyX(benchmark::State& state) {
    const auto qubits = static_cast<unsigned>(state.range(0));
    auto v = random_state(qubits);
    for (auto _ : state) {
        Apply(v, 1, 0b101);
        benchmark::DoNotOptimize(v.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}

template <double (*Weight)(std::span<const Complex>, Index, Index)>
void BM_MaskedWeight(benchmark::State& state) {
    const auto qubits = static_cast<unsigned>(state.range(0));
    auto v = random_state(qubits);
    for (auto _ : state) benchmark::DoNotOptimize(Weight(v, 0b110, 0));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}

void BM_FullProtocol(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    std::vector<std::uint64_t> values(std::size_t{1} << n);
    for (std::size_t i = 0; i < values.size(); i++) values[i] = (i * 7 + 3) % 32;
    auto data = pad_to_power_of_two(values, 5);
    auto protocol = compile(data, resolve_params(data, 1e-3));
    RunOptions opt;
    opt.backend = state.range(1) ? Backend::kParallel : Backend::kSerial;
    for (auto _ : state) benchmark::DoNotOptimize(run(protocol, opt).flag_one_weight());
}

}  // namespace

BENCHMARK(BM_ApplyMatrix<k::serial::apply_matrix>)->Name("apply_matrix/serial")->DenseRange(12, 24, 4);
BENCHMARK(BM_ApplyMatrix<k::omp::apply_matrix>)->Name("apply_matrix/omp")->DenseRange(12, 24, 4);
BENCHMARK(BM_ApplyX<k::serial::apply_x>)->Name("apply_x/serial")->DenseRange(12, 24, 4);
BENCHMARK(BM_ApplyX<k::omp::apply_x>)->Name("apply_x/omp")->DenseRange(12, 24, 4);
BENCHMARK(BM_MaskedWeight<k::serial::masked_weight>)->Name("masked_weight/serial")->DenseRange(12, 24, 4);
BENCHMARK(BM_MaskedWeight<k::omp::masked_weight>)->Name("masked_weight/omp")->DenseRange(12, 24, 4);
BENCHMARK(BM_FullProtocol)->Name("protocol")->ArgsProduct({{4, 5, 6}, {0, 1}})->ArgNames({"n", "omp"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
