// Copyright 2026 The hflow Authors
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


// Serial reference kernels vs their OpenMP versions.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "hflow/kernels.hpp"

namespace {

using namespace hflow;

std::vector<PauliSum::Term> random_terms(std::size_t n, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << n) - 1);
    std::normal_distribution<double> g;
    std::vector<PauliSum::Term> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.emplace_back(PauliString::from_masks(n, mask(rng), mask(rng)), Complex{g(rng), g(rng)});
    }
    const PauliSum sum = PauliSum::from_terms(n, std::move(out));
    return {sum.terms().begin(), sum.terms().end()};
}

std::vector<Complex> random_matrix(std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<Complex> out(dim * dim);
    for (auto& v : out) v = {g(rng), g(rng)};
    return out;
}

template <auto Kernel>
void BM_product(benchmark::State& state) {
    const std::size_t n = 10, count = static_cast<std::size_t>(state.range(0));
    const auto p = random_terms(n, count, 1), q = random_terms(n, count, 2);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(n, p, q, kernels::ProductMode::All));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(count * count));
}

template <auto Kernel>
void BM_to_dense(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto terms = random_terms(n, 64, 3);
    std::vector<Complex> out(std::size_t{1} << (2 * n));
    for (auto _ : state) {
        std::fill(out.begin(), out.end(), Complex{});
        Kernel(n, terms, out);
        benchmark::ClobberMemory();
    }
}

template <auto Kernel>
void BM_matmul(benchmark::State& state) {
    const std::size_t dim = static_cast<std::size_t>(state.range(0));
    const auto a = random_matrix(dim, 4), b = random_matrix(dim, 5);
    std::vector<Complex> out(dim * dim);
    for (auto _ : state) {
        Kernel(a, b, out, dim);
        benchmark::ClobberMemory();
    }
}

template <auto Kernel>
void BM_matvec(benchmark::State& state) {
    const std::size_t dim = static_cast<std::size_t>(state.range(0));
    const auto a = random_matrix(dim, 6);
    std::vector<Complex> v(dim, Complex{1, 0}), out(dim);
    for (auto _ : state) {
        Kernel(a, v, out, dim);
        benchmark::ClobberMemory();
    }
}

}  // namespace

BENCHMARK(BM_product<&kernels::serial::pauli_product>)->Name("pauli_product/serial")->Arg(64)->Arg(256);
BENCHMARK(BM_product<&kernels::parallel::pauli_product>)->Name("pauli_product/parallel")->Arg(64)->Arg(256);
BENCHMARK(BM_to_dense<&kernels::serial::pauli_to_dense>)->Name("pauli_to_dense/serial")->Arg(5)->Arg(7);
BENCHMARK(BM_to_dense<&kernels::parallel::pauli_to_dense>)->Name("pauli_to_dense/parallel")->Arg(5)->Arg(7);
BENCHMARK(BM_matmul<&kernels::serial::matmul>)->Name("matmul/serial")->Arg(32)->Arg(64);
BENCHMARK(BM_matmul<&kernels::parallel::matmul>)->Name("matmul/parallel")->Arg(32)->Arg(64);
BENCHMARK(BM_matvec<&kernels::serial::matvec>)->Name("matvec/serial")->Arg(256)->Arg(1024);
BENCHMARK(BM_matvec<&kernels::parallel::matvec>)->Name("matvec/parallel")->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
