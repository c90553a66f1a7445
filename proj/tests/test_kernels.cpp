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


#include <gtest/gtest.h>

#include <random>

#include "hflow/dense.hpp"
#include "hflow/kernels.hpp"
#include "test_util.hpp"

namespace hflow {
namespace {

using testing::kron_string;
using testing::random_sum;

TEST(Kernels, ParallelProductBitIdenticalToSerial) {
    std::mt19937_64 rng(21);
    for (std::size_t n : {2u, 5u, 8u, 10u}) {
        auto p = random_sum(rng, n, 120);
        auto q = random_sum(rng, n, 90);
        for (auto mode : {kernels::ProductMode::All, kernels::ProductMode::AnticommutingOnly}) {
            auto a = kernels::serial::pauli_product(n, p.terms(), q.terms(), mode);
            auto b = kernels::parallel::pauli_product(n, p.terms(), q.terms(), mode);
            ASSERT_EQ(a.size(), b.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                EXPECT_EQ(a[i].first, b[i].first);
                EXPECT_EQ(a[i].second, b[i].second);
            }
        }
    }
}

TEST(Kernels, ProductPathsAgree) {
    // Small inputs take the sorted path, large ones the table; n > 8 hashes.
    std::mt19937_64 rng(4);
    for (std::size_t n : {3u, 9u}) {
        auto p = random_sum(rng, n, 30);
        auto q = random_sum(rng, n, 30);
        auto small_p = PauliSum::from_terms(n, {p.terms().begin(), p.terms().begin() + 3});
        auto full = kernels::serial::pauli_product(n, p.terms(), q.terms());
        auto out = PauliSum::from_terms(n, full);
        PauliSum slow(n);
        for (const auto& t : p.terms()) slow = slow + PauliSum(t.first, t.second) * q;
        EXPECT_LT(sum_distance(out, slow), 1e-12);
        auto part = PauliSum::from_terms(n, kernels::serial::pauli_product(n, small_p.terms(), q.terms()));
        PauliSum part_slow(n);
        for (const auto& t : small_p.terms()) {
            for (const auto& u : q.terms()) {
                auto r = string_mul(t.first, u.first);
                part_slow = part_slow + PauliSum(r.out, r.phase.value() * t.second * u.second);
            }
        }
        EXPECT_LT(sum_distance(part, part_slow), 1e-12);
    }
}

TEST(Kernels, PauliToDenseMatchesKronecker) {
    std::mt19937_64 rng(8);
    for (std::size_t n = 1; n <= 4; ++n) {
        auto p = random_sum(rng, n, 12);
        DenseOperator expected(n);
        for (const auto& [s, c] : p.terms()) expected = expected + c * kron_string(s);
        for (bool parallel : {false, true}) {
            DenseOperator got(n);
            if (parallel) {
                kernels::parallel::pauli_to_dense(n, p.terms(), got.data());
            } else {
                kernels::serial::pauli_to_dense(n, p.terms(), got.data());
            }
            EXPECT_LT(max_abs_diff(got, expected), 1e-14);
        }
    }
}

TEST(Kernels, MatmulAndMatvecAgree) {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> g;
    const std::size_t dim = 16;
    std::vector<Complex> a(dim * dim), b(dim * dim), v(dim);
    for (auto& x : a) x = {g(rng), g(rng)};
    for (auto& x : b) x = {g(rng), g(rng)};
    for (auto& x : v) x = {g(rng), g(rng)};
    std::vector<Complex> s(dim * dim), p(dim * dim), naive(dim * dim);
    kernels::serial::matmul(a, b, s, dim);
    kernels::parallel::matmul(a, b, p, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            Complex acc{};
            for (std::size_t k = 0; k < dim; ++k) acc += a[i * dim + k] * b[k * dim + j];
            naive[i * dim + j] = acc;
        }
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_EQ(s[i], p[i]);
        EXPECT_LT(std::abs(s[i] - naive[i]), 1e-12);
    }
    std::vector<Complex> sv(dim), pv(dim);
    kernels::serial::matvec(a, v, sv, dim);
    kernels::parallel::matvec(a, v, pv, dim);
    for (std::size_t i = 0; i < dim; ++i) EXPECT_EQ(sv[i], pv[i]);
}

TEST(Kernels, MatrixBitsReverse) {
    EXPECT_EQ(kernels::to_matrix_bits(0b001, 3), 0b100u);
    EXPECT_EQ(kernels::to_matrix_bits(0b110, 3), 0b011u);
}

}  // namespace
}  // namespace hflow
