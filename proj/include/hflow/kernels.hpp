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

// Hot loops shared by the Pauli-sum and dense backends.
//
// Every kernel exists twice: `serial::` is the straightforward reference kept
// for testing, `parallel::` is the OpenMP version the library calls. The
// parallel versions partition work so that each output element is accumulated
// by exactly one thread in the same order as the serial loop, so the two agree
// bit for bit regardless of thread count.

#ifndef HFLOW_KERNELS_HPP
#define HFLOW_KERNELS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "hflow/pauli.hpp"

namespace hflow::kernels {

/// Largest qubit count for which products accumulate into a dense 4^n table
/// instead of a hash map.
inline constexpr std::size_t kDenseAccumulatorQubits = 8;

int thread_count();

/// Which string pairs a product kernel keeps. `AnticommutingOnly` yields half
/// the commutator: pq - qp is twice the sum over anticommuting pairs.
enum class ProductMode { All, AnticommutingOnly };

/// Bit-reverses the low n bits of a position mask so that position 0 (qubit 1)
/// becomes the most significant bit of a dense matrix index.
std::uint64_t to_matrix_bits(std::uint64_t mask, std::size_t n);

namespace serial {

/// All pairwise products of p and q, like terms summed (unpruned, sorted).
std::vector<PauliSum::Term> pauli_product(std::size_t n, std::span<const PauliSum::Term> p,
                                          std::span<const PauliSum::Term> q,
                                          ProductMode mode = ProductMode::All);
/// out (dim x dim, row-major, zero-initialized by the caller) += expansion of terms.
void pauli_to_dense(std::size_t n, std::span<const PauliSum::Term> terms, std::span<Complex> out);
/// out = a * b for dim x dim row-major matrices.
void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out, std::size_t dim);
/// out = a * v.
void matvec(std::span<const Complex> a, std::span<const Complex> v, std::span<Complex> out, std::size_t dim);

}  // namespace serial

namespace parallel {

std::vector<PauliSum::Term> pauli_product(std::size_t n, std::span<const PauliSum::Term> p,
                                          std::span<const PauliSum::Term> q,
                                          ProductMode mode = ProductMode::All);
void pauli_to_dense(std::size_t n, std::span<const PauliSum::Term> terms, std::span<Complex> out);
void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out, std::size_t dim);
void matvec(std::span<const Complex> a, std::span<const Complex> v, std::span<Complex> out, std::size_t dim);

}  // namespace parallel

}  // namespace hflow::kernels

#endif  // HFLOW_KERNELS_HPP
