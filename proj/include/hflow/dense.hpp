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

#ifndef HFLOW_DENSE_HPP
#define HFLOW_DENSE_HPP

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "hflow/pauli.hpp"

namespace hflow {

/// Largest network the dense (oracle) path accepts; storage grows as 4^n.
inline constexpr std::size_t kDenseQubitCap = 12;

/// 2^n x 2^n complex matrix, row-major.
///
/// Matrices use the standard Pauli matrices with qubit 1 as the most
/// significant Kronecker factor. A qubit holding the value z (the eigenvalue
/// 2z - 1 of its q_z) sits at index bit 1 - z, so the all-zero standard state
/// is the last basis vector.
class DenseOperator {
  public:
    DenseOperator() = default;
    /// Zero matrix on n qubits. Throws std::invalid_argument above kDenseQubitCap.
    explicit DenseOperator(std::size_t n);

    static DenseOperator identity(std::size_t n);

    std::size_t num_qubits() const { return n_; }
    std::size_t dim() const { return dim_; }
    Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    Complex operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
    std::span<Complex> data() { return data_; }
    std::span<const Complex> data() const { return data_; }

    DenseOperator adjoint() const;

  private:
    std::size_t n_ = 0;
    std::size_t dim_ = 1;
    std::vector<Complex> data_;
};

using Matrix2 = std::array<Complex, 4>;  // row-major 2x2

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);
DenseOperator operator+(const DenseOperator& a, const DenseOperator& b);
DenseOperator operator-(const DenseOperator& a, const DenseOperator& b);
DenseOperator operator*(Complex alpha, const DenseOperator& a);

/// Largest entry magnitude of a - b.
double max_abs_diff(const DenseOperator& a, const DenseOperator& b);

/// Index of the standard state |0,...,0> in the dense basis.
std::size_t vacuum_index(std::size_t n);

/// Kronecker expansion of a Pauli sum (qubit 1 leftmost).
DenseOperator to_dense(const PauliSum& p);
/// Projection onto the Pauli basis: coefficient of s is Tr(s A) / 2^n.
PauliSum from_dense(const DenseOperator& a);

/// 1 (x) ... (x) m (x) ... (x) 1 with m at 1-based qubit `qubit`, built by
/// explicit Kronecker products.
DenseOperator embed_single(const Matrix2& m, std::size_t qubit, std::size_t n);

namespace pauli_matrix {
inline constexpr Matrix2 I{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}};
inline constexpr Matrix2 X{Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}};
inline constexpr Matrix2 Y{Complex{0, 0}, Complex{0, -1}, Complex{0, 1}, Complex{0, 0}};
inline constexpr Matrix2 Z{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{-1, 0}};
}  // namespace pauli_matrix

}  // namespace hflow

#endif  // HFLOW_DENSE_HPP
