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

#include "hflow/dense.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hflow/kernels.hpp"

namespace hflow {

namespace {

void require_same_shape(const DenseOperator& a, const DenseOperator& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("dense operators act on different qubit counts");
    }
}

}  // namespace

DenseOperator::DenseOperator(std::size_t n) : n_(n) {
    if (n > kDenseQubitCap) {
        throw std::invalid_argument("dense path supports at most " + std::to_string(kDenseQubitCap) +
                                    " qubits, got " + std::to_string(n));
    }
    dim_ = std::size_t{1} << n;
    data_.assign(dim_ * dim_, Complex{});
}

DenseOperator DenseOperator::identity(std::size_t n) {
    DenseOperator out(n);
    for (std::size_t i = 0; i < out.dim_; ++i) out(i, i) = 1.0;
    return out;
}

DenseOperator DenseOperator::adjoint() const {
    DenseOperator out(n_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    }
    return out;
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
    require_same_shape(a, b);
    DenseOperator out(a.num_qubits());
    kernels::parallel::matmul(a.data(), b.data(), out.data(), a.dim());
    return out;
}

DenseOperator operator+(const DenseOperator& a, const DenseOperator& b) {
    require_same_shape(a, b);
    DenseOperator out(a.num_qubits());
    std::transform(a.data().begin(), a.data().end(), b.data().begin(), out.data().begin(), std::plus<>{});
    return out;
}

DenseOperator operator-(const DenseOperator& a, const DenseOperator& b) {
    require_same_shape(a, b);
    DenseOperator out(a.num_qubits());
    std::transform(a.data().begin(), a.data().end(), b.data().begin(), out.data().begin(), std::minus<>{});
    return out;
}

DenseOperator operator*(Complex alpha, const DenseOperator& a) {
    DenseOperator out(a.num_qubits());
    std::transform(a.data().begin(), a.data().end(), out.data().begin(), [alpha](Complex c) { return alpha * c; });
    return out;
}

double max_abs_diff(const DenseOperator& a, const DenseOperator& b) {
    require_same_shape(a, b);
    double worst = 0;
    for (std::size_t k = 0; k < a.data().size(); ++k) worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
    return worst;
}

std::size_t vacuum_index(std::size_t n) { return (std::size_t{1} << n) - 1; }

DenseOperator to_dense(const PauliSum& p) {
    DenseOperator out(p.num_qubits());
    kernels::parallel::pauli_to_dense(p.num_qubits(), p.terms(), out.data());
    return out;
}

PauliSum from_dense(const DenseOperator& a) {
    const std::size_t n = a.num_qubits();
    const std::size_t dim = a.dim();
    std::vector<PauliSum::Term> terms;
    for (std::uint64_t x = 0; x < dim; ++x) {
        for (std::uint64_t z = 0; z < dim; ++z) {
            const std::uint64_t xm = kernels::to_matrix_bits(x, n);
            const std::uint64_t zm = kernels::to_matrix_bits(z, n);
            // Tr(P A) = sum_col P[col^xm, col] * A[col, col^xm].
            Complex trace{};
            for (std::size_t col = 0; col < dim; ++col) {
                const double sign = (std::popcount(zm & col) & 1) ? -1.0 : 1.0;
                trace += sign * a(col, col ^ xm);
            }
            Complex phase = 1.0;
            for (int k = 0; k < std::popcount(x & z); ++k) phase *= Complex{0, 1};
            const Complex coefficient = phase * trace / static_cast<double>(dim);
            if (std::abs(coefficient) >= kPruneThreshold) {
                terms.emplace_back(PauliString::from_masks(n, x, z), coefficient);
            }
        }
    }
    return PauliSum::from_terms(n, std::move(terms));
}

DenseOperator embed_single(const Matrix2& m, std::size_t qubit, std::size_t n) {
    if (qubit < 1 || qubit > n) throw std::invalid_argument("embed_single: qubit index out of range");
    // Fold left to right: result = f_1 (x) f_2 (x) ... (x) f_n.
    std::vector<Complex> acc{Complex{1, 0}};
    std::size_t d = 1;
    for (std::size_t a = 1; a <= n; ++a) {
        const Matrix2& f = (a == qubit) ? m : pauli_matrix::I;
        std::vector<Complex> next(4 * d * d);
        const std::size_t nd = 2 * d;
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                for (std::size_t r = 0; r < 2; ++r) {
                    for (std::size_t c = 0; c < 2; ++c) next[(i * 2 + r) * nd + (j * 2 + c)] = acc[i * d + j] * f[r * 2 + c];
                }
            }
        }
        acc = std::move(next);
        d = nd;
    }
    DenseOperator out(n);
    std::copy(acc.begin(), acc.end(), out.data().begin());
    return out;
}

}  // namespace hflow
