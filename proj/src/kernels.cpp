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

#include "hflow/kernels.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hflow::kernels {

namespace {

// Products smaller than this skip the 4^n table.
constexpr std::size_t kSmallProduct = 64;

// c * i^e, exact.
inline Complex rotate(Complex c, unsigned e) {
    switch (e & 3) {
        case 0:
            return c;
        case 1:
            return {-c.imag(), c.real()};
        case 2:
            return {-c.real(), -c.imag()};
        default:
            return {c.imag(), -c.real()};
    }
}

inline unsigned product_exponent(std::uint64_t sxm, std::uint64_t szm, std::uint64_t txm, std::uint64_t tzm) {
    const std::uint64_t sx = sxm & ~szm, sy = sxm & szm, sz = szm & ~sxm;
    const std::uint64_t tx = txm & ~tzm, ty = txm & tzm, tz = tzm & ~txm;
    const std::uint64_t plus = (sx & ty) | (sy & tz) | (sz & tx);
    const std::uint64_t minus = (sy & tx) | (sz & ty) | (sx & tz);
    return static_cast<unsigned>(std::popcount(plus) + 3 * std::popcount(minus)) & 3;
}

bool use_table(std::size_t n, std::size_t pairs) { return n <= kDenseAccumulatorQubits && pairs >= kSmallProduct; }

inline bool skip(ProductMode mode, const PauliString& s, const PauliString& t) {
    if (mode == ProductMode::All) return false;
    const std::uint64_t anti = (s.x_mask() & t.z_mask()) ^ (s.z_mask() & t.x_mask());
    return (std::popcount(anti) & 1) == 0;
}

std::vector<PauliSum::Term> product_small(std::size_t n, std::span<const PauliSum::Term> p,
                                          std::span<const PauliSum::Term> q, ProductMode mode) {
    std::vector<PauliSum::Term> out;
    out.reserve(p.size() * q.size());
    for (const auto& [s, cs] : p) {
        for (const auto& [t, ct] : q) {
            if (skip(mode, s, t)) continue;
            unsigned e = product_exponent(s.x_mask(), s.z_mask(), t.x_mask(), t.z_mask());
            out.emplace_back(PauliString::from_masks(n, s.x_mask() ^ t.x_mask(), s.z_mask() ^ t.z_mask()),
                             rotate(cs * ct, e));
        }
    }
    // Stable sort keeps the (i, j) accumulation order for equal keys.
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<PauliSum::Term> merged;
    for (const auto& term : out) {
        if (!merged.empty() && merged.back().first == term.first) {
            merged.back().second += term.second;
        } else {
            merged.push_back(term);
        }
    }
    return merged;
}

std::vector<PauliSum::Term> product_hashed(std::size_t n, std::span<const PauliSum::Term> p,
                                           std::span<const PauliSum::Term> q, ProductMode mode) {
    struct KeyHash {
        std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
            return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
        }
    };
    std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Complex, KeyHash> acc;
    for (const auto& [s, cs] : p) {
        for (const auto& [t, ct] : q) {
            if (skip(mode, s, t)) continue;
            unsigned e = product_exponent(s.x_mask(), s.z_mask(), t.x_mask(), t.z_mask());
            acc[{s.x_mask() ^ t.x_mask(), s.z_mask() ^ t.z_mask()}] += rotate(cs * ct, e);
        }
    }
    std::vector<PauliSum::Term> out;
    out.reserve(acc.size());
    for (const auto& [k, c] : acc) out.emplace_back(PauliString::from_masks(n, k.first, k.second), c);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// Table index (x << n) | z orders entries the same way PauliString compares.
struct Table {
    std::vector<Complex> value;
    std::vector<unsigned char> touched;
    explicit Table(std::size_t n) : value(std::size_t{1} << (2 * n)), touched(value.size(), 0) {}
};

std::vector<PauliSum::Term> drain(std::size_t n, const Table& table) {
    std::vector<PauliSum::Term> out;
    const std::uint64_t zmask = (std::uint64_t{1} << n) - 1;
    for (std::size_t idx = 0; idx < table.value.size(); ++idx) {
        if (table.touched[idx]) {
            out.emplace_back(PauliString::from_masks(n, idx >> n, idx & zmask), table.value[idx]);
        }
    }
    return out;
}

// Accumulates all pairs whose product index falls in [lo, hi).
void accumulate_range(std::size_t n, std::span<const PauliSum::Term> p, std::span<const PauliSum::Term> q,
                      Table& table, std::size_t lo, std::size_t hi, ProductMode mode) {
    for (const auto& [s, cs] : p) {
        for (const auto& [t, ct] : q) {
            const std::size_t idx = ((s.x_mask() ^ t.x_mask()) << n) | (s.z_mask() ^ t.z_mask());
            if (idx < lo || idx >= hi || skip(mode, s, t)) continue;
            unsigned e = product_exponent(s.x_mask(), s.z_mask(), t.x_mask(), t.z_mask());
            table.value[idx] += rotate(cs * ct, e);
            table.touched[idx] = 1;
        }
    }
}

}  // namespace

int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::uint64_t to_matrix_bits(std::uint64_t mask, std::size_t n) {
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if ((mask >> k) & 1) out |= std::uint64_t{1} << (n - 1 - k);
    }
    return out;
}

namespace serial {

std::vector<PauliSum::Term> pauli_product(std::size_t n, std::span<const PauliSum::Term> p,
                                          std::span<const PauliSum::Term> q, ProductMode mode) {
    const std::size_t pairs = p.size() * q.size();
    if (pairs == 0) return {};
    if (!use_table(n, pairs)) {
        return n <= kDenseAccumulatorQubits ? product_small(n, p, q, mode) : product_hashed(n, p, q, mode);
    }
    Table table(n);
    accumulate_range(n, p, q, table, 0, table.value.size(), mode);
    return drain(n, table);
}

void pauli_to_dense(std::size_t n, std::span<const PauliSum::Term> terms, std::span<Complex> out) {
    const std::size_t dim = std::size_t{1} << n;
    for (const auto& [s, c] : terms) {
        const std::uint64_t xm = to_matrix_bits(s.x_mask(), n);
        const std::uint64_t zm = to_matrix_bits(s.z_mask(), n);
        // Y = i X Z, so the string is i^{#Y} X^x Z^z.
        const Complex base = rotate(c, static_cast<unsigned>(std::popcount(s.x_mask() & s.z_mask())));
        for (std::size_t col = 0; col < dim; ++col) {
            const std::size_t row = col ^ xm;
            const bool negate = std::popcount(zm & col) & 1;
            out[row * dim + col] += negate ? -base : base;
        }
    }
}

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out, std::size_t dim) {
    std::fill(out.begin(), out.end(), Complex{});
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t k = 0; k < dim; ++k) {
            const Complex aik = a[i * dim + k];
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < dim; ++j) out[i * dim + j] += aik * b[k * dim + j];
        }
    }
}

void matvec(std::span<const Complex> a, std::span<const Complex> v, std::span<Complex> out, std::size_t dim) {
    for (std::size_t i = 0; i < dim; ++i) {
        Complex acc{};
        for (std::size_t k = 0; k < dim; ++k) acc += a[i * dim + k] * v[k];
        out[i] = acc;
    }
}

}  // namespace serial

namespace parallel {

std::vector<PauliSum::Term> pauli_product(std::size_t n, std::span<const PauliSum::Term> p,
                                          std::span<const PauliSum::Term> q, ProductMode mode) {
    const std::size_t pairs = p.size() * q.size();
    if (pairs == 0 || !use_table(n, pairs) || thread_count() == 1) return serial::pauli_product(n, p, q, mode);
    Table table(n);
    const std::size_t size = table.value.size();
#pragma omp parallel
    {
#ifdef _OPENMP
        const std::size_t t = static_cast<std::size_t>(omp_get_thread_num());
        const std::size_t nt = static_cast<std::size_t>(omp_get_num_threads());
#else
        const std::size_t t = 0, nt = 1;
#endif
        // Each thread owns a contiguous slice of the output table.
        accumulate_range(n, p, q, table, size * t / nt, size * (t + 1) / nt, mode);
    }
    return drain(n, table);
}

void pauli_to_dense(std::size_t n, std::span<const PauliSum::Term> terms, std::span<Complex> out) {
    const std::size_t dim = std::size_t{1} << n;
    struct Prepared {
        std::uint64_t xm, zm;
        Complex base;
    };
    std::vector<Prepared> prepared;
    prepared.reserve(terms.size());
    for (const auto& [s, c] : terms) {
        prepared.push_back({to_matrix_bits(s.x_mask(), n), to_matrix_bits(s.z_mask(), n),
                            rotate(c, static_cast<unsigned>(std::popcount(s.x_mask() & s.z_mask())))});
    }
    const auto rows = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < rows; ++r) {
        const auto row = static_cast<std::size_t>(r);
        for (const auto& t : prepared) {
            const std::size_t col = row ^ t.xm;
            const bool negate = std::popcount(t.zm & col) & 1;
            out[row * dim + col] += negate ? -t.base : t.base;
        }
    }
}

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out, std::size_t dim) {
    const auto rows = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < rows; ++r) {
        const auto i = static_cast<std::size_t>(r);
        Complex* row = out.data() + i * dim;
        std::fill(row, row + dim, Complex{});
        for (std::size_t k = 0; k < dim; ++k) {
            const Complex aik = a[i * dim + k];
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < dim; ++j) row[j] += aik * b[k * dim + j];
        }
    }
}

void matvec(std::span<const Complex> a, std::span<const Complex> v, std::span<Complex> out, std::size_t dim) {
    const auto rows = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < rows; ++r) {
        const auto i = static_cast<std::size_t>(r);
        Complex acc{};
        for (std::size_t k = 0; k < dim; ++k) acc += a[i * dim + k] * v[k];
        out[i] = acc;
    }
}

}  // namespace parallel

}  // namespace hflow::kernels
