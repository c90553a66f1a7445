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

#ifndef HFLOW_PAULI_HPP
#define HFLOW_PAULI_HPP

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hflow {

using Complex = std::complex<double>;

/// Maximum number of qubits a PauliString can address (one bit per qubit in a 64-bit mask).
inline constexpr std::size_t kMaxQubits = 64;

/// Coefficients with magnitude below this are dropped after every algebraic operation.
inline constexpr double kPruneThreshold = 1e-12;

/// Single-qubit Pauli letter. Bit 0 is the X part, bit 1 the Z part, so Y = X|Z.
enum class PauliLetter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char to_char(PauliLetter letter);
PauliLetter letter_from_char(char c);

/// A phase that is a power of i: value() == i^exponent.
struct PhaseUnit {
    std::uint8_t exponent = 0;  // mod 4

    Complex value() const;
    friend bool operator==(PhaseUnit, PhaseUnit) = default;
};

struct LetterProduct {
    PhaseUnit phase;
    PauliLetter out;
};

/// Single-qubit product a*b written as phase * out.
LetterProduct letter_mul(PauliLetter a, PauliLetter b);

/// Tensor product of n Pauli letters. Position 0 is qubit 1, the leftmost
/// Kronecker factor.
class PauliString {
  public:
    PauliString() = default;
    /// Identity string on n qubits.
    explicit PauliString(std::size_t n);

    static PauliString from_letters(std::span<const PauliLetter> letters);
    /// Parses e.g. "XIZ" (also accepts '_' for I).
    static PauliString from_text(std::string_view text);
    /// Identity everywhere except `letter` at 0-based position `pos`.
    static PauliString single(std::size_t n, std::size_t pos, PauliLetter letter);
    /// Builds directly from masks; bit k of each mask belongs to position k.
    static PauliString from_masks(std::size_t n, std::uint64_t x_mask, std::uint64_t z_mask);

    std::size_t num_qubits() const { return n_; }
    PauliLetter letter(std::size_t pos) const;
    std::uint64_t x_mask() const { return x_; }
    std::uint64_t z_mask() const { return z_; }
    bool is_identity() const { return (x_ | z_) == 0; }
    /// True iff every letter is I or Z.
    bool is_diagonal() const { return x_ == 0; }
    bool commutes_with(const PauliString& other) const;
    /// Positions carrying a non-identity letter.
    std::uint64_t support() const { return x_ | z_; }

    std::string str() const;

    friend bool operator==(const PauliString&, const PauliString&) = default;
    friend auto operator<=>(const PauliString&, const PauliString&) = default;

  private:
    PauliString(std::size_t n, std::uint64_t x, std::uint64_t z) : n_(n), x_(x), z_(z) {}

    std::size_t n_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
};

struct StringProduct {
    PhaseUnit phase;
    PauliString out;
};

/// Letterwise product with accumulated phase. Throws std::invalid_argument on
/// length mismatch.
StringProduct string_mul(const PauliString& s, const PauliString& t);

/// Finite complex-weighted sum of Pauli strings of one common length.
///
/// Terms are kept sorted by string, with no two terms sharing a string and no
/// coefficient of magnitude below kPruneThreshold. Values are immutable in
/// practice: every algebraic operation returns a new sum.
class PauliSum {
  public:
    using Term = std::pair<PauliString, Complex>;

    PauliSum() = default;
    /// The zero operator on n qubits.
    explicit PauliSum(std::size_t n);
    PauliSum(const PauliString& s, Complex coefficient = 1.0);

    static PauliSum identity(std::size_t n);
    /// Builds a sum from arbitrary terms, merging duplicates and pruning.
    static PauliSum from_terms(std::size_t n, std::vector<Term> terms);

    std::size_t num_qubits() const { return n_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    std::span<const Term> terms() const { return terms_; }
    Complex coefficient(const PauliString& s) const;
    /// Largest coefficient magnitude, 0 for the empty sum.
    double max_abs_coefficient() const;
    bool has_real_coefficients(double tol) const;

    std::string str() const;

    friend bool operator==(const PauliSum&, const PauliSum&) = default;

  private:
    std::size_t n_ = 0;
    std::vector<Term> terms_;
};

/// Distributive product p*q with like terms collected and pruned.
PauliSum sum_mul(const PauliSum& p, const PauliSum& q);
/// pq - qp, computed from anticommuting string pairs only.
PauliSum sum_commutator(const PauliSum& p, const PauliSum& q);
/// alpha*p + beta*q with like terms collected and pruned.
PauliSum sum_combine(const PauliSum& p, Complex alpha, const PauliSum& q, Complex beta);
PauliSum sum_scale(const PauliSum& p, Complex alpha);
/// True iff every coefficient of p - q has magnitude <= tol.
bool sums_equal(const PauliSum& p, const PauliSum& q, double tol);
/// Max coefficient magnitude of p - q.
double sum_distance(const PauliSum& p, const PauliSum& q);

inline PauliSum operator*(const PauliSum& p, const PauliSum& q) { return sum_mul(p, q); }
inline PauliSum operator+(const PauliSum& p, const PauliSum& q) { return sum_combine(p, 1.0, q, 1.0); }
inline PauliSum operator-(const PauliSum& p, const PauliSum& q) { return sum_combine(p, 1.0, q, -1.0); }
inline PauliSum operator-(const PauliSum& p) { return sum_scale(p, -1.0); }
inline PauliSum operator*(Complex alpha, const PauliSum& p) { return sum_scale(p, alpha); }

}  // namespace hflow

#endif  // HFLOW_PAULI_HPP
