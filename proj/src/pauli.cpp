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

#include "hflow/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hflow/kernels.hpp"

namespace hflow {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": length mismatch (" + std::to_string(a) + " vs " +
                                    std::to_string(b) + ")");
    }
}

std::uint64_t low_bits(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1); }

// Sorts, merges duplicates and prunes in place.
void normalize(std::vector<PauliSum::Term>& terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        PauliString key = terms[i].first;
        Complex acc = terms[i].second;
        std::size_t j = i + 1;
        for (; j < terms.size() && terms[j].first == key; ++j) {
            acc += terms[j].second;
        }
        if (std::abs(acc) >= kPruneThreshold) {
            terms[out++] = {key, acc};
        }
        i = j;
    }
    terms.resize(out);
}

}  // namespace

char to_char(PauliLetter letter) {
    switch (letter) {
        case PauliLetter::I:
            return 'I';
        case PauliLetter::X:
            return 'X';
        case PauliLetter::Y:
            return 'Y';
        case PauliLetter::Z:
            return 'Z';
    }
    return '?';
}

PauliLetter letter_from_char(char c) {
    switch (c) {
        case 'I':
        case '_':
            return PauliLetter::I;
        case 'X':
            return PauliLetter::X;
        case 'Y':
            return PauliLetter::Y;
        case 'Z':
            return PauliLetter::Z;
        default:
            throw std::invalid_argument(std::string("not a Pauli letter: '") + c + "'");
    }
}

Complex PhaseUnit::value() const {
    switch (exponent & 3) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

LetterProduct letter_mul(PauliLetter a, PauliLetter b) {
    auto s = PauliString::single(1, 0, a);
    auto t = PauliString::single(1, 0, b);
    auto r = string_mul(s, t);
    return {r.phase, r.out.letter(0)};
}

PauliString::PauliString(std::size_t n) : n_(n) {
    if (n > kMaxQubits) {
        throw std::invalid_argument("PauliString: at most " + std::to_string(kMaxQubits) + " qubits");
    }
}

PauliString PauliString::from_letters(std::span<const PauliLetter> letters) {
    PauliString s(letters.size());
    for (std::size_t k = 0; k < letters.size(); ++k) {
        auto bits = static_cast<std::uint8_t>(letters[k]);
        if (bits & 1) s.x_ |= std::uint64_t{1} << k;
        if (bits & 2) s.z_ |= std::uint64_t{1} << k;
    }
    return s;
}

PauliString PauliString::from_text(std::string_view text) {
    std::vector<PauliLetter> letters;
    letters.reserve(text.size());
    for (char c : text) letters.push_back(letter_from_char(c));
    return from_letters(letters);
}

PauliString PauliString::single(std::size_t n, std::size_t pos, PauliLetter letter) {
    if (pos >= n) {
        throw std::invalid_argument("PauliString::single: position out of range");
    }
    PauliString s(n);
    auto bits = static_cast<std::uint8_t>(letter);
    if (bits & 1) s.x_ = std::uint64_t{1} << pos;
    if (bits & 2) s.z_ = std::uint64_t{1} << pos;
    return s;
}

PauliString PauliString::from_masks(std::size_t n, std::uint64_t x_mask, std::uint64_t z_mask) {
    PauliString s(n);
    if (((x_mask | z_mask) & ~low_bits(n)) != 0) {
        throw std::invalid_argument("PauliString::from_masks: bits beyond string length");
    }
    s.x_ = x_mask;
    s.z_ = z_mask;
    return s;
}

PauliLetter PauliString::letter(std::size_t pos) const {
    if (pos >= n_) {
        throw std::out_of_range("PauliString::letter: position out of range");
    }
    unsigned bits = static_cast<unsigned>((x_ >> pos) & 1) | (static_cast<unsigned>((z_ >> pos) & 1) << 1);
    return static_cast<PauliLetter>(bits);
}

bool PauliString::commutes_with(const PauliString& other) const {
    require_same_length(n_, other.n_, "commutes_with");
    // Symplectic form: count positions where the letters anticommute.
    std::uint64_t anti = (x_ & other.z_) ^ (z_ & other.x_);
    return (std::popcount(anti) & 1) == 0;
}

std::string PauliString::str() const {
    std::string out(n_, 'I');
    for (std::size_t k = 0; k < n_; ++k) out[k] = to_char(letter(k));
    return out;
}

StringProduct string_mul(const PauliString& s, const PauliString& t) {
    require_same_length(s.num_qubits(), t.num_qubits(), "string_mul");
    const std::uint64_t sx = s.x_mask() & ~s.z_mask();
    const std::uint64_t sy = s.x_mask() & s.z_mask();
    const std::uint64_t sz = s.z_mask() & ~s.x_mask();
    const std::uint64_t tx = t.x_mask() & ~t.z_mask();
    const std::uint64_t ty = t.x_mask() & t.z_mask();
    const std::uint64_t tz = t.z_mask() & ~t.x_mask();
    // XY = iZ, YZ = iX, ZX = iY; reversed orders pick up -i.
    const std::uint64_t plus = (sx & ty) | (sy & tz) | (sz & tx);
    const std::uint64_t minus = (sy & tx) | (sz & ty) | (sx & tz);
    const auto exponent = static_cast<std::uint8_t>((std::popcount(plus) + 3 * std::popcount(minus)) & 3);
    return {PhaseUnit{exponent},
            PauliString::from_masks(s.num_qubits(), s.x_mask() ^ t.x_mask(), s.z_mask() ^ t.z_mask())};
}

PauliSum::PauliSum(std::size_t n) : n_(n) {
    if (n > kMaxQubits) {
        throw std::invalid_argument("PauliSum: at most " + std::to_string(kMaxQubits) + " qubits");
    }
}

PauliSum::PauliSum(const PauliString& s, Complex coefficient) : n_(s.num_qubits()) {
    if (std::abs(coefficient) >= kPruneThreshold) terms_.emplace_back(s, coefficient);
}

PauliSum PauliSum::identity(std::size_t n) { return PauliSum(PauliString(n), 1.0); }

PauliSum PauliSum::from_terms(std::size_t n, std::vector<Term> terms) {
    PauliSum out(n);
    for (const auto& [s, c] : terms) require_same_length(n, s.num_qubits(), "PauliSum::from_terms");
    normalize(terms);
    out.terms_ = std::move(terms);
    return out;
}

Complex PauliSum::coefficient(const PauliString& s) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                               [](const Term& t, const PauliString& key) { return t.first < key; });
    if (it != terms_.end() && it->first == s) return it->second;
    return 0.0;
}

double PauliSum::max_abs_coefficient() const {
    double m = 0;
    for (const auto& [s, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

bool PauliSum::has_real_coefficients(double tol) const {
    return std::all_of(terms_.begin(), terms_.end(), [tol](const Term& t) { return std::abs(t.second.imag()) <= tol; });
}

std::string PauliSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    out.precision(6);
    bool first = true;
    for (const auto& [s, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        if (c.imag() == 0) {
            out << c.real();
        } else {
            out << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
        }
        out << "*" << s.str();
    }
    return out.str();
}

PauliSum sum_mul(const PauliSum& p, const PauliSum& q) {
    require_same_length(p.num_qubits(), q.num_qubits(), "sum_mul");
    auto terms = kernels::parallel::pauli_product(p.num_qubits(), p.terms(), q.terms());
    return PauliSum::from_terms(p.num_qubits(), std::move(terms));
}

PauliSum sum_commutator(const PauliSum& p, const PauliSum& q) {
    require_same_length(p.num_qubits(), q.num_qubits(), "sum_commutator");
    auto terms =
        kernels::parallel::pauli_product(p.num_qubits(), p.terms(), q.terms(), kernels::ProductMode::AnticommutingOnly);
    for (auto& t : terms) t.second *= 2.0;
    return PauliSum::from_terms(p.num_qubits(), std::move(terms));
}

PauliSum sum_combine(const PauliSum& p, Complex alpha, const PauliSum& q, Complex beta) {
    require_same_length(p.num_qubits(), q.num_qubits(), "sum_combine");
    std::vector<PauliSum::Term> terms;
    terms.reserve(p.size() + q.size());
    for (const auto& [s, c] : p.terms()) terms.emplace_back(s, alpha * c);
    for (const auto& [s, c] : q.terms()) terms.emplace_back(s, beta * c);
    return PauliSum::from_terms(p.num_qubits(), std::move(terms));
}

PauliSum sum_scale(const PauliSum& p, Complex alpha) {
    std::vector<PauliSum::Term> terms(p.terms().begin(), p.terms().end());
    for (auto& t : terms) t.second *= alpha;
    return PauliSum::from_terms(p.num_qubits(), std::move(terms));
}

double sum_distance(const PauliSum& p, const PauliSum& q) {
    require_same_length(p.num_qubits(), q.num_qubits(), "sum_distance");
    // Merge walk over the two sorted term lists; no pruning, so tiny
    // differences are still reported.
    double worst = 0;
    auto a = p.terms();
    auto b = q.terms();
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            worst = std::max(worst, std::abs(a[i++].second));
        } else if (i == a.size() || b[j].first < a[i].first) {
            worst = std::max(worst, std::abs(b[j++].second));
        } else {
            worst = std::max(worst, std::abs(a[i++].second - b[j++].second));
        }
    }
    return worst;
}

bool sums_equal(const PauliSum& p, const PauliSum& q, double tol) {
    if (tol < 0) throw std::invalid_argument("sums_equal: negative tolerance");
    return sum_distance(p, q) <= tol;
}

}  // namespace hflow
