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

#include "hflow/network.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace hflow {

namespace {

constexpr double kImagTolerance = 1e-9;
constexpr double kProbabilitySlack = 1e-9;

void require_qubit(const NetworkState& s, std::size_t a) {
    if (a < 1 || a > s.num_qubits()) {
        throw std::invalid_argument("qubit index " + std::to_string(a) + " out of range [1, " +
                                    std::to_string(s.num_qubits()) + "]");
    }
}

}  // namespace

char component_char(Component c) { return "xyz"[static_cast<std::size_t>(c)]; }

const PauliSum& Descriptor::operator[](Component c) const {
    switch (c) {
        case Component::X:
            return x;
        case Component::Y:
            return y;
        default:
            return z;
    }
}

PauliSum& Descriptor::operator[](Component c) {
    return const_cast<PauliSum&>(static_cast<const Descriptor&>(*this)[c]);
}

NetworkState::NetworkState(std::size_t time, std::vector<Descriptor> descriptors)
    : time_(time), descriptors_(std::move(descriptors)) {
    const std::size_t n = descriptors_.size();
    for (const auto& d : descriptors_) {
        for (Component c : kComponents) {
            if (d[c].num_qubits() != n) {
                throw std::invalid_argument("NetworkState: descriptor component length differs from qubit count");
            }
        }
    }
}

const Descriptor& NetworkState::descriptor(std::size_t qubit) const {
    require_qubit(*this, qubit);
    return descriptors_[qubit - 1];
}

NetworkState init_network(std::size_t n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("init_network: qubit count must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
    std::vector<Descriptor> descriptors;
    descriptors.reserve(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        descriptors.push_back({PauliSum(PauliString::single(n, pos, PauliLetter::X)),
                               PauliSum(PauliString::single(n, pos, PauliLetter::Y)),
                               PauliSum(PauliString::single(n, pos, PauliLetter::Z))});
    }
    return NetworkState(0, std::move(descriptors));
}

Complex vacuum_expectation(const PauliSum& p) {
    Complex total{};
    for (const auto& [s, c] : p.terms()) {
        if (!s.is_diagonal()) continue;
        total += (std::popcount(s.z_mask()) & 1) ? -c : c;
    }
    return total;
}

Complex vacuum_expectation(const NetworkState& s, const PauliSum& p) {
    if (p.num_qubits() != s.num_qubits()) {
        throw std::invalid_argument("vacuum_expectation: operator length differs from network size");
    }
    return vacuum_expectation(p);
}

double real_expectation(Complex value, const std::string& what) {
    if (std::abs(value.imag()) > kImagTolerance) {
        throw ConsistencyError(what + ": expectation has imaginary part " + std::to_string(value.imag()));
    }
    return value.real();
}

PauliSum z_projector(const NetworkState& s, std::size_t a) {
    const auto& qz = s.descriptor(a).z;
    return sum_combine(PauliSum::identity(s.num_qubits()), 0.5, qz, 0.5);
}

BlochVector bloch_vector(const NetworkState& s, std::size_t a) {
    const auto& d = s.descriptor(a);
    return {real_expectation(vacuum_expectation(d.x), "bloch_vector x"),
            real_expectation(vacuum_expectation(d.y), "bloch_vector y"),
            real_expectation(vacuum_expectation(d.z), "bloch_vector z")};
}

double purity_probe(const NetworkState& s, std::size_t a) { return bloch_vector(s, a).norm_squared(); }

double outcome_probability(const NetworkState& s, std::size_t a) {
    const double p = real_expectation(vacuum_expectation(z_projector(s, a)), "outcome_probability");
    if (p < -kProbabilitySlack || p > 1 + kProbabilitySlack) {
        throw ConsistencyError("outcome_probability: value " + std::to_string(p) + " outside [0, 1]");
    }
    return std::clamp(p, 0.0, 1.0);
}

double pair_correlation(const NetworkState& s, std::size_t a, std::size_t b) {
    require_qubit(s, a);
    require_qubit(s, b);
    if (a == b) throw std::invalid_argument("pair_correlation: qubits must differ");
    return real_expectation(vacuum_expectation(sum_mul(z_projector(s, a), z_projector(s, b))), "pair_correlation");
}

double AlgebraReport::worst() const { return std::max({product, square, commutator}); }

AlgebraReport check_descriptor_algebra(const NetworkState& s, double tol) {
    if (tol < 0) throw std::invalid_argument("check_descriptor_algebra: negative tolerance");
    AlgebraReport report;
    report.tolerance = tol;
    const std::size_t n = s.num_qubits();
    const PauliSum one = PauliSum::identity(n);
    const Complex i{0, 1};
    for (const auto& d : s.descriptors()) {
        // q_x q_y = i q_z, q_y q_z = i q_x, q_z q_x = i q_y.
        for (std::size_t k = 0; k < 3; ++k) {
            const auto& u = d[kComponents[k]];
            const auto& v = d[kComponents[(k + 1) % 3]];
            const auto& w = d[kComponents[(k + 2) % 3]];
            report.product = std::max(report.product, sum_distance(sum_mul(u, v), sum_scale(w, i)));
            report.square = std::max(report.square, sum_distance(sum_mul(u, u), one));
        }
    }
    const auto descriptors = s.descriptors();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (Component u : kComponents) {
                for (Component v : kComponents) {
                    const auto comm = sum_commutator(descriptors[a][u], descriptors[b][v]);
                    report.commutator = std::max(report.commutator, comm.max_abs_coefficient());
                }
            }
        }
    }
    return report;
}

}  // namespace hflow
