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

#ifndef HFLOW_NETWORK_HPP
#define HFLOW_NETWORK_HPP

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hflow/pauli.hpp"

namespace hflow {

/// Raised when a computed quantity that must be real or a probability is not,
/// beyond tolerance. Signals a bug, not bad input.
class ConsistencyError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

enum class Component : std::size_t { X = 0, Y = 1, Z = 2 };
inline constexpr std::array<Component, 3> kComponents{Component::X, Component::Y, Component::Z};
char component_char(Component c);

/// The Heisenberg description of one qubit: the observables (q_x, q_y, q_z).
struct Descriptor {
    PauliSum x, y, z;

    const PauliSum& operator[](Component c) const;
    PauliSum& operator[](Component c);

    friend bool operator==(const Descriptor&, const Descriptor&) = default;
};

/// Per-qubit descriptors of an n-qubit network at step `time`.
///
/// The Heisenberg state is always the standard |0,...,0>. Qubit indices in this
/// API are 1-based.
class NetworkState {
  public:
    NetworkState(std::size_t time, std::vector<Descriptor> descriptors);

    std::size_t num_qubits() const { return descriptors_.size(); }
    std::size_t time() const { return time_; }
    const Descriptor& descriptor(std::size_t qubit) const;
    std::span<const Descriptor> descriptors() const { return descriptors_; }

    friend bool operator==(const NetworkState&, const NetworkState&) = default;

  private:
    std::size_t time_;
    std::vector<Descriptor> descriptors_;
};

/// Time-zero network: qubit a carries the Pauli matrices at tensor position a.
NetworkState init_network(std::size_t n);

/// <0,...,0| p |0,...,0>. Only I/Z strings contribute, each Z contributing -1
/// (the standard state holds value 0, the q_z = -1 eigenvalue).
Complex vacuum_expectation(const PauliSum& p);
/// As above, checking that p acts on the network's qubit count.
Complex vacuum_expectation(const NetworkState& s, const PauliSum& p);

/// (1 + q_z) / 2 for qubit a: the projector for "qubit a holds 1".
PauliSum z_projector(const NetworkState& s, std::size_t a);

struct BlochVector {
    double x = 0, y = 0, z = 0;
    double norm_squared() const { return x * x + y * y + z * z; }
};

/// Expectations of the three descriptor components.
BlochVector bloch_vector(const NetworkState& s, std::size_t a);
/// |Bloch|^2; 1 iff some projector on the qubit has certain outcome 1.
double purity_probe(const NetworkState& s, std::size_t a);
/// Probability that qubit a holds the value 1.
double outcome_probability(const NetworkState& s, std::size_t a);
/// <z_a z_b>: probability that both qubits hold 1.
double pair_correlation(const NetworkState& s, std::size_t a, std::size_t b);

/// Maximum coefficient magnitudes of the defect in each class of the Pauli
/// algebra relations.
struct AlgebraReport {
    double product = 0;     // q_x q_y - i q_z and cyclic
    double square = 0;      // q_u^2 - 1
    double commutator = 0;  // [q_au, q_bv] for a != b
    double tolerance = 0;

    double worst() const;
    bool ok() const { return worst() <= tolerance; }
};

AlgebraReport check_descriptor_algebra(const NetworkState& s, double tol);

/// Checks imaginary part <= 1e-9 and returns the real part.
double real_expectation(Complex value, const std::string& what);

}  // namespace hflow

#endif  // HFLOW_NETWORK_HPP
