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

// State-vector simulation of the same circuits. Used only as an independent
// check on the descriptor evolution; limited to kDenseQubitCap qubits.

#ifndef HFLOW_SCHROEDINGER_HPP
#define HFLOW_SCHROEDINGER_HPP

#include <cstddef>
#include <vector>

#include "hflow/dense.hpp"
#include "hflow/gates.hpp"

namespace hflow {

/// Unit vector of 2^n amplitudes, dense-matrix index order (qubit 1 most
/// significant, value 0 at index bit 1).
class StateVector {
  public:
    /// The standard state |0,...,0>.
    explicit StateVector(std::size_t n);
    /// Throws std::invalid_argument unless the size is 2^n and the norm is 1 within 1e-12.
    StateVector(std::size_t n, std::vector<Complex> amplitudes);

    std::size_t num_qubits() const { return n_; }
    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    Complex amplitude(std::size_t index) const { return amplitudes_.at(index); }
    /// Amplitude of the basis state where qubit a holds values[a - 1].
    Complex amplitude_of(const std::vector<int>& values) const;
    double norm_squared() const;

    /// psi <- U psi.
    void apply(const DenseOperator& u);

  private:
    std::size_t n_;
    std::vector<Complex> amplitudes_;
};

/// Applies every step's unitary to |0,...,0>.
StateVector evolve_state(const Circuit& c, const ParamEnv& env);
/// As above, stopping after the first t steps.
StateVector evolve_state_until(const Circuit& c, const ParamEnv& env, std::size_t t);

/// <psi| dense(obs) |psi>. Throws ConsistencyError when the imaginary part exceeds 1e-9.
double schrodinger_expectation(const StateVector& psi, const PauliSum& obs);

/// Born-rule probability that qubit a holds 1.
double born_probability(const StateVector& psi, std::size_t qubit);

struct CrossCheckReport {
    double expectation = 0;  // worst |<q_au(t)> - <psi| sigma_au |psi>|
    double probability = 0;  // worst outcome_probability vs Born-rule difference
    double worst() const { return expectation > probability ? expectation : probability; }
};

/// Compares both pictures at the final time on every qubit and component.
CrossCheckReport cross_check_report(const Circuit& c, const ParamEnv& env);
double cross_check(const Circuit& c, const ParamEnv& env);

/// |<psi|chi>| >= 1 - tol.
bool states_equal_up_to_phase(const StateVector& psi, const StateVector& chi, double tol);

}  // namespace hflow

#endif  // HFLOW_SCHROEDINGER_HPP
