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

#include "hflow/schroedinger.hpp"

#include <algorithm>
#include <cmath>

#include "hflow/kernels.hpp"
#include "hflow/network.hpp"

namespace hflow {

namespace {

constexpr double kNormTolerance = 1e-12;

void require_dense_size(std::size_t n) {
    if (n < 1 || n > kDenseQubitCap) {
        throw std::invalid_argument("state vectors support 1.." + std::to_string(kDenseQubitCap) + " qubits");
    }
}

}  // namespace

StateVector::StateVector(std::size_t n) : n_(n) {
    require_dense_size(n);
    amplitudes_.assign(std::size_t{1} << n, Complex{});
    amplitudes_[vacuum_index(n)] = 1.0;
}

StateVector::StateVector(std::size_t n, std::vector<Complex> amplitudes) : n_(n), amplitudes_(std::move(amplitudes)) {
    require_dense_size(n);
    if (amplitudes_.size() != (std::size_t{1} << n)) throw std::invalid_argument("StateVector: size is not 2^n");
    if (std::abs(norm_squared() - 1.0) > kNormTolerance) throw std::invalid_argument("StateVector: not normalized");
}

Complex StateVector::amplitude_of(const std::vector<int>& values) const {
    if (values.size() != n_) throw std::invalid_argument("amplitude_of: need one value per qubit");
    std::size_t index = 0;
    for (std::size_t a = 0; a < n_; ++a) {
        if (values[a] != 0 && values[a] != 1) throw std::invalid_argument("amplitude_of: values are 0 or 1");
        // Value 0 sits at bit 1 (the q_z = -1 eigenvector of Z).
        if (values[a] == 0) index |= std::size_t{1} << (n_ - 1 - a);
    }
    return amplitudes_[index];
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto& a : amplitudes_) total += std::norm(a);
    return total;
}

void StateVector::apply(const DenseOperator& u) {
    if (u.num_qubits() != n_) throw std::invalid_argument("StateVector::apply: dimension mismatch");
    std::vector<Complex> out(amplitudes_.size());
    kernels::parallel::matvec(u.data(), amplitudes_, out, amplitudes_.size());
    amplitudes_ = std::move(out);
}

StateVector evolve_state_until(const Circuit& c, const ParamEnv& env, std::size_t t) {
    if (t > c.depth()) throw std::invalid_argument("evolve_state_until: time exceeds circuit depth");
    StateVector psi(c.num_qubits());
    for (std::size_t i = 0; i < t; ++i) psi.apply(step_unitary_dense(c.steps()[i], c.num_qubits(), env));
    return psi;
}

StateVector evolve_state(const Circuit& c, const ParamEnv& env) { return evolve_state_until(c, env, c.depth()); }

double schrodinger_expectation(const StateVector& psi, const PauliSum& obs) {
    if (obs.num_qubits() != psi.num_qubits()) {
        throw std::invalid_argument("schrodinger_expectation: dimension mismatch");
    }
    const DenseOperator a = to_dense(obs);
    std::vector<Complex> a_psi(psi.dim());
    kernels::serial::matvec(a.data(), psi.amplitudes(), a_psi, psi.dim());
    Complex total{};
    for (std::size_t i = 0; i < psi.dim(); ++i) total += std::conj(psi.amplitude(i)) * a_psi[i];
    return real_expectation(total, "schrodinger_expectation");
}

double born_probability(const StateVector& psi, std::size_t qubit) {
    if (qubit < 1 || qubit > psi.num_qubits()) throw std::invalid_argument("born_probability: qubit out of range");
    // Value 1 means the index bit for this qubit is 0.
    const std::size_t bit = std::size_t{1} << (psi.num_qubits() - qubit);
    double p = 0;
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        if ((i & bit) == 0) p += std::norm(psi.amplitude(i));
    }
    return p;
}

CrossCheckReport cross_check_report(const Circuit& c, const ParamEnv& env) {
    const NetworkState s = run_circuit(c, env);
    const StateVector psi = evolve_state(c, env);
    CrossCheckReport report;
    const std::size_t n = c.num_qubits();
    for (std::size_t a = 1; a <= n; ++a) {
        for (Component u : kComponents) {
            const double heis = real_expectation(vacuum_expectation(s.descriptor(a)[u]), "cross_check");
            const double schr = schrodinger_expectation(psi, initial_component(n, a, u));
            report.expectation = std::max(report.expectation, std::abs(heis - schr));
        }
        report.probability =
            std::max(report.probability, std::abs(outcome_probability(s, a) - born_probability(psi, a)));
    }
    return report;
}

double cross_check(const Circuit& c, const ParamEnv& env) { return cross_check_report(c, env).worst(); }

bool states_equal_up_to_phase(const StateVector& psi, const StateVector& chi, double tol) {
    if (psi.dim() != chi.dim()) throw std::invalid_argument("states_equal_up_to_phase: dimension mismatch");
    Complex overlap{};
    for (std::size_t i = 0; i < psi.dim(); ++i) overlap += std::conj(psi.amplitude(i)) * chi.amplitude(i);
    return std::abs(overlap) >= 1 - tol;
}

}  // namespace hflow
