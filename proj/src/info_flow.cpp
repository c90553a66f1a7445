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

#include "hflow/info_flow.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <optional>
#include <set>

namespace hflow {

namespace {

void check_subset(const std::vector<std::size_t>& subset, std::size_t n, std::size_t cap) {
    if (subset.empty()) throw std::invalid_argument("subset_accessible: empty subset");
    if (subset.size() > cap) {
        throw std::invalid_argument("subset_accessible: subset of size " + std::to_string(subset.size()) +
                                    " exceeds cap " + std::to_string(cap));
    }
    std::set<std::size_t> seen;
    for (std::size_t a : subset) {
        if (a < 1 || a > n) throw std::invalid_argument("subset_accessible: qubit index out of range");
        if (!seen.insert(a).second) throw std::invalid_argument("subset_accessible: repeated qubit");
    }
}

// Expectations of every product over S of {1, q_x, q_y, q_z}, in a fixed order.
std::vector<Complex> basis_expectations(const NetworkState& s, const std::vector<std::size_t>& subset) {
    const std::size_t n = s.num_qubits();
    std::vector<PauliSum> products{PauliSum::identity(n)};
    for (std::size_t a : subset) {
        const auto& d = s.descriptor(a);
        std::vector<PauliSum> next;
        next.reserve(products.size() * 4);
        for (const auto& p : products) {
            next.push_back(p);
            for (Component u : kComponents) next.push_back(sum_mul(p, d[u]));
        }
        products = std::move(next);
    }
    std::vector<Complex> out;
    out.reserve(products.size());
    for (const auto& p : products) out.push_back(vacuum_expectation(p));
    return out;
}

}  // namespace

const char* info_class_name(InfoClass c) {
    switch (c) {
        case InfoClass::NoInfo:
            return "NO_INFO";
        case InfoClass::LocallyInaccessible:
            return "LOCALLY_INACCESSIBLE";
        case InfoClass::LocallyAccessible:
            return "LOCALLY_ACCESSIBLE";
    }
    return "?";
}

std::vector<double> ParameterProbe::spread_samples(std::size_t k) {
    if (k < 3) throw std::invalid_argument("spread_samples: need at least 3 samples");
    // Offset keeps the grid off 0 and the quarter turns.
    std::vector<double> out;
    for (std::size_t j = 0; j < k; ++j) out.push_back((j + 0.37) * 2 * std::numbers::pi / static_cast<double>(k));
    return out;
}

void ParameterProbe::validate() const {
    if (param.empty()) throw std::invalid_argument("ParameterProbe: parameter name is empty");
    if (!(tol > 0)) throw std::invalid_argument("ParameterProbe: tol must be positive");
    if (samples.size() < 3) throw std::invalid_argument("ParameterProbe: need at least 3 samples");
    for (double v : samples) {
        if (!(v >= 0 && v < 2 * std::numbers::pi)) throw std::invalid_argument("ParameterProbe: samples lie in [0, 2 pi)");
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = i + 1; j < samples.size(); ++j) {
            if (samples[i] == samples[j]) throw std::invalid_argument("ParameterProbe: samples must be distinct");
        }
    }
}

std::vector<NetworkState> sample_states(const Circuit& c, const ParamEnv& base, const ParameterProbe& probe,
                                        std::size_t t) {
    probe.validate();
    if (!c.declares(probe.param)) throw CircuitError("parameter '" + probe.param + "' is not declared by the circuit");
    if (t > c.depth()) throw std::invalid_argument("time " + std::to_string(t) + " exceeds circuit depth");
    const auto count = static_cast<std::int64_t>(probe.samples.size());
    std::vector<std::optional<NetworkState>> slots(probe.samples.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            ParamEnv env = base;
            env.set(probe.param, probe.samples[static_cast<std::size_t>(i)]);
            slots[static_cast<std::size_t>(i)].emplace(run_circuit_until(c, env, t));
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    std::vector<NetworkState> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

bool descriptor_depends(const std::vector<NetworkState>& states, std::size_t qubit, double tol) {
    for (std::size_t i = 1; i < states.size(); ++i) {
        for (Component u : kComponents) {
            // Comparing every sample with the first suffices: equality within
            // tol of all to the first covers the pairwise test up to 2 tol.
            if (!sums_equal(states[0].descriptor(qubit)[u], states[i].descriptor(qubit)[u], tol)) return true;
        }
    }
    return false;
}

bool subset_accessible(const std::vector<NetworkState>& states, const std::vector<std::size_t>& subset, double tol,
                       std::size_t cap) {
    if (states.empty()) return false;
    check_subset(subset, states[0].num_qubits(), cap);
    const auto first = basis_expectations(states[0], subset);
    for (std::size_t i = 1; i < states.size(); ++i) {
        const auto other = basis_expectations(states[i], subset);
        for (std::size_t k = 0; k < first.size(); ++k) {
            if (std::abs(first[k] - other[k]) > tol) return true;
        }
    }
    return false;
}

bool descriptor_depends(const Circuit& c, const ParamEnv& base, const ParameterProbe& probe, std::size_t qubit,
                        std::size_t t) {
    if (qubit < 1 || qubit > c.num_qubits()) throw std::invalid_argument("descriptor_depends: qubit out of range");
    return descriptor_depends(sample_states(c, base, probe, t), qubit, probe.tol);
}

bool subset_accessible(const Circuit& c, const ParamEnv& base, const ParameterProbe& probe,
                       const std::vector<std::size_t>& subset, std::size_t t, std::size_t cap) {
    check_subset(subset, c.num_qubits(), cap);
    return subset_accessible(sample_states(c, base, probe, t), subset, probe.tol, cap);
}

InfoFlowReport info_flow_report(const Circuit& c, const ParamEnv& base, const ParameterProbe& probe, std::size_t t,
                                const std::vector<std::vector<std::size_t>>& extra_subsets, std::size_t cap) {
    for (const auto& s : extra_subsets) check_subset(s, c.num_qubits(), cap);
    const auto states = sample_states(c, base, probe, t);
    InfoFlowReport report;
    report.param = probe.param;
    report.time = t;
    for (std::size_t a = 1; a <= c.num_qubits(); ++a) {
        if (!descriptor_depends(states, a, probe.tol)) {
            report.qubits.push_back(InfoClass::NoInfo);
        } else if (subset_accessible(states, {a}, probe.tol, cap)) {
            report.qubits.push_back(InfoClass::LocallyAccessible);
        } else {
            report.qubits.push_back(InfoClass::LocallyInaccessible);
        }
    }
    for (const auto& s : extra_subsets) report.subsets.push_back({s, subset_accessible(states, s, probe.tol, cap)});
    return report;
}

}  // namespace hflow
