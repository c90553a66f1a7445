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

// Where does information about a circuit parameter live at a given time?
//
// A qubit contains information about a parameter when its descriptor depends
// on the parameter. The information is locally accessible from a set of
// qubits S when some observable of S has a parameter-dependent expectation.
// Dependence is detected numerically: the circuit is run once per sample
// value and the results compared.

#ifndef HFLOW_INFO_FLOW_HPP
#define HFLOW_INFO_FLOW_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hflow/gates.hpp"

namespace hflow {

inline constexpr std::size_t kDefaultSubsetCap = 4;

enum class InfoClass { NoInfo, LocallyInaccessible, LocallyAccessible };

/// "NO_INFO", "LOCALLY_INACCESSIBLE", "LOCALLY_ACCESSIBLE".
const char* info_class_name(InfoClass c);

struct ParameterProbe {
    std::string param;
    std::vector<double> samples = default_samples();
    double tol = 1e-9;

    /// Generic angles away from 0, pi/2 and pi.
    static std::vector<double> default_samples() { return {0.7, 1.9, 3.1, 5.3}; }
    /// k evenly spread generic angles in [0, 2 pi); k >= 3.
    static std::vector<double> spread_samples(std::size_t k);

    /// Throws std::invalid_argument unless there are >= 3 pairwise distinct
    /// samples in [0, 2 pi) and tol > 0.
    void validate() const;
};

/// Networks at time t, one per probe sample, with every other parameter taken
/// from base. Samples are evaluated in parallel.
std::vector<NetworkState> sample_states(const Circuit& c, const ParamEnv& base, const ParameterProbe& probe,
                                        std::size_t t);

bool descriptor_depends(const Circuit& c, const ParamEnv& base, const ParameterProbe& probe, std::size_t qubit,
                        std::size_t t);
bool subset_accessible(const Circuit& c, const ParamEnv& base, const ParameterProbe& probe,
                       const std::vector<std::size_t>& subset, std::size_t t, std::size_t cap = kDefaultSubsetCap);

/// Same tests on precomputed sample states.
bool descriptor_depends(const std::vector<NetworkState>& states, std::size_t qubit, double tol);
bool subset_accessible(const std::vector<NetworkState>& states, const std::vector<std::size_t>& subset, double tol,
                       std::size_t cap = kDefaultSubsetCap);

struct SubsetResult {
    std::vector<std::size_t> subset;
    bool accessible = false;
};

struct InfoFlowReport {
    std::string param;
    std::size_t time = 0;
    std::vector<InfoClass> qubits;  // index a - 1
    std::vector<SubsetResult> subsets;

    InfoClass of(std::size_t qubit) const { return qubits.at(qubit - 1); }
};

InfoFlowReport info_flow_report(const Circuit& c, const ParamEnv& base, const ParameterProbe& probe, std::size_t t,
                                const std::vector<std::vector<std::size_t>>& extra_subsets = {},
                                std::size_t cap = kDefaultSubsetCap);

}  // namespace hflow

#endif  // HFLOW_INFO_FLOW_HPP
