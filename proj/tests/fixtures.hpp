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


// Hand-transcribed descriptor fixtures for the entangled-pair and
// teleportation circuits, written as Pauli strings over the whole network.

#ifndef HFLOW_TESTS_FIXTURES_HPP
#define HFLOW_TESTS_FIXTURES_HPP

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "hflow/network.hpp"

namespace hflow::fixtures {

inline PauliSum sum_of(std::initializer_list<std::pair<const char*, double>> terms) {
    std::vector<PauliSum::Term> out;
    std::size_t n = 0;
    for (const auto& [text, c] : terms) {
        auto s = PauliString::from_text(text);
        n = s.num_qubits();
        out.emplace_back(s, c);
    }
    return PauliSum::from_terms(n, std::move(out));
}

struct Expected {
    std::size_t qubit;
    Descriptor d;
};

/// EPR network after the pair is made (t = 1).
inline std::vector<Expected> epr_t1() {
    return {
        {1, {sum_of({{"XIII", 1}}), sum_of({{"YIII", 1}}), sum_of({{"ZIII", 1}})}},
        {2, {sum_of({{"IXII", 1}}), sum_of({{"IYXI", -1}}), sum_of({{"IZXI", -1}})}},
        {3, {sum_of({{"IXZI", 1}}), sum_of({{"IXYI", -1}}), sum_of({{"IIXI", 1}})}},
        {4, {sum_of({{"IIIX", 1}}), sum_of({{"IIIY", 1}}), sum_of({{"IIIZ", 1}})}},
    };
}

/// After the local rotations (t = 2).
inline std::vector<Expected> epr_t2(double theta, double phi) {
    const double ct = std::cos(theta), st = std::sin(theta), cp = std::cos(phi), sp = std::sin(phi);
    return {
        {1, {sum_of({{"XIII", 1}}), sum_of({{"YIII", 1}}), sum_of({{"ZIII", 1}})}},
        {2, {sum_of({{"IXII", 1}}), sum_of({{"IYXI", -ct}, {"IZXI", -st}}), sum_of({{"IYXI", st}, {"IZXI", -ct}})}},
        {3, {sum_of({{"IXZI", 1}}), sum_of({{"IIXI", sp}, {"IXYI", -cp}}), sum_of({{"IIXI", cp}, {"IXYI", sp}})}},
        {4, {sum_of({{"IIIX", 1}}), sum_of({{"IIIY", 1}}), sum_of({{"IIIZ", 1}})}},
    };
}

/// After the recording cnots (t = 3).
inline std::vector<Expected> epr_t3(double theta, double phi) {
    const double ct = std::cos(theta), st = std::sin(theta), cp = std::cos(phi), sp = std::sin(phi);
    return {
        {1, {sum_of({{"XIII", 1}}), sum_of({{"YZXI", ct}, {"YYXI", -st}}), sum_of({{"ZZXI", ct}, {"ZYXI", -st}})}},
        {2, {sum_of({{"XXII", 1}}), sum_of({{"XYXI", -ct}, {"XZXI", -st}}), sum_of({{"IYXI", st}, {"IZXI", -ct}})}},
        {3, {sum_of({{"IXZX", 1}}), sum_of({{"IIXX", sp}, {"IXYX", -cp}}), sum_of({{"IIXI", cp}, {"IXYI", sp}})}},
        {4, {sum_of({{"IIIX", 1}}), sum_of({{"IIXY", -cp}, {"IXYY", -sp}}), sum_of({{"IIXZ", -cp}, {"IXYZ", -sp}})}},
    };
}

/// Teleportation output qubit after the correction (t = 4).
inline Descriptor teleport_q5_t4(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {sum_of({{"XIZIZ", 1}}), sum_of({{"YZZZZ", c}, {"ZZZZZ", s}}), sum_of({{"ZZIZI", c}, {"YZIZI", -s}})};
}

/// Worst coefficient difference between a state and a fixture list.
inline double fixture_gap(const NetworkState& s, const std::vector<Expected>& expected) {
    double worst = 0;
    for (const auto& e : expected) {
        for (Component u : kComponents) worst = std::max(worst, sum_distance(s.descriptor(e.qubit)[u], e.d[u]));
    }
    return worst;
}

}  // namespace hflow::fixtures

#endif  // HFLOW_TESTS_FIXTURES_HPP
