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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hflow/experiments.hpp"
#include "hflow/gates.hpp"
#include "test_util.hpp"

namespace hflow {
namespace {

using testing::sum_of;

constexpr double kPi = std::numbers::pi;

// A 4-qubit state reached by a fixed scrambling circuit, so rules are tested
// on non-trivial descriptors.
NetworkState scrambled(std::size_t n, const ParamEnv& env = {}) {
    std::mt19937_64 rng(99 + n);
    return run_circuit(random_circuit(rng, n, 4), env);
}

DenseEvolution scrambled_dense(std::size_t n) {
    std::mt19937_64 rng(99 + n);
    return run_circuit_dense(random_circuit(rng, n, 4), {});
}

std::vector<GateApplication> catalog(std::size_t n) {
    std::vector<GateApplication> out{
        gate::Id{1},
        gate::Not{1},
        gate::SqrtNot{2},
        gate::Cnot{1, 2},
        gate::Cnot{2, 1},
        gate::Rx{1, AngleExpr::literal(0.7)},
        gate::Ry{2, AngleExpr::literal(-1.3)},
        gate::Rz{1, AngleExpr::literal(2.9)},
        gate::Rn{2, {0.48, 0.6, 0.64}, AngleExpr::literal(1.1)},
        gate::H{1},
        gate::Bell{1, 2},
        gate::BellInv{2, 1},
    };
    if (n >= 3) {
        out.emplace_back(gate::T3{1, 2, 3});
        out.emplace_back(gate::T3{3, 1, 2});
    }
    return out;
}

double descriptor_gap(const NetworkState& a, const NetworkState& b) {
    double worst = 0;
    for (std::size_t q = 1; q <= a.num_qubits(); ++q) {
        for (Component u : kComponents) worst = std::max(worst, sum_distance(a.descriptor(q)[u], b.descriptor(q)[u]));
    }
    return worst;
}

TEST(Gates, NotOnFreshQubit) {
    auto s = apply_gate(init_network(1), gate::Not{1}, {});
    EXPECT_EQ(s.time(), 1u);
    EXPECT_EQ(s.descriptor(1).x, sum_of({{"X", 1.0}}));
    EXPECT_EQ(s.descriptor(1).y, sum_of({{"Y", -1.0}}));
    EXPECT_EQ(s.descriptor(1).z, sum_of({{"Z", -1.0}}));
    EXPECT_EQ(outcome_probability(s, 1), 1.0);
}

TEST(Gates, SqrtNotTwiceIsNot) {
    auto once = apply_gate(init_network(1), gate::SqrtNot{1}, {});
    EXPECT_EQ(once.descriptor(1).y, sum_of({{"Z", 1.0}}));
    EXPECT_EQ(once.descriptor(1).z, sum_of({{"Y", -1.0}}));
    auto twice = apply_gate(once, gate::SqrtNot{1}, {});
    auto n = apply_gate(init_network(1), gate::Not{1}, {});
    EXPECT_EQ(twice.descriptors()[0], n.descriptors()[0]);
}

TEST(Gates, HadamardSwapsXAndZ) {
    auto s = apply_gate(init_network(1), gate::H{1}, {});
    EXPECT_EQ(s.descriptor(1).x, sum_of({{"Z", 1.0}}));
    EXPECT_EQ(s.descriptor(1).y, sum_of({{"Y", -1.0}}));
    EXPECT_EQ(s.descriptor(1).z, sum_of({{"X", 1.0}}));
}

TEST(Gates, RxRule) {
    const double th = 0.9;
    auto s = apply_gate(init_network(1), gate::Rx{1, AngleExpr::literal(th)}, {});
    EXPECT_EQ(s.descriptor(1).x, sum_of({{"X", 1.0}}));
    EXPECT_LT(sum_distance(s.descriptor(1).y, sum_of({{"Y", std::cos(th)}, {"Z", std::sin(th)}})), 1e-15);
    EXPECT_LT(sum_distance(s.descriptor(1).z, sum_of({{"Z", std::cos(th)}, {"Y", -std::sin(th)}})), 1e-15);
}

TEST(Gates, CnotRuleOnFreshPair) {
    auto s = apply_gate(init_network(2), gate::Cnot{1, 2}, {});
    EXPECT_EQ(s.descriptor(1).x, sum_of({{"XI", 1.0}}));
    EXPECT_EQ(s.descriptor(1).y, sum_of({{"YZ", -1.0}}));
    EXPECT_EQ(s.descriptor(1).z, sum_of({{"ZZ", -1.0}}));
    EXPECT_EQ(s.descriptor(2).x, sum_of({{"XX", 1.0}}));
    EXPECT_EQ(s.descriptor(2).y, sum_of({{"XY", 1.0}}));
    EXPECT_EQ(s.descriptor(2).z, sum_of({{"IZ", 1.0}}));
    // Control holds 0, target stays 0.
    EXPECT_EQ(outcome_probability(s, 1), 0.0);
    auto flipped = apply_gate(apply_gate(init_network(2), gate::Not{2}, {}), gate::Cnot{1, 2}, {});
    EXPECT_EQ(outcome_probability(flipped, 1), 1.0);
}

// Composition-derived Bell triples against the printed ones: all entries
// agree except the third component of the target qubit.
TEST(Gates, PrintedBellTriples) {
    auto fresh = init_network(2);
    const auto& k = fresh.descriptor(1);
    const auto& l = fresh.descriptor(2);
    auto bell = apply_gate(fresh, gate::Bell{1, 2}, {});
    EXPECT_EQ(bell.descriptor(1).x, k.x);
    EXPECT_EQ(bell.descriptor(1).y, -(k.y * l.z));
    EXPECT_EQ(bell.descriptor(2).x, l.z);
    EXPECT_EQ(bell.descriptor(2).y, -(k.x * l.y));
    EXPECT_EQ(bell.descriptor(2).z, k.x * l.x);
    EXPECT_EQ(bell.descriptor(1).z, -(k.z * l.z));
    EXPECT_NE(bell.descriptor(1).z, -(k.z * l.y));

    auto inv = apply_gate(fresh, gate::BellInv{1, 2}, {});
    EXPECT_EQ(inv.descriptor(1).x, k.x);
    EXPECT_EQ(inv.descriptor(1).y, -(k.y * l.x));
    EXPECT_EQ(inv.descriptor(2).x, k.x * l.z);
    EXPECT_EQ(inv.descriptor(2).y, -(k.x * l.y));
    EXPECT_EQ(inv.descriptor(2).z, l.x);
    EXPECT_EQ(inv.descriptor(1).z, -(k.z * l.x));
    EXPECT_NE(inv.descriptor(1).z, -(k.z * l.y));
}

TEST(Gates, EachCatalogGateMatchesDenseConjugation) {
    for (std::size_t n : {2u, 3u, 4u}) {
        const NetworkState before = scrambled(n);
        const DenseEvolution dense_before = scrambled_dense(n);
        for (const auto& g : catalog(n)) {
            const NetworkState after = apply_gate(before, g, {});
            DenseEvolution dense = dense_before;
            dense.apply_step(Step{{g}}, {});
            for (std::size_t a = 1; a <= n; ++a) {
                for (Component u : kComponents) {
                    EXPECT_LT(max_abs_diff(to_dense(after.descriptor(a)[u]), dense.descriptor(a, u)), 1e-12)
                        << g.str() << " n=" << n << " qubit " << a;
                }
            }
        }
    }
}

TEST(Gates, AccumulationOrderOnTwoSteps) {
    // Not then H: (x, y, z) -> (x, -y, -z) -> (-z, y, x).
    Circuit c(1);
    c.add_step({{gate::Not{1}}});
    c.add_step({{gate::H{1}}});
    const auto s = run_circuit(c, {});
    EXPECT_EQ(s.descriptor(1).x, sum_of({{"Z", -1.0}}));
    EXPECT_EQ(s.descriptor(1).y, sum_of({{"Y", 1.0}}));
    EXPECT_EQ(s.descriptor(1).z, sum_of({{"X", 1.0}}));
    const auto d = run_circuit_dense(c, {});
    EXPECT_LT(max_abs_diff(d.descriptor(1, Component::X), to_dense(sum_of({{"Z", -1.0}}))), 1e-15);
    EXPECT_LT(max_abs_diff(d.descriptor(1, Component::Z), to_dense(sum_of({{"X", 1.0}}))), 1e-15);
}

TEST(Gates, Involutions) {
    const NetworkState s = scrambled(3);
    const std::vector<std::pair<GateApplication, GateApplication>> pairs{
        {gate::Not{2}, gate::Not{2}},
        {gate::H{1}, gate::H{1}},
        {gate::Cnot{3, 1}, gate::Cnot{3, 1}},
        {gate::Bell{1, 3}, gate::BellInv{1, 3}},
        {gate::BellInv{2, 1}, gate::Bell{2, 1}},
    };
    for (const auto& [g, h] : pairs) {
        EXPECT_LT(descriptor_gap(apply_gate(apply_gate(s, g, {}), h, {}), s), 1e-12) << g.str();
    }
}

TEST(Gates, RotationGroup) {
    const NetworkState s = scrambled(2);
    const double a = 0.8, b = -2.1;
    auto two = apply_gate(apply_gate(s, gate::Rx{1, AngleExpr::literal(a)}, {}), gate::Rx{1, AngleExpr::literal(b)}, {});
    auto one = apply_gate(s, gate::Rx{1, AngleExpr::literal(a + b)}, {});
    EXPECT_LT(descriptor_gap(two, one), 1e-12);
    EXPECT_LT(descriptor_gap(apply_gate(s, gate::Rx{1, AngleExpr::literal(2 * kPi)}, {}), s), 1e-12);
    auto rn = apply_gate(s, gate::Rn{2, {0, 1, 0}, AngleExpr::literal(a)}, {});
    auto ry = apply_gate(s, gate::Ry{2, AngleExpr::literal(a)}, {});
    EXPECT_LT(descriptor_gap(rn, ry), 1e-15);
}

TEST(Gates, DenseUnitariesAreUnitary) {
    for (const auto& g : catalog(4)) {
        const auto u = gate_unitary_dense(g, 4, {});
        EXPECT_LT(max_abs_diff(u.adjoint() * u, DenseOperator::identity(4)), 1e-12) << g.str();
    }
    EXPECT_EQ(max_abs_diff(gate_unitary_dense(gate::Id{1}, 3, {}), DenseOperator::identity(3)), 0.0);
    EXPECT_EQ(max_abs_diff(gate_unitary_dense(gate::Not{1}, 1, {}), to_dense(sum_of({{"X", 1.0}}))), 0.0);
    EXPECT_THROW(gate_unitary_dense(gate::Not{1}, kDenseQubitCap + 1, {}), std::invalid_argument);
}

TEST(Gates, IdIsNeutralAndIdleQubitsAreUntouched) {
    const NetworkState s = scrambled(4);
    auto after = apply_gate(s, gate::Id{3}, {});
    for (std::size_t a = 1; a <= 4; ++a) EXPECT_EQ(after.descriptor(a), s.descriptor(a));
    auto cn = apply_gate(s, gate::Cnot{1, 2}, {});
    EXPECT_EQ(cn.descriptor(3), s.descriptor(3));
    EXPECT_EQ(cn.descriptor(4), s.descriptor(4));
}

TEST(Gates, StepGatesSeeTimeTDescriptors) {
    // Two disjoint gates in one step equal the same gates in two steps.
    const NetworkState s = scrambled(4);
    Step both{{gate::Cnot{1, 2}, gate::H{4}}};
    auto together = apply_step(s, both, {});
    auto apart = apply_gate(apply_gate(s, gate::Cnot{1, 2}, {}), gate::H{4}, {});
    EXPECT_EQ(together.time(), s.time() + 1);
    for (std::size_t a = 1; a <= 4; ++a) EXPECT_EQ(together.descriptor(a), apart.descriptor(a));
}

TEST(Gates, ParameterBinding) {
    Circuit c(1, {"theta"});
    c.add_step({{gate::Rx{1, AngleExpr::parameter("theta", -0.5)}}});
    auto s = run_circuit(c, ParamEnv{{"theta", 1.2}});
    auto lit = apply_gate(init_network(1), gate::Rx{1, AngleExpr::literal(-0.6)}, {});
    EXPECT_LT(descriptor_gap(s, lit), 1e-15);
    EXPECT_THROW(run_circuit(c, {}), CircuitError);
    EXPECT_EQ(run_circuit(Circuit(2), {}), init_network(2));
}

TEST(Gates, Validation) {
    EXPECT_THROW(GateApplication(gate::Cnot{1, 1}), CircuitError);
    EXPECT_THROW(GateApplication(gate::T3{1, 2, 1}), CircuitError);
    EXPECT_THROW(GateApplication(gate::Not{0}), CircuitError);
    EXPECT_THROW(GateApplication(gate::Rn{1, {1, 1, 0}, AngleExpr::literal(1)}), CircuitError);
    EXPECT_NO_THROW(GateApplication(gate::Rn{1, {0.6, 0, 0.8}, AngleExpr::literal(1)}));
    Circuit c(3, {"a"});
    EXPECT_THROW(c.add_step({{gate::Not{1}, gate::Cnot{2, 1}}}), CircuitError);
    EXPECT_THROW(c.add_step({{gate::Not{4}}}), CircuitError);
    EXPECT_THROW(c.add_step({{gate::Rz{1, AngleExpr::parameter("b")}}}), CircuitError);
    EXPECT_NO_THROW(c.add_step({{gate::Rz{1, AngleExpr::parameter("a")}, gate::Cnot{2, 3}}}));
    EXPECT_THROW(Circuit(2, {"a", "a"}), CircuitError);
    EXPECT_THROW(Circuit(0), CircuitError);
    EXPECT_THROW(Circuit(1, {"pi"}), CircuitError);
    EXPECT_THROW(apply_gate(init_network(2), gate::Not{3}, {}), CircuitError);
}

TEST(Gates, TextForms) {
    EXPECT_EQ(GateApplication(gate::Cnot{1, 2}).str(), "cnot t=1 c=2");
    EXPECT_EQ(GateApplication(gate::Rx{5, AngleExpr::parameter("theta", -1)}).str(), "rx(-theta) 5");
    EXPECT_EQ(GateApplication(gate::T3{2, 3, 5}).str(), "t3 2 3 5");
    EXPECT_EQ(GateApplication(gate::Rz{1, AngleExpr::parameter("p", 0.5)}).parameters(),
              std::vector<std::string>{"p"});
}

}  // namespace
}  // namespace hflow
