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

#include "hflow/network.hpp"
#include "test_util.hpp"

namespace hflow {
namespace {

using testing::sum_of;

TEST(Network, InitialDescriptorsSitAtTheirPosition) {
    auto s = init_network(3);
    EXPECT_EQ(s.time(), 0u);
    EXPECT_EQ(s.descriptor(2).x, sum_of({{"IXI", 1.0}}));
    EXPECT_EQ(s.descriptor(2).y, sum_of({{"IYI", 1.0}}));
    EXPECT_EQ(s.descriptor(3).z, sum_of({{"IIZ", 1.0}}));
    EXPECT_THROW(s.descriptor(0), std::invalid_argument);
    EXPECT_THROW(s.descriptor(4), std::invalid_argument);
    EXPECT_THROW(init_network(0), std::invalid_argument);
}

TEST(Network, VacuumExpectation) {
    EXPECT_EQ(vacuum_expectation(sum_of({{"Z", 1.0}})), Complex(-1.0));
    EXPECT_EQ(vacuum_expectation(sum_of({{"ZZ", 1.0}})), Complex(1.0));
    EXPECT_EQ(vacuum_expectation(sum_of({{"XI", 1.0}})), Complex(0.0));
    EXPECT_EQ(vacuum_expectation(sum_of({{"II", Complex{0, 2}}, {"IZ", 3.0}})), Complex(-3.0, 2.0));
    EXPECT_THROW(vacuum_expectation(init_network(2), sum_of({{"Z", 1.0}})), std::invalid_argument);
}

TEST(Network, FreshQubitHoldsZero) {
    auto s = init_network(2);
    auto b = bloch_vector(s, 1);
    EXPECT_EQ(b.x, 0.0);
    EXPECT_EQ(b.y, 0.0);
    EXPECT_EQ(b.z, -1.0);
    EXPECT_EQ(outcome_probability(s, 1), 0.0);
    EXPECT_EQ(purity_probe(s, 2), 1.0);
    EXPECT_EQ(pair_correlation(s, 1, 2), 0.0);
    EXPECT_THROW(pair_correlation(s, 1, 1), std::invalid_argument);
    EXPECT_EQ(z_projector(s, 1), sum_of({{"II", 0.5}, {"ZI", 0.5}}));
}

TEST(Network, InitialAlgebraIsExact) {
    auto r = check_descriptor_algebra(init_network(4), 1e-12);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.worst(), 0.0);
    EXPECT_THROW(check_descriptor_algebra(init_network(1), -1), std::invalid_argument);
}

TEST(Network, AlgebraCheckDetectsEachDefectClass) {
    auto fresh = init_network(2);
    std::vector<Descriptor> d(fresh.descriptors().begin(), fresh.descriptors().end());
    d[0].x = sum_of({{"XI", 1.0}, {"ZI", 0.01}});  // breaks products and squares
    auto r = check_descriptor_algebra(NetworkState(0, d), 1e-9);
    EXPECT_FALSE(r.ok());
    EXPECT_GT(r.product, 1e-3);
    EXPECT_NEAR(r.square, 1e-4, 1e-12);  // (X + 0.01 Z)^2 = 1.0001
    EXPECT_EQ(r.commutator, 0.0);

    d = {fresh.descriptors().begin(), fresh.descriptors().end()};
    d[1].x = sum_of({{"IX", 0.6}, {"XX", 0.8}});  // unit square, but fails to commute with q_1y
    auto r2 = check_descriptor_algebra(NetworkState(0, d), 1e-9);
    EXPECT_GT(r2.commutator, 1.0);
}

TEST(Network, ConsistencyErrors) {
    auto fresh = init_network(1);
    std::vector<Descriptor> d(fresh.descriptors().begin(), fresh.descriptors().end());
    d[0].z = sum_of({{"I", -3.0}});
    EXPECT_THROW(outcome_probability(NetworkState(0, d), 1), ConsistencyError);
    d[0].x = sum_of({{"I", Complex{0, 1}}});
    EXPECT_THROW(bloch_vector(NetworkState(0, d), 1), ConsistencyError);
}

TEST(Network, RejectsMismatchedLengths) {
    std::vector<Descriptor> d{{sum_of({{"XI", 1.0}}), sum_of({{"Y", 1.0}}), sum_of({{"ZI", 1.0}})}};
    EXPECT_THROW(NetworkState(0, d), std::invalid_argument);
}

}  // namespace
}  // namespace hflow
