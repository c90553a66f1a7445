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


// Ready-made experiments on the descriptor simulator, plus the random-circuit
// consistency sweep and CSV output shared by the command-line tool and tests.

#ifndef HFLOW_EXPERIMENTS_HPP
#define HFLOW_EXPERIMENTS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hflow/gates.hpp"
#include "hflow/network.hpp"

namespace hflow {

enum class Backend { Pauli, Dense };

/// "pauli" or "dense"; throws std::invalid_argument otherwise.
Backend parse_backend(const std::string& name);

// ---- circuits ---------------------------------------------------------------

/// Pair on qubits 2, 3; local rotations by theta and phi; records in 1 and 4;
/// final cnot leaves qubit 1 = 1 iff the records differ.
Circuit epr_circuit();

enum class EprVariant {
    Standard,
    /// Extra cnot copies qubit 4 into a fifth qubit after the recording step.
    Ancilla,
    /// As Ancilla, with the copy in qubit 5 controlling the final cnot.
    Relay,
};
Circuit epr_variant_circuit(EprVariant v);

/// Five-qubit teleportation of rx(theta) on qubit 1 to qubit 5, then rx(-theta) on 5.
Circuit teleport_circuit();

// ---- EPR ----------------------------------------------------------------------

struct EprResult {
    double theta = 0, phi = 0;
    /// Probability that qubit 1 holds 1 at the end: the two records differ.
    double prob_different = 0;
    /// Networks at t = 1, 2, 3 (Pauli backend only; empty for dense).
    std::vector<NetworkState> snapshots;
};

EprResult run_epr(double theta, double phi, Backend backend = Backend::Pauli,
                  EprVariant variant = EprVariant::Standard);

// ---- teleportation --------------------------------------------------------------

struct TeleportResult {
    double theta = 0;
    BlochVector bloch_q5;    // at t = 4, before the check rotation
    double purity_q5 = 0;    // |bloch_q5|^2
    double verify_prob = 0;  // probability that qubit 5 holds 0 at t = 5
};

TeleportResult run_teleportation(double theta, Backend backend = Backend::Pauli);

/// Raw q_z expectations of qubits 4 and 5 right after the pair is made.
struct EntanglementKey {
    double joint = 0;    // <q_4z q_5z>
    double product = 0;  // <q_4z> <q_5z>
};
EntanglementKey entanglement_key(double theta);

// ---- local hidden variables ------------------------------------------------------

/// Outcome of the feasibility test for 8-strategy hidden-variable models over
/// three angles. Weights are indexed by the assignment bits a0 a1 a2 read as
/// a binary number (a0 most significant); all are affine in p = w_111.
struct LhvCertificate {
    bool feasible = false;
    /// Interval of p keeping every weight >= 0; empty when lo > hi.
    double p_lo = 0, p_hi = 0;
    /// w_s = offset[s] + slope[s] * p.
    std::array<double, 8> offset{}, slope{};
    /// Strategy forced negative (infeasible case), else -1.
    int violating_strategy = -1;
    /// Weights at a feasible p (midpoint of the interval), zeros otherwise.
    std::array<double, 8> weights{};
    std::string text;
};

/// Symmetric case: every angle has the given marginal and every pair the given
/// joint value. Closed form.
LhvCertificate lhv_feasibility(double marginal, double pair_value);
/// General case: marginals m_i and pair values m_ij for (01, 02, 12).
LhvCertificate lhv_feasibility_general(const std::array<double, 3>& marginals, const std::array<double, 3>& pairs);

/// Label "abc" of strategy index s.
std::string strategy_label(int s);

struct BellGridPoint {
    double theta = 0, phi = 0;
    double marginal_a = 0;   // probability qubit 1 holds 1 at t = 3
    double marginal_b = 0;   // probability qubit 4 holds 1 at t = 3
    double correlation = 0;  // probability both hold 1 at t = 3
};

struct BellCheckResult {
    std::vector<BellGridPoint> grid;
    std::array<double, 3> angles{};
    /// Derived a(theta_i) a(theta_j) means for pairs (01, 02, 12).
    std::array<double, 3> pair_values{};
    /// True when the same-angle correlation forces b = a, false for b = 1 - a.
    bool same_outcomes = false;
    LhvCertificate lhv;
};

/// Grid over (theta, phi) plus the pair values at the three angles 0, 2pi/3, 4pi/3.
BellCheckResult run_bell_check(const std::vector<double>& grid_angles);

// ---- demos ----------------------------------------------------------------------

struct XorResult {
    std::string y, recovered;
};
/// y = x xor r, recovered = y xor r. Inputs are strings of '0'/'1' of equal length.
XorResult xor_demo(const std::string& x, const std::string& r);

struct AmbiguityResult {
    bool states_match = false;
    double overlap = 0;         // |<A|B>|
    double descriptor_gap = 0;  // max coefficient of the difference of the qubit 1 descriptors
};
/// Two-qubit pair; variant A rotates qubit 1 by theta, variant B rotates qubit 2 by -theta.
AmbiguityResult ambiguity_demo(double theta);

// ---- random circuits and consistency sweep --------------------------------------

/// Random circuit on n qubits with `depth` steps of random catalog gates and
/// literal angles.
Circuit random_circuit(std::mt19937_64& rng, std::size_t n, std::size_t depth);

struct CircuitCheck {
    double algebra = 0;   // worst defect over every step
    double backend = 0;   // worst |dense(Pauli) - W^dag sigma W| over every step and component
    double pictures = 0;  // cross_check at the final time
    std::size_t locality_violations = 0;  // untouched descriptors not bit-identical
};

CircuitCheck check_circuit(const Circuit& c, const ParamEnv& env);

struct SelfcheckReport {
    std::size_t circuits = 0;
    CircuitCheck worst;
    /// Per-circuit sizes, for diagnostics.
    std::vector<std::pair<std::size_t, std::size_t>> shapes;
};

/// Checks `count` random circuits (1..5 qubits, 1..20 steps) from `seed`.
SelfcheckReport selfcheck(std::size_t count, std::uint64_t seed);

// ---- CSV ----------------------------------------------------------------------------

/// Shortest text with 17 significant digits.
std::string format_real(double v);

/// Header "time,qubit,component,pauli_string,re,im" then one row per term.
void write_descriptor_csv(std::ostream& out, const std::vector<NetworkState>& states);
void write_key_value_csv(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows);

}  // namespace hflow

#endif  // HFLOW_EXPERIMENTS_HPP
