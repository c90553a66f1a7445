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

// Gate catalog, circuits, and evolution of descriptors.
//
// Every gate is a substitution rule: the touched qubits' new descriptors are
// polynomials in their old descriptors, and every other descriptor is copied
// through untouched. The same gates also have dense unitaries U, defined on
// the time-zero Pauli matrices, so that a descriptor evolves as U^dag q U;
// the dense path is the independent oracle for the substitution rules.

#ifndef HFLOW_GATES_HPP
#define HFLOW_GATES_HPP

#include <concepts>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "hflow/dense.hpp"
#include "hflow/network.hpp"

namespace hflow {

/// Rejected circuit or gate: overlapping qubits in a step, bad index, unknown
/// parameter, non-unit rotation axis.
class CircuitError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Parameter name -> angle in radians.
class ParamEnv {
  public:
    ParamEnv() = default;
    ParamEnv(std::initializer_list<std::pair<const std::string, double>> values) : values_(values) {}

    void set(const std::string& name, double value) { values_[name] = value; }
    bool contains(const std::string& name) const { return values_.count(name) != 0; }
    /// Throws CircuitError when unbound.
    double get(const std::string& name) const;
    const std::map<std::string, double>& values() const { return values_; }

  private:
    std::map<std::string, double> values_;
};

/// An angle: `scale` alone, or `scale * param` when a parameter is named.
struct AngleExpr {
    double scale = 0.0;
    std::optional<std::string> param;

    static AngleExpr literal(double radians) { return {radians, std::nullopt}; }
    static AngleExpr parameter(std::string name, double scale = 1.0) { return {scale, std::move(name)}; }

    double evaluate(const ParamEnv& env) const;
    AngleExpr negated() const { return {-scale, param}; }
    std::string str() const;

    friend bool operator==(const AngleExpr&, const AngleExpr&) = default;
};

struct Axis {
    double x = 0, y = 0, z = 0;
    friend bool operator==(const Axis&, const Axis&) = default;
};

namespace gate {
struct Id {
    std::size_t q;
};
struct Not {
    std::size_t q;
};
struct SqrtNot {
    std::size_t q;
};
/// Toggles `target` when `control` holds 1.
struct Cnot {
    std::size_t target, control;
};
struct Rx {
    std::size_t q;
    AngleExpr angle;
};
struct Ry {
    std::size_t q;
    AngleExpr angle;
};
struct Rz {
    std::size_t q;
    AngleExpr angle;
};
struct Rn {
    std::size_t q;
    Axis axis;
    AngleExpr angle;
};
struct H {
    std::size_t q;
};
/// cnot(target k, control l) followed by H on l.
struct Bell {
    std::size_t k, l;
};
/// H on l followed by cnot(target k, control l).
struct BellInv {
    std::size_t k, l;
};
/// Teleportation correction on output m conditioned on carriers k and l.
struct T3 {
    std::size_t k, l, m;
};
}  // namespace gate

using GateKind = std::variant<gate::Id, gate::Not, gate::SqrtNot, gate::Cnot, gate::Rx, gate::Ry, gate::Rz, gate::Rn,
                              gate::H, gate::Bell, gate::BellInv, gate::T3>;

class GateApplication {
  public:
    /// Throws CircuitError for repeated qubits, zero indices, or a non-unit axis.
    GateApplication(GateKind kind);  // NOLINT: implicit on purpose, gates read as values
    template <class G>
        requires(!std::same_as<std::remove_cvref_t<G>, GateKind> && std::constructible_from<GateKind, G>)
    GateApplication(G&& g) : GateApplication(GateKind(std::forward<G>(g))) {}  // NOLINT

    const GateKind& kind() const { return kind_; }
    /// Touched qubits, in the order they appear in the gate's arguments.
    std::vector<std::size_t> qubits() const;
    /// Parameter names referenced by the gate's angle, if any.
    std::vector<std::string> parameters() const;
    /// Text form in the circuit file grammar, e.g. "cnot t=1 c=2".
    std::string str() const;

  private:
    GateKind kind_;
};

/// One time step. Touched qubit sets are disjoint; idle qubits get the unit wire.
struct Step {
    std::vector<GateApplication> gates;
};

class Circuit {
  public:
    /// Throws CircuitError when n is out of range or a parameter name is repeated.
    explicit Circuit(std::size_t num_qubits, std::vector<std::string> params = {});

    /// Validates disjointness, index range and parameter declarations.
    void add_step(Step step);

    std::size_t num_qubits() const { return n_; }
    const std::vector<std::string>& params() const { return params_; }
    bool declares(const std::string& name) const;
    const std::vector<Step>& steps() const { return steps_; }
    std::size_t depth() const { return steps_.size(); }

    /// Text form accepted by parse_circuit.
    std::string str() const;

  private:
    std::size_t n_;
    std::vector<std::string> params_;
    std::vector<Step> steps_;
};

/// Applies one gate as a full step (every other qubit idles); time advances by 1.
NetworkState apply_gate(const NetworkState& s, const GateApplication& g, const ParamEnv& env);
/// Applies all gates of a step against the time-t descriptors; time advances by 1.
NetworkState apply_step(const NetworkState& s, const Step& step, const ParamEnv& env);

/// States at t = 0 .. depth.
std::vector<NetworkState> run_trajectory(const Circuit& c, const ParamEnv& env);
NetworkState run_circuit(const Circuit& c, const ParamEnv& env);
/// State after the first `t` steps.
NetworkState run_circuit_until(const Circuit& c, const ParamEnv& env, std::size_t t);

/// U_G on the time-zero representation, acting on all n qubits.
DenseOperator gate_unitary_dense(const GateApplication& g, std::size_t n, const ParamEnv& env);
/// Product of a step's gate unitaries (they act on disjoint qubits and commute).
DenseOperator step_unitary_dense(const Step& step, std::size_t n, const ParamEnv& env);

/// Dense backend: tracks the accumulated unitary W with q_a(t) = W^dag sigma_a W.
class DenseEvolution {
  public:
    explicit DenseEvolution(std::size_t n);

    /// W <- U_step W.
    void apply_step(const Step& step, const ParamEnv& env);

    std::size_t num_qubits() const { return n_; }
    std::size_t time() const { return time_; }
    const DenseOperator& accumulated() const { return w_; }
    DenseOperator descriptor(std::size_t qubit, Component c) const;
    /// <0..0| W^dag A W |0..0> for A written on the time-zero matrices.
    Complex expectation(const DenseOperator& time_zero_observable) const;
    /// <q_a(t)> componentwise.
    BlochVector bloch_vector(std::size_t qubit) const;
    /// Probability that the qubit holds 1.
    double outcome_probability(std::size_t qubit) const;

  private:
    std::size_t n_;
    std::size_t time_ = 0;
    DenseOperator w_;
};

DenseEvolution run_circuit_dense(const Circuit& c, const ParamEnv& env);

/// The time-zero Pauli matrix of one descriptor component.
PauliSum initial_component(std::size_t n, std::size_t qubit, Component c);

}  // namespace hflow

#endif  // HFLOW_GATES_HPP
