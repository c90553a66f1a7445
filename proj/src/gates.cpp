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

#include "hflow/gates.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace hflow {

namespace {

constexpr double kAxisNormTolerance = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

std::string format_double(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

bool valid_identifier(const std::string& name) {
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    return std::all_of(name.begin(), name.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

const AngleExpr* angle_of(const GateKind& kind) {
    return std::visit(Overloaded{[](const gate::Rx& g) -> const AngleExpr* { return &g.angle; },
                                 [](const gate::Ry& g) -> const AngleExpr* { return &g.angle; },
                                 [](const gate::Rz& g) -> const AngleExpr* { return &g.angle; },
                                 [](const gate::Rn& g) -> const AngleExpr* { return &g.angle; },
                                 [](const auto&) -> const AngleExpr* { return nullptr; }},
                      kind);
}

// ---- substitution rules -------------------------------------------------
//
// Each rule rewrites the touched entries of `d` (0-based) in place. A rule
// only reads the descriptors of its own qubits, so applying the disjoint
// gates of one step one after another equals applying them all at once.

using Descs = std::vector<Descriptor>;

void rule_not(Descs& d, std::size_t k) {
    d[k].y = -d[k].y;
    d[k].z = -d[k].z;
}

void rule_sqrtnot(Descs& d, std::size_t k) {
    PauliSum y = d[k].y;
    d[k].y = d[k].z;
    d[k].z = -y;
}

void rule_h(Descs& d, std::size_t k) {
    PauliSum x = d[k].x;
    d[k].x = d[k].z;
    d[k].y = -d[k].y;
    d[k].z = std::move(x);
}

void rule_cnot(Descs& d, std::size_t k, std::size_t l) {
    const Descriptor t = d[k];
    const Descriptor c = d[l];
    d[k] = {t.x, -(t.y * c.z), -(t.z * c.z)};
    d[l] = {t.x * c.x, t.x * c.y, c.z};
}

// q'_i = sum_j M_ij q_j, M = cos(th) 1 + sin(th) [n]_x + (1 - cos(th)) n n^T.
void rule_rotation(Descs& d, std::size_t k, const Axis& axis, double theta) {
    const double n[3] = {axis.x, axis.y, axis.z};
    const double c = std::cos(theta), s = std::sin(theta);
    const Descriptor old = d[k];
    const std::size_t n_qubits = old.x.num_qubits();
    auto eps = [](std::size_t i, std::size_t j, std::size_t l) -> double {
        if (i == j || j == l || i == l) return 0.0;
        return ((j + 3 - i) % 3 == 1) ? 1.0 : -1.0;  // +1 for cyclic (i, j, l)
    };
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<PauliSum::Term> terms;
        for (std::size_t j = 0; j < 3; ++j) {
            double m = (1 - c) * n[i] * n[j];
            if (i == j) m += c;
            for (std::size_t l = 0; l < 3; ++l) m += s * eps(i, j, l) * n[l];
            if (m == 0.0) continue;
            for (const auto& [str, coef] : old[kComponents[j]].terms()) terms.emplace_back(str, m * coef);
        }
        d[k][kComponents[i]] = PauliSum::from_terms(n_qubits, std::move(terms));
    }
}

void rule_t3(Descs& d, std::size_t k, std::size_t l, std::size_t m) {
    const Descriptor a = d[k], b = d[l], c = d[m];
    d[k] = {-(a.x * c.x), -(a.y * c.x), a.z};
    d[l] = {a.z * b.x * c.z, a.z * b.y * c.z, b.z};
    d[m] = {-(b.z * c.x), a.z * b.z * c.y, -(a.z * c.z)};
}

void apply_rule(Descs& d, const GateApplication& g, const ParamEnv& env) {
    std::visit(Overloaded{
                   [](const gate::Id&) {},
                   [&](const gate::Not& x) { rule_not(d, x.q - 1); },
                   [&](const gate::SqrtNot& x) { rule_sqrtnot(d, x.q - 1); },
                   [&](const gate::Cnot& x) { rule_cnot(d, x.target - 1, x.control - 1); },
                   [&](const gate::Rx& x) { rule_rotation(d, x.q - 1, {1, 0, 0}, x.angle.evaluate(env)); },
                   [&](const gate::Ry& x) { rule_rotation(d, x.q - 1, {0, 1, 0}, x.angle.evaluate(env)); },
                   [&](const gate::Rz& x) { rule_rotation(d, x.q - 1, {0, 0, 1}, x.angle.evaluate(env)); },
                   [&](const gate::Rn& x) { rule_rotation(d, x.q - 1, x.axis, x.angle.evaluate(env)); },
                   [&](const gate::H& x) { rule_h(d, x.q - 1); },
                   [&](const gate::Bell& x) {
                       rule_cnot(d, x.k - 1, x.l - 1);
                       rule_h(d, x.l - 1);
                   },
                   [&](const gate::BellInv& x) {
                       rule_h(d, x.l - 1);
                       rule_cnot(d, x.k - 1, x.l - 1);
                   },
                   [&](const gate::T3& x) { rule_t3(d, x.k - 1, x.l - 1, x.m - 1); },
               },
               g.kind());
}

// ---- dense unitaries ----------------------------------------------------

// cos(th/2) + i sin(th/2) (n . sigma)
Matrix2 rotation_matrix(const Axis& n, double theta) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    const Complex i{0, 1};
    Matrix2 m{};
    for (std::size_t e = 0; e < 4; ++e) {
        m[e] = c * pauli_matrix::I[e] +
               i * s * (n.x * pauli_matrix::X[e] + n.y * pauli_matrix::Y[e] + n.z * pauli_matrix::Z[e]);
    }
    return m;
}

DenseOperator rotation_dense(std::size_t q, const Axis& n, double theta, std::size_t size) {
    return embed_single(rotation_matrix(n, theta), q, size);
}

DenseOperator hadamard_dense(std::size_t q, std::size_t n) {
    const double r = 1 / std::numbers::sqrt2;
    return rotation_dense(q, {r, 0, r}, std::numbers::pi, n);
}

// (1 - Z_l)/2 + X_k (1 + Z_l)/2
DenseOperator cnot_dense(std::size_t k, std::size_t l, std::size_t n) {
    const Matrix2 p0{Complex{0}, Complex{0}, Complex{0}, Complex{1}};
    const Matrix2 p1{Complex{1}, Complex{0}, Complex{0}, Complex{0}};
    return embed_single(p0, l, n) + embed_single(pauli_matrix::X, k, n) * embed_single(p1, l, n);
}

}  // namespace

// ---- ParamEnv / AngleExpr -----------------------------------------------

double ParamEnv::get(const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) throw CircuitError("parameter '" + name + "' has no value");
    return it->second;
}

double AngleExpr::evaluate(const ParamEnv& env) const { return param ? scale * env.get(*param) : scale; }

std::string AngleExpr::str() const {
    if (!param) return format_double(scale);
    if (scale == 1.0) return *param;
    if (scale == -1.0) return "-" + *param;
    return format_double(scale) + "*" + *param;
}

// ---- GateApplication ----------------------------------------------------

GateApplication::GateApplication(GateKind kind) : kind_(std::move(kind)) {
    const auto qs = qubits();
    for (std::size_t q : qs) {
        if (q == 0) throw CircuitError(str() + ": qubit indices are 1-based");
    }
    std::set<std::size_t> unique(qs.begin(), qs.end());
    if (unique.size() != qs.size()) throw CircuitError(str() + ": a gate may not name the same qubit twice");
    if (const auto* rn = std::get_if<gate::Rn>(&kind_)) {
        const double norm = std::sqrt(rn->axis.x * rn->axis.x + rn->axis.y * rn->axis.y + rn->axis.z * rn->axis.z);
        if (!(std::abs(norm - 1.0) <= kAxisNormTolerance)) {
            throw CircuitError(str() + ": rotation axis must have unit norm");
        }
    }
    if (const auto* angle = angle_of(kind_)) {
        if (angle->param && !valid_identifier(*angle->param)) {
            throw CircuitError(str() + ": bad parameter name");
        }
        if (!std::isfinite(angle->scale)) throw CircuitError(str() + ": angle is not finite");
    }
}

std::vector<std::size_t> GateApplication::qubits() const {
    return std::visit(Overloaded{
                          [](const gate::Cnot& g) { return std::vector<std::size_t>{g.target, g.control}; },
                          [](const gate::Bell& g) { return std::vector<std::size_t>{g.k, g.l}; },
                          [](const gate::BellInv& g) { return std::vector<std::size_t>{g.k, g.l}; },
                          [](const gate::T3& g) { return std::vector<std::size_t>{g.k, g.l, g.m}; },
                          [](const auto& g) { return std::vector<std::size_t>{g.q}; },
                      },
                      kind_);
}

std::vector<std::string> GateApplication::parameters() const {
    const auto* angle = angle_of(kind_);
    if (angle && angle->param) return {*angle->param};
    return {};
}

std::string GateApplication::str() const {
    auto q = [](std::size_t v) { return std::to_string(v); };
    return std::visit(
        Overloaded{
            [&](const gate::Id& g) { return "id " + q(g.q); },
            [&](const gate::Not& g) { return "not " + q(g.q); },
            [&](const gate::SqrtNot& g) { return "sqrtnot " + q(g.q); },
            [&](const gate::Cnot& g) { return "cnot t=" + q(g.target) + " c=" + q(g.control); },
            [&](const gate::Rx& g) { return "rx(" + g.angle.str() + ") " + q(g.q); },
            [&](const gate::Ry& g) { return "ry(" + g.angle.str() + ") " + q(g.q); },
            [&](const gate::Rz& g) { return "rz(" + g.angle.str() + ") " + q(g.q); },
            [&](const gate::Rn& g) {
                return "rn(" + format_double(g.axis.x) + "," + format_double(g.axis.y) + "," +
                       format_double(g.axis.z) + "," + g.angle.str() + ") " + q(g.q);
            },
            [&](const gate::H& g) { return "h " + q(g.q); },
            [&](const gate::Bell& g) { return "bell " + q(g.k) + " " + q(g.l); },
            [&](const gate::BellInv& g) { return "bellinv " + q(g.k) + " " + q(g.l); },
            [&](const gate::T3& g) { return "t3 " + q(g.k) + " " + q(g.l) + " " + q(g.m); },
        },
        kind_);
}

// ---- Circuit --------------------------------------------------------------

Circuit::Circuit(std::size_t num_qubits, std::vector<std::string> params) : n_(num_qubits), params_(std::move(params)) {
    if (n_ < 1 || n_ > kMaxQubits) {
        throw CircuitError("qubit count must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
    std::set<std::string> seen;
    for (const auto& p : params_) {
        if (!valid_identifier(p)) throw CircuitError("bad parameter name '" + p + "'");
        if (p == "pi") throw CircuitError("'pi' is reserved and cannot be a parameter");
        if (!seen.insert(p).second) throw CircuitError("parameter '" + p + "' declared twice");
    }
}

bool Circuit::declares(const std::string& name) const {
    return std::find(params_.begin(), params_.end(), name) != params_.end();
}

void Circuit::add_step(Step step) {
    std::set<std::size_t> used;
    for (const auto& g : step.gates) {
        for (std::size_t q : g.qubits()) {
            if (q > n_) {
                throw CircuitError(g.str() + ": qubit " + std::to_string(q) + " exceeds network size " +
                                   std::to_string(n_));
            }
            if (!used.insert(q).second) {
                throw CircuitError(g.str() + ": qubit " + std::to_string(q) + " already used in this step");
            }
        }
        for (const auto& p : g.parameters()) {
            if (!declares(p)) throw CircuitError(g.str() + ": parameter '" + p + "' is not declared");
        }
    }
    steps_.push_back(std::move(step));
}

std::string Circuit::str() const {
    std::ostringstream out;
    out << "qubits " << n_ << "\n";
    if (!params_.empty()) {
        out << "params";
        for (const auto& p : params_) out << " " << p;
        out << "\n";
    }
    for (const auto& step : steps_) {
        out << "step:";
        for (std::size_t i = 0; i < step.gates.size(); ++i) out << (i ? " ; " : " ") << step.gates[i].str();
        out << "\n";
    }
    return out.str();
}

// ---- Pauli backend -------------------------------------------------------

NetworkState apply_step(const NetworkState& s, const Step& step, const ParamEnv& env) {
    std::set<std::size_t> used;
    for (const auto& g : step.gates) {
        for (std::size_t q : g.qubits()) {
            if (q > s.num_qubits()) throw CircuitError(g.str() + ": qubit exceeds network size");
            if (!used.insert(q).second) throw CircuitError(g.str() + ": overlapping gates in one step");
        }
    }
    Descs d(s.descriptors().begin(), s.descriptors().end());
    for (const auto& g : step.gates) apply_rule(d, g, env);
    return NetworkState(s.time() + 1, std::move(d));
}

NetworkState apply_gate(const NetworkState& s, const GateApplication& g, const ParamEnv& env) {
    return apply_step(s, Step{{g}}, env);
}

std::vector<NetworkState> run_trajectory(const Circuit& c, const ParamEnv& env) {
    std::vector<NetworkState> out;
    out.reserve(c.depth() + 1);
    out.push_back(init_network(c.num_qubits()));
    for (const auto& step : c.steps()) out.push_back(apply_step(out.back(), step, env));
    return out;
}

NetworkState run_circuit_until(const Circuit& c, const ParamEnv& env, std::size_t t) {
    if (t > c.depth()) throw std::invalid_argument("run_circuit_until: time exceeds circuit depth");
    NetworkState s = init_network(c.num_qubits());
    for (std::size_t i = 0; i < t; ++i) s = apply_step(s, c.steps()[i], env);
    return s;
}

NetworkState run_circuit(const Circuit& c, const ParamEnv& env) { return run_circuit_until(c, env, c.depth()); }

PauliSum initial_component(std::size_t n, std::size_t qubit, Component c) {
    if (qubit < 1 || qubit > n) throw std::invalid_argument("initial_component: qubit out of range");
    static constexpr PauliLetter letters[3] = {PauliLetter::X, PauliLetter::Y, PauliLetter::Z};
    return PauliSum(PauliString::single(n, qubit - 1, letters[static_cast<std::size_t>(c)]));
}

// ---- dense backend -------------------------------------------------------

DenseOperator gate_unitary_dense(const GateApplication& g, std::size_t n, const ParamEnv& env) {
    for (std::size_t q : g.qubits()) {
        if (q > n) throw CircuitError(g.str() + ": qubit exceeds network size");
    }
    const double pi = std::numbers::pi;
    return std::visit(
        Overloaded{
            [&](const gate::Id&) { return DenseOperator::identity(n); },
            [&](const gate::Not& x) { return embed_single(pauli_matrix::X, x.q, n); },
            [&](const gate::SqrtNot& x) { return rotation_dense(x.q, {1, 0, 0}, pi / 2, n); },
            [&](const gate::Cnot& x) { return cnot_dense(x.target, x.control, n); },
            [&](const gate::Rx& x) { return rotation_dense(x.q, {1, 0, 0}, x.angle.evaluate(env), n); },
            [&](const gate::Ry& x) { return rotation_dense(x.q, {0, 1, 0}, x.angle.evaluate(env), n); },
            [&](const gate::Rz& x) { return rotation_dense(x.q, {0, 0, 1}, x.angle.evaluate(env), n); },
            [&](const gate::Rn& x) { return rotation_dense(x.q, x.axis, x.angle.evaluate(env), n); },
            [&](const gate::H& x) { return hadamard_dense(x.q, n); },
            [&](const gate::Bell& x) { return hadamard_dense(x.l, n) * cnot_dense(x.k, x.l, n); },
            [&](const gate::BellInv& x) { return cnot_dense(x.k, x.l, n) * hadamard_dense(x.l, n); },
            [&](const gate::T3& x) {
                return hadamard_dense(x.l, n) * cnot_dense(x.l, x.m, n) * hadamard_dense(x.l, n) *
                       cnot_dense(x.m, x.k, n) * rotation_dense(x.m, {0, 0, 1}, pi, n);
            },
        },
        g.kind());
}

DenseOperator step_unitary_dense(const Step& step, std::size_t n, const ParamEnv& env) {
    DenseOperator u = DenseOperator::identity(n);
    for (const auto& g : step.gates) u = gate_unitary_dense(g, n, env) * u;
    return u;
}

DenseEvolution::DenseEvolution(std::size_t n) : n_(n), w_(DenseOperator::identity(n)) {}

void DenseEvolution::apply_step(const Step& step, const ParamEnv& env) {
    w_ = step_unitary_dense(step, n_, env) * w_;
    ++time_;
}

DenseOperator DenseEvolution::descriptor(std::size_t qubit, Component c) const {
    return w_.adjoint() * to_dense(initial_component(n_, qubit, c)) * w_;
}

Complex DenseEvolution::expectation(const DenseOperator& a) const {
    const std::size_t v = vacuum_index(n_);
    const std::size_t dim = w_.dim();
    Complex total{};
    for (std::size_t i = 0; i < dim; ++i) {
        const Complex left = std::conj(w_(i, v));
        if (left == Complex{}) continue;
        Complex row{};
        for (std::size_t j = 0; j < dim; ++j) row += a(i, j) * w_(j, v);
        total += left * row;
    }
    return total;
}

BlochVector DenseEvolution::bloch_vector(std::size_t qubit) const {
    auto e = [&](Component c) {
        return real_expectation(expectation(to_dense(initial_component(n_, qubit, c))), "dense bloch_vector");
    };
    return {e(Component::X), e(Component::Y), e(Component::Z)};
}

double DenseEvolution::outcome_probability(std::size_t qubit) const {
    const double p = 0.5 * (1.0 + bloch_vector(qubit).z);
    return std::clamp(p, 0.0, 1.0);
}

DenseEvolution run_circuit_dense(const Circuit& c, const ParamEnv& env) {
    DenseEvolution e(c.num_qubits());
    for (const auto& step : c.steps()) e.apply_step(step, env);
    return e;
}

}  // namespace hflow
