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


#include "hflow/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "hflow/schroedinger.hpp"

namespace hflow {

namespace {

constexpr double kLhvSlack = 1e-12;
// Same-angle correlation must sit this close to a recognized relation.
constexpr double kRelationTolerance = 1e-6;

const AngleExpr kTheta = AngleExpr::parameter("theta");
const AngleExpr kPhi = AngleExpr::parameter("phi");

ParamEnv epr_env(double theta, double phi) { return ParamEnv{{"theta", theta}, {"phi", phi}}; }

}  // namespace

Backend parse_backend(const std::string& name) {
    if (name == "pauli") return Backend::Pauli;
    if (name == "dense") return Backend::Dense;
    throw std::invalid_argument("unknown backend '" + name + "' (expected pauli or dense)");
}

// ---- circuits ---------------------------------------------------------------

Circuit epr_variant_circuit(EprVariant v) {
    const bool extended = v != EprVariant::Standard;
    Circuit c(extended ? 5 : 4, {"theta", "phi"});
    c.add_step({{gate::BellInv{2, 3}}});
    c.add_step({{gate::Rx{2, kTheta}, gate::Rx{3, kPhi}}});
    c.add_step({{gate::Cnot{1, 2}, gate::Cnot{4, 3}}});
    if (extended) c.add_step({{gate::Cnot{5, 4}}});
    c.add_step({{gate::Cnot{1, v == EprVariant::Relay ? std::size_t{5} : std::size_t{4}}}});
    return c;
}

Circuit epr_circuit() { return epr_variant_circuit(EprVariant::Standard); }

Circuit teleport_circuit() {
    Circuit c(5, {"theta"});
    c.add_step({{gate::Rx{1, kTheta}, gate::BellInv{4, 5}}});
    c.add_step({{gate::Bell{1, 4}}});
    c.add_step({{gate::Cnot{2, 1}, gate::Cnot{3, 4}}});
    c.add_step({{gate::T3{2, 3, 5}}});
    c.add_step({{gate::Rx{5, kTheta.negated()}}});
    return c;
}

// ---- EPR ----------------------------------------------------------------------

EprResult run_epr(double theta, double phi, Backend backend, EprVariant variant) {
    const Circuit c = epr_variant_circuit(variant);
    const ParamEnv env = epr_env(theta, phi);
    EprResult r;
    r.theta = theta;
    r.phi = phi;
    if (backend == Backend::Dense) {
        r.prob_different = run_circuit_dense(c, env).outcome_probability(1);
        return r;
    }
    auto trajectory = run_trajectory(c, env);
    r.prob_different = outcome_probability(trajectory.back(), 1);
    r.snapshots.assign(trajectory.begin() + 1, trajectory.begin() + 4);
    return r;
}

// ---- teleportation --------------------------------------------------------------

TeleportResult run_teleportation(double theta, Backend backend) {
    const Circuit c = teleport_circuit();
    const ParamEnv env{{"theta", theta}};
    TeleportResult r;
    r.theta = theta;
    if (backend == Backend::Dense) {
        DenseEvolution e(c.num_qubits());
        for (std::size_t t = 0; t < 4; ++t) e.apply_step(c.steps()[t], env);
        r.bloch_q5 = e.bloch_vector(5);
        e.apply_step(c.steps()[4], env);
        r.verify_prob = 1.0 - e.outcome_probability(5);
    } else {
        const auto trajectory = run_trajectory(c, env);
        r.bloch_q5 = bloch_vector(trajectory[4], 5);
        r.verify_prob = 1.0 - outcome_probability(trajectory[5], 5);
    }
    r.purity_q5 = r.bloch_q5.norm_squared();
    return r;
}

EntanglementKey entanglement_key(double theta) {
    const NetworkState s = run_circuit_until(teleport_circuit(), ParamEnv{{"theta", theta}}, 1);
    const auto& z4 = s.descriptor(4).z;
    const auto& z5 = s.descriptor(5).z;
    EntanglementKey k;
    k.joint = real_expectation(vacuum_expectation(z4 * z5), "entanglement_key");
    k.product = real_expectation(vacuum_expectation(z4), "entanglement_key") *
                real_expectation(vacuum_expectation(z5), "entanglement_key");
    return k;
}

// ---- local hidden variables ------------------------------------------------------

std::string strategy_label(int s) {
    std::string out(3, '0');
    for (int i = 0; i < 3; ++i) out[static_cast<std::size_t>(i)] = ((s >> (2 - i)) & 1) ? '1' : '0';
    return out;
}

namespace {

void require_unit_interval(double v, const char* what) {
    if (!(v >= 0 && v <= 1)) throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
}

std::string affine_text(double offset, double slope) {
    std::ostringstream out;
    out.precision(6);
    out << offset << (slope < 0 ? " - p" : " + p");
    return out.str();
}

// Shared tail: p-interval from the affine weights, feasibility and wording.
LhvCertificate finish_certificate(LhvCertificate cert) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    int lo_from = -1, hi_from = -1;
    for (int s = 0; s < 8; ++s) {
        const double c = cert.offset[static_cast<std::size_t>(s)];
        const double k = cert.slope[static_cast<std::size_t>(s)];
        // c + k p >= 0 with k = +1 or -1.
        if (k > 0 && -c > lo) {
            lo = 0.0 - c;
            lo_from = s;
        } else if (k < 0 && c < hi) {
            hi = c;
            hi_from = s;
        }
    }
    cert.p_lo = lo;
    cert.p_hi = hi;
    cert.feasible = lo <= hi + kLhvSlack;
    std::ostringstream text;
    if (cert.feasible) {
        const double p = std::clamp(0.5 * (lo + hi), lo, std::max(lo, hi));
        for (std::size_t s = 0; s < 8; ++s) cert.weights[s] = std::max(0.0, cert.offset[s] + cert.slope[s] * p);
        text << "feasible: every weight is nonnegative for p in [" << lo << ", " << hi << "]";
    } else {
        cert.violating_strategy = hi_from;
        const auto h = static_cast<std::size_t>(hi_from);
        const auto l = static_cast<std::size_t>(lo_from);
        text << "infeasible: w_" << strategy_label(hi_from) << " = " << affine_text(cert.offset[h], cert.slope[h])
             << " < 0 for every p >= " << lo << " (the bound from w_" << strategy_label(lo_from) << " = "
             << affine_text(cert.offset[l], cert.slope[l]) << " >= 0)";
    }
    cert.text = text.str();
    return cert;
}

}  // namespace

LhvCertificate lhv_feasibility(double marginal, double pair_value) {
    require_unit_interval(marginal, "marginal");
    require_unit_interval(pair_value, "pair_value");
    LhvCertificate cert;
    for (int s = 0; s < 8; ++s) {
        const int ones = std::popcount(static_cast<unsigned>(s));
        auto& c = cert.offset[static_cast<std::size_t>(s)];
        auto& k = cert.slope[static_cast<std::size_t>(s)];
        switch (ones) {
            case 3:
                c = 0, k = 1;
                break;
            case 2:
                c = pair_value, k = -1;
                break;
            case 1:
                c = marginal - 2 * pair_value, k = 1;
                break;
            default:
                c = 1 - 3 * marginal + 3 * pair_value, k = -1;
                break;
        }
    }
    return finish_certificate(cert);
}

LhvCertificate lhv_feasibility_general(const std::array<double, 3>& marginals, const std::array<double, 3>& pairs) {
    for (double m : marginals) require_unit_interval(m, "marginal");
    for (double v : pairs) require_unit_interval(v, "pair value");
    // Moment of every index set T (bit i of T means angle i; bit 0 is angle 0).
    // The triple moment is the free parameter p.
    auto pair_index = [](unsigned t) { return t == 0b011 ? 0 : (t == 0b101 ? 1 : 2); };
    auto moment = [&](unsigned t) -> double {
        switch (std::popcount(t)) {
            case 0:
                return 1.0;
            case 1:
                return marginals[static_cast<std::size_t>(std::countr_zero(t))];
            case 2:
                return pairs[static_cast<std::size_t>(pair_index(t))];
            default:
                return 0.0;  // carried by the slope
        }
    };
    LhvCertificate cert;
    for (int s = 0; s < 8; ++s) {
        // Ones of strategy s as an angle set (strategy bit 2 is angle 0).
        unsigned a = 0;
        for (unsigned i = 0; i < 3; ++i) {
            if ((s >> (2 - i)) & 1) a |= 1u << i;
        }
        // Inclusion-exclusion over supersets of a.
        double c = 0, k = 0;
        for (unsigned t = 0; t < 8; ++t) {
            if ((t & a) != a) continue;
            const double sign = (std::popcount(t ^ a) & 1) ? -1.0 : 1.0;
            if (t == 0b111) {
                k += sign;
            } else {
                c += sign * moment(t);
            }
        }
        cert.offset[static_cast<std::size_t>(s)] = c;
        cert.slope[static_cast<std::size_t>(s)] = k;
    }
    return finish_certificate(cert);
}

BellCheckResult run_bell_check(const std::vector<double>& grid_angles) {
    if (grid_angles.empty()) throw std::invalid_argument("run_bell_check: empty angle grid");
    const Circuit c = epr_circuit();
    auto at_t3 = [&](double theta, double phi) {
        const NetworkState s = run_circuit_until(c, epr_env(theta, phi), 3);
        return BellGridPoint{theta, phi, outcome_probability(s, 1), outcome_probability(s, 4),
                             pair_correlation(s, 1, 4)};
    };
    BellCheckResult r;
    r.grid.resize(grid_angles.size() * grid_angles.size());
    const auto count = static_cast<std::int64_t>(r.grid.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto k = static_cast<std::size_t>(i);
        r.grid[k] = at_t3(grid_angles[k / grid_angles.size()], grid_angles[k % grid_angles.size()]);
    }

    const double third = 2 * std::numbers::pi / 3;
    r.angles = {0.0, third, 2 * third};
    // The same-angle correlation fixes how b relates to a in any hidden-variable model.
    const BellGridPoint same = at_t3(r.angles[0], r.angles[0]);
    if (std::abs(same.correlation - same.marginal_a) <= kRelationTolerance) {
        r.same_outcomes = true;
    } else if (std::abs(same.correlation) <= kRelationTolerance) {
        r.same_outcomes = false;
    } else {
        throw ConsistencyError("run_bell_check: same-angle correlation " + std::to_string(same.correlation) +
                               " forces neither b = a nor b = 1 - a");
    }
    std::array<double, 3> marginals{};
    const std::pair<std::size_t, std::size_t> pairs[3] = {{0, 1}, {0, 2}, {1, 2}};
    for (std::size_t k = 0; k < 3; ++k) {
        const auto [i, j] = pairs[k];
        const BellGridPoint p = at_t3(r.angles[i], r.angles[j]);
        // a(i) a(j) = a(i) b(j) when b = a, and a(i) (1 - b(j)) when b = 1 - a.
        r.pair_values[k] = r.same_outcomes ? p.correlation : p.marginal_a - p.correlation;
        marginals[i] = p.marginal_a;
    }
    marginals[2] = at_t3(r.angles[2], r.angles[0]).marginal_a;
    r.lhv = lhv_feasibility_general(marginals, r.pair_values);
    return r;
}

// ---- demos ----------------------------------------------------------------------

XorResult xor_demo(const std::string& x, const std::string& r) {
    if (x.size() != r.size()) throw std::invalid_argument("xor_demo: x and r differ in length");
    auto bit = [](char ch) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("xor_demo: inputs are strings of 0 and 1");
        return ch == '1';
    };
    XorResult out;
    for (std::size_t i = 0; i < x.size(); ++i) out.y.push_back((bit(x[i]) != bit(r[i])) ? '1' : '0');
    for (std::size_t i = 0; i < x.size(); ++i) out.recovered.push_back((bit(out.y[i]) != bit(r[i])) ? '1' : '0');
    if (out.recovered != x) throw ConsistencyError("xor_demo: recovery failed");
    return out;
}

AmbiguityResult ambiguity_demo(double theta) {
    Circuit a(2, {"theta"});
    a.add_step({{gate::BellInv{1, 2}}});
    a.add_step({{gate::Rx{1, kTheta}}});
    Circuit b(2, {"theta"});
    b.add_step({{gate::BellInv{1, 2}}});
    b.add_step({{gate::Rx{2, kTheta.negated()}}});
    const ParamEnv env{{"theta", theta}};

    const StateVector psi_a = evolve_state(a, env);
    const StateVector psi_b = evolve_state(b, env);
    AmbiguityResult r;
    Complex overlap{};
    for (std::size_t i = 0; i < psi_a.dim(); ++i) overlap += std::conj(psi_a.amplitude(i)) * psi_b.amplitude(i);
    r.overlap = std::abs(overlap);
    r.states_match = states_equal_up_to_phase(psi_a, psi_b, 1e-9);

    const NetworkState sa = run_circuit(a, env);
    const NetworkState sb = run_circuit(b, env);
    for (Component u : kComponents) {
        r.descriptor_gap = std::max(r.descriptor_gap, sum_distance(sa.descriptor(1)[u], sb.descriptor(1)[u]));
    }
    return r;
}

// ---- random circuits and consistency sweep --------------------------------------

Circuit random_circuit(std::mt19937_64& rng, std::size_t n, std::size_t depth) {
    Circuit c(n);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    std::normal_distribution<double> normal;
    std::uniform_int_distribution<int> kind_pick(0, 11);
    std::bernoulli_distribution idle(0.2);
    std::vector<std::size_t> order(n);
    for (std::size_t step = 0; step < depth; ++step) {
        for (std::size_t i = 0; i < n; ++i) order[i] = i + 1;
        std::shuffle(order.begin(), order.end(), rng);
        Step s;
        std::size_t next = 0;
        while (next < n) {
            const std::size_t left = n - next;
            if (idle(rng)) {
                ++next;
                continue;
            }
            int kind = kind_pick(rng);
            // Multi-qubit gates that do not fit fall back to a rotation.
            if ((kind == 3 || kind == 9 || kind == 10) && left < 2) kind = 4;
            if (kind == 11 && left < 3) kind = 7;
            const std::size_t q = order[next];
            auto lit = [&] { return AngleExpr::literal(angle(rng)); };
            switch (kind) {
                case 0:
                    s.gates.emplace_back(gate::Id{q});
                    break;
                case 1:
                    s.gates.emplace_back(gate::Not{q});
                    break;
                case 2:
                    s.gates.emplace_back(gate::SqrtNot{q});
                    break;
                case 3:
                    s.gates.emplace_back(gate::Cnot{q, order[next + 1]});
                    break;
                case 4:
                    s.gates.emplace_back(gate::Rx{q, lit()});
                    break;
                case 5:
                    s.gates.emplace_back(gate::Ry{q, lit()});
                    break;
                case 6:
                    s.gates.emplace_back(gate::Rz{q, lit()});
                    break;
                case 7: {
                    double v[3] = {normal(rng), normal(rng), normal(rng)};
                    const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
                    s.gates.emplace_back(gate::Rn{q, {v[0] / norm, v[1] / norm, v[2] / norm}, lit()});
                    break;
                }
                case 8:
                    s.gates.emplace_back(gate::H{q});
                    break;
                case 9:
                    s.gates.emplace_back(gate::Bell{q, order[next + 1]});
                    break;
                case 10:
                    s.gates.emplace_back(gate::BellInv{q, order[next + 1]});
                    break;
                default:
                    s.gates.emplace_back(gate::T3{q, order[next + 1], order[next + 2]});
                    break;
            }
            next += s.gates.back().qubits().size();
        }
        c.add_step(std::move(s));
    }
    return c;
}

CircuitCheck check_circuit(const Circuit& c, const ParamEnv& env) {
    CircuitCheck out;
    const std::size_t n = c.num_qubits();
    NetworkState s = init_network(n);
    DenseEvolution dense(n);
    for (const auto& step : c.steps()) {
        NetworkState next = apply_step(s, step, env);
        dense.apply_step(step, env);

        std::vector<bool> touched(n + 1, false);
        for (const auto& g : step.gates) {
            for (std::size_t q : g.qubits()) touched[q] = true;
        }
        for (std::size_t a = 1; a <= n; ++a) {
            if (!touched[a] && !(next.descriptor(a) == s.descriptor(a))) ++out.locality_violations;
            for (Component u : kComponents) {
                out.backend = std::max(out.backend, max_abs_diff(to_dense(next.descriptor(a)[u]), dense.descriptor(a, u)));
            }
        }
        out.algebra = std::max(out.algebra, check_descriptor_algebra(next, 0.0).worst());
        s = std::move(next);
    }
    out.pictures = cross_check(c, env);
    return out;
}

SelfcheckReport selfcheck(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> qubits(1, 5), depth(1, 20);
    SelfcheckReport report;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = qubits(rng);
        const std::size_t d = depth(rng);
        const Circuit c = random_circuit(rng, n, d);
        const CircuitCheck r = check_circuit(c, ParamEnv{});
        report.worst.algebra = std::max(report.worst.algebra, r.algebra);
        report.worst.backend = std::max(report.worst.backend, r.backend);
        report.worst.pictures = std::max(report.worst.pictures, r.pictures);
        report.worst.locality_violations += r.locality_violations;
        report.shapes.emplace_back(n, d);
        ++report.circuits;
    }
    return report;
}

// ---- CSV ----------------------------------------------------------------------------

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_descriptor_csv(std::ostream& out, const std::vector<NetworkState>& states) {
    out << "time,qubit,component,pauli_string,re,im\n";
    for (const auto& s : states) {
        for (std::size_t a = 1; a <= s.num_qubits(); ++a) {
            for (Component u : kComponents) {
                for (const auto& [str, coef] : s.descriptor(a)[u].terms()) {
                    out << s.time() << ',' << a << ',' << component_char(u) << ',' << str.str() << ','
                        << format_real(coef.real()) << ',' << format_real(coef.imag()) << '\n';
                }
            }
        }
    }
}

void write_key_value_csv(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
    out << "key,value\n";
    for (const auto& [k, v] : rows) out << k << ',' << v << '\n';
}

}  // namespace hflow
