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


#include "hflow/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "hflow/experiments.hpp"
#include "hflow/info_flow.hpp"
#include "hflow/parser.hpp"
#include "hflow/schroedinger.hpp"

namespace hflow {

namespace {

using Rows = std::vector<std::pair<std::string, std::string>>;

struct Options {
    std::string circuit;
    std::vector<std::string> params;
    std::string backend = "pauli";
    std::string csv;
    std::size_t samples = 0;
    double tol = 1e-9;
    long time = -1;
    std::vector<std::string> subsets;
    std::string probe;
    double theta = 0, phi = 0;
    std::string x, r;
    std::uint64_t seed = 20261017;
};

double parse_value(const std::string& text) {
    const AngleExpr e = parse_angle(text);
    if (e.param) throw std::invalid_argument("value '" + text + "' may not name a parameter");
    return e.scale;
}

ParamEnv parse_params(const std::vector<std::string>& items) {
    ParamEnv env;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw std::invalid_argument("--param expects NAME=VALUE, got '" + item + "'");
        env.set(item.substr(0, eq), parse_value(item.substr(eq + 1)));
    }
    return env;
}

std::vector<std::size_t> parse_subset(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        std::size_t pos = 0;
        const unsigned long v = std::stoul(part, &pos);
        if (pos != part.size()) throw std::invalid_argument("bad qubit index '" + part + "' in --subset");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty --subset");
    return out;
}

// CSV keys use '+' so the key stays a single field.
std::string subset_text(const std::vector<std::size_t>& s, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? sep : "") + std::to_string(s[i]);
    return out;
}

std::size_t resolve_time(long time, const Circuit& c) {
    if (time < 0) return c.depth();
    if (static_cast<std::size_t>(time) > c.depth()) {
        throw std::invalid_argument("--time " + std::to_string(time) + " exceeds circuit depth " +
                                    std::to_string(c.depth()));
    }
    return static_cast<std::size_t>(time);
}

void write_rows_csv(const std::string& path, const Rows& rows) {
    if (path.empty()) return;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    write_key_value_csv(f, rows);
}

void print_rows(std::ostream& out, const Rows& rows) {
    for (const auto& [k, v] : rows) out << k << " = " << v << "\n";
}

int cmd_run(const Options& o, std::ostream& out) {
    const Circuit c = load_circuit(o.circuit);
    const ParamEnv env = parse_params(o.params);
    const std::size_t t = resolve_time(o.time, c);
    const Backend backend = parse_backend(o.backend);
    out << "circuit: " << c.num_qubits() << " qubits, " << c.depth() << " steps; reporting t = " << t << " ("
        << o.backend << " backend)\n";
    Rows rows;
    std::vector<NetworkState> trajectory;
    std::optional<DenseEvolution> dense;
    if (backend == Backend::Dense) {
        dense.emplace(c.num_qubits());
        for (std::size_t i = 0; i < t; ++i) dense->apply_step(c.steps()[i], env);
    } else {
        const NetworkState s0 = init_network(c.num_qubits());
        trajectory.push_back(s0);
        for (std::size_t i = 0; i < t; ++i) trajectory.push_back(apply_step(trajectory.back(), c.steps()[i], env));
    }
    for (std::size_t a = 1; a <= c.num_qubits(); ++a) {
        const BlochVector b = dense ? dense->bloch_vector(a) : bloch_vector(trajectory.back(), a);
        const double p = dense ? dense->outcome_probability(a) : outcome_probability(trajectory.back(), a);
        out << "Q" << a << ": <q> = (" << format_real(b.x) << ", " << format_real(b.y) << ", " << format_real(b.z)
            << ")  P(1) = " << format_real(p) << "\n";
        const std::string q = "q" + std::to_string(a);
        rows.emplace_back(q + ".x", format_real(b.x));
        rows.emplace_back(q + ".y", format_real(b.y));
        rows.emplace_back(q + ".z", format_real(b.z));
        rows.emplace_back(q + ".prob1", format_real(p));
    }
    if (!o.csv.empty()) {
        if (dense) {
            write_rows_csv(o.csv, rows);
        } else {
            std::ofstream f(o.csv, std::ios::binary);
            if (!f) throw std::runtime_error("cannot write '" + o.csv + "'");
            write_descriptor_csv(f, trajectory);
        }
    }
    return 0;
}

int cmd_infoflow(const Options& o, std::ostream& out) {
    const Circuit c = load_circuit(o.circuit);
    const ParamEnv base = parse_params(o.params);
    const std::size_t t = resolve_time(o.time, c);
    ParameterProbe probe;
    probe.param = o.probe;
    probe.tol = o.tol;
    if (o.samples) probe.samples = ParameterProbe::spread_samples(o.samples);
    std::vector<std::vector<std::size_t>> subsets;
    for (const auto& s : o.subsets) subsets.push_back(parse_subset(s));
    const InfoFlowReport report = info_flow_report(c, base, probe, t, subsets);
    out << "information about '" << report.param << "' at t = " << report.time << "\n";
    Rows rows{{"param", report.param}, {"time", std::to_string(report.time)}};
    for (std::size_t a = 1; a <= report.qubits.size(); ++a) {
        const char* name = info_class_name(report.of(a));
        out << "  Q" << a << ": " << name << "\n";
        rows.emplace_back("q" + std::to_string(a), name);
    }
    for (const auto& s : report.subsets) {
        out << "  {" << subset_text(s.subset, ",") << "}: " << (s.accessible ? "accessible" : "not accessible") << "\n";
        rows.emplace_back("subset." + subset_text(s.subset, "+"), s.accessible ? "accessible" : "inaccessible");
    }
    write_rows_csv(o.csv, rows);
    return 0;
}

int cmd_epr(const Options& o, std::ostream& out) {
    const EprResult r = run_epr(o.theta, o.phi, parse_backend(o.backend));
    const Rows rows{{"theta", format_real(r.theta)},
                    {"phi", format_real(r.phi)},
                    {"backend", o.backend},
                    {"prob_different", format_real(r.prob_different)}};
    print_rows(out, rows);
    write_rows_csv(o.csv, rows);
    return 0;
}

int cmd_teleport(const Options& o, std::ostream& out) {
    const TeleportResult r = run_teleportation(o.theta, parse_backend(o.backend));
    const Rows rows{{"theta", format_real(r.theta)},          {"backend", o.backend},
                    {"bloch_x", format_real(r.bloch_q5.x)},   {"bloch_y", format_real(r.bloch_q5.y)},
                    {"bloch_z", format_real(r.bloch_q5.z)},   {"purity_q5", format_real(r.purity_q5)},
                    {"verify_prob", format_real(r.verify_prob)}};
    print_rows(out, rows);
    write_rows_csv(o.csv, rows);
    return 0;
}

int cmd_bell(const Options& o, std::ostream& out) {
    const std::size_t k = o.samples ? o.samples : 8;
    std::vector<double> grid;
    for (std::size_t i = 0; i < k; ++i) grid.push_back(2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(k));
    const BellCheckResult r = run_bell_check(grid);
    Rows rows;
    double worst_marginal = 0;
    out << "theta,phi,P(a=1),P(b=1),P(a=1,b=1)\n";
    for (std::size_t i = 0; i < r.grid.size(); ++i) {
        const auto& p = r.grid[i];
        worst_marginal = std::max({worst_marginal, std::abs(p.marginal_a - 0.5), std::abs(p.marginal_b - 0.5)});
        out << format_real(p.theta) << "," << format_real(p.phi) << "," << format_real(p.marginal_a) << ","
            << format_real(p.marginal_b) << "," << format_real(p.correlation) << "\n";
        const std::string key = "grid." + std::to_string(i / k) + "." + std::to_string(i % k);
        rows.emplace_back(key + ".theta", format_real(p.theta));
        rows.emplace_back(key + ".phi", format_real(p.phi));
        rows.emplace_back(key + ".correlation", format_real(p.correlation));
    }
    out << "worst |marginal - 1/2| = " << format_real(worst_marginal) << "\n";
    out << "same-angle relation: " << (r.same_outcomes ? "b = a" : "b = 1 - a") << "\n";
    const char* names[3] = {"01", "02", "12"};
    for (std::size_t i = 0; i < 3; ++i) {
        out << "a(theta_" << names[i][0] << ") a(theta_" << names[i][1] << ") = " << format_real(r.pair_values[i]) << "\n";
        rows.emplace_back(std::string("pair.") + names[i], format_real(r.pair_values[i]));
    }
    out << "hidden-variable model: " << r.lhv.text << "\n";
    rows.emplace_back("worst_marginal_deviation", format_real(worst_marginal));
    rows.emplace_back("lhv_feasible", r.lhv.feasible ? "true" : "false");
    write_rows_csv(o.csv, rows);
    return 0;
}

int cmd_xor(const Options& o, std::ostream& out) {
    const XorResult r = xor_demo(o.x, o.r);
    out << "x         = " << o.x << "\n"
        << "key r     = " << o.r << "\n"
        << "y = x^r   = " << r.y << "  (cyphertext)\n"
        << "y^r       = " << r.recovered << "\n";
    write_rows_csv(o.csv, {{"x", o.x}, {"r", o.r}, {"y", r.y}, {"recovered", r.recovered}});
    return 0;
}

int cmd_ambiguity(const Options& o, std::ostream& out) {
    const AmbiguityResult r = ambiguity_demo(o.theta);
    const Rows rows{{"theta", format_real(o.theta)},
                    {"states_match", r.states_match ? "true" : "false"},
                    {"overlap", format_real(r.overlap)},
                    {"descriptor_gap", format_real(r.descriptor_gap)}};
    print_rows(out, rows);
    write_rows_csv(o.csv, rows);
    return 0;
}

int cmd_selfcheck(const Options& o, std::ostream& out) {
    const std::size_t count = o.samples ? o.samples : 100;
    const SelfcheckReport r = selfcheck(count, o.seed);
    double fixtures = 0;
    for (double theta : {0.3, 1.1, 2.5, 4.0}) {
        fixtures = std::max(fixtures, cross_check(epr_circuit(), ParamEnv{{"theta", theta}, {"phi", 0.6}}));
        fixtures = std::max(fixtures, cross_check(teleport_circuit(), ParamEnv{{"theta", theta}}));
        fixtures = std::max(fixtures, std::abs(run_epr(theta, 0.6).prob_different -
                                               run_epr(theta, 0.6, Backend::Dense).prob_different));
    }
    const bool ok = r.worst.algebra <= o.tol && r.worst.backend <= o.tol && r.worst.pictures <= o.tol &&
                    r.worst.locality_violations == 0 && fixtures <= o.tol;
    const Rows rows{{"random_circuits", std::to_string(r.circuits)},
                    {"algebra_defect", format_real(r.worst.algebra)},
                    {"backend_difference", format_real(r.worst.backend)},
                    {"picture_difference", format_real(r.worst.pictures)},
                    {"locality_violations", std::to_string(r.worst.locality_violations)},
                    {"fixture_difference", format_real(fixtures)},
                    {"ok", ok ? "true" : "false"}};
    print_rows(out, rows);
    write_rows_csv(o.csv, rows);
    return ok ? 0 : 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Heisenberg-picture simulator for qubit networks", "hflow"};
    app.require_subcommand(1);
    Options o;

    auto add_backend = [&](CLI::App* s) {
        s->add_option("--backend", o.backend, "pauli or dense")->check(CLI::IsMember({"pauli", "dense"}));
    };
    auto add_csv = [&](CLI::App* s) { s->add_option("--csv", o.csv, "write results as CSV"); };

    auto* run = app.add_subcommand("run", "evolve a circuit file and report every qubit");
    run->add_option("--circuit", o.circuit, "circuit file")->required();
    run->add_option("--param", o.params, "NAME=VALUE, repeatable");
    run->add_option("--time", o.time, "report time (default: end of circuit)");
    add_backend(run);
    add_csv(run);

    auto* info = app.add_subcommand("infoflow", "locate information about a parameter");
    info->add_option("--circuit", o.circuit, "circuit file")->required();
    info->add_option("--probe", o.probe, "parameter to trace")->required();
    info->add_option("--param", o.params, "NAME=VALUE for the other parameters, repeatable");
    info->add_option("--time", o.time, "time step (default: end of circuit)");
    info->add_option("--samples", o.samples, "number of probe values (default: 4 fixed generic angles)");
    info->add_option("--tol", o.tol, "difference threshold");
    info->add_option("--subset", o.subsets, "qubit set a,b,c to test for local accessibility, repeatable");
    add_csv(info);

    auto* epr = app.add_subcommand("epr", "entangled-pair correlation experiment");
    epr->add_option("--theta", o.theta, "rotation of qubit 2")->required();
    epr->add_option("--phi", o.phi, "rotation of qubit 3")->required();
    add_backend(epr);
    add_csv(epr);

    auto* tele = app.add_subcommand("teleport", "teleport rx(theta)|0> from qubit 1 to qubit 5");
    tele->add_option("--theta", o.theta, "preparation angle")->required();
    add_backend(tele);
    add_csv(tele);

    auto* bell = app.add_subcommand("bell", "correlation grid and hidden-variable feasibility");
    bell->add_option("--samples", o.samples, "grid points per angle (default 8)");
    add_csv(bell);

    auto* xr = app.add_subcommand("xor-demo", "classical one-time pad analogue");
    xr->add_option("--x", o.x, "plaintext bits")->required();
    xr->add_option("--r", o.r, "key bits")->required();
    add_csv(xr);

    auto* amb = app.add_subcommand("ambiguity-demo", "same state vector, different descriptors");
    o.theta = 1.0;
    amb->add_option("--theta", o.theta, "rotation angle (default 1.0)");
    add_csv(amb);

    auto* self = app.add_subcommand("selfcheck", "random-circuit algebra, backend and picture checks");
    self->add_option("--samples", o.samples, "number of random circuits (default 100)");
    self->add_option("--seed", o.seed, "random seed");
    self->add_option("--tol", o.tol, "pass threshold");
    add_csv(self);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*run) return cmd_run(o, out);
        if (*info) return cmd_infoflow(o, out);
        if (*epr) return cmd_epr(o, out);
        if (*tele) return cmd_teleport(o, out);
        if (*bell) return cmd_bell(o, out);
        if (*xr) return cmd_xor(o, out);
        if (*amb) return cmd_ambiguity(o, out);
        if (*self) return cmd_selfcheck(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace hflow
