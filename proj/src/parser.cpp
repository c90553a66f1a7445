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

#include "hflow/parser.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

namespace hflow {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

std::vector<std::string_view> words(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

std::optional<double> parse_number(std::string_view s) {
    if (s.empty()) return std::nullopt;
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::size_t parse_index(std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::invalid_argument("expected a qubit index, got '" + std::string(s) + "'");
    }
    return v;
}

// "name(args)" -> (name, args); args empty when there are no parentheses.
std::pair<std::string_view, std::optional<std::string_view>> split_call(std::string_view head) {
    const auto open = head.find('(');
    if (open == std::string_view::npos) return {head, std::nullopt};
    if (head.back() != ')') throw std::invalid_argument("unbalanced parentheses in '" + std::string(head) + "'");
    return {head.substr(0, open), head.substr(open + 1, head.size() - open - 2)};
}

GateApplication parse_gate(std::string_view text) {
    // The head may contain spaces inside its parentheses, e.g. "rx(2 * pi) 1".
    std::string_view head;
    std::string_view rest;
    const auto open = text.find('(');
    const auto space = text.find_first_of(" \t");
    if (open != std::string_view::npos && (space == std::string_view::npos || open < space)) {
        const auto close = text.find(')', open);
        if (close == std::string_view::npos) throw std::invalid_argument("missing ')'");
        head = text.substr(0, close + 1);
        rest = text.substr(close + 1);
    } else {
        head = text.substr(0, space);
        rest = space == std::string_view::npos ? std::string_view{} : text.substr(space);
    }
    auto [name, args] = split_call(trim(head));
    const auto operands = words(rest);
    auto want = [&](std::size_t count) {
        if (operands.size() != count) {
            throw std::invalid_argument(std::string(name) + ": expected " + std::to_string(count) +
                                        " qubit operand(s), got " + std::to_string(operands.size()));
        }
    };
    auto no_args = [&] {
        if (args) throw std::invalid_argument(std::string(name) + " takes no angle");
    };
    auto angle = [&]() -> AngleExpr {
        if (!args) throw std::invalid_argument(std::string(name) + " needs an angle, e.g. " + std::string(name) + "(theta)");
        return parse_angle(*args);
    };
    auto q = [&](std::size_t i) { return parse_index(operands[i]); };

    if (name == "id") return no_args(), want(1), GateApplication(gate::Id{q(0)});
    if (name == "not") return no_args(), want(1), GateApplication(gate::Not{q(0)});
    if (name == "sqrtnot") return no_args(), want(1), GateApplication(gate::SqrtNot{q(0)});
    if (name == "h") return no_args(), want(1), GateApplication(gate::H{q(0)});
    if (name == "rx") return want(1), GateApplication(gate::Rx{q(0), angle()});
    if (name == "ry") return want(1), GateApplication(gate::Ry{q(0), angle()});
    if (name == "rz") return want(1), GateApplication(gate::Rz{q(0), angle()});
    if (name == "bell") return no_args(), want(2), GateApplication(gate::Bell{q(0), q(1)});
    if (name == "bellinv") return no_args(), want(2), GateApplication(gate::BellInv{q(0), q(1)});
    if (name == "t3") return no_args(), want(3), GateApplication(gate::T3{q(0), q(1), q(2)});
    if (name == "rn") {
        if (!args) throw std::invalid_argument("rn needs (nx,ny,nz,angle)");
        const auto parts = split(*args, ',');
        if (parts.size() != 4) throw std::invalid_argument("rn needs exactly four arguments (nx,ny,nz,angle)");
        double axis[3];
        for (std::size_t i = 0; i < 3; ++i) {
            const AngleExpr e = parse_angle(parts[i]);
            if (e.param) throw std::invalid_argument("rn axis components must be constants");
            axis[i] = e.scale;
        }
        want(1);
        return GateApplication(gate::Rn{q(0), {axis[0], axis[1], axis[2]}, parse_angle(parts[3])});
    }
    if (name == "cnot") {
        no_args();
        want(2);
        std::optional<std::size_t> t, c;
        for (auto op : operands) {
            if (op.starts_with("t=") && !t) {
                t = parse_index(op.substr(2));
            } else if (op.starts_with("c=") && !c) {
                c = parse_index(op.substr(2));
            } else {
                throw std::invalid_argument("cnot operands are t=Q c=Q, got '" + std::string(op) + "'");
            }
        }
        return GateApplication(gate::Cnot{*t, *c});
    }
    throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

AngleExpr parse_angle(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("empty angle expression");
    double scale = 1.0;
    std::optional<std::string> param;
    // Split into factors at '*' and '/', remembering which operator preceded each.
    std::size_t i = 0;
    char op = '*';
    while (true) {
        std::size_t j = i;
        // A factor may start with signs; a sign right after an exponent marker belongs to the number.
        while (j < text.size() && text[j] != '*' && text[j] != '/') ++j;
        std::string_view factor = trim(text.substr(i, j - i));
        double sign = 1.0;
        while (!factor.empty() && (factor.front() == '-' || factor.front() == '+')) {
            if (factor.front() == '-') sign = -sign;
            factor = trim(factor.substr(1));
        }
        double value = 0;
        if (factor.empty()) {
            throw std::invalid_argument("malformed angle expression '" + std::string(text) + "'");
        } else if (factor == "pi") {
            value = std::numbers::pi;
        } else if (auto number = parse_number(factor)) {
            value = *number;
        } else if (is_identifier(factor)) {
            if (param) throw std::invalid_argument("angle expression may reference at most one parameter");
            if (op == '/') throw std::invalid_argument("cannot divide by a parameter");
            param = std::string(factor);
            value = 1.0;
        } else {
            throw std::invalid_argument("bad factor '" + std::string(factor) + "' in angle expression");
        }
        value *= sign;
        if (op == '*') {
            scale *= value;
        } else {
            if (value == 0.0) throw std::invalid_argument("division by zero in angle expression");
            scale /= value;
        }
        if (j == text.size()) break;
        op = text[j];
        i = j + 1;
    }
    return {scale, param};
}

Circuit parse_circuit(std::istream& in) {
    std::optional<Circuit> circuit;
    std::optional<std::size_t> qubits;
    std::vector<std::string> params;
    bool params_seen = false;
    std::string raw;
    std::size_t line_no = 0;

    auto ensure_circuit = [&](std::size_t line) -> Circuit& {
        if (!circuit) {
            if (!qubits) throw ParseError(line, "'qubits N' header must come before the first step");
            try {
                circuit.emplace(*qubits, params);
            } catch (const CircuitError& e) {
                throw ParseError(line, e.what());
            }
        }
        return *circuit;
    };

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.starts_with("step:")) {
            Circuit& c = ensure_circuit(line_no);
            Step step;
            const auto body = trim(line.substr(5));
            if (!body.empty()) {
                for (auto part : split(body, ';')) {
                    part = trim(part);
                    if (part.empty()) throw ParseError(line_no, "empty gate between ';' separators");
                    try {
                        step.gates.push_back(parse_gate(part));
                    } catch (const std::invalid_argument& e) {
                        throw ParseError(line_no, e.what());
                    }
                }
            }
            try {
                c.add_step(std::move(step));
            } catch (const CircuitError& e) {
                throw ParseError(line_no, e.what());
            }
            continue;
        }

        const auto tokens = words(line);
        if (tokens[0] == "qubits") {
            if (qubits) throw ParseError(line_no, "duplicate 'qubits' header");
            if (tokens.size() != 2) throw ParseError(line_no, "expected 'qubits N'");
            try {
                qubits = parse_index(tokens[1]);
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, e.what());
            }
            if (*qubits < 1 || *qubits > kMaxQubits) {
                throw ParseError(line_no, "qubit count must be in [1, " + std::to_string(kMaxQubits) + "]");
            }
        } else if (tokens[0] == "params") {
            if (params_seen) throw ParseError(line_no, "duplicate 'params' line");
            if (circuit) throw ParseError(line_no, "'params' must come before the first step");
            params_seen = true;
            for (std::size_t k = 1; k < tokens.size(); ++k) params.emplace_back(tokens[k]);
        } else {
            throw ParseError(line_no, "unrecognized line '" + std::string(line) + "'");
        }
    }
    if (!qubits) throw ParseError(0, "missing 'qubits N' header");
    return std::move(ensure_circuit(line_no));
}

Circuit parse_circuit_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_circuit(in);
}

Circuit load_circuit(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open circuit file '" + path + "'");
    return parse_circuit(in);
}

}  // namespace hflow
