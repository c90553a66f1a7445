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

// Reader for the line-oriented circuit text format:
//
//   # comment
//   qubits 4
//   params theta phi
//   step: bellinv 2 3
//   step: rx(theta) 2 ; rx(phi) 3
//
// Angle expressions are products and quotients of numbers, `pi` and at
// most one declared parameter, with optional leading minus signs.

#ifndef HFLOW_PARSER_HPP
#define HFLOW_PARSER_HPP

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hflow/gates.hpp"

namespace hflow {

/// Syntax or semantic error, tagged with the 1-based source line (0 when the
/// problem is not tied to a line, e.g. a missing header).
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

Circuit parse_circuit(std::istream& in);
Circuit parse_circuit_text(std::string_view text);
/// Throws std::runtime_error when the file cannot be opened.
Circuit load_circuit(const std::string& path);

/// Parses one angle expression. Parameter names are not checked against a
/// declaration list here.
AngleExpr parse_angle(std::string_view text);

}  // namespace hflow

#endif  // HFLOW_PARSER_HPP
