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


// Command-line front end. Kept in the library so tests can drive it with
// captured streams.

#ifndef HFLOW_CLI_HPP
#define HFLOW_CLI_HPP

#include <ostream>

namespace hflow {

/// Runs one subcommand. Returns the process exit status: 0 on success, 1 on
/// invalid input or a failed check, and CLI11's usage status for bad flags.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hflow

#endif  // HFLOW_CLI_HPP
