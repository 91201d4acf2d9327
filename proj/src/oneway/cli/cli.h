// Copyright 2026 The Oneway Authors
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

#ifndef ONEWAY_CLI_CLI_H
#define ONEWAY_CLI_CLI_H

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oneway/qsim/circuit.h"

namespace oneway {

/// Malformed circuit text. The message starts with "line <n>: ".
struct CircuitParseError : std::invalid_argument {
    CircuitParseError(size_t line, const std::string &message)
        : std::invalid_argument("line " + std::to_string(line) + ": " + message), line(line) {
    }
    size_t line;
};

/// Parses the circuit text format:
///
///     wires <n>
///     prep <wire> <re(alpha)> <im(alpha)> <re(beta)> <im(beta)>
///     rot <wire> <xi> <eta> <zeta>
///     cnot <control> <target>
///
/// one instruction per line, '#' starting a comment. `wires` must come first; wires without a
/// prep line start in |+>.
LogicalCircuit parse_circuit(std::string_view text);

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
};

/// Runs one command line (without the program name). Results go to `out`, diagnostics and
/// traces to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace oneway

#endif
