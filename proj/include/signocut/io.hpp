// Copyright 2026 The signocut Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Instance text format, random instances, and structured reports.
//
// Instances are line oriented; '#' starts a comment. Header lines come
// first, then indexed entries in any order:
//
//   format signocut 1
//   n 2
//   k 1
//   m 1
//   objective -1 0
//   bound 0 0 2          # var lower upper
//   term 0 0:2 1:-1      # term var:exponent ...
//   A 0 0 1              # row col value
//   B 0 0 1              # row term value
//   rhs 0 1              # row value

#ifndef SIGNOCUT_IO_HPP_
#define SIGNOCUT_IO_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "signocut/model.hpp"
#include "signocut/sbb.hpp"

namespace signocut {

// Throws kParse with "<source>:<line>: ..." naming the offending field.
SignomialProgram parse_program(std::string_view text, std::string_view source = "<string>");
SignomialProgram read_program(const std::string& path);

// Numbers are written with 17 significant digits, so parsing the output
// reproduces the program exactly.
std::string serialize_program(const SignomialProgram& program);
void write_program(const std::string& path, const SignomialProgram& program);

struct GeneratorOptions {
  std::uint64_t seed = 0;
  int n = 3;
  int k = 3;
  int max_degree = 3;
  double density = 0.67;  // fraction of variables in each term's support
};

// Deterministic in the options. Every row is satisfied with slack at an
// interior construction point.
SignomialProgram generate_program(const GeneratorOptions& options);

inline constexpr int kReportSchemaVersion = 1;

std::string report_to_json(const SolveReport& report, int indent = 2);

std::string separation_to_json(const SeparationResult& result, std::span<const double> z,
                               int indent = 2);

// exp(mean(ln(x_i + shift))) - shift. Throws kInvalidArgument on an empty
// input or when some x_i + shift <= 0.
double shifted_geometric_mean(std::span<const double> values, double shift);

}  // namespace signocut

#endif  // SIGNOCUT_IO_HPP_
