/* Copyright 2026 The Weilv Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// JSON input and output. Varieties are read from a small structured
// format; every result the command line emits is serialized here with a
// stable field order and arbitrary-precision integers as decimal strings,
// so reports are byte-identical across runs.

#ifndef WEILV_IO_HPP_
#define WEILV_IO_HPP_

#include <optional>
#include <string>

#include "weilv/charsum.hpp"
#include "weilv/counting.hpp"
#include "weilv/report.hpp"

namespace weilv {

// Parses a variety description:
//   {
//     "label": "my-curve",
//     "p": 5,              // characteristic
//     "a": 1,              // base field degree (optional, defaults to 1)
//     "ambient": {"kind": "projective" | "affine", "dim": 2},
//     "equations": [       // one entry per equation
//       [                  // one entry per term: [[exponents...], coeff]
//         [[0, 3, 0], 1],
//         [[3, 0, 0], -1]
//       ]
//     ]
//   }
// A coefficient is an integer (reduced into F_p, negatives allowed) or,
// for extension base fields, an array of integers: the coordinates in
// the canonical basis, constant term first. Malformed input raises
// UsageError whose message starts with "<source>: <location>:", where
// the location is a byte offset (syntax) or a JSON pointer (structure).
VarietySpec parse_variety(const std::string& json_text,
                          const std::string& source_name = "<input>");

// parse_variety on the contents of a file; I/O failures are UsageError.
VarietySpec load_variety(const std::string& path);

// Everything a report needs to echo about the run that produced it.
struct RunEcho {
  std::string command;
  std::string input_path;  // empty when the command took no input file
  std::optional<int> depth;
  std::optional<int> num_degree;
  std::optional<int> den_degree;
  std::optional<double> tol;
  std::uint64_t budget = kDefaultBudget;
  std::optional<int> threads;
  std::optional<bool> assume_smooth;
  std::optional<int> limit;    // tau
  std::optional<int> vars;     // kloosterman
  std::optional<std::string> field;  // "p^a" for charsum commands
  std::optional<std::string> shift;  // kloosterman shift, decimal
};

// The pipeline report (count/zeta/weil stages; unfilled stages are
// omitted), as a deterministic JSON document ending in a newline.
std::string report_json(const RunEcho& echo, const WeilReport& report);

// Character-sum results in the same envelope, under a "charsum" key.
std::string charsum_json(const RunEcho& echo, const std::string& kind,
                         const CharacterSumResult& result);
std::string tau_json(const RunEcho& echo, const TauReport& report);

}  // namespace weilv

#endif  // WEILV_IO_HPP_
