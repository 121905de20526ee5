// Copyright 2026 The hyperorbits Authors
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

#ifndef HYPERORBITS_TESTS_TEMPLATES_HPP
#define HYPERORBITS_TESTS_TEMPLATES_HPP

// The explicit pairs for the point (0, 1, c), transcribed by hand for
// n = 2, 4, 6. Entries: "0", "1", "-1", "c", "fK", "-fK".

#include <string>
#include <vector>

#include "hyperorbits/orbits.hpp"

namespace oracle {

using SymbolicMatrix = std::vector<std::vector<std::string>>;

struct PrintedTemplate {
  int n;
  SymbolicMatrix A;
  SymbolicMatrix B;
};

inline std::vector<PrintedTemplate> printed_templates() {
  return {
      {2,
       {{"-1", "0"}, {"0", "f0"}},
       {{"0", "c"}, {"c", "-f1"}}},
      {4,
       {{"-1", "0", "0", "0"}, {"0", "0", "0", "1"}, {"0", "0", "f0", "f1"}, {"0", "1", "f1", "f2"}},
       {{"0", "0", "0", "c"}, {"0", "0", "1", "0"}, {"0", "1", "f1", "0"}, {"c", "0", "0", "-f3"}}},
      {6,
       {{"-1", "0", "0", "0", "0", "0"},
        {"0", "0", "0", "0", "0", "1"},
        {"0", "0", "0", "0", "1", "0"},
        {"0", "0", "0", "f0", "f1", "f2"},
        {"0", "0", "1", "f1", "f2", "f3"},
        {"0", "1", "0", "f2", "f3", "f4"}},
       {{"0", "0", "0", "0", "0", "c"},
        {"0", "0", "0", "0", "1", "0"},
        {"0", "0", "0", "1", "0", "0"},
        {"0", "0", "1", "f1", "f2", "0"},
        {"0", "1", "0", "f2", "f3", "0"},
        {"c", "0", "0", "0", "0", "-f5"}}},
  };
}

inline std::string symbol(const hyperorbits::TemplateEntry& e) {
  using Kind = hyperorbits::TemplateEntry::Kind;
  switch (e.kind) {
    case Kind::Zero: return "0";
    case Kind::One: return "1";
    case Kind::MinusOne: return "-1";
    case Kind::C: return "c";
    case Kind::F: return "f" + std::to_string(e.index);
    case Kind::MinusF: return "-f" + std::to_string(e.index);
  }
  return "?";
}

inline SymbolicMatrix symbolic(const std::vector<std::vector<hyperorbits::TemplateEntry>>& m) {
  SymbolicMatrix out;
  for (const auto& row : m) {
    std::vector<std::string> r;
    for (const auto& e : row) r.push_back(symbol(e));
    out.push_back(r);
  }
  return out;
}

}  // namespace oracle

#endif  // HYPERORBITS_TESTS_TEMPLATES_HPP
