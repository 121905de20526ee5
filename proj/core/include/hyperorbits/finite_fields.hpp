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

#ifndef HYPERORBITS_FINITE_FIELDS_HPP
#define HYPERORBITS_FINITE_FIELDS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hyperorbits/forms.hpp"
#include "hyperorbits/integer.hpp"

namespace hyperorbits {

/// p^(n(n-1)/2) prod_{k=2}^{n} (p^k - 1).
Integer sl_n_order(int n, std::uint64_t p);

struct OrbitStats {
  std::uint64_t p = 0;
  int n = 0;
  std::vector<std::uint64_t> form;  // f mod p, coefficients in [0, p)
  Integer total_elements = 0;
  Integer group_order = 0;                  // #SL_n^+-(F_p)
  std::optional<int> orbit_count;           // n = 2 only when enumerated
  std::vector<Integer> stabilizer_sizes;    // one per orbit, sorted
  std::optional<int> square_point_count;    // p odd
  bool enumerated = false;
};

/// Largest p^(n(n+1)) the exhaustive enumeration accepts.
constexpr std::uint64_t kPairEnumerationBudget = std::uint64_t{1} << 21;

/// Number of pairs over F_p with each invariant form (keys are reduced
/// coefficient vectors). Cached per (n, p); throws BudgetExceeded beyond
/// kPairEnumerationBudget.
const std::map<std::vector<std::uint64_t>, std::uint64_t>& pair_form_histogram(int n, std::uint64_t p,
                                                                                int jobs = 1);

/// Exhaustive count of pairs (A, B) over F_p with invariant form f mod p.
/// For n = 2 also decomposes them into SL_2^+-(F_p)-orbits and enumerates one
/// stabilizer per orbit.
OrbitStats count_pairs_with_form(const BinaryForm& f, std::uint64_t p, int jobs = 1);

/// Points (a : b) of P^1(F_p) with f(a, b) a square (0 included); p odd.
int square_value_count(const BinaryForm& f, std::uint64_t p);

/// Predicted statistics for f separable mod p: 2^(m-1) orbits with
/// stabilizers of order 2^m for p odd, one orbit with trivial stabilizer
/// for p = 2, and #SL_n(F_p) elements in total.
OrbitStats orbit_statistics_prediction(const BinaryForm& f, std::uint64_t p);

/// Invariant form of a pair over F_p, (-1)^(n/2) det(A x - B y) mod p, from
/// symmetric matrices given row-major with entries in [0, p).
std::vector<std::uint64_t> invariant_form_mod_p(const std::vector<std::uint64_t>& A,
                                                const std::vector<std::uint64_t>& B, int n, std::uint64_t p);

}  // namespace hyperorbits

#endif  // HYPERORBITS_FINITE_FIELDS_HPP
