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

#ifndef HYPERORBITS_FP_POLY_HPP
#define HYPERORBITS_FP_POLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hyperorbits/integer.hpp"
#include "hyperorbits/rng.hpp"

namespace hyperorbits {

/// Arithmetic in F_p for a prime p < 2^62.
struct PrimeField {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;
  /// Euler criterion; 0 counts as a square.
  bool is_square(std::uint64_t a) const;
};

/// Polynomial over F_p, constant term first, no trailing zeros.
using FpPoly = std::vector<std::uint64_t>;

void fp_trim(FpPoly& a);
inline int fp_degree(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

FpPoly fp_add(const PrimeField& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const PrimeField& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const PrimeField& F, const FpPoly& a, const FpPoly& b);
void fp_divmod(const PrimeField& F, const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r);
FpPoly fp_mod(const PrimeField& F, const FpPoly& a, const FpPoly& m);
FpPoly fp_monic(const PrimeField& F, const FpPoly& a);
FpPoly fp_gcd(const PrimeField& F, FpPoly a, FpPoly b);
FpPoly fp_derivative(const PrimeField& F, const FpPoly& a);
/// base^e mod m.
FpPoly fp_powmod(const PrimeField& F, const FpPoly& base, const Integer& e, const FpPoly& m);

/// Reduction of integer coefficients (constant term first).
FpPoly fp_reduce(const PrimeField& F, const std::vector<Integer>& a);

/// Square-free decomposition of a monic polynomial: pairs (g_i, i) with
/// a = prod g_i^i, each g_i square-free and pairwise coprime.
std::vector<std::pair<FpPoly, int>> squarefree_decomposition(const PrimeField& F, const FpPoly& a);

/// Distinct-degree factorization of a monic square-free polynomial: pairs
/// (h_d, d) with h_d the product of the irreducible factors of degree d.
std::vector<std::pair<FpPoly, int>> distinct_degree(const PrimeField& F, const FpPoly& a);

/// Splits a monic square-free product of degree-d irreducibles (Cantor-
/// Zassenhaus; trace map in characteristic 2).
std::vector<FpPoly> equal_degree(const PrimeField& F, const FpPoly& a, int d, Rng& rng);

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by (degree, coefficients).
std::vector<std::pair<FpPoly, int>> fp_factor(const PrimeField& F, const FpPoly& a,
                                              std::uint64_t seed = 0);

/// Degrees and multiplicities of the irreducible factors, without splitting
/// equal-degree parts.
std::vector<std::pair<int, int>> fp_factor_degrees(const PrimeField& F, const FpPoly& a);

}  // namespace hyperorbits

#endif  // HYPERORBITS_FP_POLY_HPP
