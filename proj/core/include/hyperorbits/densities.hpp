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

#ifndef HYPERORBITS_DENSITIES_HPP
#define HYPERORBITS_DENSITIES_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "hyperorbits/integer.hpp"

namespace hyperorbits {

/// Monte Carlo classification of random real polynomials by their number 2m
/// of real roots. Coefficients are odd multiples of 2^-(b+1) in (-1/2, 1/2).
struct MuRealEstimate {
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> counts;  // index m = 0 .. n/2

  double estimate(int m) const;
  double stderr_of(int m) const;
};

/// Coefficient resolution b used by mu_real.
constexpr int kMuRealBits = 20;

/// Samples are drawn in fixed blocks with independent streams, so the result
/// does not depend on `jobs`.
MuRealEstimate mu_real(int n, std::uint64_t samples, std::uint64_t seed, int jobs = 1);

/// Exact distribution of the number m of distinct irreducible factors of a
/// random binary n-ic form over F_p (index m = 0 .. n); the zero form has no
/// type, so the entries sum to 1 - p^-(n+1). Computed from the generating
/// function of effective divisors on P^1.
std::vector<Rational> mu_p_distribution(int n, std::uint64_t p);
/// The same by enumerating all p^(n+1) forms; throws BudgetExceeded beyond
/// 7^7 forms.
std::vector<Rational> mu_p_enumerated(int n, std::uint64_t p);
Rational mu_p(int n, int m, std::uint64_t p);

/// Distribution for forms over Z/8 typed by their reduction mod 2. Each form
/// mod 2 has exactly 4^(n+1) lifts, so this equals mu_p_distribution(n, 2).
std::vector<Rational> mu_8_distribution(int n);
/// Direct enumeration of all 8^(n+1) forms; throws BudgetExceeded for n > 4.
std::vector<Rational> mu_8_enumerated(int n);
Rational mu_8(int n, int m);

/// Number of forms over F_p that are irreducible of degree n, by enumeration.
Integer irreducible_form_count(int n, std::uint64_t p);

struct ArchimedeanFactor {
  int g = 0;
  /// sum_m max{1, 2m} / 2^m mu(I(m)); exactly 1 for g <= 1.
  double normalized = 0;
  double normalized_stderr = 0;
  /// 2^g times the normalized sum.
  double scaled = 0;
  double scaled_stderr = 0;
  bool exact = false;
  std::uint64_t samples = 0;
  std::vector<double> mu;         // mu(I(m)) estimates
  std::vector<double> mu_stderr;
};

ArchimedeanFactor archimedean_factor(int g, std::uint64_t samples, std::uint64_t seed, int jobs = 1);

/// sum_m min{1, 12 / 2^(n+m-1)} mu(I_8(m)).
Rational two_adic_factor(int n);
/// sum_m min{1, (p+1) / 2^(m-1)} mu(I_p(m)).
Rational finite_factor(int n, std::uint64_t p);

struct DensityReport {
  int g = 0;
  int n = 0;
  std::uint64_t truncation_prime = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  ArchimedeanFactor archimedean;
  /// (1/2) 2^(n/2) sum_m max{1,2m}/2^(m-1) mu(I(m)) and its standard error.
  double archimedean_term = 0;
  double archimedean_term_stderr = 0;
  double two_adic = 0;
  std::map<std::uint64_t, double> finite;  // odd primes <= truncation prime
  double finite_product = 0;
  double bound = 0;
  /// Bound with the archimedean term raised by three standard errors.
  double bound_conservative = 0;
};

DensityReport density_bound(int g, std::uint64_t P, std::uint64_t samples, std::uint64_t seed, int jobs = 1);

/// prod over odd primes p <= P of (1 - (p-1)^2 / (2 p^2)).
Rational genus0_product(std::uint64_t P);

/// |zeta(2)...zeta(n) prod_{p<=P} #SL_n(F_p)/p^(n^2-1) - 1|.
long double zeta_identity_gap(int n, std::uint64_t P);

}  // namespace hyperorbits

#endif  // HYPERORBITS_DENSITIES_HPP
