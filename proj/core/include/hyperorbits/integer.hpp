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

#ifndef HYPERORBITS_INTEGER_HPP
#define HYPERORBITS_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hyperorbits {

using Integer = mpz_class;
using Rational = mpq_class;

Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

/// Exact perfect-square test; negative numbers are never squares.
bool is_square(const Integer& v, Integer* root = nullptr);

/// p-adic valuation of a nonzero integer.
int valuation(const Integer& v, const Integer& p);
int valuation(const Rational& v, const Integer& p);

Integer ipow(const Integer& base, unsigned long exponent);

/// Returns g = gcd(a, b) and Bezout coefficients with a*x + b*y = g.
Integer extended_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y);

bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Prime factorization of |n| (n != 0) as sorted (prime, exponent) pairs.
/// Trial division followed by Pollard-Brent on the cofactor.
std::vector<std::pair<Integer, int>> factor_integer(const Integer& n);

/// Residue of v modulo p in [0, p).
std::uint64_t mod_u64(const Integer& v, std::uint64_t p);
/// Residue of a p-integral rational modulo p; requires p not dividing the
/// denominator.
std::uint64_t mod_u64(const Rational& v, std::uint64_t p);

inline bool fits_int64(const Integer& v) {
  return mpz_sizeinbase(v.get_mpz_t(), 2) <= 62;
}

}  // namespace hyperorbits

#endif  // HYPERORBITS_INTEGER_HPP
