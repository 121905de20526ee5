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

#include "hyperorbits/integer.hpp"

#include <algorithm>
#include <map>

#include "hyperorbits/error.hpp"
#include "hyperorbits/rng.hpp"

namespace hyperorbits {

Integer parse_integer(std::string_view text) {
  std::string s(text);
  // mpz_set_str accepts embedded whitespace; we do not.
  auto begin = s.find_first_not_of(" \t");
  auto end = s.find_last_not_of(" \t");
  if (begin == std::string::npos) throw ValidationError("empty integer literal");
  s = s.substr(begin, end - begin + 1);
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + start, s.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw ValidationError("malformed integer literal '" + std::string(text) + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  Integer v;
  v.set_str(s, 10);
  return v;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& v) { return v.get_str(10); }
std::string to_string(const Rational& v) { return v.get_str(10); }

bool is_square(const Integer& v, Integer* root) {
  if (sgn(v) < 0) return false;
  if (mpz_perfect_square_p(v.get_mpz_t()) == 0) return false;
  if (root != nullptr) mpz_sqrt(root->get_mpz_t(), v.get_mpz_t());
  return true;
}

int valuation(const Integer& v, const Integer& p) {
  if (v == 0) throw ValidationError("valuation of zero");
  Integer rest = v;
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t()));
}

int valuation(const Rational& v, const Integer& p) {
  return valuation(v.get_num(), p) - valuation(v.get_den(), p);
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Integer extended_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  Integer g;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  return is_prime(Integer(static_cast<unsigned long>(n)));
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

namespace {

// Pollard-Brent; n is odd, composite and not a perfect power of a small prime.
Integer find_factor(const Integer& n, std::uint64_t seed) {
  Rng rng(seed, 0xb7e1);
  for (;;) {
    Integer y = rng.uniform(Integer(1), n - 1);
    Integer c = rng.uniform(Integer(1), n - 1);
    Integer g = 1, q = 1, x, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          Integer d = x - y;
          q = q * abs(d);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        Integer d = abs(Integer(x - ys));
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::map<Integer, int>& out, std::uint64_t& seed) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Integer root;
  if (mpz_perfect_power_p(n.get_mpz_t()) != 0) {
    for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        std::map<Integer, int> sub;
        factor_into(root, sub, seed);
        for (auto& [q, e] : sub) out[q] += e * static_cast<int>(k);
        return;
      }
    }
  }
  Integer d = find_factor(n, seed++);
  factor_into(d, out, seed);
  factor_into(n / d, out, seed);
}

}  // namespace

std::vector<std::pair<Integer, int>> factor_integer(const Integer& n) {
  if (n == 0) throw ValidationError("cannot factor zero");
  Integer rest = abs(n);
  std::map<Integer, int> found;
  static const std::vector<std::uint64_t> small = primes_up_to(20000);
  for (std::uint64_t p : small) {
    if (rest == 1) break;
    if (Integer(static_cast<unsigned long>(p * p)) > rest) break;
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) found[Integer(static_cast<unsigned long>(p))] = e;
  }
  std::uint64_t seed = 1;
  factor_into(rest, found, seed);
  return {found.begin(), found.end()};
}

std::uint64_t mod_u64(const Integer& v, std::uint64_t p) {
  return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
}

std::uint64_t mod_u64(const Rational& v, std::uint64_t p) {
  Integer pp(static_cast<unsigned long>(p));
  Integer den = v.get_den() % pp;
  if (den == 0) throw ValidationError("denominator divisible by the modulus");
  Integer inv;
  mpz_invert(inv.get_mpz_t(), v.get_den().get_mpz_t(), pp.get_mpz_t());
  return mod_u64(Integer(v.get_num() * inv), p);
}

}  // namespace hyperorbits
