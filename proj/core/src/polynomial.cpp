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

#include "hyperorbits/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "hyperorbits/error.hpp"

namespace hyperorbits {

int sign_at(const IntPoly& a, const Rational& x) {
  // Evaluates den^deg * a(num/den) in integers.
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  int deg = degree(a);
  if (deg < 0) return 0;
  Integer acc = 0;
  Integer npow = 1;
  std::vector<Integer> dp(deg + 1);
  dp[0] = 1;
  for (int i = 1; i <= deg; ++i) dp[i] = dp[i - 1] * den;
  for (int i = 0; i <= deg; ++i) {
    acc += a[i] * npow * dp[deg - i];
    npow *= num;
  }
  return sgn(acc);
}

void poly_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  int db = degree(b);
  if (db < 0) throw ValidationError("polynomial division by zero");
  r = a;
  trim(r);
  int dr = degree(r);
  q.assign(dr >= db ? dr - db + 1 : 0, Rational(0));
  while (dr >= db) {
    Rational t = r[dr] / b[db];
    q[dr - db] = t;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= t * b[i];
    trim(r);
    dr = degree(r);
  }
  trim(q);
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  int db = degree(b);
  if (db < 0) throw ValidationError("pseudo-remainder by zero");
  IntPoly r = a;
  trim(r);
  int dr = degree(r);
  int e = dr - db + 1;
  const Integer& lb = b[db];
  while (dr >= db) {
    Integer t = r[dr];
    for (int i = 0; i < dr; ++i) r[i] *= lb;
    for (int i = 0; i < db; ++i) r[dr - db + i] -= t * b[i];
    r[dr] = 0;
    trim(r);
    --e;
    dr = degree(r);
  }
  if (e > 0) {
    Integer s = ipow(lb, static_cast<unsigned long>(e));
    for (auto& c : r) c *= s;
  }
  return r;
}

Integer resultant(const IntPoly& a0, const IntPoly& b0) {
  IntPoly a = a0, b = b0;
  trim(a);
  trim(b);
  int da = degree(a), db = degree(b);
  if (da < 0 || db < 0) return 0;
  if (da == 0) return ipow(a[0], static_cast<unsigned long>(db));
  if (db == 0) return ipow(b[0], static_cast<unsigned long>(da));
  int sign = 1;
  if (da < db) {
    std::swap(a, b);
    std::swap(da, db);
    if ((da % 2 == 1) && (db % 2 == 1)) sign = -sign;
  }
  // Collins/Brown subresultant PRS tracking the resultant.
  Integer g = 1, h = 1;
  for (;;) {
    int delta = da - db;
    if (((da % 2) == 1) && ((db % 2) == 1)) sign = -sign;
    IntPoly r = pseudo_remainder(a, b);
    int dr = degree(r);
    if (dr < 0) return 0;
    Integer divisor = g * ipow(h, static_cast<unsigned long>(delta));
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    a = std::move(b);
    b = std::move(r);
    da = degree(a);
    db = dr;
    g = a[da];
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      Integer num = ipow(g, static_cast<unsigned long>(delta));
      Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (db == 0) {
      // res = b^da / h^(da-1) up to the accumulated sign
      Integer num = ipow(b[0], static_cast<unsigned long>(da));
      if (da == 1) return sign * num;
      Integer den = ipow(h, static_cast<unsigned long>(da - 1));
      Integer out;
      mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return sign * out;
    }
  }
}

Integer content(const IntPoly& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly primitive_part(const IntPoly& a) {
  IntPoly r = a;
  trim(r);
  if (r.empty()) return r;
  Integer g = content(r);
  if (r.back() < 0) g = -g;
  for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

RatPoly to_rational(const IntPoly& a) {
  RatPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rational(a[i]);
  return r;
}

}  // namespace hyperorbits
