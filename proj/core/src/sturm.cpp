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

#include "hyperorbits/sturm.hpp"

#include <utility>

#include "hyperorbits/error.hpp"

namespace hyperorbits {
namespace {

// r <- prem(r, b) in place; returns the sign of lc(b)^(delta+1).
void prem_in_place(std::vector<Integer>& r, int& dr, const std::vector<Integer>& b, int db,
                   Integer& t, Integer& scale) {
  int e = dr - db + 1;
  const Integer& lb = b[db];
  while (dr >= db) {
    t = r[dr];
    for (int i = 0; i < dr - db; ++i) r[i] *= lb;
    for (int i = 0; i < db; ++i) {
      r[dr - db + i] *= lb;
      r[dr - db + i] -= t * b[i];
    }
    r[dr] = 0;
    --e;
    --dr;
    while (dr >= 0 && r[dr] == 0) --dr;
  }
  if (e > 0 && dr >= 0) {
    mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (int i = 0; i <= dr; ++i) r[i] *= scale;
  }
}

// Builds the signed subresultant chain; calls emit(poly, degree) per member.
template <class Emit>
void sturm_chain(const IntPoly& a, Emit&& emit) {
  thread_local std::vector<Integer> A, B;
  thread_local Integer g, h, t, scale, divisor, tmp;
  int da = degree(a);
  if (da < 0) throw ValidationError("Sturm chain of the zero polynomial");
  A.assign(a.begin(), a.begin() + da + 1);
  emit(A, da);
  if (da == 0) return;
  B.resize(da);
  for (int i = 1; i <= da; ++i) B[i - 1] = a[i] * i;
  int db = da - 1;
  while (db >= 0 && B[db] == 0) --db;
  emit(B, db);
  g = 1;
  h = 1;
  while (db > 0) {
    int delta = da - db;
    int lb_sign = sgn(B[db]);
    prem_in_place(A, da, B, db, t, scale);
    if (da < 0) break;
    // Sturm needs -rem; prem carries lc(B)^(delta+1).
    bool negate = !(lb_sign < 0 && (delta + 1) % 2 == 1);
    mpz_pow_ui(divisor.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    divisor *= g;
    for (int i = 0; i <= da; ++i) {
      mpz_divexact(A[i].get_mpz_t(), A[i].get_mpz_t(), divisor.get_mpz_t());
      if (negate) mpz_neg(A[i].get_mpz_t(), A[i].get_mpz_t());
    }
    std::swap(A, B);
    std::swap(da, db);
    emit(B, db);
    g = abs(A[da]);
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      mpz_pow_ui(tmp.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
      mpz_pow_ui(t.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), tmp.get_mpz_t(), t.get_mpz_t());
    }
  }
}

int count_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_real_roots(const IntPoly& a) {
  thread_local std::vector<int> plus, minus;
  plus.clear();
  minus.clear();
  sturm_chain(a, [](const std::vector<Integer>& p, int d) {
    int s = sgn(p[d]);
    plus.push_back(s);
    minus.push_back(d % 2 == 0 ? s : -s);
  });
  return count_changes(minus) - count_changes(plus);
}

SturmSequence::SturmSequence(const IntPoly& a) {
  sturm_chain(a, [this](const std::vector<Integer>& p, int d) {
    chain_.emplace_back(p.begin(), p.begin() + d + 1);
  });
}

int SturmSequence::variations(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sign_at(p, x));
  return count_changes(signs);
}

int SturmSequence::variations_at_infinity(int sign) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) {
    int d = degree(p);
    int s = sgn(p[d]);
    signs.push_back(sign > 0 || d % 2 == 0 ? s : -s);
  }
  return count_changes(signs);
}

int SturmSequence::count(const Rational& lo, const Rational& hi) const {
  return variations(lo) - variations(hi);
}

std::vector<RootInterval> isolate_real_roots(const IntPoly& a) {
  SturmSequence chain(a);
  std::vector<RootInterval> out;
  int d = degree(a);
  if (d <= 0) return out;
  // Cauchy bound: every root lies in (-bound, bound).
  Integer maxc = 0;
  for (int i = 0; i < d; ++i)
    if (abs(a[i]) > maxc) maxc = abs(a[i]);
  Rational bound = Rational(maxc, abs(a[d])) + 1;
  std::vector<RootInterval> work{{-bound, bound}};
  while (!work.empty()) {
    RootInterval iv = work.back();
    work.pop_back();
    int c = chain.count(iv.lo, iv.hi);
    if (c == 0) continue;
    if (c == 1) {
      out.push_back(iv);
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    work.push_back({mid, iv.hi});
    work.push_back({iv.lo, mid});
  }
  // Work-list order visits the left half first, so out is already sorted.
  for (auto& iv : out)
    if (sign_at(a, iv.hi) == 0) iv.lo = iv.hi;
  return out;
}

RootInterval bisect(const SturmSequence& chain, const RootInterval& iv) {
  if (iv.lo == iv.hi) return iv;
  Rational mid = (iv.lo + iv.hi) / 2;
  if (sign_at(chain.polynomial(), mid) == 0) return {mid, mid};
  if (chain.count(iv.lo, mid) == 1) return {iv.lo, mid};
  return {mid, iv.hi};
}

}  // namespace hyperorbits
