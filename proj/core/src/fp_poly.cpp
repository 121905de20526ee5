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

#include "hyperorbits/fp_poly.hpp"

#include <algorithm>

#include "hyperorbits/error.hpp"

namespace hyperorbits {

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p == 0) throw ValidationError("inverse of zero in F_p");
  return pow(a, p - 2);
}

bool PrimeField::is_square(std::uint64_t a) const {
  a %= p;
  if (a == 0 || p == 2) return true;
  return pow(a, (p - 1) / 2) == 1;
}

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_add(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  fp_trim(r);
  return r;
}

FpPoly fp_sub(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  fp_trim(r);
  return r;
}

FpPoly fp_mul(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  fp_trim(r);
  return r;
}

void fp_divmod(const PrimeField& F, const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) {
  if (b.empty()) throw ValidationError("division by the zero polynomial");
  r = a;
  fp_trim(r);
  int db = fp_degree(b);
  int dr = fp_degree(r);
  q.assign(dr >= db ? dr - db + 1 : 0, 0);
  std::uint64_t linv = F.inv(b.back());
  while (dr >= db) {
    std::uint64_t t = F.mul(r[dr], linv);
    q[dr - db] = t;
    for (int i = 0; i <= db; ++i) r[dr - db + i] = F.sub(r[dr - db + i], F.mul(t, b[i]));
    fp_trim(r);
    dr = fp_degree(r);
  }
  fp_trim(q);
}

FpPoly fp_mod(const PrimeField& F, const FpPoly& a, const FpPoly& m) {
  FpPoly q, r;
  fp_divmod(F, a, m, q, r);
  return r;
}

FpPoly fp_monic(const PrimeField& F, const FpPoly& a) {
  if (a.empty()) return a;
  std::uint64_t linv = F.inv(a.back());
  FpPoly r = a;
  for (auto& c : r) c = F.mul(c, linv);
  return r;
}

FpPoly fp_gcd(const PrimeField& F, FpPoly a, FpPoly b) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(F, a);
}

FpPoly fp_derivative(const PrimeField& F, const FpPoly& a) {
  if (a.size() <= 1) return {};
  FpPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.p);
  fp_trim(r);
  return r;
}

FpPoly fp_powmod(const PrimeField& F, const FpPoly& base, const Integer& e, const FpPoly& m) {
  FpPoly result{1 % F.p};
  fp_trim(result);
  result = fp_mod(F, result, m);
  FpPoly b = fp_mod(F, base, m);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i > 0; --i) {
    result = fp_mod(F, fp_mul(F, result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i - 1)) result = fp_mod(F, fp_mul(F, result, b), m);
  }
  return result;
}

FpPoly fp_reduce(const PrimeField& F, const std::vector<Integer>& a) {
  FpPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_u64(a[i], F.p);
  fp_trim(r);
  return r;
}

namespace {

// a(x) = b(x^p) with all exponents divisible by p; returns b.
FpPoly pth_root(const PrimeField& F, const FpPoly& a) {
  FpPoly r;
  for (std::size_t i = 0; i < a.size(); i += F.p) r.push_back(a[i]);
  // Coefficients are fixed by Frobenius on F_p.
  fp_trim(r);
  return r;
}

}  // namespace

std::vector<std::pair<FpPoly, int>> squarefree_decomposition(const PrimeField& F, const FpPoly& a0) {
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly a = fp_monic(F, a0);
  if (fp_degree(a) <= 0) return out;
  int mult_scale = 1;
  // Iterates over successive p-th roots.
  for (;;) {
    FpPoly da = fp_derivative(F, a);
    if (da.empty()) {
      a = pth_root(F, a);
      mult_scale *= static_cast<int>(F.p);
      continue;
    }
    FpPoly c = fp_gcd(F, a, da);
    FpPoly q, r;
    fp_divmod(F, a, c, q, r);
    FpPoly w = q;
    int i = 1;
    while (fp_degree(w) > 0) {
      FpPoly y = fp_gcd(F, w, c);
      FpPoly z;
      fp_divmod(F, w, y, z, r);
      if (fp_degree(z) > 0) out.emplace_back(z, i * mult_scale);
      w = y;
      fp_divmod(F, c, y, q, r);
      c = q;
      ++i;
    }
    if (fp_degree(c) <= 0) break;
    a = pth_root(F, c);
    mult_scale *= static_cast<int>(F.p);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
  return out;
}

std::vector<std::pair<FpPoly, int>> distinct_degree(const PrimeField& F, const FpPoly& a0) {
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly a = fp_monic(F, a0);
  FpPoly x{0, 1 % F.p};
  fp_trim(x);
  FpPoly h = fp_mod(F, x, a);
  Integer p(static_cast<unsigned long>(F.p));
  int d = 0;
  while (fp_degree(a) >= 2 * (d + 1)) {
    ++d;
    h = fp_powmod(F, h, p, a);
    FpPoly g = fp_gcd(F, a, fp_sub(F, h, x));
    if (fp_degree(g) > 0) {
      out.emplace_back(g, d);
      FpPoly q, r;
      fp_divmod(F, a, g, q, r);
      a = q;
      h = fp_mod(F, h, a);
    }
  }
  if (fp_degree(a) > 0) out.emplace_back(a, fp_degree(a));
  return out;
}

std::vector<FpPoly> equal_degree(const PrimeField& F, const FpPoly& a0, int d, Rng& rng) {
  FpPoly a = fp_monic(F, a0);
  int deg = fp_degree(a);
  if (deg == d) return {a};
  if (deg <= 0 || deg % d != 0) throw ValidationError("equal-degree split of a malformed input");
  Integer q = ipow(Integer(static_cast<unsigned long>(F.p)), static_cast<unsigned long>(d));
  for (;;) {
    FpPoly r(deg);
    for (auto& c : r) c = rng.below(F.p);
    fp_trim(r);
    if (fp_degree(r) <= 0) continue;
    FpPoly t;
    if (F.p == 2) {
      // Absolute trace to F_2 of an element of F_{2^d}-components.
      FpPoly power = fp_mod(F, r, a);
      t = power;
      for (int i = 1; i < d; ++i) {
        power = fp_mod(F, fp_mul(F, power, power), a);
        t = fp_add(F, t, power);
      }
    } else {
      t = fp_powmod(F, r, (q - 1) / 2, a);
      t = fp_sub(F, t, FpPoly{1});
    }
    FpPoly g = fp_gcd(F, a, t);
    int dg = fp_degree(g);
    if (dg <= 0 || dg == deg) continue;
    FpPoly other, rem;
    fp_divmod(F, a, g, other, rem);
    auto left = equal_degree(F, g, d, rng);
    auto right = equal_degree(F, other, d, rng);
    left.insert(left.end(), right.begin(), right.end());
    return left;
  }
}

std::vector<std::pair<FpPoly, int>> fp_factor(const PrimeField& F, const FpPoly& a, std::uint64_t seed) {
  std::vector<std::pair<FpPoly, int>> out;
  Rng rng(seed, F.p);
  for (const auto& [part, mult] : squarefree_decomposition(F, a))
    for (const auto& [block, d] : distinct_degree(F, part))
      for (auto& g : equal_degree(F, block, d, rng)) out.emplace_back(std::move(g), mult);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    if (x.first != y.first) return x.first < y.first;
    return x.second < y.second;
  });
  return out;
}

std::vector<std::pair<int, int>> fp_factor_degrees(const PrimeField& F, const FpPoly& a) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [part, mult] : squarefree_decomposition(F, a))
    for (const auto& [block, d] : distinct_degree(F, part))
      for (int k = 0; k < fp_degree(block) / d; ++k) out.emplace_back(d, mult);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hyperorbits
