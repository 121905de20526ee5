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

#include "hyperorbits/forms.hpp"

#include <algorithm>

#include "hyperorbits/error.hpp"
#include "hyperorbits/fp_poly.hpp"
#include "hyperorbits/rng.hpp"
#include "hyperorbits/sturm.hpp"

namespace hyperorbits {

BinaryForm::BinaryForm(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  int n = degree();
  if (n < 2 || n % 2 != 0)
    throw ValidationError("binary form needs an even degree n >= 2 (n+1 coefficients), got " +
                          std::to_string(coeffs_.size()) + " coefficients");
}

BinaryForm::BinaryForm(std::initializer_list<long> coeffs)
    : BinaryForm(std::vector<Integer>(coeffs.begin(), coeffs.end())) {}

BinaryForm BinaryForm::parse(std::string_view text) {
  std::vector<Integer> coeffs;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    coeffs.push_back(parse_integer(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return BinaryForm(std::move(coeffs));
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

IntPoly BinaryForm::dehomogenized() const {
  IntPoly p(coeffs_.rbegin(), coeffs_.rend());
  trim(p);
  return p;
}

std::string BinaryForm::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += hyperorbits::to_string(coeffs_[i]);
  }
  return out;
}

Unimodular2::Unimodular2(Integer a_, Integer b_, Integer c_, Integer d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (a * d - b * c != 1) throw ValidationError("matrix is not in SL_2(Z)");
}

Unimodular2 operator*(const Unimodular2& x, const Unimodular2& y) {
  return Unimodular2(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                     x.c * y.b + x.d * y.d);
}

bool FactorizationType::separable() const {
  return std::all_of(parts.begin(), parts.end(), [](const auto& p) { return p.second == 1; });
}

Integer evaluate(const BinaryForm& f, const Integer& x, const Integer& y) {
  Integer acc = 0;
  std::vector<Integer> xp(f.degree() + 1), yp(f.degree() + 1);
  xp[0] = yp[0] = 1;
  for (int i = 1; i <= f.degree(); ++i) {
    xp[i] = xp[i - 1] * x;
    yp[i] = yp[i - 1] * y;
  }
  for (int i = 0; i <= f.degree(); ++i) acc += f[i] * xp[f.degree() - i] * yp[i];
  return acc;
}

Integer height(const BinaryForm& f) {
  Integer h = 0;
  for (const auto& c : f.coeffs())
    if (abs(c) > h) h = abs(c);
  return h;
}

BinaryForm sl2_act(const Unimodular2& g, const BinaryForm& f) {
  const int n = f.degree();
  // Expand f_i (a x + c y)^(n-i) (b x + d y)^i with coefficients indexed by
  // the power of y.
  std::vector<Integer> out(n + 1, Integer(0));
  IntPoly u{g.a, g.c};  // a + c t, t = y/x
  IntPoly v{g.b, g.d};
  std::vector<IntPoly> upow(n + 1), vpow(n + 1);
  upow[0] = vpow[0] = IntPoly{1};
  for (int k = 1; k <= n; ++k) {
    upow[k] = poly_mul(upow[k - 1], u);
    vpow[k] = poly_mul(vpow[k - 1], v);
  }
  for (int i = 0; i <= n; ++i) {
    if (f[i] == 0) continue;
    IntPoly term = poly_mul(upow[n - i], vpow[i]);
    for (std::size_t k = 0; k < term.size(); ++k) out[k] += f[i] * term[k];
  }
  return BinaryForm(std::move(out));
}

Integer discriminant(const BinaryForm& f0in) {
  BinaryForm f = f0in;
  if (f.is_zero()) return 0;
  if (f[0] == 0) {
    long k = 0;
    while (evaluate(f, 1, k) == 0) ++k;
    f = sl2_act(Unimodular2(1, k, 0, 1), f);
  }
  const int n = f.degree();
  IntPoly p = f.dehomogenized();
  Integer res = resultant(p, derivative(p));
  Integer out;
  mpz_divexact(out.get_mpz_t(), res.get_mpz_t(), f[0].get_mpz_t());
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) out = -out;
  return out;
}

int real_root_count(const BinaryForm& f) {
  if (discriminant(f) == 0) throw ValidationError("real_root_count needs a nonzero discriminant");
  int count = count_real_roots(f.dehomogenized());
  if (f[0] == 0) ++count;
  return count;
}

FactorizationType factorization_type_mod_p(const BinaryForm& f, std::uint64_t p) {
  if (!is_prime(p)) throw ValidationError("modulus is not prime");
  PrimeField F{p};
  FpPoly g = fp_reduce(F, f.dehomogenized());
  if (g.empty()) throw ZeroForm("form vanishes identically mod p");
  FactorizationType t;
  t.parts = fp_factor_degrees(F, g);
  int v = f.degree() - fp_degree(g);
  if (v > 0) t.parts.emplace_back(1, v);
  std::sort(t.parts.begin(), t.parts.end());
  return t;
}

BinaryForm random_form(int n, const Integer& X, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0) throw ValidationError("degree must be even and >= 2");
  if (X < 0) throw ValidationError("height bound must be nonnegative");
  Rng rng(seed, 0x666f726d);
  std::vector<Integer> c(n + 1);
  for (auto& x : c) x = rng.uniform(Integer(-X), X);
  return BinaryForm(std::move(c));
}

}  // namespace hyperorbits
