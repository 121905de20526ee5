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

#include "hyperorbits/orbits.hpp"

#include <utility>

#include "hyperorbits/error.hpp"

namespace hyperorbits {

SymmetricPair::SymmetricPair(IntMatrix a, IntMatrix b) : A(std::move(a)), B(std::move(b)) {
  if (!A.square() || A.rows() != B.rows() || !B.square())
    throw ValidationError("pair needs two square matrices of equal size");
  if (!(A == A.transpose()) || !(B == B.transpose())) throw ValidationError("pair matrices must be symmetric");
}

void validate_point(const BinaryForm& f, const CurvePoint& P) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), P.x.get_mpz_t(), P.y.get_mpz_t());
  if (g != 1) throw ValidationError("point coordinates (x0, y0) must be coprime");
  if (P.z * P.z != evaluate(f, P.x, P.y)) throw ValidationError("point is not on z^2 = f(x, y)");
}

BinaryForm invariant_form(const SymmetricPair& v) {
  const int n = v.n();
  if (n < 2 || n % 2 != 0) throw ValidationError("invariant form needs even n >= 2");
  // d(t) = det(A t - B) sampled at t = 0..n, then Newton interpolation.
  std::vector<Rational> dd(n + 1);
  for (int t = 0; t <= n; ++t) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = v.A(i, j) * t - v.B(i, j);
    dd[t] = determinant(std::move(m));
  }
  for (int level = 1; level <= n; ++level)
    for (int t = n; t >= level; --t) dd[t] = (dd[t] - dd[t - 1]) / level;
  // Expand sum dd[k] * prod_{i<k} (t - i).
  RatPoly poly;
  RatPoly basis{Rational(1)};
  for (int k = 0; k <= n; ++k) {
    poly = poly_add(poly, poly_scale(basis, dd[k]));
    basis = poly_mul(basis, RatPoly{Rational(-k), Rational(1)});
  }
  poly.resize(n + 1, Rational(0));
  std::vector<Integer> coeffs(n + 1);
  const int sign = (n / 2) % 2 == 0 ? 1 : -1;
  for (int i = 0; i <= n; ++i) {
    const Rational& c = poly[n - i];
    if (c.get_den() != 1) throw ValidationError("invariant form interpolation is not integral");
    coeffs[i] = sign * c.get_num();
  }
  return BinaryForm(std::move(coeffs));
}

SymmetricPair gl_act(const IntMatrix& g, const SymmetricPair& v) {
  if (!g.square() || static_cast<int>(g.rows()) != v.n()) throw ValidationError("gl_act: shape mismatch");
  Integer d = determinant(g);
  if (d != 1 && d != -1) throw ValidationError("gl_act needs det g = +-1");
  IntMatrix gt = g.transpose();
  return SymmetricPair(g * v.A * gt, g * v.B * gt);
}

SymmetricPair sl2_act_on_pair(const Unimodular2& delta, const SymmetricPair& v) {
  return SymmetricPair(delta.a * v.A - delta.b * v.B, delta.d * v.B - delta.c * v.A);
}

PairTemplate pair_template(int n) {
  if (n < 2 || n % 2 != 0) throw ValidationError("template needs even n >= 2");
  using K = TemplateEntry::Kind;
  const int h = n / 2;
  PairTemplate t;
  t.n = n;
  t.A.assign(n, std::vector<TemplateEntry>(n));
  t.B.assign(n, std::vector<TemplateEntry>(n));
  t.A[0][0] = {K::MinusOne, 0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i >= h && j >= h) t.A[i][j] = {K::F, (i - h) + (j - h)};
      if (i > 0 && j > 0 && i + j == n && ((i < h) != (j < h))) t.A[i][j] = {K::One, 0};
    }
  t.B[0][n - 1] = t.B[n - 1][0] = {K::C, 0};
  t.B[n - 1][n - 1] = {K::MinusF, n - 1};
  for (int i = 1; i <= n - 2; ++i) t.B[i][n - 1 - i] = {K::One, 0};
  for (int i = h; i <= n - 2; ++i)
    for (int j = h; j <= n - 2; ++j) t.B[i][j] = {K::F, (i - h) + (j - h) + 1};
  return t;
}

SymmetricPair instantiate(const PairTemplate& t, const BinaryForm& f, const Integer& c) {
  if (f.degree() != t.n) throw ValidationError("template degree does not match the form");
  auto value = [&](const TemplateEntry& e) -> Integer {
    using K = TemplateEntry::Kind;
    switch (e.kind) {
      case K::Zero:
        return 0;
      case K::One:
        return 1;
      case K::MinusOne:
        return -1;
      case K::F:
        return f[e.index];
      case K::MinusF:
        return -f[e.index];
      case K::C:
        return c;
    }
    return 0;
  };
  IntMatrix A(t.n, t.n), B(t.n, t.n);
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) {
      A(i, j) = value(t.A[i][j]);
      B(i, j) = value(t.B[i][j]);
    }
  return SymmetricPair(std::move(A), std::move(B));
}

Unimodular2 point_transform(const CurvePoint& P) {
  Integer r, s;
  Integer g = extended_gcd(P.x, P.y, r, s);
  if (g == -1) {
    r = -r;
    s = -s;
  } else if (g != 1) {
    throw ValidationError("point coordinates (x0, y0) must be coprime");
  }
  return Unimodular2(s, -r, P.x, P.y);
}

SymmetricPair pair_from_point(const BinaryForm& f, const CurvePoint& P) {
  return pair_from_point(f, P, point_transform(P));
}

SymmetricPair pair_from_point(const BinaryForm& f, const CurvePoint& P, const Unimodular2& gamma) {
  validate_point(f, P);
  if (gamma.c != P.x || gamma.d != P.y) throw ValidationError("gamma must have bottom row (x0, y0)");
  BinaryForm moved = sl2_act(gamma, f);
  SymmetricPair v = instantiate(pair_template(f.degree()), moved, P.z);
  return sl2_act_on_pair(gamma.inverse(), v);
}

BasedIdeal construction_ideal(const RankNRing& R, const Integer& c) {
  const BinaryForm& f = R.form();
  const int n = f.degree();
  if (c * c != f[n]) throw ValidationError("construction ideal needs f_n = c^2");
  const auto& K = *R.algebra();
  std::vector<AlgebraElement> basis;
  basis.push_back(Rational(c) * K.one());
  AlgebraElement power = K.theta();
  for (int i = 1; i <= (n - 2) / 2; ++i) {
    basis.push_back(power);
    power = power * K.theta();
  }
  for (int j = n / 2; j < n; ++j) basis.push_back(K.zeta(j));
  return BasedIdeal(R, std::move(basis));
}

namespace {

std::string coords_text(const std::vector<Rational>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ", ";
    s += to_string(c[i]);
  }
  return s + ")";
}

}  // namespace

PairDataReport verify_pair_data(const BasedIdeal& I, const AlgebraElement& alpha) {
  PairDataReport rep;
  const RankNRing& R = I.ring();
  const int n = R.rank();
  BasedIdeal J = ideal_power_basis(R, n - 3);
  rep.norm_ideal = I.norm();
  rep.norm_power = J.norm();
  rep.norm_alpha = alpha.norm();
  if (rep.norm_alpha == 0) {
    rep.diagnostics = "alpha is not invertible";
    return rep;
  }
  AlgebraElement inv = alpha.inverse();
  rep.containment = true;
  for (int i = 0; i < n && rep.containment; ++i)
    for (int j = i; j < n; ++j) {
      auto c = J.coordinates(I.basis()[i] * I.basis()[j] * inv);
      bool integral = true;
      for (const auto& x : c) integral = integral && x.get_den() == 1;
      if (!integral) {
        rep.containment = false;
        rep.diagnostics = "b_" + std::to_string(i) + " b_" + std::to_string(j) +
                          " / alpha has non-integral coordinates " + coords_text(c) + " in I_f^(n-3)";
        break;
      }
    }
  rep.norm_equation = rep.norm_ideal * rep.norm_ideal == abs(rep.norm_alpha * rep.norm_power);
  if (!rep.norm_equation) {
    if (!rep.diagnostics.empty()) rep.diagnostics += "; ";
    rep.diagnostics += "N(I)^2 = " + to_string(rep.norm_ideal * rep.norm_ideal) + " but N(alpha) N(I_f^(n-3)) = " +
                       to_string(rep.norm_alpha * rep.norm_power);
  }
  rep.ok = rep.containment && rep.norm_equation;
  return rep;
}

SymmetricPair pair_from_ideal(const BasedIdeal& I, const AlgebraElement& alpha) {
  const RankNRing& R = I.ring();
  const int n = R.rank();
  BasedIdeal J = ideal_power_basis(R, n - 3);
  AlgebraElement inv = alpha.inverse();
  IntMatrix A(n, n), B(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      auto c = J.coordinates(I.basis()[i] * I.basis()[j] * inv);
      for (const auto& x : c)
        if (x.get_den() != 1)
          throw ValidationError("b_" + std::to_string(i) + " b_" + std::to_string(j) +
                                " / alpha is not integral in I_f^(n-3)");
      A(i, j) = A(j, i) = c[n - 1].get_num();
      B(i, j) = B(j, i) = c[n - 2].get_num();
    }
  const BinaryForm& f = R.form();
  IntMatrix zero(n, n, Integer(0));
  const SymmetricPair candidates[] = {
      SymmetricPair(A, B), SymmetricPair(A, zero - B), SymmetricPair(B, A), SymmetricPair(B, zero - A),
      SymmetricPair(zero - B, A),
  };
  for (const auto& v : candidates)
    if (invariant_form(v) == f) return v;
  throw ValidationError("pair data does not reproduce the form under any orientation");
}

AlgebraElement x_minus_T(const std::shared_ptr<const Algebra>& K, const CurvePoint& P) {
  if (P.z == 0) throw ValidationError("x - T is not defined at a Weierstrass point (z0 = 0)");
  return K->linear(P.y, -P.x);
}

AlgebraElement x_minus_T(const BinaryForm& f, const CurvePoint& P) {
  validate_point(f, P);
  return x_minus_T(Algebra::create(f), P);
}

AlgebraElement transport(const AlgebraElement& x, const Unimodular2& gamma, const std::shared_ptr<const Algebra>& K) {
  AlgebraElement denom = K->linear(-gamma.b, gamma.a);
  AlgebraElement image = K->linear(gamma.d, -gamma.c) / denom;
  // Horner in the image of theta'.
  const auto& c = x.coords();
  AlgebraElement acc = Rational(0) * K->one();
  for (std::size_t i = c.size(); i > 0; --i) acc = acc * image + c[i - 1] * K->one();
  return acc;
}

IdealData ideal_data_from_point(const BinaryForm& f, const CurvePoint& P) {
  validate_point(f, P);
  if (f[0] == 0) throw ValidationError("ideal data needs f0 != 0");
  Unimodular2 gamma = point_transform(P);
  BinaryForm moved = sl2_act(gamma, f);
  if (moved[0] == 0) throw ValidationError("transported form has f0 = 0");
  RankNRing Rm(moved);
  BasedIdeal I = construction_ideal(Rm, P.z);
  AlgebraElement alpha = Rm.algebra()->theta();
  auto K = Algebra::create(f);
  AlgebraElement klass = transport(alpha, gamma, K) * K->linear(-gamma.b, gamma.a).pow(3 - f.degree());
  return IdealData{gamma, moved, I, alpha, klass};
}

}  // namespace hyperorbits
