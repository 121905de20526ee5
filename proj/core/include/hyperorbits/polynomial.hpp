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

#ifndef HYPERORBITS_POLYNOMIAL_HPP
#define HYPERORBITS_POLYNOMIAL_HPP

#include <cstddef>
#include <vector>

#include "hyperorbits/integer.hpp"

namespace hyperorbits {

/// Univariate polynomials as coefficient vectors, constant term first.
/// The zero polynomial is the empty vector after trim().
using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

template <class T>
void trim(std::vector<T>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

template <class T>
int degree(const std::vector<T>& p) {
  for (std::size_t i = p.size(); i > 0; --i)
    if (p[i - 1] != 0) return static_cast<int>(i) - 1;
  return -1;
}

template <class T>
std::vector<T> poly_add(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r(std::max(a.size(), b.size()), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

template <class T>
std::vector<T> poly_sub(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r(std::max(a.size(), b.size()), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

template <class T>
std::vector<T> poly_mul(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<T> r(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

template <class T>
std::vector<T> poly_scale(const std::vector<T>& a, const T& s) {
  std::vector<T> r = a;
  for (auto& c : r) c *= s;
  trim(r);
  return r;
}

template <class T>
std::vector<T> derivative(const std::vector<T>& a) {
  if (a.size() <= 1) return {};
  std::vector<T> r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
  trim(r);
  return r;
}

/// Horner evaluation.
template <class T, class X>
X evaluate(const std::vector<T>& a, const X& x) {
  X acc = 0;
  for (std::size_t i = a.size(); i > 0; --i) acc = acc * x + a[i - 1];
  return acc;
}

/// Sign of a(x) for rational x, computed on the cleared-denominator
/// numerator to stay in integers.
int sign_at(const IntPoly& a, const Rational& x);

/// Division with remainder over Q; b nonzero.
void poly_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Resultant by the subresultant algorithm.
Integer resultant(const IntPoly& a, const IntPoly& b);

Integer content(const IntPoly& a);
IntPoly primitive_part(const IntPoly& a);

RatPoly to_rational(const IntPoly& a);

}  // namespace hyperorbits

#endif  // HYPERORBITS_POLYNOMIAL_HPP
