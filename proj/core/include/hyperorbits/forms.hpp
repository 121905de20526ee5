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

#ifndef HYPERORBITS_FORMS_HPP
#define HYPERORBITS_FORMS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperorbits/integer.hpp"
#include "hyperorbits/polynomial.hpp"

namespace hyperorbits {

/// f(x, y) = sum_i f_i x^(n-i) y^i with n even and n >= 2.
class BinaryForm {
 public:
  BinaryForm() = default;
  explicit BinaryForm(std::vector<Integer> coeffs);
  BinaryForm(std::initializer_list<long> coeffs);

  /// Parses "f0,f1,...,fn" (decimal, optional whitespace).
  static BinaryForm parse(std::string_view text);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int genus() const { return degree() / 2 - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;

  /// f(x, 1), constant term first.
  IntPoly dehomogenized() const;

  /// Comma-separated coefficients, the inverse of parse().
  std::string to_string() const;

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Integer> coeffs_;
};

/// gamma = (a b; c d) in SL_2(Z).
struct Unimodular2 {
  Integer a = 1, b = 0, c = 0, d = 1;

  Unimodular2() = default;
  Unimodular2(Integer a_, Integer b_, Integer c_, Integer d_);

  Unimodular2 inverse() const { return Unimodular2(d, -b, -c, a); }
  friend Unimodular2 operator*(const Unimodular2& x, const Unimodular2& y);
  friend bool operator==(const Unimodular2& x, const Unimodular2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

/// Irreducible factor degrees and multiplicities over F_p, including the
/// factor y when the leading coefficient vanishes.
struct FactorizationType {
  std::vector<std::pair<int, int>> parts;  // (degree, multiplicity), sorted
  int m() const { return static_cast<int>(parts.size()); }
  bool separable() const;
  friend bool operator==(const FactorizationType&, const FactorizationType&) = default;
};

Integer evaluate(const BinaryForm& f, const Integer& x, const Integer& y);
Integer height(const BinaryForm& f);

/// Normalized so that n = 2 gives f1^2 - 4 f0 f2. Forms with f0 = 0 are first
/// moved by the shift x -> x + k y for the least k >= 0 with f(1, k) != 0.
Integer discriminant(const BinaryForm& f);

/// f'(x, y) = f(a x + c y, b x + d y).
BinaryForm sl2_act(const Unimodular2& g, const BinaryForm& f);

/// Number of roots in P^1(R); throws ValidationError when Disc(f) = 0.
int real_root_count(const BinaryForm& f);

/// Throws ZeroForm when f vanishes mod p.
FactorizationType factorization_type_mod_p(const BinaryForm& f, std::uint64_t p);

/// Coefficients i.i.d. uniform on {-X, ..., X}.
BinaryForm random_form(int n, const Integer& X, std::uint64_t seed);

}  // namespace hyperorbits

#endif  // HYPERORBITS_FORMS_HPP
