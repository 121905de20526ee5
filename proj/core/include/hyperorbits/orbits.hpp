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

#ifndef HYPERORBITS_ORBITS_HPP
#define HYPERORBITS_ORBITS_HPP

#include <string>
#include <vector>

#include "hyperorbits/forms.hpp"
#include "hyperorbits/matrix.hpp"
#include "hyperorbits/rings.hpp"

namespace hyperorbits {

/// A pair (A, B) of symmetric n x n integer matrices.
struct SymmetricPair {
  IntMatrix A;
  IntMatrix B;

  SymmetricPair() = default;
  SymmetricPair(IntMatrix a, IntMatrix b);
  int n() const { return static_cast<int>(A.rows()); }
  friend bool operator==(const SymmetricPair&, const SymmetricPair&) = default;
};

/// Integral point (x0 : y0 : z0) on z^2 = f(x, y) with gcd(x0, y0) = 1.
struct CurvePoint {
  Integer x;
  Integer y;
  Integer z;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Throws ValidationError unless gcd(x0, y0) = 1 and z0^2 = f(x0, y0).
void validate_point(const BinaryForm& f, const CurvePoint& P);

/// (-1)^(n/2) det(A x - B y).
BinaryForm invariant_form(const SymmetricPair& v);

/// (g A g^t, g B g^t) for det g = +-1.
SymmetricPair gl_act(const IntMatrix& g, const SymmetricPair& v);

/// A' = aA - bB, B' = dB - cA, so that the invariant form transforms by
/// sl2_act(delta, .).
SymmetricPair sl2_act_on_pair(const Unimodular2& delta, const SymmetricPair& v);

/// Symbolic entry of the explicit pair attached to the point (0, 1, c).
struct TemplateEntry {
  enum class Kind { Zero, One, MinusOne, F, MinusF, C };
  Kind kind = Kind::Zero;
  int index = 0;  // coefficient index for F and MinusF
  friend bool operator==(const TemplateEntry&, const TemplateEntry&) = default;
};

struct PairTemplate {
  int n = 0;
  std::vector<std::vector<TemplateEntry>> A;
  std::vector<std::vector<TemplateEntry>> B;
};

/// The block pattern for even n >= 2: anti-diagonal ones, a Hankel band of
/// coefficients, and the corner entries c and -f_{n-1}.
PairTemplate pair_template(int n);
SymmetricPair instantiate(const PairTemplate& t, const BinaryForm& f, const Integer& c);

/// gamma = (s -r; x0 y0) with r x0 + s y0 = 1; it moves (x0, y0) to (0, 1).
Unimodular2 point_transform(const CurvePoint& P);

/// Pair with invariant form f built from P. `gamma` must have bottom row
/// (x0, y0); the default comes from point_transform.
SymmetricPair pair_from_point(const BinaryForm& f, const CurvePoint& P);
SymmetricPair pair_from_point(const BinaryForm& f, const CurvePoint& P, const Unimodular2& gamma);

/// I = <c, theta, ..., theta^((n-2)/2), zeta_{n/2}, ..., zeta_{n-1}> for a
/// form with f_n = c^2.
BasedIdeal construction_ideal(const RankNRing& R, const Integer& c);

struct PairDataReport {
  bool ok = false;
  bool containment = false;
  bool norm_equation = false;
  Rational norm_ideal;
  Rational norm_alpha;
  Rational norm_power;
  std::string diagnostics;
};

/// Checks I^2 in alpha I_f^(n-3) and N(I)^2 = +-N(alpha) N(I_f^(n-3)).
PairDataReport verify_pair_data(const BasedIdeal& I, const AlgebraElement& alpha);

/// Coefficients of the last two basis vectors of I_f^(n-3) in b_i b_j / alpha;
/// the last gives A, the second to last gives B, with a sign or swap
/// adjustment when needed to make the invariant form equal f.
SymmetricPair pair_from_ideal(const BasedIdeal& I, const AlgebraElement& alpha);

/// y0 theta - x0; throws ValidationError at Weierstrass points (z0 = 0).
AlgebraElement x_minus_T(const BinaryForm& f, const CurvePoint& P);
AlgebraElement x_minus_T(const std::shared_ptr<const Algebra>& K, const CurvePoint& P);

/// The image in K_f of x in K_{f'}, f' = sl2_act(gamma, f), under
/// theta' -> (d theta - c) / (-b theta + a).
AlgebraElement transport(const AlgebraElement& x, const Unimodular2& gamma,
                         const std::shared_ptr<const Algebra>& K);

/// Ideal-side data for P: (I, theta') on f' = gamma.f, plus the class in
/// K_f of the corresponding orbit, alpha' (-b theta + a)^(3-n).
struct IdealData {
  Unimodular2 gamma;
  BinaryForm transported;
  BasedIdeal ideal;
  AlgebraElement alpha;
  AlgebraElement class_in_Kf;
};
IdealData ideal_data_from_point(const BinaryForm& f, const CurvePoint& P);

}  // namespace hyperorbits

#endif  // HYPERORBITS_ORBITS_HPP
