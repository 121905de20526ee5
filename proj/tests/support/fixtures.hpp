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

#ifndef HYPERORBITS_TESTS_FIXTURES_HPP
#define HYPERORBITS_TESTS_FIXTURES_HPP

#include <vector>

#include "hyperorbits/forms.hpp"
#include "hyperorbits/matrix.hpp"
#include "hyperorbits/orbits.hpp"
#include "hyperorbits/rng.hpp"

namespace fixture {

using namespace hyperorbits;

/// Product of `steps` elementary matrices with off-diagonal entries in
/// [-3, 3].
inline Unimodular2 random_sl2(Rng& rng, int steps = 3) {
  Unimodular2 g;
  for (int i = 0; i < steps; ++i) {
    Integer t(rng.uniform(-3, 3));
    g = g * (i % 2 == 0 ? Unimodular2(1, t, 0, 1) : Unimodular2(1, 0, t, 1));
  }
  return g;
}

/// Random unimodular n x n matrix from row operations, with a random sign
/// flip so that det = -1 also occurs.
inline IntMatrix random_unimodular(Rng& rng, int n, int steps = 8) {
  IntMatrix g = IntMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    int i = static_cast<int>(rng.below(n));
    int j = static_cast<int>(rng.below(n - 1));
    if (j >= i) ++j;
    Integer t(rng.uniform(-2, 2));
    for (int k = 0; k < n; ++k) g(i, k) += t * g(j, k);
  }
  if (rng.below(2) == 1)
    for (int k = 0; k < n; ++k) g(0, k) = -g(0, k);
  return g;
}

struct CurveWithPoint {
  BinaryForm f;
  CurvePoint P;
};

/// Form with f_n = c^2, so (0, 1, c) lies on the curve; coefficients in
/// [-X, X], f0 != 0 and c != 0.
inline CurveWithPoint trivial_point_curve(Rng& rng, int n, long X = 20) {
  std::vector<Integer> c(n + 1);
  for (auto& x : c) x = rng.uniform(-X, X);
  if (c[0] == 0) c[0] = 3;
  Integer z(rng.uniform(-9, 9));
  if (z == 0) z = 2;
  c[n] = z * z;
  return {BinaryForm(c), CurvePoint{0, 1, z}};
}

/// The same curve moved by a random gamma in SL_2(Z), with the point
/// carried along; (x0, y0) is usually not (0, 1).
inline CurveWithPoint transported_point_curve(Rng& rng, int n, long X = 20) {
  for (;;) {
    CurveWithPoint base = trivial_point_curve(rng, n, X);
    Unimodular2 G = random_sl2(rng);
    BinaryForm F = sl2_act(G, base.f);
    Unimodular2 Gi = G.inverse();
    CurvePoint P{Gi.c, Gi.d, base.P.z};
    if (F[0] != 0 && !(P.x == 0)) return {F, P};
  }
}

}  // namespace fixture

#endif  // HYPERORBITS_TESTS_FIXTURES_HPP
