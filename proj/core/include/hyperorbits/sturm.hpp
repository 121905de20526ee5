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

#ifndef HYPERORBITS_STURM_HPP
#define HYPERORBITS_STURM_HPP

#include <vector>

#include "hyperorbits/integer.hpp"
#include "hyperorbits/polynomial.hpp"

namespace hyperorbits {

/// Number of distinct real roots of a nonzero integer polynomial. Uses a
/// sign-corrected subresultant remainder sequence, so every intermediate
/// stays integral and only leading-coefficient signs are inspected.
int count_real_roots(const IntPoly& a);

/// Full Sturm chain kept for interval queries.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& a);

  /// Sign variations of the chain at x.
  int variations(const Rational& x) const;
  /// Sign variations at +infinity (sign > 0) or -infinity (sign < 0).
  int variations_at_infinity(int sign) const;
  /// Distinct real roots in the half-open interval (lo, hi].
  int count(const Rational& lo, const Rational& hi) const;
  int total() const { return variations_at_infinity(-1) - variations_at_infinity(1); }

  const IntPoly& polynomial() const { return chain_.front(); }

 private:
  std::vector<IntPoly> chain_;
};

/// Interval (lo, hi] holding exactly one root; lo == hi marks an exact
/// rational root.
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// Isolating intervals for the distinct real roots, sorted increasingly.
std::vector<RootInterval> isolate_real_roots(const IntPoly& a);

/// Halves an isolating interval, keeping the half that holds the root.
RootInterval bisect(const SturmSequence& chain, const RootInterval& iv);

}  // namespace hyperorbits

#endif  // HYPERORBITS_STURM_HPP
