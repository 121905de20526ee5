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

#ifndef HYPERORBITS_SEARCH_HPP
#define HYPERORBITS_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperorbits/forms.hpp"
#include "hyperorbits/integer.hpp"
#include "hyperorbits/orbits.hpp"

namespace hyperorbits {

/// Smallest point with primitive (x, y), |x|, |y| <= B, y > 0, ordered by
/// max(|x|, y), then y, then |x|, positive x first; the point (1, 0) is tried
/// last. The returned z is nonnegative.
std::optional<CurvePoint> rational_point_search(const BinaryForm& f, const Integer& B);

/// False iff f is negative definite.
bool locally_soluble_R(const BinaryForm& f);

/// Whether z^2 = f(x, y) has a point over Q_p. Throws BudgetExceeded when the
/// residue descent does not terminate within its depth budget.
bool locally_soluble_p(const BinaryForm& f, const Integer& p);
bool locally_soluble_p(const BinaryForm& f, std::uint64_t p);

enum class LocalVerdict { Soluble, Insoluble, Unknown };
std::string to_string(LocalVerdict v);

struct PlaceVerdict {
  Integer place;  // 0 stands for the real place
  LocalVerdict verdict = LocalVerdict::Unknown;
};

struct SurveyRecord {
  std::uint64_t index = 0;
  BinaryForm form;
  int genus = 0;
  LocalVerdict locally_soluble = LocalVerdict::Unknown;
  std::vector<PlaceVerdict> places;
  std::optional<CurvePoint> point;
  Integer point_bound;
};

struct SurveyAggregate {
  std::uint64_t count = 0;
  std::uint64_t locally_soluble = 0;
  std::uint64_t locally_insoluble = 0;
  std::uint64_t unknown = 0;
  std::uint64_t with_point = 0;

  double soluble_fraction() const;
  double point_fraction() const;
};

struct SurveyResult {
  int n = 0;
  Integer height_bound;
  Integer point_bound;
  std::uint64_t seed = 0;
  std::vector<SurveyRecord> records;
  SurveyAggregate aggregate;
};

/// Places tested for f: the real place, 2, odd primes up to 4g^2 + 4 and the
/// prime divisors of the discriminant.
std::vector<Integer> survey_places(const BinaryForm& f);

SurveyRecord survey_curve(const BinaryForm& f, const Integer& B);

/// Samples `count` forms with coefficients uniform on [-X, X] and nonzero
/// discriminant. Records are ordered by index regardless of `jobs`.
SurveyResult survey(int n, const Integer& X, const Integer& B, std::uint64_t count,
                    std::uint64_t seed, int jobs = 1);

}  // namespace hyperorbits

#endif  // HYPERORBITS_SEARCH_HPP
