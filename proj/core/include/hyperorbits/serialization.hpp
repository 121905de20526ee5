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

#ifndef HYPERORBITS_SERIALIZATION_HPP
#define HYPERORBITS_SERIALIZATION_HPP

#include <nlohmann/json.hpp>

#include "hyperorbits/densities.hpp"
#include "hyperorbits/finite_fields.hpp"
#include "hyperorbits/forms.hpp"
#include "hyperorbits/orbits.hpp"
#include "hyperorbits/rings.hpp"
#include "hyperorbits/search.hpp"

// Integers and rationals are written as decimal strings ("-3", "7/9").
namespace nlohmann {

template <>
struct adl_serializer<mpz_class> {
  static void to_json(json& j, const mpz_class& v) { j = v.get_str(); }
  static void from_json(const json& j, mpz_class& v);
};

template <>
struct adl_serializer<mpq_class> {
  static void to_json(json& j, const mpq_class& v) { j = v.get_str(); }
  static void from_json(const json& j, mpq_class& v);
};

}  // namespace nlohmann

namespace hyperorbits {

using Json = nlohmann::json;

constexpr int kSchemaVersion = 1;

void to_json(Json& j, const BinaryForm& f);
void from_json(const Json& j, BinaryForm& f);
void to_json(Json& j, const Unimodular2& g);
void from_json(const Json& j, Unimodular2& g);
void to_json(Json& j, const CurvePoint& P);
void from_json(const Json& j, CurvePoint& P);
void to_json(Json& j, const IntMatrix& m);
void from_json(const Json& j, IntMatrix& m);
void to_json(Json& j, const SymmetricPair& v);
void from_json(const Json& j, SymmetricPair& v);
/// {"form", "structure"}: structure[i][j] holds the coordinates of b_i b_j.
void to_json(Json& j, const RankNRing& R);
/// Rebuilds the ring from its form; throws ValidationError when a stored
/// structure tensor disagrees.
RankNRing ring_from_json(const Json& j);

/// {"form", "transition"}: row i holds the ring coordinates of basis vector i.
void to_json(Json& j, const BasedIdeal& I);
BasedIdeal ideal_from_json(const Json& j);

void to_json(Json& j, const PairDataReport& r);
void from_json(const Json& j, PairDataReport& r);
void to_json(Json& j, const SquareClassResult& r);
void from_json(const Json& j, SquareClassResult& r);
void to_json(Json& j, const OrbitStats& s);
void from_json(const Json& j, OrbitStats& s);
void to_json(Json& j, const MuRealEstimate& e);
void from_json(const Json& j, MuRealEstimate& e);
void to_json(Json& j, const ArchimedeanFactor& a);
void from_json(const Json& j, ArchimedeanFactor& a);
void to_json(Json& j, const DensityReport& r);
void from_json(const Json& j, DensityReport& r);
void to_json(Json& j, LocalVerdict v);
void from_json(const Json& j, LocalVerdict& v);
void to_json(Json& j, const PlaceVerdict& v);
void from_json(const Json& j, PlaceVerdict& v);
void to_json(Json& j, const SurveyRecord& r);
void from_json(const Json& j, SurveyRecord& r);
void to_json(Json& j, const SurveyAggregate& a);
void from_json(const Json& j, SurveyAggregate& a);

/// CSV header and row for one density report.
std::string density_csv_header();
std::string density_csv_row(const DensityReport& r);
/// CSV header and row for one survey record.
std::string survey_csv_header();
std::string survey_csv_row(const SurveyRecord& r);

}  // namespace hyperorbits

#endif  // HYPERORBITS_SERIALIZATION_HPP
