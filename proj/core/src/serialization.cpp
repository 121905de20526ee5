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

#include "hyperorbits/serialization.hpp"

#include <sstream>

#include "hyperorbits/error.hpp"

namespace nlohmann {

void adl_serializer<mpz_class>::from_json(const json& j, mpz_class& v) {
  if (j.is_number_integer()) {
    v = mpz_class(std::to_string(j.get<long long>()));
    return;
  }
  v = hyperorbits::parse_integer(j.get<std::string>());
}

void adl_serializer<mpq_class>::from_json(const json& j, mpq_class& v) {
  if (j.is_number_integer()) {
    v = mpq_class(mpz_class(std::to_string(j.get<long long>())));
    return;
  }
  v = hyperorbits::parse_rational(j.get<std::string>());
}

}  // namespace nlohmann

namespace hyperorbits {

void to_json(Json& j, const BinaryForm& f) { j = f.coeffs(); }

void from_json(const Json& j, BinaryForm& f) {
  if (j.is_string()) {
    f = BinaryForm::parse(j.get<std::string>());
    return;
  }
  f = BinaryForm(j.get<std::vector<Integer>>());
}

void to_json(Json& j, const Unimodular2& g) { j = Json::array({g.a, g.b, g.c, g.d}); }

void from_json(const Json& j, Unimodular2& g) {
  auto v = j.get<std::vector<Integer>>();
  if (v.size() != 4) throw ValidationError("unimodular matrix needs four entries");
  g = Unimodular2(v[0], v[1], v[2], v[3]);
}

void to_json(Json& j, const CurvePoint& P) { j = Json::array({P.x, P.y, P.z}); }

void from_json(const Json& j, CurvePoint& P) {
  auto v = j.get<std::vector<Integer>>();
  if (v.size() != 3) throw ValidationError("a point needs three coordinates");
  P = CurvePoint{v[0], v[1], v[2]};
}

void to_json(Json& j, const IntMatrix& m) {
  j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    j.push_back(std::move(row));
  }
}

void from_json(const Json& j, IntMatrix& m) {
  auto rows = j.get<std::vector<std::vector<Integer>>>();
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  m = IntMatrix(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ValidationError("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rows[i][k];
  }
}

void to_json(Json& j, const SymmetricPair& v) { j = Json{{"A", v.A}, {"B", v.B}}; }

void from_json(const Json& j, SymmetricPair& v) {
  v = SymmetricPair(j.at("A").get<IntMatrix>(), j.at("B").get<IntMatrix>());
}

void to_json(Json& j, const PairDataReport& r) {
  j = Json{{"ok", r.ok},
           {"containment", r.containment},
           {"norm_equation", r.norm_equation},
           {"norm_ideal", r.norm_ideal},
           {"norm_alpha", r.norm_alpha},
           {"norm_power", r.norm_power},
           {"diagnostics", r.diagnostics}};
}

void from_json(const Json& j, PairDataReport& r) {
  j.at("ok").get_to(r.ok);
  j.at("containment").get_to(r.containment);
  j.at("norm_equation").get_to(r.norm_equation);
  j.at("norm_ideal").get_to(r.norm_ideal);
  j.at("norm_alpha").get_to(r.norm_alpha);
  j.at("norm_power").get_to(r.norm_power);
  j.at("diagnostics").get_to(r.diagnostics);
}

void to_json(Json& j, const SquareClassResult& r) {
  j = Json{{"verdict", to_string(r.verdict)},
           {"real_places", r.real_places},
           {"primes_used", r.primes_used},
           {"witness", r.witness}};
}

void from_json(const Json& j, SquareClassResult& r) {
  const std::string v = j.at("verdict").get<std::string>();
  if (v == to_string(SquareClassVerdict::Equal)) r.verdict = SquareClassVerdict::Equal;
  else if (v == to_string(SquareClassVerdict::Distinct)) r.verdict = SquareClassVerdict::Distinct;
  else if (v == to_string(SquareClassVerdict::Inconclusive)) r.verdict = SquareClassVerdict::Inconclusive;
  else throw ValidationError("unknown square class verdict: " + v);
  j.at("real_places").get_to(r.real_places);
  j.at("primes_used").get_to(r.primes_used);
  j.at("witness").get_to(r.witness);
}

void to_json(Json& j, const OrbitStats& s) {
  j = Json{{"p", s.p},
           {"n", s.n},
           {"form", s.form},
           {"total_elements", s.total_elements},
           {"group_order", s.group_order},
           {"orbit_count", s.orbit_count ? Json(*s.orbit_count) : Json(nullptr)},
           {"stabilizer_sizes", s.stabilizer_sizes},
           {"square_point_count", s.square_point_count ? Json(*s.square_point_count) : Json(nullptr)},
           {"enumerated", s.enumerated}};
}

void from_json(const Json& j, OrbitStats& s) {
  j.at("p").get_to(s.p);
  j.at("n").get_to(s.n);
  j.at("form").get_to(s.form);
  j.at("total_elements").get_to(s.total_elements);
  j.at("group_order").get_to(s.group_order);
  const Json& oc = j.at("orbit_count");
  s.orbit_count = oc.is_null() ? std::nullopt : std::optional<int>(oc.get<int>());
  j.at("stabilizer_sizes").get_to(s.stabilizer_sizes);
  const Json& sq = j.at("square_point_count");
  s.square_point_count = sq.is_null() ? std::nullopt : std::optional<int>(sq.get<int>());
  j.at("enumerated").get_to(s.enumerated);
}

void to_json(Json& j, const MuRealEstimate& e) {
  j = Json{{"n", e.n}, {"samples", e.samples}, {"seed", e.seed}, {"counts", e.counts}};
}

void from_json(const Json& j, MuRealEstimate& e) {
  j.at("n").get_to(e.n);
  j.at("samples").get_to(e.samples);
  j.at("seed").get_to(e.seed);
  j.at("counts").get_to(e.counts);
}

void to_json(Json& j, const ArchimedeanFactor& a) {
  j = Json{{"g", a.g},
           {"normalized", a.normalized},
           {"normalized_stderr", a.normalized_stderr},
           {"scaled", a.scaled},
           {"scaled_stderr", a.scaled_stderr},
           {"exact", a.exact},
           {"samples", a.samples},
           {"mu", a.mu},
           {"mu_stderr", a.mu_stderr}};
}

void from_json(const Json& j, ArchimedeanFactor& a) {
  j.at("g").get_to(a.g);
  j.at("normalized").get_to(a.normalized);
  j.at("normalized_stderr").get_to(a.normalized_stderr);
  j.at("scaled").get_to(a.scaled);
  j.at("scaled_stderr").get_to(a.scaled_stderr);
  j.at("exact").get_to(a.exact);
  j.at("samples").get_to(a.samples);
  j.at("mu").get_to(a.mu);
  j.at("mu_stderr").get_to(a.mu_stderr);
}

void to_json(Json& j, const DensityReport& r) {
  Json finite = Json::object();
  for (const auto& [p, v] : r.finite) finite[std::to_string(p)] = v;
  j = Json{{"g", r.g},
           {"n", r.n},
           {"truncation_prime", r.truncation_prime},
           {"samples", r.samples},
           {"seed", r.seed},
           {"archimedean", r.archimedean},
           {"archimedean_term", r.archimedean_term},
           {"archimedean_term_stderr", r.archimedean_term_stderr},
           {"two_adic", r.two_adic},
           {"finite", std::move(finite)},
           {"finite_product", r.finite_product},
           {"bound", r.bound},
           {"bound_conservative", r.bound_conservative}};
}

void from_json(const Json& j, DensityReport& r) {
  j.at("g").get_to(r.g);
  j.at("n").get_to(r.n);
  j.at("truncation_prime").get_to(r.truncation_prime);
  j.at("samples").get_to(r.samples);
  j.at("seed").get_to(r.seed);
  j.at("archimedean").get_to(r.archimedean);
  j.at("archimedean_term").get_to(r.archimedean_term);
  j.at("archimedean_term_stderr").get_to(r.archimedean_term_stderr);
  j.at("two_adic").get_to(r.two_adic);
  r.finite.clear();
  for (const auto& [key, value] : j.at("finite").items()) r.finite[std::stoull(key)] = value.get<double>();
  j.at("finite_product").get_to(r.finite_product);
  j.at("bound").get_to(r.bound);
  j.at("bound_conservative").get_to(r.bound_conservative);
}

void to_json(Json& j, LocalVerdict v) { j = to_string(v); }

void from_json(const Json& j, LocalVerdict& v) {
  const std::string s = j.get<std::string>();
  if (s == "soluble") v = LocalVerdict::Soluble;
  else if (s == "insoluble") v = LocalVerdict::Insoluble;
  else if (s == "unknown") v = LocalVerdict::Unknown;
  else throw ValidationError("unknown local verdict: " + s);
}

void to_json(Json& j, const PlaceVerdict& v) {
  j = Json{{"place", v.place == 0 ? Json("inf") : Json(v.place)}, {"verdict", v.verdict}};
}

void from_json(const Json& j, PlaceVerdict& v) {
  const Json& place = j.at("place");
  v.place = place == "inf" ? Integer(0) : place.get<Integer>();
  j.at("verdict").get_to(v.verdict);
}

void to_json(Json& j, const SurveyRecord& r) {
  j = Json{{"index", r.index},
           {"form", r.form},
           {"genus", r.genus},
           {"locally_soluble", r.locally_soluble},
           {"places", r.places},
           {"point", r.point ? Json(*r.point) : Json(nullptr)},
           {"point_bound", r.point_bound}};
}

void from_json(const Json& j, SurveyRecord& r) {
  j.at("index").get_to(r.index);
  j.at("form").get_to(r.form);
  j.at("genus").get_to(r.genus);
  j.at("locally_soluble").get_to(r.locally_soluble);
  j.at("places").get_to(r.places);
  const Json& point = j.at("point");
  r.point = point.is_null() ? std::nullopt : std::optional<CurvePoint>(point.get<CurvePoint>());
  j.at("point_bound").get_to(r.point_bound);
}

void to_json(Json& j, const SurveyAggregate& a) {
  j = Json{{"count", a.count},
           {"locally_soluble", a.locally_soluble},
           {"locally_insoluble", a.locally_insoluble},
           {"unknown", a.unknown},
           {"with_point", a.with_point},
           {"soluble_fraction", a.soluble_fraction()},
           {"point_fraction", a.point_fraction()}};
}

void from_json(const Json& j, SurveyAggregate& a) {
  j.at("count").get_to(a.count);
  j.at("locally_soluble").get_to(a.locally_soluble);
  j.at("locally_insoluble").get_to(a.locally_insoluble);
  j.at("unknown").get_to(a.unknown);
  j.at("with_point").get_to(a.with_point);
}

namespace {

std::string fmt_double(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

}  // namespace

void to_json(Json& j, const RankNRing& R) {
  const int n = R.rank();
  Json table = Json::array();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    for (int k = 0; k < n; ++k) row.push_back(R.structure(i, k));
    table.push_back(row);
  }
  j = Json{{"form", R.form()}, {"structure", table}};
}

RankNRing ring_from_json(const Json& j) {
  RankNRing R(j.at("form").get<BinaryForm>());
  if (j.contains("structure")) {
    const Json& table = j.at("structure");
    const int n = R.rank();
    if (!table.is_array() || static_cast<int>(table.size()) != n)
      throw ValidationError("structure tensor has the wrong shape");
    for (int i = 0; i < n; ++i) {
      if (!table[i].is_array() || static_cast<int>(table[i].size()) != n)
        throw ValidationError("structure tensor has the wrong shape");
      for (int k = 0; k < n; ++k)
        if (table[i][k].get<std::vector<Integer>>() != R.structure(i, k))
          throw ValidationError("structure tensor does not match the form");
    }
  }
  return R;
}

void to_json(Json& j, const BasedIdeal& I) {
  const RatMatrix& T = I.transition();
  Json rows = Json::array();
  for (std::size_t i = 0; i < T.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < T.cols(); ++k) row.push_back(T(i, k));
    rows.push_back(row);
  }
  j = Json{{"form", I.ring().form()}, {"transition", rows}};
}

BasedIdeal ideal_from_json(const Json& j) {
  RankNRing R(j.at("form").get<BinaryForm>());
  const Json& rows = j.at("transition");
  const int n = R.rank();
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw ValidationError("transition matrix must be n x n");
  std::vector<AlgebraElement> basis;
  for (const auto& row : rows) {
    auto coords = row.get<std::vector<Rational>>();
    if (static_cast<int>(coords.size()) != n) throw ValidationError("transition matrix must be n x n");
    basis.push_back(R.from_ring_coords(coords));
  }
  return BasedIdeal(R, basis);
}

std::string density_csv_header() {
  return "g,n,truncation_prime,samples,seed,archimedean_normalized,archimedean_term,"
         "archimedean_term_stderr,two_adic,finite_product,bound,bound_conservative";
}

std::string density_csv_row(const DensityReport& r) {
  std::ostringstream out;
  out << r.g << ',' << r.n << ',' << r.truncation_prime << ',' << r.samples << ',' << r.seed << ','
      << fmt_double(r.archimedean.normalized) << ',' << fmt_double(r.archimedean_term) << ','
      << fmt_double(r.archimedean_term_stderr) << ',' << fmt_double(r.two_adic) << ','
      << fmt_double(r.finite_product) << ',' << fmt_double(r.bound) << ','
      << fmt_double(r.bound_conservative);
  return out.str();
}

std::string survey_csv_header() { return "index,form,genus,locally_soluble,insoluble_at,point"; }

std::string survey_csv_row(const SurveyRecord& r) {
  std::string insoluble;
  for (const auto& pv : r.places) {
    if (pv.verdict != LocalVerdict::Insoluble) continue;
    if (!insoluble.empty()) insoluble += ' ';
    insoluble += pv.place == 0 ? std::string("inf") : pv.place.get_str();
  }
  std::string point;
  if (r.point) point = r.point->x.get_str() + ' ' + r.point->y.get_str() + ' ' + r.point->z.get_str();
  return std::to_string(r.index) + ",\"" + r.form.to_string() + "\"," + std::to_string(r.genus) + ',' +
         to_string(r.locally_soluble) + ',' + insoluble + ',' + point;
}

}  // namespace hyperorbits
