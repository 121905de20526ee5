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

#include "hyperorbits/cli.hpp"

#include <chrono>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hyperorbits/densities.hpp"
#include "hyperorbits/error.hpp"
#include "hyperorbits/finite_fields.hpp"
#include "hyperorbits/forms.hpp"
#include "hyperorbits/orbits.hpp"
#include "hyperorbits/rings.hpp"
#include "hyperorbits/search.hpp"
#include "hyperorbits/serialization.hpp"

namespace hyperorbits::cli {

namespace {

struct Globals {
  std::uint64_t seed = 0;
  int jobs = 1;
};

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_integer(item));
  return out;
}

CurvePoint parse_point(const std::string& text) {
  auto v = parse_integer_list(text);
  if (v.size() != 3) throw ValidationError("a point is written x,y,z");
  return CurvePoint{v[0], v[1], v[2]};
}

BinaryForm parse_form(const std::string& text, int n) {
  BinaryForm f = BinaryForm::parse(text);
  if (n > 0 && f.degree() != n) throw ValidationError("form degree does not match --n");
  return f;
}

Json envelope(const std::string& command, const Globals& g, Json input, Json payload) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"seed", g.seed},
              {"input", std::move(input)},
              {"payload", std::move(payload)}};
}

Json element_json(const AlgebraElement& x) { return x.coords(); }

// orbit --------------------------------------------------------------------

struct OrbitArgs {
  int n = 0;
  std::string form;
  std::string point;
};

int cmd_orbit(const OrbitArgs& a, const Globals& g, std::ostream& out) {
  BinaryForm f = parse_form(a.form, a.n);
  CurvePoint P = parse_point(a.point);
  validate_point(f, P);
  Unimodular2 gamma = point_transform(P);
  SymmetricPair v = pair_from_point(f, P, gamma);
  BinaryForm w = invariant_form(v);
  Json payload{{"gamma", gamma},
               {"transported_form", sl2_act(gamma, f)},
               {"pair", v},
               {"invariant_form", w},
               {"determinant_identity", w == f}};
  if (P.z != 0 && f[0] != 0) payload["x_minus_T"] = element_json(x_minus_T(f, P));
  else payload["x_minus_T"] = nullptr;
  out << envelope("orbit", g, Json{{"n", f.degree()}, {"form", f}, {"point", P}}, payload).dump(2) << '\n';
  return w == f ? kExitOk : kExitValidation;
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
  std::string form;
  std::string point;
  std::string pair;
  int trials = 20;
};

int cmd_verify(const VerifyArgs& a, const Globals& g, std::ostream& out) {
  BinaryForm f = parse_form(a.form, 0);
  Json input{{"form", f}};
  Json payload = Json::object();
  bool ok = true;
  if (!a.pair.empty()) {
    SymmetricPair v = Json::parse(a.pair).get<SymmetricPair>();
    BinaryForm w = invariant_form(v);
    input["pair"] = v;
    payload["pair_invariant_form"] = w;
    payload["pair_matches_form"] = w == f;
    ok = ok && w == f;
  }
  if (!a.point.empty()) {
    CurvePoint P = parse_point(a.point);
    validate_point(f, P);
    input["point"] = P;
    IdealData data = ideal_data_from_point(f, P);
    PairDataReport report = verify_pair_data(data.ideal, data.alpha);
    SymmetricPair from_ideal = pair_from_ideal(data.ideal, data.alpha);
    SymmetricPair from_point = pair_from_point(data.transported, CurvePoint{0, 1, P.z});
    bool ideal_identity = invariant_form(from_ideal) == data.transported;
    payload["gamma"] = data.gamma;
    payload["transported_form"] = data.transported;
    payload["pair_data"] = report;
    payload["pair_from_ideal"] = from_ideal;
    payload["pair_from_point"] = from_point;
    payload["ideal_pair_identity"] = ideal_identity;
    ok = ok && report.ok && ideal_identity;
    if (P.z != 0) {
      SquareClassResult cls = same_square_class(data.class_in_Kf, x_minus_T(f, P), a.trials, g.seed);
      payload["class_agreement"] = cls;
      ok = ok && cls.verdict != SquareClassVerdict::Distinct;
    } else {
      payload["class_agreement"] = nullptr;
    }
  }
  if (a.pair.empty() && a.point.empty()) throw ValidationError("verify needs --point or --pair");
  payload["ok"] = ok;
  out << envelope("verify", g, input, payload).dump(2) << '\n';
  return ok ? kExitOk : kExitValidation;
}

// count-fp -----------------------------------------------------------------

struct CountArgs {
  int n = 0;
  std::uint64_t p = 0;
  std::string form;
};

int cmd_count(const CountArgs& a, const Globals& g, std::ostream& out) {
  BinaryForm f = parse_form(a.form, a.n);
  OrbitStats stats = count_pairs_with_form(f, a.p, g.jobs);
  Json payload{{"stats", stats}, {"sl_n_order", sl_n_order(f.degree(), a.p)}};
  if (factorization_type_mod_p(f, a.p).separable() && f.degree() <= static_cast<int>(a.p) + 1)
    payload["prediction"] = orbit_statistics_prediction(f, a.p);
  else
    payload["prediction"] = nullptr;
  out << envelope("count-fp", g, Json{{"n", f.degree()}, {"p", a.p}, {"form", f}}, payload).dump(2)
      << '\n';
  return kExitOk;
}

// densities ----------------------------------------------------------------

struct DensityArgs {
  int genus = 0;
  int genus_max = -1;
  std::uint64_t primes = 1000;
  std::uint64_t samples = 100000;
  std::string format = "json";
};

int cmd_densities(const DensityArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  const int last = a.genus_max < 0 ? a.genus : a.genus_max;
  if (last < a.genus) throw ValidationError("--genus-max is below --genus");
  std::vector<DensityReport> reports;
  for (int genus = a.genus; genus <= last; ++genus) {
    auto start = std::chrono::steady_clock::now();
    reports.push_back(density_bound(genus, a.primes, a.samples, g.seed, g.jobs));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << "densities: g=" << genus << " done in " << secs << " s\n";
  }
  if (a.format == "csv") {
    out << density_csv_header() << '\n';
    for (const auto& r : reports) out << density_csv_row(r) << '\n';
    return kExitOk;
  }
  Json input{{"genus", a.genus}, {"genus_max", last}, {"primes", a.primes}, {"samples", a.samples}};
  Json payload = reports;
  out << envelope("densities", g, input, payload).dump(2) << '\n';
  return kExitOk;
}

// genus0 -------------------------------------------------------------------

int cmd_genus0(std::uint64_t primes, bool exact, const Globals& g, std::ostream& out) {
  Rational value = genus0_product(primes);
  long num_exp = 0, den_exp = 0;
  double num_mant = mpz_get_d_2exp(&num_exp, value.get_num().get_mpz_t());
  double den_mant = mpz_get_d_2exp(&den_exp, value.get_den().get_mpz_t());
  double log10_value = std::log10(num_mant / den_mant) + static_cast<double>(num_exp - den_exp) * std::log10(2.0);
  Json payload{{"log10", log10_value}, {"below_0_05", value < Rational(1, 20)}};
  if (exact) payload["product"] = value;
  out << envelope("genus0", g, Json{{"primes", primes}, {"exact", exact}}, payload).dump(2) << '\n';
  return kExitOk;
}

// survey -------------------------------------------------------------------

struct SurveyArgs {
  int n = 4;
  std::string height = "1000";
  std::string point_bound = "20";
  std::uint64_t count = 1000;
  std::string format = "jsonl";
};

int cmd_survey(const SurveyArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  auto start = std::chrono::steady_clock::now();
  SurveyResult result = survey(a.n, parse_integer(a.height), parse_integer(a.point_bound), a.count, g.seed, g.jobs);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << "survey: " << a.count << " curves in " << secs << " s\n";
  Json aggregate{{"schema_version", kSchemaVersion},
                 {"command", "survey"},
                 {"seed", g.seed},
                 {"input", {{"n", a.n}, {"height", result.height_bound}, {"point_bound", result.point_bound}, {"count", a.count}}},
                 {"aggregate", result.aggregate}};
  if (a.format == "csv") {
    out << survey_csv_header() << '\n';
    for (const auto& r : result.records) out << survey_csv_row(r) << '\n';
    out << "# " << aggregate.dump() << '\n';
    return kExitOk;
  }
  for (const auto& r : result.records) out << Json(r).dump() << '\n';
  out << aggregate.dump() << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integral orbits, local densities and point surveys for hyperelliptic curves",
               "hyperorbits"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--seed", globals.seed, "Random seed")->capture_default_str();
  app.add_option("--jobs", globals.jobs, "Worker threads")->capture_default_str()->check(CLI::Range(1, 1024));

  OrbitArgs orbit;
  auto* orbit_cmd = app.add_subcommand("orbit", "Pair of symmetric matrices attached to a point");
  orbit_cmd->add_option("--n", orbit.n, "Degree (checked against the form)");
  orbit_cmd->add_option("--form", orbit.form, "Coefficients f0,...,fn")->required();
  orbit_cmd->add_option("--point", orbit.point, "Point x,y,z")->required();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check pair, ideal and class data");
  verify_cmd->add_option("--form", verify.form, "Coefficients f0,...,fn")->required();
  verify_cmd->add_option("--point", verify.point, "Point x,y,z");
  verify_cmd->add_option("--pair", verify.pair, "Pair as JSON {\"A\": [[...]], \"B\": [[...]]}");
  verify_cmd->add_option("--trials", verify.trials, "Prime witnesses for the class check")->capture_default_str();

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count-fp", "Enumerate pairs over F_p with a given invariant form");
  count_cmd->add_option("--n", count.n, "Degree (checked against the form)");
  count_cmd->add_option("--p", count.p, "Prime")->required();
  count_cmd->add_option("--form", count.form, "Coefficients f0,...,fn")->required();

  DensityArgs dens;
  auto* dens_cmd = app.add_subcommand("densities", "Local density factors and the assembled bound");
  dens_cmd->add_option("--genus", dens.genus, "Genus")->required()->check(CLI::NonNegativeNumber);
  dens_cmd->add_option("--genus-max", dens.genus_max, "Last genus of a table");
  dens_cmd->add_option("--primes", dens.primes, "Truncation prime P")->capture_default_str();
  dens_cmd->add_option("--samples", dens.samples, "Monte Carlo samples")->capture_default_str();
  dens_cmd->add_option("--format", dens.format, "json or csv")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv"}));

  std::uint64_t g0_primes = 10000;
  auto* g0_cmd = app.add_subcommand("genus0", "Genus-0 Euler product over odd primes");
  g0_cmd->add_option("--primes", g0_primes, "Truncation prime P")->capture_default_str();
  bool g0_exact = false;
  g0_cmd->add_flag("--exact", g0_exact, "Include the exact rational value");

  SurveyArgs surv;
  auto* surv_cmd = app.add_subcommand("survey", "Local solubility and point search on random curves");
  surv_cmd->add_option("--n", surv.n, "Degree")->capture_default_str();
  surv_cmd->add_option("--height", surv.height, "Coefficient bound X")->capture_default_str();
  surv_cmd->add_option("--point-bound", surv.point_bound, "Point search bound B")->capture_default_str();
  surv_cmd->add_option("--count", surv.count, "Number of curves")->capture_default_str();
  surv_cmd->add_option("--format", surv.format, "jsonl or csv")
      ->capture_default_str()
      ->check(CLI::IsMember({"jsonl", "csv"}));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  try {
    if (orbit_cmd->parsed()) return cmd_orbit(orbit, globals, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, globals, out);
    if (count_cmd->parsed()) return cmd_count(count, globals, out);
    if (dens_cmd->parsed()) return cmd_densities(dens, globals, out, err);
    if (g0_cmd->parsed()) return cmd_genus0(g0_primes, g0_exact, globals, out);
    if (surv_cmd->parsed()) return cmd_survey(surv, globals, out, err);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitValidation;
}

}  // namespace hyperorbits::cli
