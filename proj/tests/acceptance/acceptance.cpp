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

// Acceptance suite. Prints one PASS/FAIL line per criterion; `--only N`
// restricts the run to criterion N.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "fixtures.hpp"
#include "hyperorbits/densities.hpp"
#include "hyperorbits/finite_fields.hpp"
#include "hyperorbits/orbits.hpp"
#include "hyperorbits/rings.hpp"
#include "hyperorbits/search.hpp"
#include "oracles.hpp"
#include "templates.hpp"

using namespace hyperorbits;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int g_jobs = 1;

long nonresidue(long p) {
  for (long u = 2;; ++u) {
    bool qr = false;
    for (long s = 1; s < p; ++s) qr |= (s * s) % p == u;
    if (!qr) return u;
  }
}

BinaryForm nonzero_f0_form(int n, long X, std::uint64_t seed) {
  for (;; ++seed) {
    BinaryForm f = random_form(n, Integer(X), seed);
    if (f[0] != 0) return f;
  }
}

void determinant_identity(Outcome& o) {
  auto t0 = Clock::now();
  Rng rng(101);
  int checked = 0;
  for (int n = 2; n <= 10; n += 2) {
    for (int t = 0; t < 100; ++t) {
      auto cp = fixture::trivial_point_curve(rng, n, 50);
      o.require(invariant_form(pair_from_point(cp.f, cp.P)) == cp.f, "trivial point on " + cp.f.to_string());
      ++checked;
    }
    for (int t = 0; t < 100; ++t) {
      auto cp = fixture::transported_point_curve(rng, n, 50);
      o.require(invariant_form(pair_from_point(cp.f, cp.P)) == cp.f, "transported point on " + cp.f.to_string());
      ++checked;
    }
  }
  double s = seconds_since(t0);
  o.require(s < 30, "runtime");
  o.detail << checked << " pairs, " << std::fixed << std::setprecision(2) << s << " s";
}

void printed_templates(Outcome& o) {
  int entries = 0;
  for (const auto& printed : oracle::printed_templates()) {
    PairTemplate t = pair_template(printed.n);
    o.require(oracle::symbolic(t.A) == printed.A, "A for n=" + std::to_string(printed.n));
    o.require(oracle::symbolic(t.B) == printed.B, "B for n=" + std::to_string(printed.n));
    entries += 2 * printed.n * printed.n;
  }
  o.detail << "n = 2, 4, 6; " << entries << " symbolic entries compared";
}

void ring_discriminant_check(Outcome& o) {
  auto t0 = Clock::now();
  int count = 0;
  for (int i = 0; i < 200; ++i) {
    int n = 2 + 2 * (i % 3);
    BinaryForm f = nonzero_f0_form(n, 30, 5000 + 7 * i);
    Integer d = discriminant(f);
    o.require(ring_discriminant(RankNRing(f)) == d, "ring discriminant of " + f.to_string());
    o.require(oracle::sylvester_discriminant(f) == d, "Sylvester discriminant of " + f.to_string());
    ++count;
  }
  double s = seconds_since(t0);
  o.require(s < 30, "runtime");
  o.detail << count << " forms, " << std::fixed << std::setprecision(2) << s << " s";
}

void ring_axioms(Outcome& o) {
  int products = 0;
  for (int i = 0; i < 200; ++i) {
    int n = 2 + 2 * (i % 3);
    BinaryForm f = nonzero_f0_form(n, 30, 5000 + 7 * i);
    RankNRing R(f);
    std::vector<std::vector<Integer>> e(n, std::vector<Integer>(n, 0));
    for (int k = 0; k < n; ++k) e[k][k] = 1;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        // Closure: the product in K_f has integral ring coordinates equal to the table.
        auto coords = R.to_ring_coords(R.basis_element(a) * R.basis_element(b));
        bool integral = true;
        for (int k = 0; k < n; ++k) integral = integral && coords[k] == Rational(R.structure(a, b)[k]);
        o.require(integral, "closure for " + f.to_string());
        o.require(R.structure(a, b) == R.structure(b, a), "commutativity for " + f.to_string());
        for (int c = 0; c < n; ++c) {
          auto left = R.multiply(R.structure(a, b), e[c]);
          auto right = R.multiply(e[a], R.structure(b, c));
          o.require(left == right, "associativity for " + f.to_string());
          ++products;
        }
      }
    o.require(R.structure(0, 0) == e[0], "unit for " + f.to_string());
  }
  o.detail << "200 forms, " << products << " triple products";
}

void finite_field_totals(Outcome& o) {
  int forms = 0;
  for (long p : {2, 3, 5, 7}) {
    for (long a = 0; a < p; ++a)
      for (long b = 0; b < p; ++b)
        for (long c = 0; c < p; ++c) {
          BinaryForm f{a, b, c};
          if (f.is_zero()) continue;
          auto type = factorization_type_mod_p(f, p);
          if (!type.separable()) continue;
          OrbitStats s = count_pairs_with_form(f, p, g_jobs);
          o.require(s.total_elements == sl_n_order(2, p), "n=2 total for " + f.to_string());
          if (p == 3 || p == 5) {
            int m = type.m();
            o.require(s.orbit_count == (1 << (m - 1)), "orbit count for " + f.to_string());
            o.require(s.stabilizer_sizes == std::vector<Integer>(1 << (m - 1), Integer(1 << m)),
                      "stabilizers for " + f.to_string());
          }
          ++forms;
        }
  }
  int quartics = 0;
  double worst = 0;
  for (long code = 1; code < 32; ++code) {
    std::vector<Integer> c(5);
    for (int k = 0; k < 5; ++k) c[k] = (code >> k) & 1;
    BinaryForm f(c);
    if (!factorization_type_mod_p(f, 2).separable()) continue;
    auto t0 = Clock::now();
    OrbitStats s = count_pairs_with_form(f, 2, g_jobs);
    worst = std::max(worst, seconds_since(t0));
    o.require(s.total_elements == sl_n_order(4, 2), "n=4 total for " + f.to_string());
    ++quartics;
  }
  o.require(quartics >= 5, "at least five separable quartics");
  o.require(worst < 120, "per-form runtime");
  o.detail << forms << " quadratic forms over F_2..F_7, " << quartics << " quartics over F_2 (slowest "
           << std::fixed << std::setprecision(2) << worst << " s)";
}

void x_minus_t_consistency(Outcome& o) {
  Rng rng(606);
  int equal = 0, inconclusive = 0;
  for (int t = 0; t < 50; ++t) {
    int n = 2 + 2 * (t % 3);
    auto cp = fixture::transported_point_curve(rng, n);
    AlgebraElement x = x_minus_T(cp.f, cp.P);
    o.require(x.norm() * Rational(cp.f[0]) == Rational(cp.P.z * cp.P.z), "norm identity on " + cp.f.to_string());
    IdealData d = ideal_data_from_point(cp.f, cp.P);
    PairDataReport rep = verify_pair_data(d.ideal, d.alpha);
    o.require(rep.ok, "pair data for " + cp.f.to_string());
    o.require(invariant_form(pair_from_ideal(d.ideal, d.alpha)) == d.transported,
              "ideal pair form for " + cp.f.to_string());
    SquareClassResult r = same_square_class(d.class_in_Kf, x, 50, t);
    o.require(r.verdict != SquareClassVerdict::Distinct, "class agreement on " + cp.f.to_string() + ": " + r.witness);
    equal += r.verdict == SquareClassVerdict::Equal;
    inconclusive += r.verdict == SquareClassVerdict::Inconclusive;
  }
  o.detail << "50 curves; classes Equal " << equal << ", Inconclusive " << inconclusive << ", Distinct 0";
}

void archimedean(Outcome& o) {
  auto t0 = Clock::now();
  ArchimedeanFactor a1 = archimedean_factor(1, 1000000, 707, g_jobs);
  o.require(a1.exact && a1.normalized == 1.0 && a1.scaled == 2.0, "g=1 factor is not exactly 1");
  ArchimedeanFactor a2 = archimedean_factor(2, 1000000, 707, g_jobs);
  double z = a2.mu[3] / a2.mu_stderr[3];
  o.require(z > 3, "mu(I(3)) not 3 standard errors above 0");
  double eps = 4.0 - (a2.scaled + 3 * a2.scaled_stderr);
  o.require(eps > 0, "g=2 factor not below 4");
  double s = seconds_since(t0);
  o.require(s < 60, "runtime");
  o.detail << std::setprecision(6) << "g=1 normalized " << a1.normalized << "; g=2 scaled " << a2.scaled << " +- "
           << a2.scaled_stderr << ", mu(I(3)) " << a2.mu[3] << " (" << std::setprecision(3) << z
           << " sigma), eps " << eps << "; " << std::fixed << std::setprecision(2) << s << " s";
}

void bound_decay(Outcome& o) {
  auto t0 = Clock::now();
  double prev = INFINITY;
  std::ostringstream table;
  for (int g = 1; g <= 10; ++g) {
    DensityReport r = density_bound(g, 1000, 1000000, 808, g_jobs);
    o.require(r.bound > 0, "positive bound at g=" + std::to_string(g));
    o.require(r.bound < prev, "decreasing bound at g=" + std::to_string(g));
    if (g >= 3)
      o.require(r.bound_conservative < std::ldexp(1.0, -g), "bound below 2^-g at g=" + std::to_string(g));
    prev = r.bound;
    table << " g=" << g << ":" << std::setprecision(4) << r.bound_conservative * std::ldexp(1.0, g);
  }
  double s = seconds_since(t0);
  o.require(s < 600, "runtime");
  o.detail << "2^g * conservative bound:" << table.str() << "; " << std::fixed << std::setprecision(1) << s << " s";
}

void genus0(Outcome& o) {
  auto t0 = Clock::now();
  Rational prod = genus0_product(10000);
  double s = seconds_since(t0);
  o.require(prod < Rational(1, 20), "product not below 0.05");
  o.require(s < 10, "runtime");
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, prod.get_num_mpz_t());
  long exp2d = 0;
  double mantd = mpz_get_d_2exp(&exp2d, prod.get_den_mpz_t());
  double log10 = (std::log10(mant / mantd) + (exp2 - exp2d) * std::log10(2.0));
  o.detail << "log10 product " << std::setprecision(5) << log10 << "; " << std::fixed << std::setprecision(2) << s
           << " s";
}

void zeta_gap(Outcome& o) {
  long double prev = INFINITY;
  for (std::uint64_t P : {100, 1000, 10000}) {
    long double gap = zeta_identity_gap(4, P);
    o.require(gap < prev, "gap not shrinking at P=" + std::to_string(P));
    prev = gap;
    o.detail << "P=" << P << ": " << std::setprecision(3) << static_cast<double>(gap) << " ";
  }
  o.require(prev < 1e-2L, "gap at 10^4");
}

void irreducible_count(Outcome& o) {
  for (long p : {3, 5, 7}) {
    Integer c = irreducible_form_count(4, p);
    Integer p4 = p * p * p * p;
    Rational dev = Rational(c) - Rational(p4 * p, 4);
    o.require(abs(dev) <= Rational(3 * p4), "deviation at p=" + std::to_string(p));
    if (p <= 5) {
      long brute = 0;
      for (long code = 0; code < p4 * p; ++code) {
        std::vector<Integer> v(5);
        long r = code;
        for (auto& x : v) {
          x = r % p;
          r /= p;
        }
        brute += oracle::brute_irreducible(BinaryForm(v), p);
      }
      o.require(c == brute, "trial-division count at p=" + std::to_string(p));
    }
    o.detail << "p=" << p << ": " << c << " (p^5/4 = " << std::setprecision(6) << Integer(p4 * p).get_d() / 4 << ") ";
  }
}

void local_solubility(Outcome& o) {
  Rng rng(1212);
  int family = 0;
  for (long p : {3, 5, 7}) {
    long u = nonresidue(p);
    for (int t = 0; t < 20;) {
      long b = rng.uniform(-50, 50);
      long c = p * rng.uniform(-10, 10) + 1 + static_cast<long>(rng.below(p - 1));
      BinaryForm f{u * (1 + 2 * p * rng.uniform(0, 3)), p * b, p * c};
      if (discriminant(f) == 0) continue;
      o.require(!locally_soluble_p(f, p), "family member " + f.to_string() + " at p=" + std::to_string(p));
      ++t;
      ++family;
    }
  }
  int forms = 0, compared = 0, undetermined = 0;
  while (forms < 100) {
    std::vector<Integer> c(5);
    for (auto& x : c) x = rng.uniform(-40, 40);
    BinaryForm f(c);
    if (discriminant(f) == 0) continue;
    ++forms;
    for (long p : {2, 3, 5, 7}) {
      int v = oracle::local_oracle(f, p, 3);
      if (v < 0) {
        ++undetermined;
        continue;
      }
      ++compared;
      o.require(locally_soluble_p(f, p) == (v == 1), "descent vs P^1(Z/p^3) on " + f.to_string());
    }
  }
  o.detail << family << " insoluble family members; " << compared << " (form, p) comparisons against P^1(Z/p^3), "
           << undetermined << " undetermined at that precision";
}

void survey_sanity(Outcome& o) {
  auto t0 = Clock::now();
  SurveyResult r = survey(4, 1000, 20, 10000, 1313, g_jobs);
  int inconsistent = 0;
  for (const auto& rec : r.records) {
    if (!rec.point) continue;
    bool all = rec.locally_soluble == LocalVerdict::Soluble;
    for (const auto& pv : rec.places) all = all && pv.verdict == LocalVerdict::Soluble;
    inconsistent += !all;
  }
  double frac = r.aggregate.soluble_fraction();
  o.require(frac >= 0.65 && frac <= 0.95, "soluble fraction outside [0.65, 0.95]");
  o.require(inconsistent == 0, "curve with a point failed a local test");
  o.detail << "soluble fraction " << std::setprecision(4) << frac << ", unknown " << r.aggregate.unknown
           << ", with point " << r.aggregate.with_point << ", inconsistent " << inconsistent << "; " << std::fixed
           << std::setprecision(1) << seconds_since(t0) << " s";
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperorbits acceptance suite"};
  int only = 0;
  g_jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  app.add_option("--only", only, "run a single criterion (1-13)")->check(CLI::Range(1, 13));
  app.add_option("--jobs", g_jobs, "worker threads")->check(CLI::Range(1, 1024));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "determinant identity", determinant_identity},
      {2, "printed templates", printed_templates},
      {3, "ring discriminant", ring_discriminant_check},
      {4, "ring axioms", ring_axioms},
      {5, "F_p orbit totals", finite_field_totals},
      {6, "x - T consistency", x_minus_t_consistency},
      {7, "archimedean factor", archimedean},
      {8, "bound decay", bound_decay},
      {9, "genus-0 product", genus0},
      {10, "zeta identity", zeta_gap},
      {11, "irreducible count", irreducible_count},
      {12, "local solubility", local_solubility},
      {13, "survey sanity", survey_sanity},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail.str()
              << std::endl;
  }
  return all ? 0 : 1;
}
