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

#include <gtest/gtest.h>

#include <cmath>

#include "hyperorbits/densities.hpp"
#include "hyperorbits/error.hpp"
#include "hyperorbits/finite_fields.hpp"
#include "hyperorbits/forms.hpp"
#include "hyperorbits/rng.hpp"
#include "oracles.hpp"

using namespace hyperorbits;

namespace {

Rational pow_rat(long p, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return Rational(r);
}

Rational sum(const std::vector<Rational>& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

}  // namespace

TEST(MuReal, QuadraticAgreesWithIntegration) {
  MuRealEstimate e = mu_real(2, 400000, 17);
  double oracle = oracle::quadratic_two_root_probability(2000);
  EXPECT_NEAR(e.estimate(1), oracle, 3 * e.stderr_of(1) + 1e-4);
  EXPECT_DOUBLE_EQ(e.estimate(0) + e.estimate(1), 1.0);
}

TEST(MuReal, OppositeSignsForceTwoRoots) {
  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    long a = rng.uniform(1, 1000), c = rng.uniform(1, 1000), b = rng.uniform(-1000, 1000);
    EXPECT_EQ(real_root_count(BinaryForm{a, b, -c}), 2);
  }
}

TEST(MuReal, CountsPartitionSamples) {
  for (int n : {2, 4, 6, 8}) {
    MuRealEstimate e = mu_real(n, 20000, 5);
    std::uint64_t total = 0;
    for (auto c : e.counts) total += c;
    EXPECT_EQ(total, 20000u);
    EXPECT_EQ(e.counts.size(), static_cast<std::size_t>(n / 2 + 1));
  }
}

TEST(MuReal, IndependentOfJobs) {
  MuRealEstimate a = mu_real(6, 50000, 9, 1);
  MuRealEstimate b = mu_real(6, 50000, 9, 4);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_EQ(mu_real(6, 50000, 9, 1).counts, a.counts);
}

TEST(MuReal, ZeroSamplesRejected) { EXPECT_THROW(mu_real(4, 0, 1), ValidationError); }

TEST(MuP, SpecExamples) {
  std::vector<Rational> d = mu_p_distribution(2, 2);
  EXPECT_EQ(d[1], Rational(1, 2));  // 4/8
  EXPECT_EQ(d[2], Rational(3, 8));
  EXPECT_EQ(mu_p(2, 1, 2), Rational(1, 2));
}

TEST(MuP, GeneratingFunctionMatchesEnumeration) {
  for (int n : {2, 4})
    for (long p : {2, 3, 5}) EXPECT_EQ(mu_p_distribution(n, p), mu_p_enumerated(n, p)) << n << " " << p;
  EXPECT_EQ(mu_p_distribution(6, 3), mu_p_enumerated(6, 3));
}

TEST(MuP, EnumerationAgreesWithBruteFactorCount) {
  // Independent count of distinct factors by trial division, n = 2 and 4 over F_3.
  for (int n : {2, 4}) {
    const long p = 3;
    std::vector<Rational> counts(n + 1, Rational(0));
    long total = 1;
    for (int i = 0; i <= n; ++i) total *= p;
    for (long code = 1; code < total; ++code) {
      std::vector<Integer> c(n + 1);
      long r = code;
      for (auto& x : c) {
        x = r % p;
        r /= p;
      }
      counts[oracle::brute_factor_count(BinaryForm(c), p)] += Rational(1, total);
    }
    EXPECT_EQ(counts, mu_p_distribution(n, p));
  }
}

TEST(MuP, SumsToOneMinusZeroForm) {
  for (int n : {2, 4, 6, 8, 12})
    for (long p : {2, 3, 5, 7, 101}) EXPECT_EQ(sum(mu_p_distribution(n, p)), 1 - 1 / pow_rat(p, n + 1));
}

TEST(MuP, EnumerationBudget) { EXPECT_THROW(mu_p_enumerated(8, 7), BudgetExceeded); }

TEST(Mu8, LiftingAndEnumeration) {
  EXPECT_EQ(mu_8_enumerated(2), mu_p_distribution(2, 2));
  EXPECT_EQ(mu_8_enumerated(4), mu_8_distribution(4));
  EXPECT_EQ(mu_8(4, 4), mu_8_enumerated(4)[4]);
  EXPECT_EQ(sum(mu_8_distribution(6)), 1 - 1 / pow_rat(2, 7));
  EXPECT_THROW(mu_8_enumerated(6), BudgetExceeded);
}

TEST(IrreducibleCount, NearPnPlusOneOverN) {
  Integer c = irreducible_form_count(4, 5);
  Rational dev = Rational(c) - pow_rat(5, 5) / 4;
  EXPECT_LE(Rational(abs(dev)), Rational(3 * pow_rat(5, 4)));
  // The same count by trial division.
  long brute = 0;
  for (long code = 0; code < 3125; ++code) {
    std::vector<Integer> v(5);
    long r = code;
    for (auto& x : v) {
      x = r % 5;
      r /= 5;
    }
    brute += oracle::brute_irreducible(BinaryForm(v), 5);
  }
  EXPECT_EQ(c, brute);
}

TEST(Archimedean, LowGenusExact) {
  for (int g : {0, 1}) {
    ArchimedeanFactor a = archimedean_factor(g, 1000, 3);
    EXPECT_TRUE(a.exact);
    EXPECT_EQ(a.normalized, 1.0);
    EXPECT_EQ(a.scaled, std::ldexp(1.0, g));
    EXPECT_EQ(a.scaled_stderr, 0.0);
  }
  EXPECT_EQ(archimedean_factor(1, 0, 0).scaled, 2.0);
}

TEST(Archimedean, GenusTwoBelowFour) {
  ArchimedeanFactor a = archimedean_factor(2, 200000, 7);
  EXPECT_FALSE(a.exact);
  ASSERT_EQ(a.mu.size(), 4u);
  EXPECT_GT(a.mu[3], 0.0);
  EXPECT_LT(a.scaled, 4.0);
  // Direct recomputation of the weighted sum.
  double s = 0;
  for (int m = 0; m <= 3; ++m) s += std::max(1, 2 * m) / std::ldexp(1.0, m) * a.mu[m];
  EXPECT_NEAR(a.normalized, s, 1e-12);
  EXPECT_THROW(archimedean_factor(2, 0, 0), ValidationError);
}

TEST(FiniteFactors, ExplicitSums) {
  for (long p : {3, 5, 7}) {
    auto d = mu_p_distribution(4, p);
    Rational s = 0;
    for (int m = 0; m <= 4; ++m) {
      Rational w = m == 0 ? Rational(2 * (p + 1)) : Rational(p + 1) / pow_rat(2, m - 1);
      s += (w < 1 ? w : Rational(1)) * d[m];
    }
    EXPECT_EQ(finite_factor(4, p), s);
    EXPECT_LE(finite_factor(4, p), Rational(1));
  }
  auto d8 = mu_8_distribution(4);
  Rational t = 0;
  for (int m = 0; m <= 4; ++m) {
    Rational w = Rational(12) / pow_rat(2, 4 + m - 1);
    t += (w < 1 ? w : Rational(1)) * d8[m];
  }
  EXPECT_EQ(two_adic_factor(4), t);
}

TEST(DensityBound, StructureAndDeterminism) {
  DensityReport r = density_bound(2, 50, 20000, 4);
  EXPECT_EQ(r.n, 6);
  EXPECT_EQ(r.finite.size(), 14u);  // odd primes up to 50
  double prod = 1;
  for (const auto& [p, v] : r.finite) {
    EXPECT_GT(v, 0);
    EXPECT_LE(v, 1);
    prod *= v;
  }
  EXPECT_NEAR(r.finite_product, prod, 1e-12);
  EXPECT_NEAR(r.bound, r.archimedean_term * r.two_adic * r.finite_product, 1e-12);
  EXPECT_GE(r.bound_conservative, r.bound);
  EXPECT_GT(r.bound, 0);
  DensityReport again = density_bound(2, 50, 20000, 4, 3);
  EXPECT_EQ(again.bound, r.bound);
}

TEST(Genus0, Examples) {
  EXPECT_EQ(genus0_product(3), Rational(7, 9));
  EXPECT_EQ(genus0_product(5), Rational(7, 9) * Rational(17, 25));
  EXPECT_EQ(genus0_product(6), genus0_product(5));
  EXPECT_LT(genus0_product(1000), genus0_product(100));
  EXPECT_THROW(genus0_product(2), ValidationError);
}

TEST(ZetaGap, ShrinksWithP) {
  EXPECT_LT(zeta_identity_gap(2, 10000), 1e-3L);
  EXPECT_LT(zeta_identity_gap(4, 10000), 1e-2L);
  long double prev = 1;
  for (std::uint64_t P : {100, 1000, 10000}) {
    long double gap = zeta_identity_gap(4, P);
    EXPECT_LT(gap, prev);
    prev = gap;
  }
}

TEST(ZetaGap, BoostZetaMatchesSeries) {
  // The product identity at P = 10^4 pins zeta(2) zeta(3) via an independent series.
  long double direct = oracle::zeta_series(2) * oracle::zeta_series(3);
  long double euler = 1;
  for (std::uint64_t p = 2; p < 10000; ++p) {
    bool prime = true;
    for (std::uint64_t q = 2; q * q <= p; ++q) prime &= p % q != 0;
    if (!prime) continue;
    long double pp = p;
    euler *= (1 - 1 / (pp * pp)) * (1 - 1 / (pp * pp * pp));
  }
  EXPECT_NEAR(static_cast<double>(std::fabs(direct * euler - 1)), static_cast<double>(zeta_identity_gap(3, 10000)),
              1e-9);
}
