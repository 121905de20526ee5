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

#include <numeric>

#include "hyperorbits/error.hpp"
#include "hyperorbits/fp_poly.hpp"
#include "hyperorbits/integer.hpp"
#include "hyperorbits/matrix.hpp"
#include "hyperorbits/polynomial.hpp"
#include "hyperorbits/rng.hpp"
#include "hyperorbits/sturm.hpp"
#include "oracles.hpp"

using namespace hyperorbits;

TEST(Integer, ParseAndPrint) {
  EXPECT_EQ(parse_integer(" -123 "), -123);
  EXPECT_EQ(to_string(parse_integer("123456789012345678901234567890")), "123456789012345678901234567890");
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_THROW(parse_integer("12x"), ValidationError);
  EXPECT_THROW(parse_integer(""), ValidationError);
}

TEST(Integer, SquaresAndValuations) {
  Integer r;
  EXPECT_TRUE(is_square(Integer(144), &r));
  EXPECT_EQ(r, 12);
  EXPECT_TRUE(is_square(Integer(0), &r));
  EXPECT_FALSE(is_square(Integer(-4)));
  EXPECT_FALSE(is_square(Integer(2)));
  EXPECT_EQ(valuation(Integer(48), Integer(2)), 4);
  EXPECT_EQ(valuation(Rational(9, 250), Integer(5)), -3);
}

TEST(Integer, PrimesAgainstTrialDivision) {
  auto primes = primes_up_to(2000);
  std::size_t idx = 0;
  for (std::uint64_t k = 2; k <= 2000; ++k) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= k; ++d)
      if (k % d == 0) prime = false;
    EXPECT_EQ(is_prime(k), prime) << k;
    if (prime) {
      ASSERT_LT(idx, primes.size());
      EXPECT_EQ(primes[idx++], k);
    }
  }
  EXPECT_EQ(idx, primes.size());
  EXPECT_TRUE(is_prime(Integer("170141183460469231731687303715884105727")));
}

TEST(Integer, FactorisationMultipliesBack) {
  Rng rng(7);
  for (int t = 0; t < 40; ++t) {
    Integer n = rng.uniform(Integer(1), Integer("1000000000000000000000"));
    Integer back = 1;
    for (const auto& [q, e] : factor_integer(n)) {
      EXPECT_TRUE(is_prime(q));
      back *= ipow(q, static_cast<unsigned long>(e));
    }
    EXPECT_EQ(back, n);
  }
  auto f = factor_integer(Integer(-360));
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], std::make_pair(Integer(2), 3));
}

TEST(Rng, StreamsAreDeterministicAndDistinct) {
  Rng a(1, 2), b(1, 2), c(1, 3);
  for (int i = 0; i < 10; ++i) {
    auto x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_NE(x, c.next());
  }
  Rng r(3);
  for (int i = 0; i < 1000; ++i) {
    auto v = r.uniform(-3, 3);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 3);
  }
}

TEST(Matrix, DeterminantMatchesGaussianElimination) {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    int n = 1 + t % 6;
    IntMatrix m(n, n);
    std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        m(i, j) = rng.uniform(-9, 9);
        q[i][j] = m(i, j);
      }
    EXPECT_EQ(Rational(determinant(m)), oracle::gauss_det(q));
    auto inv = inverse(to_rational(m));
    if (determinant(m) != 0) {
      ASSERT_TRUE(inv.has_value());
      EXPECT_EQ(to_rational(m) * *inv, RatMatrix::identity(n));
    } else {
      EXPECT_FALSE(inv.has_value());
    }
  }
}

TEST(Matrix, HermiteNormalFormSpansSameLattice) {
  IntMatrix gens(3, 2);
  gens(0, 0) = 4; gens(0, 1) = 6;
  gens(1, 0) = 2; gens(1, 1) = 3;
  gens(2, 0) = 0; gens(2, 1) = 5;
  IntMatrix h = hermite_normal_form(gens);
  ASSERT_EQ(h.rows(), 2u);
  EXPECT_EQ(h(1, 0), 0);
  EXPECT_GT(h(0, 0), 0);
  EXPECT_GT(h(1, 1), 0);
  // index of the lattice spanned by (2,3), (0,5) is 10
  EXPECT_EQ(determinant(h), 10);
}

TEST(Polynomial, ResultantMatchesSylvester) {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    int n = 2 + 2 * (t % 3);
    std::vector<Integer> c(n + 1);
    for (auto& x : c) x = rng.uniform(-15, 15);
    if (c[0] == 0) c[0] = 1;
    BinaryForm f(c);
    IntPoly F = f.dehomogenized();
    Rational disc = Rational(resultant(F, derivative(F))) / Rational(f[0]);
    if ((n * (n - 1) / 2) % 2) disc = -disc;
    EXPECT_EQ(disc, Rational(oracle::sylvester_discriminant(f)));
  }
}

TEST(Polynomial, ArithmeticIdentities) {
  IntPoly a{1, 2, 3}, b{-1, 0, 1};
  EXPECT_EQ(poly_mul(a, b), (IntPoly{-1, -2, -2, 2, 3}));
  RatPoly q, r;
  poly_divmod(to_rational(poly_mul(a, b)), to_rational(b), q, r);
  EXPECT_EQ(q, to_rational(a));
  EXPECT_TRUE(r.empty());
  EXPECT_EQ(content(IntPoly{6, -9, 12}), 3);
  EXPECT_EQ(sign_at(IntPoly{-2, 0, 1}, Rational(3, 2)), 1);
  EXPECT_EQ(sign_at(IntPoly{-2, 0, 1}, Rational(7, 5)), -1);
}

TEST(Sturm, CountsAgreeWithEigenvalues) {
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + 2 * (t % 5);
    std::vector<Integer> c(n + 1);
    for (auto& x : c) x = rng.uniform(-50, 50);
    if (c[0] == 0) c[0] = 7;
    BinaryForm f(c);
    if (discriminant(f) == 0) continue;
    int exact = count_real_roots(f.dehomogenized());
    EXPECT_EQ(exact, oracle::numeric_real_roots(f)) << f.to_string();
    EXPECT_EQ(SturmSequence(f.dehomogenized()).total(), exact);
  }
}

TEST(Sturm, IsolatingIntervalsSeparateRoots) {
  // (x - 1)(x - 2)(x + 3)(2x - 1)
  IntPoly p = poly_mul(poly_mul(IntPoly{-1, 1}, IntPoly{-2, 1}), poly_mul(IntPoly{3, 1}, IntPoly{-1, 2}));
  auto ivs = isolate_real_roots(p);
  ASSERT_EQ(ivs.size(), 4u);
  std::vector<Rational> roots{Rational(-3), Rational(1, 2), Rational(1), Rational(2)};
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    EXPECT_LT(ivs[i].lo, roots[i]);
    EXPECT_GE(ivs[i].hi, roots[i]);
    if (i + 1 < ivs.size()) EXPECT_LE(ivs[i].hi, ivs[i + 1].lo);
  }
  SturmSequence chain(p);
  EXPECT_EQ(chain.count(Rational(0), Rational(1)), 2);  // (0, 1] holds 1/2 and 1
}

TEST(FpPoly, FactorisationReassembles) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 101u}) {
    PrimeField F{p};
    Rng rng(p);
    for (int t = 0; t < 30; ++t) {
      FpPoly a(1 + 1 + rng.below(9));
      for (auto& x : a) x = rng.below(p);
      a.back() = 1;
      auto factors = fp_factor(F, a, t);
      FpPoly back{1};
      for (const auto& [q, e] : factors)
        for (int i = 0; i < e; ++i) back = fp_mul(F, back, q);
      EXPECT_EQ(back, a);
      std::vector<std::pair<int, int>> shape;
      for (const auto& [q, e] : factors) shape.emplace_back(fp_degree(q), e);
      std::sort(shape.begin(), shape.end());
      auto degs = fp_factor_degrees(F, a);
      std::sort(degs.begin(), degs.end());
      EXPECT_EQ(shape, degs);
    }
  }
}

TEST(FpPoly, FieldArithmetic) {
  PrimeField F{13};
  for (std::uint64_t a = 1; a < 13; ++a) EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
  int squares = 0;
  for (std::uint64_t a = 1; a < 13; ++a) squares += F.is_square(a);
  EXPECT_EQ(squares, 6);
}
