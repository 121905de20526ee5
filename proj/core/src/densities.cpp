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

#include "hyperorbits/densities.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include <boost/math/special_functions/zeta.hpp>

#include "hyperorbits/error.hpp"
#include "hyperorbits/finite_fields.hpp"
#include "hyperorbits/forms.hpp"
#include "hyperorbits/polynomial.hpp"
#include "hyperorbits/rng.hpp"
#include "hyperorbits/sturm.hpp"

namespace hyperorbits {

namespace {

constexpr std::uint64_t kBlockSize = 1u << 14;
constexpr std::uint64_t kEnumerationBudget = 823543;  // 7^7

void check_even_degree(int n) {
  if (n < 2 || n % 2 != 0) throw ValidationError("degree must be even and at least 2");
}

void check_prime(std::uint64_t p) {
  if (!is_prime(p)) throw ValidationError("p must be prime");
}

std::vector<std::uint64_t> classify_block(int n, std::uint64_t seed, std::uint64_t block,
                                          std::uint64_t count) {
  std::vector<std::uint64_t> hist(n / 2 + 1, 0);
  Rng rng(seed, splitmix64(static_cast<std::uint64_t>(n) * 0x9e3779b97f4a7c15ULL + block));
  IntPoly poly(n + 1);
  const std::uint64_t half = std::uint64_t{1} << kMuRealBits;
  for (std::uint64_t s = 0; s < count; ++s) {
    for (auto& c : poly) {
      std::int64_t r = static_cast<std::int64_t>(rng.below(half));
      c = 2 * r + 1 - static_cast<std::int64_t>(half);
    }
    int roots = count_real_roots(poly);
    ++hist[std::min(roots / 2, n / 2)];
  }
  return hist;
}

int moebius(std::uint64_t k) {
  int mu = 1;
  for (std::uint64_t q = 2; q * q <= k; ++q) {
    if (k % q) continue;
    k /= q;
    if (k % q == 0) return 0;
    mu = -mu;
  }
  if (k > 1) mu = -mu;
  return mu;
}

// Closed points of degree d on P^1 over F_p.
Integer closed_points(std::uint64_t p, int d) {
  if (d == 1) return Integer(p) + 1;
  Integer total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    int mu = moebius(static_cast<std::uint64_t>(e));
    if (mu == 0) continue;
    Integer term = ipow(Integer(p), static_cast<unsigned long>(d / e));
    total += mu > 0 ? term : Integer(-term);
  }
  return total / d;
}

Integer binomial(const Integer& top, unsigned long k) {
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), k);
  return out;
}

std::vector<Rational> distribution_from_forms(int n, std::uint64_t modulus, std::uint64_t p) {
  const int len = n + 1;
  std::vector<Integer> counts(n + 1, 0);
  std::vector<std::uint64_t> digits(len, 0);
  std::vector<Integer> coeffs(len);
  Integer total = ipow(Integer(modulus), static_cast<unsigned long>(len));
  while (true) {
    bool zero = true;
    for (int i = 0; i < len; ++i) {
      coeffs[i] = digits[i] % p;
      if (digits[i] % p) zero = false;
    }
    if (!zero) ++counts[factorization_type_mod_p(BinaryForm(coeffs), p).m()];
    int i = 0;
    while (i < len && ++digits[i] == modulus) digits[i++] = 0;
    if (i == len) break;
  }
  std::vector<Rational> out(n + 1);
  for (int m = 0; m <= n; ++m) {
    out[m] = Rational(counts[m], total);
    out[m].canonicalize();
  }
  return out;
}

}  // namespace

double MuRealEstimate::estimate(int m) const {
  if (m < 0 || m >= static_cast<int>(counts.size()) || samples == 0) return 0;
  return static_cast<double>(counts[m]) / static_cast<double>(samples);
}

double MuRealEstimate::stderr_of(int m) const {
  if (samples == 0) return 0;
  double q = estimate(m);
  return std::sqrt(q * (1 - q) / static_cast<double>(samples));
}

MuRealEstimate mu_real(int n, std::uint64_t samples, std::uint64_t seed, int jobs) {
  check_even_degree(n);
  if (samples == 0) throw ValidationError("mu_real needs at least one sample");
  MuRealEstimate out;
  out.n = n;
  out.samples = samples;
  out.seed = seed;
  out.counts.assign(n / 2 + 1, 0);

  const std::uint64_t blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<std::vector<std::uint64_t>> per_block(blocks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      std::uint64_t count = std::min(kBlockSize, samples - b * kBlockSize);
      per_block[b] = classify_block(n, seed, b, count);
    }
  };
  int threads = std::max(1, std::min<int>(jobs, static_cast<int>(blocks)));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& hist : per_block)
    for (std::size_t m = 0; m < hist.size(); ++m) out.counts[m] += hist[m];
  return out;
}

std::vector<Rational> mu_p_distribution(int n, std::uint64_t p) {
  check_even_degree(n);
  check_prime(p);
  // poly[m][k] is the coefficient of u^m t^k.
  using Table = std::vector<std::vector<Integer>>;
  Table poly(n + 1, std::vector<Integer>(n + 1, 0));
  poly[0][0] = 1;
  for (int d = 1; d <= n; ++d) {
    Integer points = closed_points(p, d);
    Table factor(n + 1, std::vector<Integer>(n + 1, 0));
    factor[0][0] = 1;
    for (int k = 1; k * d <= n && points >= k; ++k) {
      Integer choose = binomial(points, static_cast<unsigned long>(k));
      for (int j = 0; (k + j) * d <= n; ++j)
        factor[k][(k + j) * d] += choose * binomial(Integer(k - 1 + j), static_cast<unsigned long>(j));
    }
    Table next(n + 1, std::vector<Integer>(n + 1, 0));
    for (int m1 = 0; m1 <= n; ++m1)
      for (int t1 = 0; t1 <= n; ++t1) {
        if (poly[m1][t1] == 0) continue;
        for (int m2 = 0; m1 + m2 <= n; ++m2)
          for (int t2 = 0; t1 + t2 <= n; ++t2)
            if (factor[m2][t2] != 0) next[m1 + m2][t1 + t2] += poly[m1][t1] * factor[m2][t2];
      }
    poly.swap(next);
  }
  Integer total = ipow(Integer(p), static_cast<unsigned long>(n + 1));
  std::vector<Rational> out(n + 1);
  for (int m = 0; m <= n; ++m) {
    out[m] = Rational(poly[m][n] * (p - 1), total);
    out[m].canonicalize();
  }
  return out;
}

std::vector<Rational> mu_p_enumerated(int n, std::uint64_t p) {
  check_even_degree(n);
  check_prime(p);
  if (ipow(Integer(p), static_cast<unsigned long>(n + 1)) > kEnumerationBudget)
    throw BudgetExceeded("mu_p enumeration limited to 7^7 forms");
  return distribution_from_forms(n, p, p);
}

Rational mu_p(int n, int m, std::uint64_t p) {
  if (m < 0 || m > n) return 0;
  return mu_p_distribution(n, p)[m];
}

std::vector<Rational> mu_8_distribution(int n) { return mu_p_distribution(n, 2); }

std::vector<Rational> mu_8_enumerated(int n) {
  check_even_degree(n);
  if (n > 4) throw BudgetExceeded("mu_8 enumeration limited to n <= 4");
  return distribution_from_forms(n, 8, 2);
}

Rational mu_8(int n, int m) {
  if (m < 0 || m > n) return 0;
  return mu_8_distribution(n)[m];
}

Integer irreducible_form_count(int n, std::uint64_t p) {
  if (n < 1) throw ValidationError("degree must be positive");
  check_prime(p);
  const int len = n + 1;
  std::vector<std::uint64_t> digits(len, 0);
  std::vector<Integer> coeffs(len);
  Integer count = 0;
  while (true) {
    bool zero = true;
    for (int i = 0; i < len; ++i) {
      coeffs[i] = digits[i];
      if (digits[i]) zero = false;
    }
    if (!zero) {
      FactorizationType t = factorization_type_mod_p(BinaryForm(coeffs), p);
      if (t.parts.size() == 1 && t.parts[0] == std::make_pair(n, 1)) ++count;
    }
    int i = 0;
    while (i < len && ++digits[i] == p) digits[i++] = 0;
    if (i == len) break;
  }
  return count;
}

ArchimedeanFactor archimedean_factor(int g, std::uint64_t samples, std::uint64_t seed, int jobs) {
  if (g < 0) throw ValidationError("genus must be nonnegative");
  const int n = 2 * g + 2;
  ArchimedeanFactor out;
  out.g = g;
  const double scale = std::ldexp(1.0, g);
  if (g <= 1) {
    // Every weight max{1,2m}/2^m equals 1 for m <= 2.
    out.exact = true;
    out.normalized = 1;
    out.scaled = scale;
    if (samples > 0) {
      MuRealEstimate mu = mu_real(n, samples, seed, jobs);
      out.samples = samples;
      for (int m = 0; m <= n / 2; ++m) {
        out.mu.push_back(mu.estimate(m));
        out.mu_stderr.push_back(mu.stderr_of(m));
      }
    }
    return out;
  }
  if (samples == 0) throw ValidationError("archimedean factor for g >= 2 needs samples");
  MuRealEstimate mu = mu_real(n, samples, seed, jobs);
  out.samples = samples;
  double mean = 0, second = 0;
  for (int m = 0; m <= n / 2; ++m) {
    double w = std::max(1.0, 2.0 * m) / std::ldexp(1.0, m);
    double q = mu.estimate(m);
    mean += w * q;
    second += w * w * q;
    out.mu.push_back(q);
    out.mu_stderr.push_back(mu.stderr_of(m));
  }
  out.normalized = mean;
  out.normalized_stderr = std::sqrt(std::max(0.0, second - mean * mean) / static_cast<double>(samples));
  out.scaled = scale * out.normalized;
  out.scaled_stderr = scale * out.normalized_stderr;
  return out;
}

Rational two_adic_factor(int n) {
  std::vector<Rational> mu = mu_8_distribution(n);
  Rational total = 0;
  for (int m = 0; m <= n; ++m) {
    // min{1, 12 / 2^(n+m-1)}
    Rational w(12);
    int shift = n + m - 1;
    if (shift >= 0) w /= Rational(ipow(Integer(2), static_cast<unsigned long>(shift)));
    else w *= 2;
    total += std::min(Rational(1), w) * mu[m];
  }
  return total;
}

Rational finite_factor(int n, std::uint64_t p) {
  std::vector<Rational> mu = mu_p_distribution(n, p);
  Rational total = 0;
  for (int m = 0; m <= n; ++m) {
    Rational w(Integer(p) + 1);
    if (m >= 1) w /= Rational(ipow(Integer(2), static_cast<unsigned long>(m - 1)));
    else w *= 2;
    total += std::min(Rational(1), w) * mu[m];
  }
  return total;
}

DensityReport density_bound(int g, std::uint64_t P, std::uint64_t samples, std::uint64_t seed, int jobs) {
  if (g < 0) throw ValidationError("genus must be nonnegative");
  const int n = 2 * g + 2;
  DensityReport out;
  out.g = g;
  out.n = n;
  out.truncation_prime = P;
  out.samples = samples;
  out.seed = seed;
  out.archimedean = archimedean_factor(g, samples, seed, jobs);
  // (1/2) 2^(n/2) sum max{1,2m}/2^(m-1) mu = 2^(g+1) times the normalized sum.
  const double arch_scale = std::ldexp(1.0, g + 1);
  out.archimedean_term = arch_scale * out.archimedean.normalized;
  out.archimedean_term_stderr = arch_scale * out.archimedean.normalized_stderr;
  out.two_adic = two_adic_factor(n).get_d();
  out.finite_product = 1;
  for (std::uint64_t p : primes_up_to(P)) {
    if (p == 2) continue;
    double f = std::min(1.0, finite_factor(n, p).get_d());
    out.finite[p] = f;
    out.finite_product *= f;
  }
  const double rest = out.two_adic * out.finite_product;
  out.bound = out.archimedean_term * rest;
  out.bound_conservative = (out.archimedean_term + 3 * out.archimedean_term_stderr) * rest;
  return out;
}

Rational genus0_product(std::uint64_t P) {
  if (P < 3) throw ValidationError("truncation prime must be at least 3");
  Rational out = 1;
  for (std::uint64_t p : primes_up_to(P)) {
    if (p == 2) continue;
    Integer q(p);
    Rational factor(2 * q * q - (q - 1) * (q - 1), 2 * q * q);
    factor.canonicalize();
    out *= factor;
  }
  return out;
}

long double zeta_identity_gap(int n, std::uint64_t P) {
  if (n < 2) throw ValidationError("n must be at least 2");
  long double value = 1;
  for (int k = 2; k <= n; ++k) value *= boost::math::zeta(static_cast<long double>(k));
  for (std::uint64_t p : primes_up_to(P)) {
    // #SL_n(F_p) / p^(n^2-1) = prod_{k=2}^{n} (1 - p^-k)
    long double inv = 1.0L / static_cast<long double>(p);
    long double power = inv;
    for (int k = 2; k <= n; ++k) {
      power *= inv;
      value *= 1.0L - power;
    }
  }
  return std::fabs(value - 1.0L);
}

}  // namespace hyperorbits
