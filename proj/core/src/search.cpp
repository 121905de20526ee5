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

#include "hyperorbits/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "hyperorbits/error.hpp"
#include "hyperorbits/fp_poly.hpp"
#include "hyperorbits/rng.hpp"

namespace hyperorbits {

namespace {

constexpr std::uint64_t kEnumerateResidues = 1u << 16;

// Polynomials in one variable over Z, constant term first.
using ZPoly = std::vector<Integer>;

struct Descent {
  Integer p;
  std::uint64_t p64 = 0;
  PrimeField F{0};
  int budget = 0;
  int e = 1;  // 1 + p^e Z_p consists of squares

  int val(const Integer& v) const { return valuation(v, p); }

  bool is_square_value(const Integer& k0) const {
    int v = val(k0);
    if (v % 2 != 0) return false;
    Integer u = k0;
    for (int i = 0; i < v; ++i) u /= p;
    if (p64 == 2) return mod_u64(u, 8) == 1;
    return F.is_square(mod_u64(u, p64));
  }

  // H(r + p t)
  ZPoly shift(const ZPoly& h, std::uint64_t r) const {
    ZPoly k = h;
    const Integer rr(static_cast<unsigned long>(r));
    const int len = static_cast<int>(k.size());
    for (int i = 0; i < len; ++i)
      for (int j = len - 2; j >= i; --j) k[j] += rr * k[j + 1];
    Integer scale = 1;
    for (auto& c : k) {
      c *= scale;
      scale *= p;
    }
    return k;
  }

  // 1: every value is a square, 0: none is, -1: undetermined.
  int determined(const ZPoly& k) const {
    if (k[0] == 0) return -1;
    int v0 = val(k[0]);
    for (std::size_t j = 1; j < k.size(); ++j)
      if (k[j] != 0 && val(k[j]) < v0 + e) return -1;
    return is_square_value(k[0]) ? 1 : 0;
  }

  bool branch(const ZPoly& h, std::uint64_t r, int depth) const {
    ZPoly k = shift(h, r);
    int d = determined(k);
    if (d >= 0) return d == 1;
    return solve(std::move(k), depth + 1);
  }

  bool solve(ZPoly h, int depth) const {
    if (depth > budget) throw BudgetExceeded("local solubility descent exceeded its depth budget");
    int c = std::numeric_limits<int>::max();
    for (const auto& x : h)
      if (x != 0) c = std::min(c, val(x));
    Integer unit_scale = 1;
    for (int i = 0; i < c; ++i) unit_scale *= p;
    if (c >= 2) {
      Integer square_part = 1;
      for (int i = 0; i < c / 2 * 2; ++i) square_part *= p;
      for (auto& x : h) x /= square_part;
      c %= 2;
      unit_scale = c ? p : Integer(1);
    }
    ZPoly g = h;
    for (auto& x : g) x /= unit_scale;
    FpPoly gbar = fp_reduce(F, g);
    FpPoly dg = fp_derivative(F, gbar);

    if (p64 <= kEnumerateResidues) {
      std::vector<std::uint64_t> candidates;
      for (std::uint64_t r = 0; r < p64; ++r) {
        std::uint64_t value = 0;
        for (auto it = gbar.rbegin(); it != gbar.rend(); ++it) value = F.add(F.mul(value, r), *it);
        if (value == 0) {
          std::uint64_t slope = 0;
          for (auto it = dg.rbegin(); it != dg.rend(); ++it) slope = F.add(F.mul(slope, r), *it);
          if (slope != 0) return true;
          candidates.push_back(r);
        } else if (p64 == 2) {
          candidates.push_back(r);
        } else if (c == 0 && F.is_square(value)) {
          return true;
        }
      }
      for (std::uint64_t r : candidates)
        if (branch(h, r, depth)) return true;
      return false;
    }

    // Large p: classify the non-roots of gbar through its square-free part.
    std::uint64_t lead = gbar.back();
    auto factors = fp_factor(F, fp_monic(F, gbar));
    if (c == 0) {
      int odd_degree = 0;
      for (const auto& [q, mult] : factors)
        if (mult % 2) odd_degree += fp_degree(q);
      // For a non-constant square-free part the character sum bound gives a
      // non-root with square value once p > 2^16.
      if (odd_degree > 0 || F.is_square(lead)) return true;
    }
    for (const auto& [q, mult] : factors) {
      if (fp_degree(q) != 1) continue;
      if (mult == 1) return true;
      std::uint64_t r = F.neg(q[0]);
      if (branch(h, r, depth)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<CurvePoint> rational_point_search(const BinaryForm& f, const Integer& B) {
  if (f.is_zero()) throw ZeroForm("zero form");
  if (B < 0) throw ValidationError("point bound must be nonnegative");
  if (!B.fits_slong_p()) throw ValidationError("point bound too large");
  const long bound = B.get_si();
  Integer root;
  auto test = [&](long x, long y) -> std::optional<CurvePoint> {
    Integer value = evaluate(f, Integer(x), Integer(y));
    if (is_square(value, &root)) return CurvePoint{Integer(x), Integer(y), root};
    return std::nullopt;
  };
  for (long h = 1; h <= bound; ++h) {
    for (long y = 1; y <= h; ++y) {
      if (y < h) {
        if (std::gcd(h, y) != 1) continue;
        if (auto P = test(h, y)) return P;
        if (auto P = test(-h, y)) return P;
        continue;
      }
      for (long ax = 0; ax <= h; ++ax) {
        if (std::gcd(ax, y) != 1) continue;
        if (auto P = test(ax, y)) return P;
        if (ax != 0)
          if (auto P = test(-ax, y)) return P;
      }
    }
  }
  if (bound >= 1)
    if (auto P = test(1, 0)) return P;
  return std::nullopt;
}

bool locally_soluble_R(const BinaryForm& f) {
  if (discriminant(f) == 0) throw ValidationError("discriminant is zero");
  if (f[0] == 0) return true;
  if (real_root_count(f) > 0) return true;
  return f[0] > 0;
}

bool locally_soluble_p(const BinaryForm& f, const Integer& p) {
  if (p < 2 || !is_prime(p)) throw ValidationError("p must be prime");
  Integer disc = discriminant(f);
  if (disc == 0) throw ValidationError("discriminant is zero");
  const int n = f.degree();
  const int g = f.genus();
  const bool good = disc % p != 0;
  if (p != 2 && good && p > 4 * g * g + 4) return true;
  if (p >= Integer(1) << 62) {
    // A single node mod p leaves a non-constant square-free part on the
    // affine patch, and the character sum bound then gives a smooth point.
    if (n >= 4 && valuation(disc, p) == 1) return true;
    throw BudgetExceeded("prime too large for the residue descent");
  }

  Descent d;
  d.p = p;
  d.p64 = p.get_ui();
  d.F = PrimeField{d.p64};
  d.e = d.p64 == 2 ? 3 : 1;
  d.budget = valuation(Integer(4 * disc), p) + n + 4;

  ZPoly affine(n + 1), at_infinity(n + 1);
  Integer scale = 1;
  for (int i = 0; i <= n; ++i) {
    affine[n - i] = f[i];
    at_infinity[i] = f[i] * scale;
    scale *= p;
  }
  return d.solve(affine, 0) || d.solve(at_infinity, 0);
}

bool locally_soluble_p(const BinaryForm& f, std::uint64_t p) {
  return locally_soluble_p(f, Integer(static_cast<unsigned long>(p)));
}

std::string to_string(LocalVerdict v) {
  switch (v) {
    case LocalVerdict::Soluble: return "soluble";
    case LocalVerdict::Insoluble: return "insoluble";
    case LocalVerdict::Unknown: return "unknown";
  }
  return "unknown";
}

double SurveyAggregate::soluble_fraction() const {
  return count ? static_cast<double>(locally_soluble) / static_cast<double>(count) : 0.0;
}

double SurveyAggregate::point_fraction() const {
  return count ? static_cast<double>(with_point) / static_cast<double>(count) : 0.0;
}

std::vector<Integer> survey_places(const BinaryForm& f) {
  Integer disc = discriminant(f);
  if (disc == 0) throw ValidationError("discriminant is zero");
  const int g = f.genus();
  std::vector<Integer> places{Integer(0)};
  for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(4 * g * g + 4)))
    places.emplace_back(static_cast<unsigned long>(p));
  if (places.size() == 1 || places[1] != 2) places.insert(places.begin() + 1, Integer(2));
  for (const auto& [q, e] : factor_integer(disc))
    if (std::find(places.begin(), places.end(), q) == places.end()) places.push_back(q);
  std::sort(places.begin() + 1, places.end());
  return places;
}

SurveyRecord survey_curve(const BinaryForm& f, const Integer& B) {
  SurveyRecord rec;
  rec.form = f;
  rec.genus = f.genus();
  rec.point_bound = B;
  bool unknown = false, insoluble = false;
  for (const Integer& place : survey_places(f)) {
    PlaceVerdict pv{place, LocalVerdict::Unknown};
    try {
      bool ok = place == 0 ? locally_soluble_R(f) : locally_soluble_p(f, place);
      pv.verdict = ok ? LocalVerdict::Soluble : LocalVerdict::Insoluble;
    } catch (const BudgetExceeded&) {
      pv.verdict = LocalVerdict::Unknown;
    }
    if (pv.verdict == LocalVerdict::Insoluble) insoluble = true;
    if (pv.verdict == LocalVerdict::Unknown) unknown = true;
    rec.places.push_back(pv);
  }
  rec.locally_soluble = insoluble ? LocalVerdict::Insoluble
                        : unknown ? LocalVerdict::Unknown
                                  : LocalVerdict::Soluble;
  rec.point = rational_point_search(f, B);
  return rec;
}

SurveyResult survey(int n, const Integer& X, const Integer& B, std::uint64_t count,
                    std::uint64_t seed, int jobs) {
  if (n < 2 || n % 2 != 0) throw ValidationError("degree must be even and at least 2");
  if (X < 1) throw ValidationError("height bound must be positive");
  SurveyResult out;
  out.n = n;
  out.height_bound = X;
  out.point_bound = B;
  out.seed = seed;
  out.records.resize(count);

  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < count; i = next++) {
      std::uint64_t s = splitmix64(seed ^ splitmix64(i + 1));
      BinaryForm f = random_form(n, X, s);
      while (discriminant(f) == 0) {
        s = splitmix64(s);
        f = random_form(n, X, s);
      }
      out.records[i] = survey_curve(f, B);
      out.records[i].index = i;
    }
  };
  int threads = static_cast<int>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(jobs, count)));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& rec : out.records) {
    ++out.aggregate.count;
    switch (rec.locally_soluble) {
      case LocalVerdict::Soluble: ++out.aggregate.locally_soluble; break;
      case LocalVerdict::Insoluble: ++out.aggregate.locally_insoluble; break;
      case LocalVerdict::Unknown: ++out.aggregate.unknown; break;
    }
    if (rec.point) ++out.aggregate.with_point;
  }
  return out;
}

}  // namespace hyperorbits
