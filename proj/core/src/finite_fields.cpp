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

#include "hyperorbits/finite_fields.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <thread>
#include <utility>

#include "hyperorbits/error.hpp"
#include "hyperorbits/fp_poly.hpp"

namespace hyperorbits {

Integer sl_n_order(int n, std::uint64_t p) {
  if (n < 1) throw ValidationError("sl_n_order needs n >= 1");
  Integer P(static_cast<unsigned long>(p));
  Integer order = ipow(P, static_cast<unsigned long>(n) * (n - 1) / 2);
  for (int k = 2; k <= n; ++k) order *= ipow(P, k) - 1;
  return order;
}

std::vector<std::uint64_t> invariant_form_mod_p(const std::vector<std::uint64_t>& A,
                                                const std::vector<std::uint64_t>& B, int n, std::uint64_t p) {
  // det(A t - B) by Laplace expansion over column subsets; dp[mask] is a
  // polynomial in t of degree <= popcount(mask).
  const PrimeField F{p};
  const std::size_t masks = std::size_t{1} << n;
  const std::size_t width = n + 1;
  thread_local std::vector<std::uint64_t> dp;
  dp.assign(masks * width, 0);
  dp[0] = 1 % p;
  // Rows are consumed in order, so masks of popcount `row` are final when
  // row `row` is expanded and each state is written only by smaller masks.
  for (std::size_t mask = 0; mask + 1 < masks; ++mask) {
    const int row = __builtin_popcountll(mask);
    const std::uint64_t* cur = &dp[mask * width];
    for (int col = 0; col < n; ++col) {
      if (mask & (std::size_t{1} << col)) continue;
      std::uint64_t a = A[row * n + col], b = B[row * n + col];
      if (a == 0 && b == 0) continue;
      bool odd = __builtin_popcountll(mask >> (col + 1)) & 1;
      std::uint64_t* out = &dp[(mask | (std::size_t{1} << col)) * width];
      for (int k = row; k >= 0; --k) {
        if (cur[k] == 0) continue;
        std::uint64_t hi = F.mul(cur[k], a);         // times t
        std::uint64_t lo = F.neg(F.mul(cur[k], b));  // times -B
        if (odd) {
          hi = F.neg(hi);
          lo = F.neg(lo);
        }
        out[k + 1] = F.add(out[k + 1], hi);
        out[k] = F.add(out[k], lo);
      }
    }
  }
  const std::uint64_t* det = &dp[(masks - 1) * width];
  std::vector<std::uint64_t> f(n + 1);
  const bool negate = (n / 2) % 2 == 1;
  for (int i = 0; i <= n; ++i) f[i] = negate ? F.neg(det[n - i]) : det[n - i];
  return f;
}

namespace {

std::uint64_t checked_power(std::uint64_t p, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > kPairEnumerationBudget / p + 1) return kPairEnumerationBudget + 1;
    r *= p;
  }
  return r;
}

// Decodes index into symmetric A, B (upper triangles, A first).
void decode_pair(std::uint64_t index, int n, std::uint64_t p, std::vector<std::uint64_t>& A,
                 std::vector<std::uint64_t>& B) {
  for (auto* M : {&A, &B})
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        std::uint64_t v = index % p;
        index /= p;
        (*M)[i * n + j] = (*M)[j * n + i] = v;
      }
}

std::uint64_t encode_pair(const std::vector<std::uint64_t>& A, const std::vector<std::uint64_t>& B, int n,
                          std::uint64_t p) {
  std::uint64_t index = 0, scale = 1;
  for (const auto* M : {&A, &B})
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        index += (*M)[i * n + j] * scale;
        scale *= p;
      }
  return index;
}

std::uint64_t pair_space_size(int n, std::uint64_t p) {
  if (p < 2) throw ValidationError("modulus must be prime");
  std::uint64_t total = checked_power(p, n * (n + 1));
  if (total > kPairEnumerationBudget)
    throw BudgetExceeded("enumerating p^(n(n+1)) pairs exceeds the budget of 2^21");
  return total;
}

std::vector<std::uint64_t> reduce_form(const BinaryForm& f, std::uint64_t p) {
  std::vector<std::uint64_t> r;
  for (const auto& c : f.coeffs()) r.push_back(mod_u64(c, p));
  return r;
}

}  // namespace

const std::map<std::vector<std::uint64_t>, std::uint64_t>& pair_form_histogram(int n, std::uint64_t p, int jobs) {
  static std::mutex mu;
  static std::map<std::pair<int, std::uint64_t>, std::map<std::vector<std::uint64_t>, std::uint64_t>> cache;
  if (n < 2 || n % 2 != 0) throw ValidationError("pair enumeration needs even n >= 2");
  if (!is_prime(p)) throw ValidationError("modulus must be prime");
  const std::uint64_t total = pair_space_size(n, p);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, p});
  if (it != cache.end()) return it->second;

  const int workers = std::max(1, jobs);
  const std::uint64_t chunk = 1 << 14;
  std::atomic<std::uint64_t> next{0};
  std::vector<std::map<std::vector<std::uint64_t>, std::uint64_t>> partial(workers);
  auto work = [&](int w) {
    std::vector<std::uint64_t> A(n * n), B(n * n);
    for (;;) {
      std::uint64_t start = next.fetch_add(chunk);
      if (start >= total) break;
      std::uint64_t stop = std::min(total, start + chunk);
      for (std::uint64_t idx = start; idx < stop; ++idx) {
        decode_pair(idx, n, p, A, B);
        ++partial[w][invariant_form_mod_p(A, B, n, p)];
      }
    }
  };
  std::vector<std::thread> threads;
  for (int w = 1; w < workers; ++w) threads.emplace_back(work, w);
  work(0);
  for (auto& t : threads) t.join();
  std::map<std::vector<std::uint64_t>, std::uint64_t> merged;
  for (const auto& part : partial)
    for (const auto& [k, v] : part) merged[k] += v;
  return cache.emplace(std::make_pair(n, p), std::move(merged)).first->second;
}

OrbitStats count_pairs_with_form(const BinaryForm& f, std::uint64_t p, int jobs) {
  const int n = f.degree();
  if (!is_prime(p)) throw ValidationError("modulus must be prime");
  OrbitStats st;
  st.p = p;
  st.n = n;
  st.form = reduce_form(f, p);
  st.enumerated = true;
  st.group_order = p == 2 ? sl_n_order(n, p) : 2 * sl_n_order(n, p);
  if (p % 2 == 1) st.square_point_count = square_value_count(f, p);
  pair_space_size(n, p);

  if (n != 2) {
    const auto& hist = pair_form_histogram(n, p, jobs);
    auto it = hist.find(st.form);
    st.total_elements = it == hist.end() ? 0 : it->second;
    return st;
  }

  // n = 2: collect matching pairs, then split into orbits of SL_2^+-(F_p).
  const std::uint64_t total = pair_space_size(n, p);
  std::vector<std::uint64_t> A(4), B(4);
  std::vector<char> matching(total, 0);
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode_pair(idx, n, p, A, B);
    if (invariant_form_mod_p(A, B, n, p) == st.form) {
      matching[idx] = 1;
      ++count;
    }
  }
  st.total_elements = count;

  const PrimeField F{p};
  std::vector<std::array<std::uint64_t, 4>> group;
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b)
      for (std::uint64_t c = 0; c < p; ++c)
        for (std::uint64_t d = 0; d < p; ++d) {
          std::uint64_t det = F.sub(F.mul(a, d), F.mul(b, c));
          if (det == 1 || det == p - 1) group.push_back({a, b, c, d});
        }
  auto act = [&](const std::array<std::uint64_t, 4>& g, const std::vector<std::uint64_t>& M) {
    // g M g^t for 2x2 matrices
    std::uint64_t t00 = F.add(F.mul(g[0], M[0]), F.mul(g[1], M[2]));
    std::uint64_t t01 = F.add(F.mul(g[0], M[1]), F.mul(g[1], M[3]));
    std::uint64_t t10 = F.add(F.mul(g[2], M[0]), F.mul(g[3], M[2]));
    std::uint64_t t11 = F.add(F.mul(g[2], M[1]), F.mul(g[3], M[3]));
    std::vector<std::uint64_t> R(4);
    R[0] = F.add(F.mul(t00, g[0]), F.mul(t01, g[1]));
    R[1] = F.add(F.mul(t00, g[2]), F.mul(t01, g[3]));
    R[2] = F.add(F.mul(t10, g[0]), F.mul(t11, g[1]));
    R[3] = F.add(F.mul(t10, g[2]), F.mul(t11, g[3]));
    return R;
  };
  int orbits = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (matching[idx] != 1) continue;
    ++orbits;
    decode_pair(idx, n, p, A, B);
    Integer stab = 0;
    for (const auto& g : group) {
      std::uint64_t image = encode_pair(act(g, A), act(g, B), n, p);
      if (image == idx) ++stab;
      matching[image] = 2;
    }
    st.stabilizer_sizes.push_back(stab);
  }
  st.orbit_count = orbits;
  std::sort(st.stabilizer_sizes.begin(), st.stabilizer_sizes.end());
  return st;
}

int square_value_count(const BinaryForm& f, std::uint64_t p) {
  if (p % 2 == 0 || !is_prime(p)) throw ValidationError("square_value_count needs an odd prime");
  const PrimeField F{p};
  FpPoly g;
  for (const auto& c : f.dehomogenized()) g.push_back(mod_u64(c, p));
  int k = F.is_square(mod_u64(f[0], p)) ? 1 : 0;  // the point (1 : 0)
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t i = g.size(); i > 0; --i) v = F.add(F.mul(v, x), g[i - 1]);
    if (F.is_square(v)) ++k;
  }
  return k;
}

OrbitStats orbit_statistics_prediction(const BinaryForm& f, std::uint64_t p) {
  FactorizationType t = factorization_type_mod_p(f, p);
  if (!t.separable()) throw ValidationError("predictions need f separable mod p");
  OrbitStats st;
  st.p = p;
  st.n = f.degree();
  st.form = reduce_form(f, p);
  st.total_elements = sl_n_order(st.n, p);
  st.group_order = p == 2 ? st.total_elements : 2 * st.total_elements;
  if (p == 2) {
    st.orbit_count = 1;
    st.stabilizer_sizes = {Integer(1)};
  } else {
    const int m = t.m();
    st.orbit_count = 1 << (m - 1);
    st.stabilizer_sizes.assign(st.orbit_count.value(), Integer(1) << m);
    st.square_point_count = square_value_count(f, p);
  }
  return st;
}

}  // namespace hyperorbits
