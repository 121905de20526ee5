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

#include "hyperorbits/rng.hpp"

#include "hyperorbits/error.hpp"

namespace hyperorbits {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(seed ^ splitmix64(stream ^ 0x5851f42d4c957f2dULL))) {}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw ValidationError("Rng::below with zero bound");
  // Rejection keeps the draw exactly uniform and portable.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % bound;
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw ValidationError("Rng::uniform with empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == ~std::uint64_t{0}) return static_cast<std::int64_t>(engine_());
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span + 1));
}

Integer Rng::uniform(const Integer& lo, const Integer& hi) {
  if (hi < lo) throw ValidationError("Rng::uniform with empty range");
  Integer span = hi - lo + 1;
  if (fits_int64(span)) {
    return lo + Integer(static_cast<unsigned long>(below(span.get_ui())));
  }
  const std::size_t bits = mpz_sizeinbase(span.get_mpz_t(), 2);
  for (;;) {
    Integer v = 0;
    for (std::size_t got = 0; got < bits; got += 64) {
      Integer chunk(static_cast<unsigned long>(engine_()));
      v = (v << 64) + chunk;
    }
    Integer mask = (Integer(1) << bits) - 1;
    v &= mask;
    if (v < span) return lo + v;
  }
}

}  // namespace hyperorbits
