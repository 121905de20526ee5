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

#ifndef HYPERORBITS_RNG_HPP
#define HYPERORBITS_RNG_HPP

#include <cstdint>
#include <random>

#include "hyperorbits/integer.hpp"

namespace hyperorbits {

/// Seeded generator with portable bounded sampling. Streams let independent
/// shards draw from disjoint, reproducible sequences for the same seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform on [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  Integer uniform(const Integer& lo, const Integer& hi);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace hyperorbits

#endif  // HYPERORBITS_RNG_HPP
