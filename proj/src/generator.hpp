// Copyright 2026 The fairaudit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded random domains. Output depends on the seed and parameters only:
// the engine is std::mt19937_64, whose sequence the standard fixes, and the
// mapping to ranges is done here rather than by the library's distributions
// (whose algorithms are implementation-defined).

#ifndef FAIRAUDIT_GENERATOR_HPP_
#define FAIRAUDIT_GENERATOR_HPP_

#include <cstdint>
#include <random>
#include <string_view>

#include "domain.hpp"
#include "rational.hpp"

namespace fairaudit {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform on [lo, hi], by rejection. Requires lo <= hi.
  std::uint64_t Uniform(std::uint64_t lo, std::uint64_t hi);
  bool Coin() { return (Next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

enum class WeightStyle { kUniform, kRandom };

WeightStyle ParseWeightStyle(std::string_view text);
std::string_view WeightStyleName(WeightStyle s);

struct GeneratorParams {
  std::uint64_t seed = 0;
  std::size_t min_instances = 8;
  std::size_t max_instances = 8;
  std::size_t min_features = 1;
  std::size_t max_features = 3;
  std::size_t alphabet = 2;  // feature values "0" .. "alphabet-1"
  WeightStyle weights = WeightStyle::kUniform;
  // Random weights are multiples of 1/max_denominator, each positive.
  std::uint64_t max_denominator = 24;
};

// Instances x1..xn, both groups nonempty, one task "t", features f1..fk.
// Throws Error(kInput) for infeasible parameters.
DomainInstance GenerateDomain(const GeneratorParams& params);

// Same, drawing from a caller-owned stream (used by the verifiers).
DomainInstance GenerateDomain(const GeneratorParams& params, Rng& rng);

}  // namespace fairaudit

#endif  // FAIRAUDIT_GENERATOR_HPP_
