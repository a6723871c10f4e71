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

#include "generator.hpp"

#include <limits>
#include <string>

#include "error.hpp"

namespace fairaudit {

std::uint64_t Rng::Uniform(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return Next();
  const std::uint64_t range = span + 1;
  // Largest multiple of `range` that fits, to avoid modulo bias.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = Next();
  } while (x >= limit);
  return lo + x % range;
}

WeightStyle ParseWeightStyle(std::string_view text) {
  if (text == "uniform") return WeightStyle::kUniform;
  if (text == "random") return WeightStyle::kRandom;
  ThrowInput("unknown weight style '" + std::string(text) + "'");
}

std::string_view WeightStyleName(WeightStyle s) {
  return s == WeightStyle::kUniform ? "uniform" : "random";
}

DomainInstance GenerateDomain(const GeneratorParams& params) {
  Rng rng(params.seed);
  return GenerateDomain(params, rng);
}

DomainInstance GenerateDomain(const GeneratorParams& p, Rng& rng) {
  if (p.min_instances < 2 || p.min_instances > p.max_instances) {
    ThrowInput("instance range must satisfy 2 <= min <= max");
  }
  if (p.min_features > p.max_features) {
    ThrowInput("feature range must satisfy min <= max");
  }
  if (p.alphabet < 1) ThrowInput("alphabet must hold at least one value");
  if (p.weights == WeightStyle::kRandom && p.max_denominator < p.max_instances) {
    ThrowInput("max denominator must be at least the instance count");
  }
  const std::size_t n = rng.Uniform(p.min_instances, p.max_instances);
  const std::size_t k = rng.Uniform(p.min_features, p.max_features);

  std::vector<Group> groups(n);
  bool any_a = false;
  bool any_d = false;
  for (auto& g : groups) {
    g = rng.Coin() ? Group::kD : Group::kA;
    (g == Group::kA ? any_a : any_d) = true;
  }
  // n >= 2, so at most one group can be missing.
  if (!any_a) groups[rng.Uniform(0, n - 1)] = Group::kA;
  if (!any_d) groups[rng.Uniform(0, n - 1)] = Group::kD;

  std::vector<Rational> weights(n);
  if (p.weights == WeightStyle::kUniform) {
    for (auto& w : weights) w = Rational(1, static_cast<std::int64_t>(n));
  } else {
    const auto den = static_cast<std::int64_t>(p.max_denominator);
    std::int64_t remaining = den;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const auto left = static_cast<std::int64_t>(n - i - 1);  // still to place
      const std::int64_t cap = remaining - left;  // every later weight >= 1/den
      const std::int64_t fair = 2 * remaining / (left + 1);
      const std::int64_t hi = std::max<std::int64_t>(1, std::min(cap, fair));
      const auto units = static_cast<std::int64_t>(rng.Uniform(1, hi));
      weights[i] = Rational(units, den);
      remaining -= units;
    }
    weights[n - 1] = Rational(remaining, den);  // absorbs the residue
  }

  std::vector<Instance> instances;
  instances.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    instances.push_back(
        Instance{"x" + std::to_string(i + 1), groups[i], weights[i]});
  }
  Labeling t(n);
  for (auto& l : t) l = rng.Coin() ? 1 : 0;
  std::map<std::string, Feature> features;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::string> values(n);
    for (auto& v : values) v = std::to_string(rng.Uniform(0, p.alphabet - 1));
    const std::string name = "f" + std::to_string(j + 1);
    features.emplace(name, Feature(name, std::move(values)));
  }
  return DomainInstance(std::move(instances), {{"t", std::move(t)}},
                        std::move(features));
}

}  // namespace fairaudit
