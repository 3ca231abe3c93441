// Copyright 2026 The movmf Authors
//
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

#include "movmf/synthetic.hpp"

#include <numeric>
#include <string>

#include "movmf/error.hpp"
#include "movmf/random.hpp"

namespace movmf {

MixtureSample sample_mixture(const MixtureModel& model, std::size_t n, std::uint64_t seed) {
  if (model.size() == 0) throw Error(ErrorCode::kInvalidArgument, "empty mixture");
  std::vector<double> cumulative(model.size());
  std::partial_sum(model.weights.begin(), model.weights.end(), cumulative.begin());

  CounterRng pick(seed, 1);
  CounterRng draw(seed, 2);
  MixtureSample out;
  out.points.reserve(n);
  out.labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = pick.uniform() * cumulative.back();
    std::size_t h = 0;
    while (h + 1 < cumulative.size() && u >= cumulative[h]) ++h;
    out.labels.push_back(h);
    out.points.push_back(std::move(sample_vmf(model.components[h], 1, draw).front()));
  }
  return out;
}

std::vector<UnitVector> random_orthonormal_directions(std::size_t d, std::size_t k,
                                                      std::uint64_t seed) {
  if (k > d) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot place " + std::to_string(k) + " orthogonal directions in " +
                    std::to_string(d) + " dimensions");
  }
  CounterRng rng(seed, 3);
  std::vector<std::vector<double>> basis;
  std::vector<UnitVector> out;
  while (out.size() < k) {
    std::vector<double> v(d);
    for (double& x : v) x = rng.normal();
    // Two Gram-Schmidt passes for numerical orthogonality.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        const double p = dot(v, b);
        for (std::size_t j = 0; j < d; ++j) v[j] -= p * b[j];
      }
    }
    if (norm2(v) < 1e-6) continue;
    out.push_back(length_normalize(v));
    basis.emplace_back(out.back().values().begin(), out.back().values().end());
  }
  return out;
}

MixtureModel make_mixture(std::vector<UnitVector> means, const std::vector<double>& kappas,
                          const std::vector<double>& weights) {
  if (means.size() != kappas.size() || means.size() != weights.size()) {
    throw Error(ErrorCode::kLengthMismatch, "means, kappas and weights differ in length");
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0.0)) throw Error(ErrorCode::kInvalidArgument, "mixture weights sum to zero");
  MixtureModel m;
  for (std::size_t h = 0; h < means.size(); ++h) {
    if (weights[h] < 0.0) throw Error(ErrorCode::kInvalidArgument, "negative mixture weight");
    m.weights.push_back(weights[h] / total);
    m.components.emplace_back(std::move(means[h]), kappas[h]);
  }
  return m;
}

}  // namespace movmf
