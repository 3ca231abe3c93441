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

// Draws labelled samples from a known movMF, for benchmarks and recovery
// checks.

#ifndef MOVMF_SYNTHETIC_HPP_
#define MOVMF_SYNTHETIC_HPP_

#include <cstdint>
#include <vector>

#include "movmf/clustering.hpp"

namespace movmf {

struct MixtureSample {
  std::vector<UnitVector> points;
  std::vector<std::size_t> labels;  // generating component of each point
};

/// n i.i.d. draws: component h with probability alpha_h, then a vMF draw
/// from it. Deterministic in `seed`.
MixtureSample sample_mixture(const MixtureModel& model, std::size_t n, std::uint64_t seed);

/// k mutually orthogonal unit vectors (Gram-Schmidt on Gaussian draws).
/// Requires k <= d.
std::vector<UnitVector> random_orthonormal_directions(std::size_t d, std::size_t k,
                                                      std::uint64_t seed);

/// Builds a mixture from means, per-component concentrations and weights.
/// Weights are normalized to sum to one.
MixtureModel make_mixture(std::vector<UnitVector> means, const std::vector<double>& kappas,
                          const std::vector<double>& weights);

}  // namespace movmf

#endif  // MOVMF_SYNTHETIC_HPP_
