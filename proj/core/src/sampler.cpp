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

#include <cmath>
#include <numbers>

#include "movmf/error.hpp"
#include "movmf/random.hpp"
#include "movmf/vmf.hpp"

namespace movmf {

std::uint64_t CounterRng::uniform_index(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kInvalidArgument, "uniform_index bound must be positive");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t v = next_u64();
    if (v < limit) return v % bound;
  }
}

double CounterRng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

// Marsaglia & Tsang (2000); shapes below one are boosted by U^{1/shape}.
double CounterRng::gamma(double shape) {
  if (!(shape > 0.0)) throw Error(ErrorCode::kInvalidArgument, "gamma shape must be positive");
  if (shape < 1.0) {
    const double g = gamma(shape + 1.0);
    return g * std::pow(uniform(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double CounterRng::beta(double a, double b) {
  const double x = gamma(a);
  const double y = gamma(b);
  return x / (x + y);
}

UnitVector sample_uniform_direction(std::size_t d, CounterRng& rng) {
  std::vector<double> g(d);
  for (;;) {
    for (double& x : g) x = rng.normal();
    if (norm2(g) > 1e-8) return length_normalize(g);
  }
}

std::vector<UnitVector> sample_vmf(const VmfParams& params, std::size_t n,
                                   CounterRng& rng) {
  const std::size_t d = params.dim();
  if (d < 2) throw Error(ErrorCode::kInvalidArgument, "vMF sampling needs d >= 2");
  const double kappa = params.kappa;
  const auto mu = params.mu.values();
  std::vector<UnitVector> out;
  out.reserve(n);
  if (kappa == 0.0) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(sample_uniform_direction(d, rng));
    return out;
  }

  // Wood's envelope for the cosine w = mu . x.
  const double dm1 = static_cast<double>(d) - 1.0;
  const double b = dm1 / (2.0 * kappa + std::sqrt(4.0 * kappa * kappa + dm1 * dm1));
  const double x0 = (1.0 - b) / (1.0 + b);
  const double c = kappa * x0 + dm1 * std::log(1.0 - x0 * x0);
  const double half = 0.5 * dm1;

  std::vector<double> tangent(d);
  std::vector<double> point(d);
  for (std::size_t i = 0; i < n; ++i) {
    double w = 0.0;
    for (;;) {
      const double z = rng.beta(half, half);
      w = (1.0 - (1.0 + b) * z) / (1.0 - (1.0 - b) * z);
      const double u = rng.uniform();
      if (kappa * w + dm1 * std::log(1.0 - x0 * w) - c >= std::log(u)) break;
    }
    // Uniform direction in the tangent space at mu.
    double tn = 0.0;
    do {
      for (double& t : tangent) t = rng.normal();
      const double proj = dot(tangent, mu);
      for (std::size_t j = 0; j < d; ++j) tangent[j] -= proj * mu[j];
      tn = norm2(tangent);
    } while (tn < 1e-8);
    const double s = std::sqrt((1.0 - w) * (1.0 + w)) / tn;
    for (std::size_t j = 0; j < d; ++j) point[j] = w * mu[j] + s * tangent[j];
    out.push_back(length_normalize(point));
  }
  return out;
}

std::vector<UnitVector> sample_vmf(const VmfParams& params, std::size_t n,
                                   std::uint64_t seed) {
  CounterRng rng(seed);
  return sample_vmf(params, n, rng);
}

}  // namespace movmf
