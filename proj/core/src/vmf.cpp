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

#include "movmf/vmf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "movmf/error.hpp"

namespace movmf {
namespace {

void check_dim(int d) {
  if (d < 2) {
    throw Error(ErrorCode::kInvalidArgument, "vMF dimension must be >= 2, got " + std::to_string(d));
  }
}

}  // namespace

double log_norm_const(int d, double kappa) {
  check_dim(d);
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
    throw Error(ErrorCode::kInvalidArgument, "kappa must be finite and >= 0");
  }
  const double half_d = 0.5 * d;
  if (kappa == 0.0) {
    return std::lgamma(half_d) - std::numbers::ln2 - half_d * std::log(std::numbers::pi);
  }
  const double nu = half_d - 1.0;
  return nu * std::log(kappa) - half_d * std::log(2.0 * std::numbers::pi) -
         log_bessel_i(nu, kappa);
}

double bessel_ratio(int d, double kappa) {
  check_dim(d);
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw Error(ErrorCode::kInvalidArgument, "bessel_ratio needs kappa > 0");
  }
  const double nu = 0.5 * d - 1.0;
  return std::exp(log_bessel_i(nu + 1.0, kappa) - log_bessel_i(nu, kappa));
}

double estimate_kappa(double rbar, int d) {
  check_dim(d);
  if (!(rbar > 0.0)) return 0.0;
  if (rbar >= kRbarCeiling) return kKappaMax;
  const double k = (rbar * d - rbar * rbar * rbar) / (1.0 - rbar * rbar);
  return std::clamp(k, 0.0, kKappaMax);
}

double estimate_kappa_exact(double rbar, int d) {
  check_dim(d);
  if (!(rbar > 0.0)) return 0.0;
  rbar = std::min(rbar, kRbarCeiling);
  if (bessel_ratio(d, kKappaMax) <= rbar) return kKappaMax;

  // A_d is increasing on (0, inf) with A_d(0+) = 0, so [lo, hi] always
  // brackets the root.
  double lo = 0.0;
  double hi = kKappaMax;
  double kappa = std::clamp(estimate_kappa(rbar, d), 1e-8, kKappaMax);
  for (int iter = 0; iter < 200; ++iter) {
    const double a = bessel_ratio(d, kappa);
    const double f = a - rbar;
    if (f == 0.0) return kappa;
    if (f < 0.0) {
      lo = kappa;
    } else {
      hi = kappa;
    }
    // A'(k) = 1 - A^2 - (d - 1) A / k
    const double slope = 1.0 - a * a - (d - 1.0) * a / kappa;
    double next = kappa - f / slope;
    if (!(slope > 0.0) || !(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - kappa);
    kappa = next;
    if (step <= 1e-13 * kappa || hi - lo <= 1e-13 * hi) break;
  }
  return kappa;
}

VmfParams::VmfParams(UnitVector mean_direction, double concentration)
    : mu(std::move(mean_direction)), kappa(concentration) {
  if (!(kappa >= 0.0) || kappa > kKappaMax) {
    throw Error(ErrorCode::kInvalidArgument,
                "kappa " + std::to_string(kappa) + " outside [0, 1e5]");
  }
}

double log_density(const VmfParams& params, const UnitVector& x) {
  if (params.dim() != x.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "vMF parameters and point differ in dimension");
  }
  return log_norm_const(static_cast<int>(params.dim()), params.kappa) +
         params.kappa * dot(params.mu.values(), x.values());
}

ResultantSummary mean_resultant(std::span<const UnitVector> points,
                                std::span<const double> weights) {
  if (points.size() != weights.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "points and weights differ in length");
  }
  if (points.empty()) throw Error(ErrorCode::kEmptyCluster, "no points");
  const std::size_t d = points.front().dim();
  ResultantSummary out;
  out.resultant.assign(d, 0.0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dim() != d) {
      throw Error(ErrorCode::kDimensionMismatch, "point " + std::to_string(i) + " has wrong dimension");
    }
    const double w = weights[i];
    if (w == 0.0) continue;
    const auto v = points[i].values();
    for (std::size_t j = 0; j < d; ++j) out.resultant[j] += w * v[j];
    out.count_mass += w;
  }
  if (!(out.count_mass > 0.0)) throw Error(ErrorCode::kEmptyCluster, "weights sum to zero");
  out.rbar = norm2(out.resultant) / out.count_mass;
  return out;
}

}  // namespace movmf
