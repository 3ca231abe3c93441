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

// von Mises-Fisher distribution on S^{d-1}:
//
//   f(x | mu, kappa) = c_d(kappa) exp(kappa mu^T x)
//   c_d(kappa)       = kappa^{d/2-1} / ((2 pi)^{d/2} I_{d/2-1}(kappa))
//
// Everything is evaluated in the log domain; I_nu is never formed directly.

#ifndef MOVMF_VMF_HPP_
#define MOVMF_VMF_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "movmf/hypersphere.hpp"
#include "movmf/random.hpp"

namespace movmf {

/// Upper clamp for concentration estimates. A singleton cluster has
/// rbar = 1 and the closed-form estimate diverges there.
inline constexpr double kKappaMax = 1e5;

/// rbar values at or above this are treated as 1 - 1e-12.
inline constexpr double kRbarCeiling = 1.0 - 1e-12;

/// ln I_order(x), the modified Bessel function of the first kind.
///
/// Three regimes are used: the defining power series (small and moderate
/// arguments), the Hankel large-argument expansion (x >= max(50, order^2))
/// and Debye's uniform expansion for large orders (order >= 50). Returns
/// -infinity for x = 0 and order > 0. Throws InvalidArgument on negative
/// or non-finite input.
double log_bessel_i(double order, double x);

/// ln c_d(kappa). At kappa = 0 this is the uniform-sphere density
/// ln Gamma(d/2) - ln 2 - (d/2) ln pi.
double log_norm_const(int d, double kappa);

/// A_d(kappa) = I_{d/2}(kappa) / I_{d/2-1}(kappa), in (0, 1).
double bessel_ratio(int d, double kappa);

/// Closed-form approximation kappa = (rbar d - rbar^3) / (1 - rbar^2),
/// clamped to [0, kKappaMax].
double estimate_kappa(double rbar, int d);

/// Solves A_d(kappa) = rbar by bracketed Newton iteration, starting from
/// estimate_kappa. Result lies in [0, kKappaMax].
double estimate_kappa_exact(double rbar, int d);

struct VmfParams {
  VmfParams() = default;
  /// Throws InvalidArgument unless 0 <= kappa <= kKappaMax.
  VmfParams(UnitVector mean_direction, double concentration);

  std::size_t dim() const { return mu.dim(); }

  UnitVector mu;
  double kappa = 0.0;
};

/// ln c_d(kappa) + kappa mu^T x.
double log_density(const VmfParams& params, const UnitVector& x);

/// Rejection sampler (Wood 1994). Identical (params, n, seed) always
/// produce identical output.
std::vector<UnitVector> sample_vmf(const VmfParams& params, std::size_t n,
                                   std::uint64_t seed);
std::vector<UnitVector> sample_vmf(const VmfParams& params, std::size_t n,
                                   CounterRng& rng);

/// Uniformly distributed direction on S^{d-1}.
UnitVector sample_uniform_direction(std::size_t d, CounterRng& rng);

struct ResultantSummary {
  std::vector<double> resultant;  // sum_i w_i x_i
  double count_mass = 0.0;        // sum_i w_i
  double rbar = 0.0;              // ||resultant|| / count_mass
};

/// Weighted resultant of a set of unit vectors. Throws EmptyCluster when
/// the weights sum to zero and DimensionMismatch on ragged input.
ResultantSummary mean_resultant(std::span<const UnitVector> points,
                                std::span<const double> weights);

}  // namespace movmf

#endif  // MOVMF_VMF_HPP_
