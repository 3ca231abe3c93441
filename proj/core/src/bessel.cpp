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

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "movmf/error.hpp"
#include "movmf/vmf.hpp"

namespace movmf {
namespace {

constexpr double kDebyeMinOrder = 50.0;
constexpr double kHankelMinArg = 50.0;
constexpr double kEps = 1e-17;

// sum_k (x/2)^{2k+nu} / (k! Gamma(k+nu+1)), summed relative to the k = 0
// term. Terms can exceed the double range before they start to decay, so
// the running sum is rescaled when it gets large.
double log_bessel_i_series(double nu, double x) {
  const double log_first = nu * std::log(0.5 * x) - std::lgamma(nu + 1.0);
  const double q = 0.25 * x * x;
  constexpr double kRescale = 1e-250;
  const double log_rescale = -std::log(kRescale);

  double head = 1.0;
  double tail = 0.0;
  double term = 1.0;
  double shift = 0.0;
  for (int k = 1; k < 1000000; ++k) {
    const double kk = static_cast<double>(k);
    const double ratio = q / (kk * (kk + nu));
    term *= ratio;
    tail += term;
    if (term > 1e250) {
      head *= kRescale;
      tail *= kRescale;
      term *= kRescale;
      shift += log_rescale;
    }
    if (ratio < 0.5 && term < kEps * (head + tail)) break;
  }
  if (shift == 0.0) return log_first + std::log1p(tail);
  return log_first + shift + std::log(head + tail);
}

// I_nu(x) ~ e^x / sqrt(2 pi x) * sum_k (-1)^k a_k(nu) / x^k,
// a_k(nu) = prod_{j=1..k} (4 nu^2 - (2j-1)^2) / (k! 8^k).
// The e^{-x} companion series is below double resolution for x >= 50.
double log_bessel_i_hankel(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double sum = 1.0;
  double term = 1.0;
  for (int k = 1; k < 500; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = -term * (mu - odd * odd) / (8.0 * k * x);
    if (std::abs(next) >= std::abs(term)) break;  // asymptotic series turns
    term = next;
    sum += term;
    if (std::abs(term) < kEps * std::abs(sum)) break;
  }
  return x - 0.5 * std::log(2.0 * std::numbers::pi * x) + std::log(sum);
}

// Polynomial coefficients of Debye's u_k(p), generated by
//   u_{k+1}(p) = p^2 (1 - p^2) u_k'(p) / 2 + (1/8) int_0^p (1 - 5t^2) u_k(t) dt.
constexpr int kDebyeTerms = 14;
constexpr int kDebyeDegree = 3 * kDebyeTerms + 3;
using DebyePoly = std::array<double, kDebyeDegree + 1>;

const std::array<DebyePoly, kDebyeTerms>& debye_polynomials() {
  static const auto table = [] {
    std::array<DebyePoly, kDebyeTerms> u{};
    u[0][0] = 1.0;
    for (int k = 0; k + 1 < kDebyeTerms; ++k) {
      DebyePoly& next = u[k + 1];
      const DebyePoly& cur = u[k];
      for (int j = 1; j <= kDebyeDegree; ++j) {
        if (cur[j] == 0.0) continue;
        // p^2 (1 - p^2) * j c_j p^{j-1} / 2
        const double c = 0.5 * j * cur[j];
        if (j + 1 <= kDebyeDegree) next[j + 1] += c;
        if (j + 3 <= kDebyeDegree) next[j + 3] -= c;
      }
      for (int j = 0; j <= kDebyeDegree; ++j) {
        if (cur[j] == 0.0) continue;
        // (1/8) int_0^p (t^j - 5 t^{j+2}) c_j dt
        if (j + 1 <= kDebyeDegree) next[j + 1] += cur[j] / (8.0 * (j + 1));
        if (j + 3 <= kDebyeDegree) next[j + 3] -= 5.0 * cur[j] / (8.0 * (j + 3));
      }
    }
    return u;
  }();
  return table;
}

double eval_poly(const DebyePoly& c, double p) {
  double r = 0.0;
  for (int j = kDebyeDegree; j >= 0; --j) r = r * p + c[j];
  return r;
}

// ln I_nu(nu z) = nu eta - ln(2 pi nu)/2 - ln(1 + z^2)/4 + ln sum_k u_k(p) / nu^k,
// with p = 1/sqrt(1 + z^2) and eta = sqrt(1 + z^2) + ln(z / (1 + sqrt(1 + z^2))).
double log_bessel_i_debye(double nu, double x) {
  const double z = x / nu;
  const double root = std::hypot(1.0, z);
  const double p = 1.0 / root;
  const double eta = root + std::log(z) - std::log1p(root);

  const auto& u = debye_polynomials();
  double sum = 1.0;
  double nu_pow = 1.0;
  for (int k = 1; k < kDebyeTerms; ++k) {
    nu_pow *= nu;
    const double term = eval_poly(u[k], p) / nu_pow;
    sum += term;
    if (std::abs(term) < kEps * std::abs(sum)) break;
  }
  return nu * eta - 0.5 * std::log(2.0 * std::numbers::pi * nu) -
         0.5 * std::log(root) + std::log(sum);
}

}  // namespace

double log_bessel_i(double order, double x) {
  if (!(order >= 0.0) || !(x >= 0.0) || !std::isfinite(order) || !std::isfinite(x)) {
    throw Error(ErrorCode::kInvalidArgument,
                "log_bessel_i needs finite order >= 0 and x >= 0, got order=" +
                    std::to_string(order) + " x=" + std::to_string(x));
  }
  if (x == 0.0) {
    return order == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
  }
  if (order >= kDebyeMinOrder) return log_bessel_i_debye(order, x);
  if (x >= kHankelMinArg && x >= order * order) return log_bessel_i_hankel(order, x);
  return log_bessel_i_series(order, x);
}

}  // namespace movmf
