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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace movmf::oracle {

EigenPairs jacobi_eigen(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    }
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k][p];
          const double vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return a[x][x] > a[y][y]; });
  EigenPairs out;
  for (auto k : order) {
    out.values.push_back(a[k][k]);
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = v[i][k];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

std::vector<std::vector<double>> sample_covariance(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  const std::size_t d = rows.front().size();
  std::vector<double> mean(d, 0.0);
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < d; ++j) mean[j] += r[j] / static_cast<double>(n);
  }
  std::vector<std::vector<double>> c(d, std::vector<double>(d, 0.0));
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) c[i][j] += (r[i] - mean[i]) * (r[j] - mean[j]);
    }
  }
  for (auto& row : c) {
    for (double& x : row) x /= static_cast<double>(n - 1);
  }
  return c;
}

Quadrature gauss_legendre(std::size_t n) {
  Quadrature q;
  q.nodes.resize(n);
  q.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    q.nodes[i] = x;
    q.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return q;
}

double integrate_circle(const std::function<double(const std::vector<double>&)>& f,
                        std::size_t n) {
  double s = 0.0;
  const double h = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = h * static_cast<double>(i);
    s += f({std::cos(t), std::sin(t)});
  }
  return s * h;
}

double integrate_sphere(const std::function<double(const std::vector<double>&)>& f,
                        std::size_t n_theta, std::size_t n_phi) {
  const Quadrature q = gauss_legendre(n_theta);
  const double h = 2.0 * std::numbers::pi / static_cast<double>(n_phi);
  double s = 0.0;
  for (std::size_t i = 0; i < n_theta; ++i) {
    const double z = q.nodes[i];
    const double r = std::sqrt(1.0 - z * z);
    double ring = 0.0;
    for (std::size_t j = 0; j < n_phi; ++j) {
      const double phi = h * static_cast<double>(j);
      ring += f({r * std::cos(phi), r * std::sin(phi), z});
    }
    s += q.weights[i] * ring * h;
  }
  return s;
}

double brute_force_mi_bits(std::span<const int> ref, std::span<const int> sys) {
  if (ref.size() != sys.size() || ref.empty()) throw std::invalid_argument("bad sequences");
  const double n = static_cast<double>(ref.size());
  double mi = 0.0;
  for (std::size_t t = 0; t < ref.size(); ++t) {
    double joint = 0.0;
    double r = 0.0;
    double s = 0.0;
    for (std::size_t u = 0; u < ref.size(); ++u) {
      if (ref[u] == ref[t]) r += 1.0;
      if (sys[u] == sys[t]) s += 1.0;
      if (ref[u] == ref[t] && sys[u] == sys[t]) joint += 1.0;
    }
    mi += std::log2(joint * n / (r * s));
  }
  return mi / n;
}

namespace {

void enumerate(const std::vector<std::vector<std::int64_t>>& w, std::size_t row,
               std::vector<bool>& used, std::int64_t acc, std::int64_t& best) {
  if (row == w.size()) {
    best = std::max(best, acc);
    return;
  }
  enumerate(w, row + 1, used, acc, best);  // row left unmatched
  for (std::size_t c = 0; c < w[row].size(); ++c) {
    if (used[c]) continue;
    used[c] = true;
    enumerate(w, row + 1, used, acc + w[row][c], best);
    used[c] = false;
  }
}

}  // namespace

std::int64_t exhaustive_best_matching(const std::vector<std::vector<std::int64_t>>& w) {
  if (w.empty()) return 0;
  std::vector<bool> used(w.front().size(), false);
  std::int64_t best = 0;
  enumerate(w, 0, used, 0, best);
  return best;
}

long double log_bessel_series_ld(long double nu, long double x) {
  const long double half = x / 2;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int k = 1; k < 100000; ++k) {
    term *= half * half / (static_cast<long double>(k) * (k + nu));
    sum += term;
    if (term < sum * 1e-21L && k > x) break;
  }
  return nu * std::log(half) - std::lgamma(nu + 1) + std::log(sum);
}

}  // namespace movmf::oracle
