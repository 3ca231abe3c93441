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

#include "movmf/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "movmf/error.hpp"
#include "movmf/random.hpp"

namespace movmf {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_points(std::span<const UnitVector> points, std::size_t n_clusters) {
  if (n_clusters == 0) throw Error(ErrorCode::kInvalidArgument, "need at least one cluster");
  if (points.size() < n_clusters) {
    throw Error(ErrorCode::kTooFewPoints, std::to_string(points.size()) + " points for " +
                                              std::to_string(n_clusters) + " clusters");
  }
  const std::size_t d = points.front().dim();
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].dim() != d) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "point " + std::to_string(i) + " has dimension " +
                      std::to_string(points[i].dim()) + ", expected " + std::to_string(d));
    }
  }
}

double estimate(KappaMode mode, double rbar, int d) {
  return mode == KappaMode::kExact ? estimate_kappa_exact(rbar, d) : estimate_kappa(rbar, d);
}

// Per-point score under the point's own cluster, used to pick reseed donors.
std::vector<double> own_scores(const MixtureModel& model, std::span<const UnitVector> points,
                               const Assignments& assign) {
  std::vector<double> s(points.size());
  const int d = static_cast<int>(model.dim());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto h = assign[i];
    const auto& c = model.components[h];
    s[i] = std::log(model.weights[h]) + log_norm_const(d, c.kappa) +
           c.kappa * dot(c.mu.values(), points[i].values());
  }
  return s;
}

std::vector<double> cosine_scores(const MixtureModel& model, std::span<const UnitVector> points,
                                  const Assignments& assign) {
  std::vector<double> s(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    s[i] = dot(model.components[assign[i]].mu.values(), points[i].values());
  }
  return s;
}

Assignments nearest_by_cosine(const MixtureModel& model, std::span<const UnitVector> points) {
  Assignments out;
  out.labels.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::size_t best = 0;
    double best_sim = kNegInf;
    for (std::size_t h = 0; h < model.size(); ++h) {
      const double sim = dot(model.components[h].mu.values(), points[i].values());
      if (sim > best_sim) {
        best_sim = sim;
        best = h;
      }
    }
    out.labels[i] = best;
  }
  return out;
}

double cosine_objective(const MixtureModel& model, std::span<const UnitVector> points,
                        const Assignments& assign) {
  double s = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    s += dot(model.components[assign[i]].mu.values(), points[i].values());
  }
  return s;
}

void tie_parameters(MixtureModel& model, double kappa) {
  const double w = 1.0 / static_cast<double>(model.size());
  std::fill(model.weights.begin(), model.weights.end(), w);
  for (auto& c : model.components) c.kappa = kappa;
}

bool small_gain(double prev, double cur, double rel_tol) {
  return cur - prev < rel_tol * std::abs(prev);
}

}  // namespace

ClusterMode parse_cluster_mode(std::string_view name) {
  if (name == "movmf") return ClusterMode::kMovmf;
  if (name == "skmeans" || name == "spherical_kmeans") return ClusterMode::kSphericalKmeans;
  if (name == "movmf-tied" || name == "movmf_tied") return ClusterMode::kMovmfTied;
  throw Error(ErrorCode::kInvalidArgument, "unknown clustering mode '" + std::string(name) + "'");
}

KappaMode parse_kappa_mode(std::string_view name) {
  if (name == "eq10" || name == "closed-form") return KappaMode::kClosedForm;
  if (name == "exact") return KappaMode::kExact;
  throw Error(ErrorCode::kInvalidArgument, "unknown kappa mode '" + std::string(name) + "'");
}

std::string_view to_string(ClusterMode mode) {
  switch (mode) {
    case ClusterMode::kMovmf: return "movmf";
    case ClusterMode::kSphericalKmeans: return "skmeans";
    case ClusterMode::kMovmfTied: return "movmf-tied";
  }
  return "?";
}

std::string_view to_string(KappaMode mode) {
  return mode == KappaMode::kExact ? "exact" : "eq10";
}

void ClusterConfig::validate() const {
  if (n_clusters < 1) throw Error(ErrorCode::kInvalidArgument, "n_clusters must be >= 1");
  if (max_iters < 1) throw Error(ErrorCode::kInvalidArgument, "max_iters must be >= 1");
  if (!(rel_tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "rel_tol must be > 0");
  if (!(tied_kappa >= 0.0) || tied_kappa > kKappaMax) {
    throw Error(ErrorCode::kInvalidArgument, "tied_kappa outside [0, 1e5]");
  }
  // With a shared kappa of 0 every component scores the same.
  if (mode == ClusterMode::kMovmfTied && tied_kappa == 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "tied mode needs tied_kappa > 0");
  }
}

std::vector<std::size_t> farthest_point_seeds(std::span<const UnitVector> points,
                                              std::size_t n_clusters, std::uint64_t seed) {
  check_points(points, n_clusters);
  const std::size_t n = points.size();
  CounterRng rng(seed);
  std::vector<std::size_t> seeds;
  seeds.reserve(n_clusters);
  seeds.push_back(static_cast<std::size_t>(rng.uniform_index(n)));

  std::vector<bool> taken(n, false);
  taken[seeds.front()] = true;
  std::vector<double> nearest(n, kNegInf);
  while (seeds.size() < n_clusters) {
    const auto c = points[seeds.back()].values();
    std::size_t next = n;
    double lowest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      nearest[i] = std::max(nearest[i], dot(points[i].values(), c));
      if (!taken[i] && nearest[i] < lowest) {
        lowest = nearest[i];
        next = i;
      }
    }
    taken[next] = true;
    seeds.push_back(next);
  }
  return seeds;
}

Initialization initialize_from_seeds(std::span<const UnitVector> points,
                                     std::span<const std::size_t> seed_indices,
                                     KappaMode kappa_mode) {
  check_points(points, seed_indices.size());
  const std::size_t k = seed_indices.size();
  MixtureModel seeds;
  seeds.weights.assign(k, 1.0 / static_cast<double>(k));
  for (std::size_t s : seed_indices) {
    if (s >= points.size()) throw Error(ErrorCode::kInvalidArgument, "seed index out of range");
    seeds.components.emplace_back(points[s], 0.0);
  }

  Initialization init;
  init.seed_indices.assign(seed_indices.begin(), seed_indices.end());
  init.assignments = nearest_by_cosine(seeds, points);
  reseed_empty_clusters(cosine_scores(seeds, points, init.assignments), k, init.assignments);
  init.model = m_step(points, init.assignments, k, kappa_mode);
  return init;
}

Initialization initialize(std::span<const UnitVector> points, std::size_t n_clusters,
                          std::uint64_t seed, KappaMode kappa_mode) {
  const auto seeds = farthest_point_seeds(points, n_clusters, seed);
  return initialize_from_seeds(points, seeds, kappa_mode);
}

MixtureModel init_model(std::span<const UnitVector> points, std::size_t n_clusters,
                        std::uint64_t seed, KappaMode kappa_mode) {
  return initialize(points, n_clusters, seed, kappa_mode).model;
}

Assignments e_step_hard(const MixtureModel& model, std::span<const UnitVector> points) {
  const std::size_t k = model.size();
  const int d = static_cast<int>(model.dim());
  std::vector<double> offset(k, kNegInf);
  for (std::size_t h = 0; h < k; ++h) {
    if (model.weights[h] > 0.0) {
      offset[h] = std::log(model.weights[h]) + log_norm_const(d, model.components[h].kappa);
    }
  }
  // Shift by the largest offset so that terms shared by all components
  // cancel exactly instead of up to rounding.
  const double base = *std::max_element(offset.begin(), offset.end());
  if (base != kNegInf) {
    for (double& o : offset) {
      if (o != kNegInf) o -= base;
    }
  }
  Assignments out;
  out.labels.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dim() != model.dim()) {
      throw Error(ErrorCode::kDimensionMismatch, "point " + std::to_string(i) +
                                                     " does not match model dimension");
    }
    std::size_t best = 0;
    double best_score = kNegInf;
    bool found = false;
    for (std::size_t h = 0; h < k; ++h) {
      if (offset[h] == kNegInf) continue;
      const auto& c = model.components[h];
      const double score = offset[h] + c.kappa * dot(c.mu.values(), points[i].values());
      if (!found || score > best_score) {
        best_score = score;
        best = h;
        found = true;
      }
    }
    out.labels[i] = best;
  }
  return out;
}

MixtureModel m_step(std::span<const UnitVector> points, const Assignments& assign,
                    std::size_t n_clusters, KappaMode kappa_mode) {
  if (assign.size() != points.size()) {
    throw Error(ErrorCode::kLengthMismatch, "labels and points differ in length");
  }
  check_points(points, n_clusters);
  const std::size_t n = points.size();
  const std::size_t d = points.front().dim();

  std::vector<std::vector<double>> resultant(n_clusters, std::vector<double>(d, 0.0));
  std::vector<std::size_t> count(n_clusters, 0);
  std::vector<std::size_t> first(n_clusters, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t h = assign[i];
    if (h >= n_clusters) throw Error(ErrorCode::kInvalidArgument, "label out of range");
    const auto v = points[i].values();
    for (std::size_t j = 0; j < d; ++j) resultant[h][j] += v[j];
    if (count[h]++ == 0) first[h] = i;
  }

  MixtureModel model;
  model.weights.resize(n_clusters);
  model.components.reserve(n_clusters);
  for (std::size_t h = 0; h < n_clusters; ++h) {
    if (count[h] == 0) {
      throw Error(ErrorCode::kEmptyCluster, "cluster " + std::to_string(h) + " has no points");
    }
    const double mass = static_cast<double>(count[h]);
    model.weights[h] = mass / static_cast<double>(n);
    const double len = norm2(resultant[h]);
    if (len < kZeroNormThreshold) {
      // Members cancel exactly; no preferred direction.
      model.components.emplace_back(points[first[h]], 0.0);
      continue;
    }
    const double rbar = std::min(len / mass, 1.0);
    model.components.emplace_back(length_normalize(resultant[h]),
                                  estimate(kappa_mode, rbar, static_cast<int>(d)));
  }
  return model;
}

double objective(const MixtureModel& model, std::span<const UnitVector> points,
                 const Assignments& assign) {
  if (assign.size() != points.size()) {
    throw Error(ErrorCode::kLengthMismatch, "labels and points differ in length");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::size_t h = assign[i];
    total += std::log(model.weights[h]) + log_density(model.components[h], points[i]);
  }
  return total;
}

double mixture_log_density(const MixtureModel& model, const UnitVector& x) {
  std::vector<double> terms;
  terms.reserve(model.size());
  double peak = kNegInf;
  for (std::size_t h = 0; h < model.size(); ++h) {
    if (!(model.weights[h] > 0.0)) continue;
    terms.push_back(std::log(model.weights[h]) + log_density(model.components[h], x));
    peak = std::max(peak, terms.back());
  }
  if (terms.empty() || peak == kNegInf) return kNegInf;
  double s = 0.0;
  for (double t : terms) s += std::exp(t - peak);
  return peak + std::log(s);
}

std::size_t reseed_empty_clusters(std::span<const double> point_scores, std::size_t n_clusters,
                                  Assignments& assign) {
  std::vector<std::size_t> count(n_clusters, 0);
  for (std::size_t l : assign.labels) ++count[l];
  std::vector<bool> moved(assign.size(), false);
  std::size_t reseeded = 0;
  for (std::size_t h = 0; h < n_clusters; ++h) {
    if (count[h] != 0) continue;
    std::size_t pick = assign.size();
    double lowest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < assign.size(); ++i) {
      if (moved[i] || count[assign[i]] < 2) continue;
      if (pick == assign.size() || point_scores[i] < lowest) {
        lowest = point_scores[i];
        pick = i;
      }
    }
    if (pick == assign.size()) {
      throw Error(ErrorCode::kEmptyCluster, "no donor point for empty cluster " + std::to_string(h));
    }
    --count[assign.labels[pick]];
    assign.labels[pick] = h;
    ++count[h];
    moved[pick] = true;
    ++reseeded;
  }
  return reseeded;
}

ClusteringResult fit_movmf(std::span<const UnitVector> points, const ClusterConfig& config) {
  config.validate();
  return fit_movmf(points, config,
                   initialize(points, config.n_clusters, config.seed, config.kappa_mode));
}

ClusteringResult fit_movmf(std::span<const UnitVector> points, const ClusterConfig& config,
                           const Initialization& init) {
  config.validate();
  check_points(points, config.n_clusters);
  const bool tied = config.mode == ClusterMode::kMovmfTied;
  const std::size_t k = config.n_clusters;

  ClusteringResult result;
  result.model = init.model;
  result.assignments = init.assignments;
  if (tied) tie_parameters(result.model, config.tied_kappa);
  result.objective_trace.push_back(objective(result.model, points, result.assignments));
  if (config.record_history) result.label_history.push_back(result.assignments);

  for (std::size_t iter = 1; iter <= config.max_iters; ++iter) {
    Assignments next = e_step_hard(result.model, points);
    result.score_evaluations += points.size() * k;
    reseed_empty_clusters(own_scores(result.model, points, next), k, next);
    const bool changed = next != result.assignments;
    result.assignments = std::move(next);

    MixtureModel updated = m_step(points, result.assignments, k, config.kappa_mode);
    if (tied) tie_parameters(updated, config.tied_kappa);
    result.model = std::move(updated);

    const double prev = result.objective_trace.back();
    const double cur = objective(result.model, points, result.assignments);
    result.objective_trace.push_back(cur);
    if (config.record_history) result.label_history.push_back(result.assignments);
    result.iterations = iter;
    if (!changed || small_gain(prev, cur, config.rel_tol)) {
      result.converged = true;
      break;
    }
  }
  return result;
}

ClusteringResult fit_spherical_kmeans(std::span<const UnitVector> points,
                                      const ClusterConfig& config) {
  config.validate();
  return fit_spherical_kmeans(
      points, config, initialize(points, config.n_clusters, config.seed, config.kappa_mode));
}

ClusteringResult fit_spherical_kmeans(std::span<const UnitVector> points,
                                      const ClusterConfig& config, const Initialization& init) {
  config.validate();
  check_points(points, config.n_clusters);
  const std::size_t k = config.n_clusters;

  ClusteringResult result;
  result.model = init.model;
  result.assignments = init.assignments;
  tie_parameters(result.model, config.tied_kappa);
  result.objective_trace.push_back(cosine_objective(result.model, points, result.assignments));
  if (config.record_history) result.label_history.push_back(result.assignments);

  for (std::size_t iter = 1; iter <= config.max_iters; ++iter) {
    Assignments next = nearest_by_cosine(result.model, points);
    result.score_evaluations += points.size() * k;
    reseed_empty_clusters(cosine_scores(result.model, points, next), k, next);
    const bool changed = next != result.assignments;
    result.assignments = std::move(next);

    // Centroids are the cluster resultants projected back onto the sphere.
    MixtureModel updated = m_step(points, result.assignments, k, config.kappa_mode);
    tie_parameters(updated, config.tied_kappa);
    result.model = std::move(updated);

    const double prev = result.objective_trace.back();
    const double cur = cosine_objective(result.model, points, result.assignments);
    result.objective_trace.push_back(cur);
    if (config.record_history) result.label_history.push_back(result.assignments);
    result.iterations = iter;
    if (!changed || small_gain(prev, cur, config.rel_tol)) {
      result.converged = true;
      break;
    }
  }
  return result;
}

ClusteringResult fit(std::span<const UnitVector> points, const ClusterConfig& config) {
  if (config.mode == ClusterMode::kSphericalKmeans) return fit_spherical_kmeans(points, config);
  return fit_movmf(points, config);
}

}  // namespace movmf
