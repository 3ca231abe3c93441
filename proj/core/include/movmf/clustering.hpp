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

// Hard-assignment EM for mixtures of von Mises-Fisher distributions, and
// the spherical K-means baseline it reduces to when all weights and all
// concentrations are tied.
//
// One fit alternates
//   E: label_i = argmax_h  ln alpha_h + ln c_d(kappa_h) + kappa_h mu_h . x_i
//   M: alpha_h = n_h / n,  mu_h = r_h / ||r_h||,  kappa_h from rbar_h = ||r_h|| / n_h
// until the labels stop changing, the relative gain in the complete-data
// log-likelihood drops below rel_tol, or max_iters is hit. Only the n
// labels are kept between iterations.

#ifndef MOVMF_CLUSTERING_HPP_
#define MOVMF_CLUSTERING_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "movmf/hypersphere.hpp"
#include "movmf/vmf.hpp"

namespace movmf {

enum class ClusterMode {
  kMovmf,            // alpha and kappa estimated per component
  kSphericalKmeans,  // max-cosine assignment, normalized centroids
  kMovmfTied,        // alpha uniform and kappa shared, both held fixed
};

enum class KappaMode {
  kClosedForm,  // (rbar d - rbar^3) / (1 - rbar^2)
  kExact,       // solve A_d(kappa) = rbar
};

ClusterMode parse_cluster_mode(std::string_view name);
KappaMode parse_kappa_mode(std::string_view name);
std::string_view to_string(ClusterMode mode);
std::string_view to_string(KappaMode mode);

struct ClusterConfig {
  std::size_t n_clusters = 1;
  std::size_t max_iters = 200;
  double rel_tol = 1e-6;
  std::uint64_t seed = 0;
  ClusterMode mode = ClusterMode::kMovmf;
  KappaMode kappa_mode = KappaMode::kClosedForm;
  // Shared concentration for the tied mode; also reported as the
  // (unestimated) kappa of spherical K-means results.
  double tied_kappa = 1.0;
  // Keep the label vector of every iteration in ClusteringResult.
  bool record_history = false;

  /// Throws InvalidArgument when a field is out of range.
  void validate() const;
};

struct MixtureModel {
  std::vector<double> weights;
  std::vector<VmfParams> components;

  std::size_t size() const { return components.size(); }
  std::size_t dim() const { return components.empty() ? 0 : components.front().dim(); }
};

struct Assignments {
  std::vector<std::size_t> labels;

  std::size_t size() const { return labels.size(); }
  std::size_t operator[](std::size_t i) const { return labels[i]; }
  friend bool operator==(const Assignments&, const Assignments&) = default;
};

struct ClusteringResult {
  Assignments assignments;
  MixtureModel model;
  // Entry 0 is the initial model; one more entry per iteration. For
  // spherical K-means this is sum_i mu_{label_i} . x_i instead of the
  // log-likelihood.
  std::vector<double> objective_trace;
  std::size_t iterations = 0;
  bool converged = false;
  // Labels after initialization and after every iteration, when
  // ClusterConfig::record_history is set.
  std::vector<Assignments> label_history;
  // Component scores evaluated in E-steps, n * N_c per iteration.
  std::size_t score_evaluations = 0;
};

/// Starting point shared by every mode: seeds, bootstrap labels, and the
/// model fitted to them.
struct Initialization {
  std::vector<std::size_t> seed_indices;
  Assignments assignments;
  MixtureModel model;
};

/// Greedy farthest-point seeding in cosine distance. The first seed is
/// drawn from `seed`; each next one is the point least similar to its
/// nearest chosen seed (lowest index on ties).
std::vector<std::size_t> farthest_point_seeds(std::span<const UnitVector> points,
                                              std::size_t n_clusters, std::uint64_t seed);

/// Assigns every point to its most similar seed and runs one M-step.
Initialization initialize_from_seeds(std::span<const UnitVector> points,
                                     std::span<const std::size_t> seed_indices,
                                     KappaMode kappa_mode = KappaMode::kClosedForm);

Initialization initialize(std::span<const UnitVector> points, std::size_t n_clusters,
                          std::uint64_t seed, KappaMode kappa_mode = KappaMode::kClosedForm);

MixtureModel init_model(std::span<const UnitVector> points, std::size_t n_clusters,
                        std::uint64_t seed, KappaMode kappa_mode = KappaMode::kClosedForm);

/// Hardened E-step. Components with zero weight never win; exact score
/// ties go to the lowest index.
Assignments e_step_hard(const MixtureModel& model, std::span<const UnitVector> points);

/// M-step for a labelling in which every cluster is non-empty. Throws
/// EmptyCluster otherwise (fit_* reseed before calling it).
MixtureModel m_step(std::span<const UnitVector> points, const Assignments& assign,
                    std::size_t n_clusters, KappaMode kappa_mode);

/// Complete-data log-likelihood sum_i ln(alpha_{l_i} f_{l_i}(x_i)).
double objective(const MixtureModel& model, std::span<const UnitVector> points,
                 const Assignments& assign);

/// ln sum_h alpha_h f_h(x), via log-sum-exp.
double mixture_log_density(const MixtureModel& model, const UnitVector& x);

/// Moves points into empty clusters. For every empty cluster (ascending
/// index) the point with the lowest score under its current assignment is
/// taken from a cluster that keeps at least one member. Returns the number
/// of reseeded clusters.
std::size_t reseed_empty_clusters(std::span<const double> point_scores, std::size_t n_clusters,
                                  Assignments& assign);

ClusteringResult fit_movmf(std::span<const UnitVector> points, const ClusterConfig& config);
ClusteringResult fit_movmf(std::span<const UnitVector> points, const ClusterConfig& config,
                           const Initialization& init);

ClusteringResult fit_spherical_kmeans(std::span<const UnitVector> points,
                                      const ClusterConfig& config);
ClusteringResult fit_spherical_kmeans(std::span<const UnitVector> points,
                                      const ClusterConfig& config, const Initialization& init);

/// Dispatches on config.mode.
ClusteringResult fit(std::span<const UnitVector> points, const ClusterConfig& config);

}  // namespace movmf

#endif  // MOVMF_CLUSTERING_HPP_
