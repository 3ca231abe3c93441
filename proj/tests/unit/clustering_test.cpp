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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include "movmf/error.hpp"
#include "movmf/metrics.hpp"
#include "movmf/random.hpp"
#include "movmf/synthetic.hpp"

namespace movmf {
namespace {

UnitVector unit(std::vector<double> v) { return length_normalize(v); }

UnitVector basis_vector(std::size_t d, std::size_t i) {
  std::vector<double> v(d, 0.0);
  v[i] = 1.0;
  return UnitVector::from_normalized(std::move(v));
}

// ln(kappa / (4 pi sinh kappa)), and the kappa = 0 limit 1 / (4 pi).
long double log_c3(long double kappa) {
  if (kappa == 0.0L) return -std::log(4.0L * std::numbers::pi_v<long double>);
  return std::log(kappa / (4.0L * std::numbers::pi_v<long double> * std::sinh(kappa)));
}

MixtureSample mixture_data(std::size_t d, std::size_t k, double kappa, std::size_t n,
                           std::uint64_t seed) {
  auto means = random_orthonormal_directions(d, k, seed);
  const auto model = make_mixture(std::move(means), std::vector<double>(k, kappa),
                                  std::vector<double>(k, 1.0));
  return sample_mixture(model, n, seed + 1000);
}

// True when a and b describe the same partition.
bool same_partition(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return false;
  std::map<std::size_t, std::size_t> ab;
  std::map<std::size_t, std::size_t> ba;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ab.emplace(a[i], b[i]);
    if (ab[a[i]] != b[i]) return false;
    ba.emplace(b[i], a[i]);
    if (ba[b[i]] != a[i]) return false;
  }
  return true;
}

void expect_valid_model(const MixtureModel& m) {
  const double sum = std::accumulate(m.weights.begin(), m.weights.end(), 0.0);
  EXPECT_NEAR(sum, 1.0, 1e-12);
  for (std::size_t h = 0; h < m.size(); ++h) {
    EXPECT_GE(m.weights[h], 0.0);
    EXPECT_GE(m.components[h].kappa, 0.0);
    EXPECT_LE(m.components[h].kappa, kKappaMax);
    EXPECT_NEAR(norm2(m.components[h].mu.values()), 1.0, 1e-12);
  }
}

TEST(ClusterConfig, Validation) {
  ClusterConfig c;
  EXPECT_NO_THROW(c.validate());
  c.n_clusters = 0;
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.max_iters = 0;
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.rel_tol = 0.0;
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.mode = ClusterMode::kMovmfTied;
  c.tied_kappa = 0.0;
  EXPECT_THROW(c.validate(), Error);
}

TEST(ClusterMode, Parsing) {
  EXPECT_EQ(parse_cluster_mode("movmf"), ClusterMode::kMovmf);
  EXPECT_EQ(parse_cluster_mode("skmeans"), ClusterMode::kSphericalKmeans);
  EXPECT_EQ(parse_cluster_mode("movmf-tied"), ClusterMode::kMovmfTied);
  EXPECT_EQ(parse_kappa_mode("eq10"), KappaMode::kClosedForm);
  EXPECT_EQ(parse_kappa_mode("exact"), KappaMode::kExact);
  EXPECT_THROW(parse_cluster_mode("kmeans++"), Error);
  for (auto m : {ClusterMode::kMovmf, ClusterMode::kSphericalKmeans, ClusterMode::kMovmfTied}) {
    EXPECT_EQ(parse_cluster_mode(to_string(m)), m);
  }
}

TEST(InitModel, SingleCluster) {
  const auto data = mixture_data(5, 2, 4.0, 300, 1);
  const auto model = init_model(data.points, 1, 9);
  std::vector<double> sum(5, 0.0);
  for (const auto& p : data.points) {
    for (std::size_t j = 0; j < 5; ++j) sum[j] += p[j];
  }
  const double rbar = norm2(sum) / 300.0;
  const auto mean_dir = length_normalize(sum);
  ASSERT_EQ(model.size(), 1u);
  EXPECT_EQ(model.weights[0], 1.0);
  for (std::size_t j = 0; j < 5; ++j) EXPECT_NEAR(model.components[0].mu[j], mean_dir[j], 1e-12);
  EXPECT_NEAR(model.components[0].kappa, estimate_kappa(rbar, 5), 1e-9);
}

TEST(InitModel, OneClusterPerPoint) {
  const auto data = mixture_data(6, 3, 10.0, 12, 2);
  const auto model = init_model(data.points, 12, 4);
  std::vector<std::size_t> hit;
  for (const auto& c : model.components) {
    EXPECT_EQ(c.kappa, kKappaMax);
    for (std::size_t i = 0; i < 12; ++i) {
      if (dot(c.mu.values(), data.points[i].values()) > 1.0 - 1e-14) hit.push_back(i);
    }
  }
  std::sort(hit.begin(), hit.end());
  std::vector<std::size_t> all(12);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_EQ(hit, all);
  for (double w : model.weights) EXPECT_DOUBLE_EQ(w, 1.0 / 12.0);
}

TEST(InitModel, Deterministic) {
  const auto data = mixture_data(10, 4, 20.0, 400, 3);
  const auto a = init_model(data.points, 4, 77);
  const auto b = init_model(data.points, 4, 77);
  EXPECT_EQ(a.weights, b.weights);
  for (std::size_t h = 0; h < 4; ++h) {
    EXPECT_EQ(a.components[h].mu, b.components[h].mu);
    EXPECT_EQ(a.components[h].kappa, b.components[h].kappa);
  }
}

TEST(InitModel, TooFewPoints) {
  const std::vector<UnitVector> pts{basis_vector(3, 0), basis_vector(3, 1)};
  try {
    init_model(pts, 3, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooFewPoints);
  }
}

TEST(FarthestPointSeeds, SecondSeedIsLeastSimilarToFirst) {
  const auto data = mixture_data(8, 3, 15.0, 200, 4);
  const auto seeds = farthest_point_seeds(data.points, 3, 5);
  ASSERT_EQ(seeds.size(), 3u);
  const auto& first = data.points[seeds[0]];
  double lowest = 2.0;
  for (const auto& p : data.points) lowest = std::min(lowest, dot(p.values(), first.values()));
  EXPECT_EQ(dot(data.points[seeds[1]].values(), first.values()), lowest);
  EXPECT_NE(seeds[0], seeds[2]);
  EXPECT_NE(seeds[1], seeds[2]);
}

TEST(EStep, PointAtMeanWins) {
  MixtureModel m;
  m.weights = {0.5, 0.5};
  m.components = {VmfParams(basis_vector(3, 0), 5.0), VmfParams(basis_vector(3, 1), 5.0)};
  const std::vector<UnitVector> x{basis_vector(3, 0), basis_vector(3, 1)};
  EXPECT_EQ(e_step_hard(m, x).labels, (std::vector<std::size_t>{0, 1}));
}

TEST(EStep, WeightDecidesEqualCosines) {
  MixtureModel m;
  m.weights = {0.7, 0.3};
  m.components = {VmfParams(basis_vector(3, 0), 4.0), VmfParams(basis_vector(3, 1), 4.0)};
  const std::vector<UnitVector> x{unit({1.0, 1.0, 0.0})};
  EXPECT_EQ(e_step_hard(m, x)[0], 0u);
  std::swap(m.weights[0], m.weights[1]);
  EXPECT_EQ(e_step_hard(m, x)[0], 1u);
}

TEST(EStep, ExactTieGoesToLowestIndex) {
  MixtureModel m;
  m.weights = {0.25, 0.25, 0.25, 0.25};
  m.components = {VmfParams(basis_vector(3, 2), 3.0), VmfParams(basis_vector(3, 0), 3.0),
                  VmfParams(basis_vector(3, 1), 3.0), VmfParams(basis_vector(3, 1), 3.0)};
  const std::vector<UnitVector> x{unit({1.0, 1.0, 0.0}), basis_vector(3, 1)};
  EXPECT_EQ(e_step_hard(m, x).labels, (std::vector<std::size_t>{1, 2}));
}

TEST(EStep, ZeroWeightComponentNeverWins) {
  MixtureModel m;
  m.weights = {0.0, 1.0};
  m.components = {VmfParams(basis_vector(3, 0), 50.0), VmfParams(basis_vector(3, 1), 1.0)};
  const std::vector<UnitVector> x{basis_vector(3, 0)};
  EXPECT_EQ(e_step_hard(m, x)[0], 1u);
}

TEST(EStep, DimensionMismatch) {
  MixtureModel m;
  m.weights = {1.0};
  m.components = {VmfParams(basis_vector(3, 0), 1.0)};
  const std::vector<UnitVector> x{basis_vector(4, 0)};
  EXPECT_THROW(e_step_hard(m, x), Error);
}

TEST(MStep, IdenticalPoints) {
  const auto u = unit({1.0, 2.0, 2.0});
  const std::vector<UnitVector> x(7, u);
  const Assignments a{std::vector<std::size_t>(7, 0)};
  const auto m = m_step(x, a, 1, KappaMode::kClosedForm);
  EXPECT_EQ(m.weights, std::vector<double>{1.0});
  for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(m.components[0].mu[j], u[j], 1e-15);
  EXPECT_EQ(m.components[0].kappa, kKappaMax);
}

TEST(MStep, WeightsAreClusterFractions) {
  const auto data = mixture_data(4, 2, 5.0, 100, 8);
  Assignments a;
  for (std::size_t i = 0; i < 100; ++i) a.labels.push_back(i < 30 ? 0 : 1);
  const auto m = m_step(data.points, a, 2, KappaMode::kClosedForm);
  EXPECT_DOUBLE_EQ(m.weights[0], 0.3);
  EXPECT_DOUBLE_EQ(m.weights[1], 0.7);
}

TEST(MStep, TwoBasisVectors) {
  const std::vector<UnitVector> x{basis_vector(3, 0), basis_vector(3, 1)};
  const Assignments a{{0, 0}};
  const auto m = m_step(x, a, 1, KappaMode::kClosedForm);
  EXPECT_NEAR(m.components[0].mu[0], std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(m.components[0].mu[1], std::sqrt(0.5), 1e-15);
  EXPECT_EQ(m.components[0].mu[2], 0.0);
  EXPECT_NEAR(m.components[0].kappa, 3.5355339059327376, 1e-12);
}

TEST(MStep, ExactModeSolvesBesselRatio) {
  const auto data = mixture_data(10, 1, 12.0, 500, 9);
  const Assignments a{std::vector<std::size_t>(500, 0)};
  const auto m = m_step(data.points, a, 1, KappaMode::kExact);
  const std::vector<double> w(500, 1.0);
  EXPECT_NEAR(bessel_ratio(10, m.components[0].kappa), mean_resultant(data.points, w).rbar,
              1e-10);
}

TEST(MStep, EmptyClusterThrows) {
  const std::vector<UnitVector> x{basis_vector(3, 0), basis_vector(3, 1)};
  try {
    m_step(x, Assignments{{0, 0}}, 2, KappaMode::kClosedForm);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCluster);
  }
}

TEST(ReseedEmptyClusters, TakesLowestScoringDonor) {
  Assignments a{{0, 0, 0, 1, 1}};
  const std::vector<double> scores{-1.0, -5.0, -2.0, -9.0, -0.5};
  // Cluster 2 is empty. Point 3 has the lowest score and its cluster has
  // two members, so it moves.
  EXPECT_EQ(reseed_empty_clusters(scores, 3, a), 1u);
  EXPECT_EQ(a.labels, (std::vector<std::size_t>{0, 0, 0, 2, 1}));
}

TEST(ReseedEmptyClusters, SingletonsAreNotDonors) {
  Assignments a{{0, 1, 1}};
  const std::vector<double> scores{-10.0, -1.0, -2.0};
  EXPECT_EQ(reseed_empty_clusters(scores, 3, a), 1u);
  EXPECT_EQ(a.labels, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Objective, UniformModel) {
  const auto data = mixture_data(5, 2, 3.0, 50, 10);
  MixtureModel m;
  m.weights = {1.0};
  m.components = {VmfParams(basis_vector(5, 0), 0.0)};
  const Assignments a{std::vector<std::size_t>(50, 0)};
  EXPECT_NEAR(objective(m, data.points, a), 50.0 * log_norm_const(5, 0.0), 1e-11);
}

TEST(Objective, SinglePointAtMode) {
  MixtureModel m;
  m.weights = {1.0};
  m.components = {VmfParams(basis_vector(4, 2), 7.0)};
  const std::vector<UnitVector> x{basis_vector(4, 2)};
  EXPECT_DOUBLE_EQ(objective(m, x, Assignments{{0}}), log_norm_const(4, 7.0) + 7.0);
}

TEST(Objective, FourPointsTwoClustersByHand) {
  MixtureModel m;
  m.weights = {0.25, 0.75};
  m.components = {VmfParams(basis_vector(3, 0), 2.0), VmfParams(basis_vector(3, 2), 1.0)};
  const std::vector<UnitVector> x{basis_vector(3, 0), unit({1.0, 1.0, 0.0}),
                                  basis_vector(3, 2), unit({0.0, -3.0, 4.0})};
  const Assignments a{{0, 0, 1, 1}};
  // Cosines with the assigned means: 1, 1/sqrt 2, 1, 4/5.
  const long double want = 2 * std::log(0.25L) + 2 * log_c3(2.0L) + 2.0L * (1.0L + std::sqrt(0.5L)) +
                           2 * std::log(0.75L) + 2 * log_c3(1.0L) + 1.0L * (1.0L + 0.8L);
  EXPECT_NEAR(objective(m, x, a), static_cast<double>(want), 1e-12);
}

TEST(MixtureLogDensity, SingleComponent) {
  MixtureModel m;
  m.weights = {1.0};
  m.components = {VmfParams(unit({1.0, 2.0, 3.0}), 4.0)};
  const auto x = unit({-1.0, 0.5, 2.0});
  EXPECT_DOUBLE_EQ(mixture_log_density(m, x), log_density(m.components[0], x));
}

TEST(MixtureLogDensity, IdenticalComponents) {
  MixtureModel m;
  const VmfParams c(unit({1.0, 2.0, 3.0}), 40.0);
  m.weights = {0.1, 0.6, 0.3};
  m.components = {c, c, c};
  const auto x = unit({-1.0, 0.5, 2.0});
  EXPECT_NEAR(mixture_log_density(m, x), log_density(c, x), 1e-12);
}

TEST(MixtureLogDensity, TwoComponentsDirectSum) {
  MixtureModel m;
  m.weights = {0.35, 0.65};
  m.components = {VmfParams(basis_vector(3, 0), 3.0), VmfParams(basis_vector(3, 1), 8.0)};
  for (const auto& x : {unit({1.0, 1.0, 1.0}), unit({-2.0, 0.5, 0.1}), basis_vector(3, 2)}) {
    const long double t0 = x[0];
    const long double t1 = x[1];
    const long double direct = std::log(0.35L * std::exp(log_c3(3.0L) + 3.0L * t0) +
                                        0.65L * std::exp(log_c3(8.0L) + 8.0L * t1));
    EXPECT_NEAR(mixture_log_density(m, x), static_cast<double>(direct), 1e-12);
  }
}

TEST(FitMovmf, SingleClusterConverges) {
  const auto data = mixture_data(6, 1, 10.0, 300, 11);
  ClusterConfig c;
  c.n_clusters = 1;
  const auto r = fit_movmf(data.points, c);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.iterations, 2u);
  std::vector<double> sum(6, 0.0);
  for (const auto& p : data.points) {
    for (std::size_t j = 0; j < 6; ++j) sum[j] += p[j];
  }
  const auto mean_dir = length_normalize(sum);
  for (std::size_t j = 0; j < 6; ++j) EXPECT_NEAR(r.model.components[0].mu[j], mean_dir[j], 1e-12);
}

TEST(FitMovmf, RecoversPlantedClusters) {
  const auto data = mixture_data(50, 4, 50.0, 2000, 12);
  ClusterConfig c;
  c.n_clusters = 4;
  c.seed = 3;
  const auto r = fit_movmf(data.points, c);
  EXPECT_GE(adjusted_rand_index(r.assignments.labels, data.labels), 0.95);
  expect_valid_model(r.model);
}

TEST(FitMovmf, ScoreEvaluationsAndModelInvariants) {
  const auto data = mixture_data(10, 3, 20.0, 250, 13);
  for (auto mode : {ClusterMode::kMovmf, ClusterMode::kMovmfTied, ClusterMode::kSphericalKmeans}) {
    ClusterConfig c;
    c.n_clusters = 3;
    c.mode = mode;
    const auto r = fit(data.points, c);
    EXPECT_GE(r.iterations, 1u);
    EXPECT_EQ(r.objective_trace.size(), r.iterations + 1);
    EXPECT_EQ(r.score_evaluations, 250u * 3u * r.iterations);
    EXPECT_EQ(r.assignments.size(), 250u);
    expect_valid_model(r.model);
  }
}

TEST(FitMovmf, DeterministicGivenSeed) {
  const auto data = mixture_data(10, 4, 15.0, 400, 14);
  ClusterConfig c;
  c.n_clusters = 4;
  c.seed = 21;
  const auto a = fit_movmf(data.points, c);
  const auto b = fit_movmf(data.points, c);
  EXPECT_EQ(a.assignments, b.assignments);
  EXPECT_EQ(a.objective_trace, b.objective_trace);
}

TEST(FitMovmf, ExactKappaObjectiveNeverDecreases) {
  std::size_t runs = 0;
  for (std::size_t d : {10u, 50u, 75u}) {
    for (std::size_t k : {2u, 4u, 9u}) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto data = mixture_data(d, k, 25.0, 40 * k, 100 * d + 10 * k + seed);
        ClusterConfig c;
        c.n_clusters = k;
        c.seed = seed;
        c.kappa_mode = KappaMode::kExact;
        const auto r = fit_movmf(data.points, c);
        for (std::size_t t = 1; t < r.objective_trace.size(); ++t) {
          EXPECT_GE(r.objective_trace[t], r.objective_trace[t - 1] - 1e-9)
              << "d=" << d << " k=" << k << " seed=" << seed << " step " << t;
        }
        ++runs;
      }
    }
  }
  EXPECT_EQ(runs, 180u);
}

TEST(FitMovmf, ClosedFormKappaEndsAboveStart) {
  for (std::size_t d : {10u, 50u, 75u}) {
    for (std::size_t k : {2u, 4u, 9u}) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto data = mixture_data(d, k, 25.0, 40 * k, 7 + 100 * d + 10 * k + seed);
        ClusterConfig c;
        c.n_clusters = k;
        c.seed = seed;
        const auto r = fit_movmf(data.points, c);
        EXPECT_GE(r.objective_trace.back(), r.objective_trace.front())
            << "d=" << d << " k=" << k << " seed=" << seed;
      }
    }
  }
}

TEST(FitMovmf, TiedModeMatchesSphericalKmeans) {
  for (double kappa : {1.0, 0.37, 12.5, 500.0}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto data = mixture_data(20, 5, 8.0, 600, 300 + seed);
      ClusterConfig c;
      c.n_clusters = 5;
      c.seed = seed;
      c.tied_kappa = kappa;
      c.record_history = true;
      // Stop on unchanged labels only; the two objectives are on different
      // scales, so a relative-gain stop could trigger at different steps.
      c.rel_tol = 1e-300;
      const auto init = initialize(data.points, 5, seed);
      c.mode = ClusterMode::kMovmfTied;
      const auto tied = fit_movmf(data.points, c, init);
      c.mode = ClusterMode::kSphericalKmeans;
      const auto km = fit_spherical_kmeans(data.points, c, init);
      ASSERT_EQ(tied.label_history.size(), km.label_history.size())
          << "kappa=" << kappa << " seed=" << seed;
      for (std::size_t t = 0; t < km.label_history.size(); ++t) {
        EXPECT_EQ(tied.label_history[t], km.label_history[t])
            << "kappa=" << kappa << " seed=" << seed << " iteration " << t;
      }
    }
  }
}

TEST(FitMovmf, PartitionInvariantUnderShuffling) {
  const auto data = mixture_data(12, 4, 30.0, 300, 15);
  const std::size_t n = data.points.size();
  const auto init = initialize(data.points, 4, 2);

  // shuffled[i] = original[perm[i]]
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CounterRng rng(5);
  for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform_index(i + 1)]);
  std::vector<std::size_t> where(n);
  for (std::size_t i = 0; i < n; ++i) where[perm[i]] = i;
  std::vector<UnitVector> shuffled(n);
  for (std::size_t i = 0; i < n; ++i) shuffled[i] = data.points[perm[i]];

  // Same centers, listed in reverse order.
  std::vector<std::size_t> seeds;
  for (auto it = init.seed_indices.rbegin(); it != init.seed_indices.rend(); ++it) {
    seeds.push_back(where[*it]);
  }
  ClusterConfig c;
  c.n_clusters = 4;
  const auto a = fit_movmf(data.points, c, init);
  const auto b = fit_movmf(shuffled, c, initialize_from_seeds(shuffled, seeds));
  std::vector<std::size_t> b_in_original_order(n);
  for (std::size_t i = 0; i < n; ++i) b_in_original_order[perm[i]] = b.assignments[i];
  EXPECT_TRUE(same_partition(a.assignments.labels, b_in_original_order));
  EXPECT_NE(a.assignments.labels, b_in_original_order);
}

TEST(FitSphericalKmeans, SeparatesAntipodalCaps) {
  const auto mu = unit({1.0, -2.0, 0.5, 1.0});
  std::vector<double> neg(mu.values().begin(), mu.values().end());
  for (double& v : neg) v = -v;
  auto a = sample_vmf(VmfParams(mu, 40.0), 100, 1);
  const auto b = sample_vmf(VmfParams(unit(neg), 40.0), 100, 2);
  std::vector<std::size_t> truth(100, 0);
  truth.resize(200, 1);
  a.insert(a.end(), b.begin(), b.end());
  ClusterConfig c;
  c.n_clusters = 2;
  const auto r = fit_spherical_kmeans(a, c);
  EXPECT_TRUE(same_partition(r.assignments.labels, truth));
}

TEST(FitSphericalKmeans, CosineObjectiveNeverDecreases) {
  const auto data = mixture_data(30, 6, 6.0, 800, 16);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    ClusterConfig c;
    c.n_clusters = 6;
    c.seed = seed;
    c.rel_tol = 1e-300;
    const auto r = fit_spherical_kmeans(data.points, c);
    for (std::size_t t = 1; t < r.objective_trace.size(); ++t) {
      EXPECT_GE(r.objective_trace[t], r.objective_trace[t - 1] - 1e-9) << seed << " " << t;
    }
    for (const auto& comp : r.model.components) EXPECT_EQ(comp.kappa, c.tied_kappa);
  }
}

TEST(FitSphericalKmeans, ObjectiveIsSumOfCosines) {
  const auto data = mixture_data(8, 3, 10.0, 150, 17);
  ClusterConfig c;
  c.n_clusters = 3;
  const auto r = fit_spherical_kmeans(data.points, c);
  double s = 0.0;
  for (std::size_t i = 0; i < 150; ++i) {
    s += dot(r.model.components[r.assignments[i]].mu.values(), data.points[i].values());
  }
  EXPECT_NEAR(r.objective_trace.back(), s, 1e-9);
}

}  // namespace
}  // namespace movmf
