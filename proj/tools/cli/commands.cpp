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

#include "commands.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

#include "movmf/clustering.hpp"
#include "movmf/dataio.hpp"
#include "movmf/error.hpp"
#include "movmf/hypersphere.hpp"
#include "movmf/metrics.hpp"
#include "movmf/synthetic.hpp"

namespace movmf::cli {
namespace {

int fail(std::ostream& err, std::string_view command, std::string_view stage, const std::exception& e,
         int code) {
  err << "movmf " << command << ": " << stage << ": " << e.what() << '\n';
  return code;
}

int fail(std::ostream& err, std::string_view command, std::string_view stage,
         const std::string& message, int code) {
  err << "movmf " << command << ": " << stage << ": " << message << '\n';
  return code;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string cluster_label(std::size_t h) { return "spk" + std::to_string(h); }

}  // namespace

int cmd_cluster(const ClusterOptions& opt, std::ostream& out, std::ostream& err) {
  constexpr std::string_view kCmd = "cluster";
  ClusterConfig config;
  try {
    config.n_clusters = opt.n_clusters;
    config.max_iters = opt.max_iters;
    config.rel_tol = opt.tol;
    config.seed = opt.seed;
    config.mode = parse_cluster_mode(opt.mode);
    config.kappa_mode = parse_kappa_mode(opt.kappa);
    config.tied_kappa = opt.tied_kappa;
    config.validate();
  } catch (const Error& e) {
    return fail(err, kCmd, "options", e, kExitBadInput);
  }

  std::vector<RawEmbedding> raw;
  std::vector<Segment> segments;
  try {
    raw = read_embeddings(opt.embeddings);
  } catch (const Error& e) {
    return fail(err, kCmd, "reading embeddings", e, kExitBadInput);
  }
  try {
    segments = read_segment_rows(opt.segments);
  } catch (const Error& e) {
    return fail(err, kCmd, "reading segments", e, kExitBadInput);
  }
  if (raw.size() != segments.size()) {
    return fail(err, kCmd, "reading segments",
                std::to_string(raw.size()) + " embeddings but " +
                    std::to_string(segments.size()) + " segments",
                kExitBadInput);
  }

  const std::size_t raw_dim = raw.front().dim();
  if (opt.pca_dim) {
    if (*opt.pca_dim == 0 || *opt.pca_dim > raw_dim) {
      return fail(err, kCmd, "options",
                  "--pca-dim must be in [1, " + std::to_string(raw_dim) + "]", kExitBadInput);
    }
    try {
      const PcaModel pca = fit_pca(raw, *opt.pca_dim);
      for (auto& r : raw) r = pca_project(pca, r);
    } catch (const Error& e) {
      return fail(err, kCmd, "pca", e, kExitClustering);
    }
  }

  std::vector<UnitVector> points;
  points.reserve(raw.size());
  try {
    for (const auto& r : raw) points.push_back(length_normalize(r));
  } catch (const Error& e) {
    return fail(err, kCmd, "length normalization (row " + std::to_string(points.size() + 1) + ")",
                e, kExitClustering);
  }

  ClusteringResult result;
  try {
    result = fit(points, config);
  } catch (const Error& e) {
    return fail(err, kCmd, "clustering", e, kExitClustering);
  }
  for (std::size_t t = 0; t < result.objective_trace.size(); ++t) {
    err << "iter " << t << " objective " << num(result.objective_trace[t]) << '\n';
  }
  err << (result.converged ? "converged" : "stopped") << " after " << result.iterations
      << " iterations\n";

  std::vector<Segment> labelled = segments;
  for (std::size_t i = 0; i < labelled.size(); ++i) {
    labelled[i].label = cluster_label(result.assignments[i]);
  }
  try {
    write_rttm(opt.out, make_timeline(std::move(labelled)), opt.file_id);
    if (opt.assignments) {
      std::ostringstream body;
      for (std::size_t l : result.assignments.labels) body << l << '\n';
      std::ofstream f(*opt.assignments, std::ios::binary);
      f << body.str();
      if (!f) throw Error(ErrorCode::kIoError, "cannot write " + opt.assignments->string());
    }
  } catch (const Error& e) {
    return fail(err, kCmd, "writing output", e, kExitBadInput);
  }

  out << "n=" << points.size() << '\n'
      << "dim=" << points.front().dim() << '\n'
      << "clusters=" << config.n_clusters << '\n'
      << "mode=" << to_string(config.mode) << '\n'
      << "iterations=" << result.iterations << '\n'
      << "converged=" << (result.converged ? 1 : 0) << '\n'
      << "objective=" << num(result.objective_trace.back()) << '\n';
  return kExitOk;
}

std::string format_score_record(const ScoreRecord& r) {
  return "score der=" + num(r.der) + " phi_fa=" + num(r.phi_fa) + " phi_miss=" + num(r.phi_miss) +
         " phi_err=" + num(r.phi_err) + " phi_total=" + num(r.phi_total) +
         " mi_bits=" + num(r.mi_bits) + " h_ref=" + num(r.h_ref) + " h_sys=" + num(r.h_sys);
}

std::optional<ScoreRecord> parse_score_record(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string tok;
  if (!(in >> tok) || tok != "score") return std::nullopt;
  ScoreRecord r;
  const std::map<std::string, double*, std::less<>> fields{
      {"der", &r.der},         {"phi_fa", &r.phi_fa},   {"phi_miss", &r.phi_miss},
      {"phi_err", &r.phi_err}, {"phi_total", &r.phi_total}, {"mi_bits", &r.mi_bits},
      {"h_ref", &r.h_ref},     {"h_sys", &r.h_sys}};
  std::size_t seen = 0;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) return std::nullopt;
    const auto it = fields.find(std::string_view(tok).substr(0, eq));
    if (it == fields.end()) return std::nullopt;
    const char* first = tok.data() + eq + 1;
    const char* last = tok.data() + tok.size();
    const auto res = std::from_chars(first, last, *it->second);
    if (res.ec != std::errc() || res.ptr != last) return std::nullopt;
    ++seen;
  }
  if (seen != fields.size()) return std::nullopt;
  return r;
}

int cmd_score(const ScoreOptions& opt, std::ostream& out, std::ostream& err) {
  constexpr std::string_view kCmd = "score";
  if (!(opt.frame_size > 0.0) || !(opt.collar >= 0.0) ||
      (opt.duration && !(*opt.duration > 0.0))) {
    return fail(err, kCmd, "options", "frame size and duration must be positive, collar >= 0",
                kExitBadInput);
  }
  SegmentTimeline ref;
  SegmentTimeline sys;
  try {
    ref = read_rttm(opt.ref);
  } catch (const Error& e) {
    return fail(err, kCmd, "reading reference", e, kExitBadInput);
  }
  try {
    sys = read_rttm(opt.sys);
  } catch (const Error& e) {
    return fail(err, kCmd, "reading system output", e, kExitBadInput);
  }

  const double duration = opt.duration.value_or(ref.end_time());
  try {
    ref = make_timeline(std::move(ref.segments), duration);
    sys = make_timeline(std::move(sys.segments), duration);
  } catch (const Error& e) {
    return fail(err, kCmd, "aligning timelines", e,
                e.code() == ErrorCode::kDurationMismatch ? kExitDurationMismatch : kExitBadInput);
  }

  ScoreReport report;
  try {
    ScoringConfig config;
    config.frame_size = opt.frame_size;
    config.collar = opt.collar;
    report = score_timelines(ref, sys, config);
  } catch (const Error& e) {
    return fail(err, kCmd, "scoring", e,
                e.code() == ErrorCode::kDurationMismatch ? kExitDurationMismatch : kExitBadInput);
  }

  const auto& d = report.der;
  out << "DER " << fixed(100.0 * d.der, 2) << "% (false alarm " << fixed(d.phi_fa, 3)
      << " s, missed " << fixed(d.phi_miss, 3) << " s, speaker error " << fixed(d.phi_err, 3)
      << " s, scored speech " << fixed(d.phi_total, 3) << " s)\n";
  out << "MI " << fixed(report.mi_bits, 6) << " bits (H(ref) " << fixed(report.ref_entropy_bits, 6)
      << " bits, H(sys) " << fixed(report.sys_entropy_bits, 6) << " bits)\n";
  out << format_score_record({d.der, d.phi_fa, d.phi_miss, d.phi_err, d.phi_total, report.mi_bits,
                              report.ref_entropy_bits, report.sys_entropy_bits})
      << '\n';
  return kExitOk;
}

int cmd_synth(const SynthOptions& opt, std::ostream& out, std::ostream& err) {
  constexpr std::string_view kCmd = "synth";
  const std::size_t k = opt.n_clusters;
  std::string problem;
  if (opt.dim < 2) problem = "--dim must be at least 2";
  if (opt.n < 1) problem = "--n must be positive";
  if (k < 1) problem = "--nc must be positive";
  if (opt.kappas.size() != 1 && opt.kappas.size() != k) {
    problem = "--kappas needs 1 or " + std::to_string(k) + " values";
  }
  if (!opt.alphas.empty() && opt.alphas.size() != k) {
    problem = "--alphas needs " + std::to_string(k) + " values";
  }
  for (double a : opt.alphas) {
    if (!(a >= 0.0) || !std::isfinite(a)) problem = "--alphas must be non-negative";
  }
  if (!opt.alphas.empty() && !(std::accumulate(opt.alphas.begin(), opt.alphas.end(), 0.0) > 0.0)) {
    problem = "--alphas must not all be zero";
  }
  if (!problem.empty()) return fail(err, kCmd, "options", problem, kExitBadInput);

  MixtureSample sample;
  try {
    std::vector<UnitVector> means;
    if (k <= opt.dim) {
      means = random_orthonormal_directions(opt.dim, k, opt.seed);
    } else {
      CounterRng rng(opt.seed, 4);
      for (std::size_t h = 0; h < k; ++h) means.push_back(sample_uniform_direction(opt.dim, rng));
    }
    std::vector<double> kappas = opt.kappas;
    if (kappas.size() == 1) kappas.assign(k, kappas.front());
    const std::vector<double> alphas = opt.alphas.empty() ? std::vector<double>(k, 1.0) : opt.alphas;
    sample = sample_mixture(make_mixture(std::move(means), kappas, alphas), opt.n, opt.seed);
  } catch (const Error& e) {
    return fail(err, kCmd, "options", e, kExitBadInput);
  }

  // Back-to-back segments of 0.5 to 3 s, in whole milliseconds.
  CounterRng timing(opt.seed, 5);
  std::vector<Segment> segments;
  std::vector<Segment> truth;
  std::int64_t t_ms = 0;
  for (std::size_t i = 0; i < opt.n; ++i) {
    const auto len_ms = 500 + static_cast<std::int64_t>(timing.uniform_index(2501));
    Segment s{static_cast<double>(t_ms) / 1000.0, static_cast<double>(t_ms + len_ms) / 1000.0, ""};
    segments.push_back(s);
    const std::size_t h = sample.labels[i];
    s.label = opt.overlap && h + 1 == k ? std::string(kOverlapLabel) : cluster_label(h);
    truth.push_back(std::move(s));
    t_ms += len_ms;
  }

  std::vector<RawEmbedding> rows;
  rows.reserve(opt.n);
  for (const auto& p : sample.points) rows.emplace_back(std::vector<double>(p.values().begin(), p.values().end()));
  try {
    write_embeddings(opt.embeddings, rows, format_for_path(opt.embeddings));
    write_segments(opt.segments, segments);
    write_rttm(opt.truth, make_timeline(std::move(truth)), opt.file_id);
  } catch (const Error& e) {
    return fail(err, kCmd, "writing output", e, kExitBadInput);
  }

  std::vector<std::size_t> counts(k, 0);
  for (std::size_t h : sample.labels) ++counts[h];
  out << "n=" << opt.n << '\n' << "dim=" << opt.dim << '\n' << "components=" << k << '\n';
  for (std::size_t h = 0; h < k; ++h) out << "count_" << h << '=' << counts[h] << '\n';
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Speaker clustering with mixtures of von Mises-Fisher distributions", "movmf"};
  app.require_subcommand(1);

  ClusterOptions copt;
  std::size_t pca_dim = 0;
  auto* cluster = app.add_subcommand("cluster", "Cluster segment embeddings and write an RTTM");
  cluster->add_option("--embeddings", copt.embeddings, "Embeddings (.csv or SCE1 binary)")->required();
  cluster->add_option("--segments", copt.segments, "Segments file, one row per embedding")->required();
  cluster->add_option("--out", copt.out, "Output RTTM")->required();
  cluster->add_option("--assignments", copt.assignments, "Also write one cluster index per row");
  cluster->add_option("--nc", copt.n_clusters, "Number of clusters")->capture_default_str();
  auto* pca_opt = cluster->add_option("--pca-dim", pca_dim, "Project onto this many PCA components");
  cluster->add_option("--mode", copt.mode, "movmf | skmeans | movmf-tied")
      ->check(CLI::IsMember({"movmf", "skmeans", "movmf-tied"}))
      ->capture_default_str();
  cluster->add_option("--kappa", copt.kappa, "Concentration estimate: eq10 | exact")
      ->check(CLI::IsMember({"eq10", "exact"}))
      ->capture_default_str();
  cluster->add_option("--tied-kappa", copt.tied_kappa, "Shared kappa of the movmf-tied mode")
      ->capture_default_str();
  cluster->add_option("--seed", copt.seed, "Seed for initialization")->capture_default_str();
  cluster->add_option("--max-iters", copt.max_iters)->capture_default_str();
  cluster->add_option("--tol", copt.tol, "Relative objective gain threshold")->capture_default_str();
  cluster->add_option("--file-id", copt.file_id, "RTTM file id")->capture_default_str();

  ScoreOptions sopt;
  double duration = 0.0;
  auto* score = app.add_subcommand("score", "Score a system RTTM against a reference RTTM");
  score->add_option("--ref", sopt.ref, "Reference RTTM")->required();
  score->add_option("--sys", sopt.sys, "System RTTM")->required();
  score->add_option("--frame-size", sopt.frame_size, "Frame length in seconds")->capture_default_str();
  score->add_option("--collar", sopt.collar, "Unscored seconds around reference boundaries")
      ->capture_default_str();
  auto* duration_opt =
      score->add_option("--duration", duration, "Recording length (default: last reference end)");

  SynthOptions yopt;
  auto* synth = app.add_subcommand("synth", "Generate embeddings, segments and truth from a movMF");
  synth->add_option("--embeddings", yopt.embeddings, "Output embeddings (.csv or binary)")->required();
  synth->add_option("--segments", yopt.segments, "Output segments file")->required();
  synth->add_option("--truth", yopt.truth, "Output truth RTTM")->required();
  synth->add_option("--dim", yopt.dim)->capture_default_str();
  synth->add_option("--n", yopt.n, "Number of segments")->capture_default_str();
  synth->add_option("--nc", yopt.n_clusters, "Number of components")->capture_default_str();
  synth->add_option("--kappas", yopt.kappas, "Per-component kappa (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  synth->add_option("--alphas", yopt.alphas, "Mixture weights (comma separated)")->delimiter(',');
  synth->add_option("--seed", yopt.seed)->capture_default_str();
  synth->add_flag("--overlap", yopt.overlap, "Label the last component OVERLAP");
  synth->add_option("--file-id", yopt.file_id, "RTTM file id")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  if (cluster->parsed()) {
    if (pca_opt->count() > 0) copt.pca_dim = pca_dim;
    return cmd_cluster(copt, out, err);
  }
  if (score->parsed()) {
    if (duration_opt->count() > 0) sopt.duration = duration;
    return cmd_score(sopt, out, err);
  }
  return cmd_synth(yopt, out, err);
}

}  // namespace movmf::cli
