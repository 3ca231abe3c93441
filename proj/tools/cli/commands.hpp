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

// The `movmf` command-line driver: cluster, score and synth subcommands.
//
// Exit codes: 0 success, 2 bad input (I/O, parse errors, invalid flags),
// 3 preprocessing or clustering failure, 4 reference/system duration
// mismatch.

#ifndef MOVMF_TOOLS_CLI_COMMANDS_HPP_
#define MOVMF_TOOLS_CLI_COMMANDS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace movmf::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitBadInput = 2,
  kExitClustering = 3,
  kExitDurationMismatch = 4,
};

struct ClusterOptions {
  std::filesystem::path embeddings;
  std::filesystem::path segments;
  std::filesystem::path out;  // RTTM
  std::optional<std::filesystem::path> assignments;
  std::size_t n_clusters = 9;
  std::optional<std::size_t> pca_dim;
  std::string mode = "movmf";
  std::string kappa = "eq10";
  std::uint64_t seed = 0;
  std::size_t max_iters = 200;
  double tol = 1e-6;
  double tied_kappa = 1.0;
  std::string file_id = "rec";
};

struct ScoreOptions {
  std::filesystem::path ref;
  std::filesystem::path sys;
  double frame_size = 0.010;
  double collar = 0.0;
  // Defaults to the end of the last reference segment.
  std::optional<double> duration;
};

struct SynthOptions {
  std::filesystem::path embeddings;
  std::filesystem::path segments;
  std::filesystem::path truth;  // RTTM
  std::size_t dim = 75;
  std::size_t n = 1000;
  std::size_t n_clusters = 9;
  // One value per component, or a single value shared by all.
  std::vector<double> kappas{50.0};
  std::vector<double> alphas;  // empty: uniform
  std::uint64_t seed = 0;
  // Label the last component OVERLAP in the truth RTTM.
  bool overlap = false;
  std::string file_id = "rec";
};

int cmd_cluster(const ClusterOptions& opt, std::ostream& out, std::ostream& err);
int cmd_score(const ScoreOptions& opt, std::ostream& out, std::ostream& err);
int cmd_synth(const SynthOptions& opt, std::ostream& out, std::ostream& err);

/// Parses argv and runs the selected subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// The single-line score record printed by `movmf score`, e.g.
///   score der=0.5 phi_fa=0 phi_miss=0 phi_err=10 phi_total=20 mi_bits=0 ...
struct ScoreRecord {
  double der = 0.0;
  double phi_fa = 0.0;
  double phi_miss = 0.0;
  double phi_err = 0.0;
  double phi_total = 0.0;
  double mi_bits = 0.0;
  double h_ref = 0.0;
  double h_sys = 0.0;
};

std::string format_score_record(const ScoreRecord& r);
/// Inverse of format_score_record; nullopt if the line is not a record.
std::optional<ScoreRecord> parse_score_record(std::string_view line);

}  // namespace movmf::cli

#endif  // MOVMF_TOOLS_CLI_COMMANDS_HPP_
