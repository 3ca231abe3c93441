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

// Diarization scoring on a fixed frame grid.
//
// Timelines are sampled at frame midpoints. A frame where two or more
// speakers are active, or whose only active segment is labelled "OVERLAP",
// becomes the OVERLAP cluster; a frame with no active speaker is
// NONSPEECH. DER is
//
//   (false alarm + missed speech + speaker error) / reference speech
//
// after an optimal one-to-one mapping of system clusters onto reference
// clusters. No forgiveness collar is applied unless one is configured.

#ifndef MOVMF_METRICS_HPP_
#define MOVMF_METRICS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace movmf {

inline constexpr std::string_view kOverlapLabel = "OVERLAP";
inline constexpr double kDefaultFrameSize = 0.010;

struct Segment {
  double start = 0.0;
  double end = 0.0;
  std::string label;

  double duration() const { return end - start; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct SegmentTimeline {
  std::vector<Segment> segments;
  double duration = 0.0;

  /// Latest segment end, 0 for an empty timeline.
  double end_time() const;
};

/// Sorts segments by start (stable) and sets duration to `duration`, or to
/// the latest segment end when none is given. Throws NegativeDuration for
/// segments with end <= start, InvalidArgument for negative starts and
/// DurationMismatch for segments ending after `duration`.
SegmentTimeline make_timeline(std::vector<Segment> segments,
                              std::optional<double> duration = std::nullopt);

/// Number of frames covering `duration`.
std::size_t frame_count(double duration, double frame_size);

struct FrameLabels {
  static constexpr int kNonSpeech = -1;
  static constexpr int kOverlap = -2;

  double frame_size = kDefaultFrameSize;
  // Speaker ids index into `names`; kNonSpeech and kOverlap are reserved.
  std::vector<int> labels;
  std::vector<std::string> names;

  std::size_t size() const { return labels.size(); }
};

FrameLabels discretize(const SegmentTimeline& timeline, double frame_size = kDefaultFrameSize);

struct ContingencyTable {
  // Frame-label ids (see FrameLabels) of each row (reference) and column
  // (system), in ascending id order.
  std::vector<int> row_ids;
  std::vector<int> col_ids;
  std::vector<std::vector<std::int64_t>> counts;
  std::vector<std::int64_t> row_sums;
  std::vector<std::int64_t> col_sums;
  std::int64_t total = 0;

  std::size_t rows() const { return row_ids.size(); }
  std::size_t cols() const { return col_ids.size(); }

  /// Builds the table (with marginals) from an explicit count matrix.
  static ContingencyTable from_counts(std::vector<std::vector<std::int64_t>> counts,
                                      std::vector<int> row_ids = {},
                                      std::vector<int> col_ids = {});
  ContingencyTable transposed() const;
  /// Copy with the NONSPEECH/NONSPEECH cell removed.
  ContingencyTable without_joint_nonspeech() const;
};

/// Co-occurrence counts over all frames. Throws LengthMismatch when the
/// frame counts or frame sizes differ.
ContingencyTable contingency(const FrameLabels& ref, const FrameLabels& sys);

struct SpeakerMapping {
  // For each table column, the mapped table row, if any.
  std::vector<std::optional<std::size_t>> row_for_col;
  // Sum of counts over mapped (row, col) pairs.
  std::int64_t mapped_mass = 0;
};

/// One-to-one map from system to reference clusters maximizing the mapped
/// frame count. System OVERLAP and NONSPEECH columns map only to the
/// matching reference row; all other columns compete (Hungarian algorithm)
/// for the remaining rows, reference OVERLAP included. Columns left over
/// stay unmapped.
SpeakerMapping optimal_mapping(const ContingencyTable& table);

/// Solves the rectangular maximum-weight assignment problem. Returns, for
/// each row, the assigned column (every row gets one when rows <= cols;
/// otherwise exactly `cols` rows do).
std::vector<std::optional<std::size_t>> max_weight_assignment(
    const std::vector<std::vector<std::int64_t>>& weights);

struct DerBreakdown {
  double phi_fa = 0.0;
  double phi_miss = 0.0;
  double phi_err = 0.0;
  double phi_total = 0.0;
  double der = 0.0;  // ratio; multiply by 100 for percent

  std::int64_t fa_frames = 0;
  std::int64_t miss_frames = 0;
  std::int64_t err_frames = 0;
  std::int64_t total_frames = 0;
};

struct ScoringConfig {
  double frame_size = kDefaultFrameSize;
  // Frames whose midpoint lies within `collar` seconds of a reference
  // segment boundary are not scored. Zero by default.
  double collar = 0.0;
};

/// Throws DurationMismatch when the timelines cover a different number of
/// frames and InvalidArgument when the reference contains no speech.
DerBreakdown compute_der(const SegmentTimeline& ref, const SegmentTimeline& sys,
                         const ScoringConfig& config = {});
/// Frame-level variant; when `scored` is non-empty only frames flagged
/// true count.
DerBreakdown compute_der(const FrameLabels& ref, const FrameLabels& sys,
                         const std::vector<bool>& scored = {});

/// Mutual information in bits,
///   sum_ij (n_ij / N) log2(n_ij N / (r_i s_j)).
/// Throws EmptyTable when N = 0.
double compute_mi(const ContingencyTable& table);

/// Shannon entropy in bits of the row / column marginals.
double row_entropy_bits(const ContingencyTable& table);
double col_entropy_bits(const ContingencyTable& table);

struct ScoreReport {
  DerBreakdown der;
  double mi_bits = 0.0;
  double ref_entropy_bits = 0.0;
  double sys_entropy_bits = 0.0;
};

/// DER plus frame-level MI. MI is taken over every frame in which the
/// reference or the system reports speech.
ScoreReport score_timelines(const SegmentTimeline& ref, const SegmentTimeline& sys,
                            const ScoringConfig& config = {});

/// Adjusted Rand index between two labelings of the same items.
double adjusted_rand_index(std::span<const std::size_t> a, std::span<const std::size_t> b);

}  // namespace movmf

#endif  // MOVMF_METRICS_HPP_
