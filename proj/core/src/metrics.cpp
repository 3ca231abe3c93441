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

#include "movmf/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "movmf/error.hpp"

namespace movmf {
namespace {

double frame_mid(std::size_t i, double frame_size) {
  return (static_cast<double>(i) + 0.5) * frame_size;
}

// Boundaries closer than this to a frame midpoint count as on it. Segment
// ends are often onset + duration, which can land an ulp away from the
// next segment's onset; both must resolve to the same frame.
constexpr double kTimeEps = 1e-6;

// First frame whose midpoint is >= t.
std::size_t first_frame_at_or_after(double t, double frame_size, std::size_t n) {
  t -= kTimeEps;
  if (t <= 0.0) return 0;
  auto i = static_cast<std::size_t>(std::max(0.0, std::floor(t / frame_size - 0.5)));
  while (i > 0 && frame_mid(i - 1, frame_size) >= t) --i;
  while (i < n && frame_mid(i, frame_size) < t) ++i;
  return std::min(i, n);
}

std::vector<std::int64_t> sums_of_rows(const std::vector<std::vector<std::int64_t>>& c) {
  std::vector<std::int64_t> out(c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (auto v : c[i]) out[i] += v;
  }
  return out;
}

double entropy_bits(std::span<const std::int64_t> counts, std::int64_t total) {
  if (total <= 0) return 0.0;
  double h = 0.0;
  const double n = static_cast<double>(total);
  for (auto c : counts) {
    if (c > 0) {
      const double p = static_cast<double>(c) / n;
      h -= p * std::log2(p);
    }
  }
  return h;
}

bool is_speech(int id) { return id != FrameLabels::kNonSpeech; }

}  // namespace

double SegmentTimeline::end_time() const {
  double e = 0.0;
  for (const auto& s : segments) e = std::max(e, s.end);
  return e;
}

SegmentTimeline make_timeline(std::vector<Segment> segments, std::optional<double> duration) {
  for (const auto& s : segments) {
    if (!(s.end > s.start)) {
      throw Error(ErrorCode::kNegativeDuration, "segment [" + std::to_string(s.start) + ", " +
                                                    std::to_string(s.end) + ") has no extent");
    }
    if (s.start < 0.0) throw Error(ErrorCode::kInvalidArgument, "segment starts before 0");
  }
  std::stable_sort(segments.begin(), segments.end(),
                   [](const Segment& a, const Segment& b) { return a.start < b.start; });
  SegmentTimeline t;
  t.segments = std::move(segments);
  t.duration = duration.value_or(t.end_time());
  if (t.end_time() > t.duration) {
    throw Error(ErrorCode::kDurationMismatch, "segment ends at " + std::to_string(t.end_time()) +
                                                  ", after the timeline end " +
                                                  std::to_string(t.duration));
  }
  return t;
}

std::size_t frame_count(double duration, double frame_size) {
  if (!(frame_size > 0.0)) throw Error(ErrorCode::kInvalidArgument, "frame size must be positive");
  if (!(duration > 0.0)) return 0;
  // Durations are usually given at millisecond precision; absorb the
  // representation error of duration / frame_size.
  return static_cast<std::size_t>(std::ceil(duration / frame_size - 1e-9));
}

FrameLabels discretize(const SegmentTimeline& timeline, double frame_size) {
  FrameLabels out;
  out.frame_size = frame_size;
  const std::size_t n = frame_count(timeline.duration, frame_size);
  out.labels.assign(n, FrameLabels::kNonSpeech);

  std::set<std::string> names;
  for (const auto& s : timeline.segments) {
    if (s.label != kOverlapLabel) names.insert(s.label);
  }
  out.names.assign(names.begin(), names.end());

  for (const auto& s : timeline.segments) {
    int id = FrameLabels::kOverlap;
    if (s.label != kOverlapLabel) {
      id = static_cast<int>(std::lower_bound(out.names.begin(), out.names.end(), s.label) -
                            out.names.begin());
    }
    const std::size_t lo = first_frame_at_or_after(s.start, frame_size, n);
    const std::size_t hi = first_frame_at_or_after(s.end, frame_size, n);
    for (std::size_t i = lo; i < hi; ++i) {
      int& cell = out.labels[i];
      if (cell == FrameLabels::kNonSpeech) {
        cell = id;
      } else if (cell != id) {
        cell = FrameLabels::kOverlap;
      }
    }
  }
  return out;
}

ContingencyTable ContingencyTable::from_counts(std::vector<std::vector<std::int64_t>> counts,
                                               std::vector<int> row_ids,
                                               std::vector<int> col_ids) {
  ContingencyTable t;
  const std::size_t r = counts.size();
  const std::size_t c = r == 0 ? 0 : counts.front().size();
  for (const auto& row : counts) {
    if (row.size() != c) throw Error(ErrorCode::kLengthMismatch, "ragged contingency table");
    for (auto v : row) {
      if (v < 0) throw Error(ErrorCode::kInvalidArgument, "negative contingency count");
    }
  }
  if (row_ids.empty()) {
    for (std::size_t i = 0; i < r; ++i) row_ids.push_back(static_cast<int>(i));
  }
  if (col_ids.empty()) {
    for (std::size_t j = 0; j < c; ++j) col_ids.push_back(static_cast<int>(j));
  }
  if (row_ids.size() != r || col_ids.size() != c) {
    throw Error(ErrorCode::kLengthMismatch, "contingency ids do not match table shape");
  }
  t.row_ids = std::move(row_ids);
  t.col_ids = std::move(col_ids);
  t.counts = std::move(counts);
  t.row_sums = sums_of_rows(t.counts);
  t.col_sums.assign(c, 0);
  for (const auto& row : t.counts) {
    for (std::size_t j = 0; j < c; ++j) t.col_sums[j] += row[j];
  }
  for (auto v : t.row_sums) t.total += v;
  return t;
}

ContingencyTable ContingencyTable::transposed() const {
  std::vector<std::vector<std::int64_t>> c(cols(), std::vector<std::int64_t>(rows(), 0));
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) c[j][i] = counts[i][j];
  }
  return from_counts(std::move(c), col_ids, row_ids);
}

ContingencyTable ContingencyTable::without_joint_nonspeech() const {
  auto c = counts;
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      if (row_ids[i] == FrameLabels::kNonSpeech && col_ids[j] == FrameLabels::kNonSpeech) {
        c[i][j] = 0;
      }
    }
  }
  return from_counts(std::move(c), row_ids, col_ids);
}

ContingencyTable contingency(const FrameLabels& ref, const FrameLabels& sys) {
  if (ref.size() != sys.size()) {
    throw Error(ErrorCode::kLengthMismatch, "reference has " + std::to_string(ref.size()) +
                                                " frames, system has " +
                                                std::to_string(sys.size()));
  }
  if (ref.frame_size != sys.frame_size) {
    throw Error(ErrorCode::kLengthMismatch, "frame sizes differ");
  }
  std::map<std::pair<int, int>, std::int64_t> cells;
  std::set<int> rows;
  std::set<int> cols;
  for (std::size_t t = 0; t < ref.size(); ++t) {
    ++cells[{ref.labels[t], sys.labels[t]}];
    rows.insert(ref.labels[t]);
    cols.insert(sys.labels[t]);
  }
  std::vector<int> row_ids(rows.begin(), rows.end());
  std::vector<int> col_ids(cols.begin(), cols.end());
  std::vector<std::vector<std::int64_t>> counts(row_ids.size(),
                                                std::vector<std::int64_t>(col_ids.size(), 0));
  for (const auto& [key, n] : cells) {
    const auto i = std::lower_bound(row_ids.begin(), row_ids.end(), key.first) - row_ids.begin();
    const auto j = std::lower_bound(col_ids.begin(), col_ids.end(), key.second) - col_ids.begin();
    counts[i][j] = n;
  }
  return ContingencyTable::from_counts(std::move(counts), std::move(row_ids), std::move(col_ids));
}

std::vector<std::optional<std::size_t>> max_weight_assignment(
    const std::vector<std::vector<std::int64_t>>& weights) {
  const std::size_t rows = weights.size();
  const std::size_t cols = rows == 0 ? 0 : weights.front().size();
  std::vector<std::optional<std::size_t>> result(rows);
  if (rows == 0 || cols == 0) return result;
  if (rows > cols) {
    std::vector<std::vector<std::int64_t>> t(cols, std::vector<std::int64_t>(rows));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) t[j][i] = weights[i][j];
    }
    const auto col_to_row = max_weight_assignment(t);
    for (std::size_t j = 0; j < cols; ++j) {
      if (col_to_row[j]) result[*col_to_row[j]] = j;
    }
    return result;
  }

  // Shortest augmenting path with potentials (Kuhn-Munkres), minimizing
  // -weight. Rows and columns are 1-based below; column 0 is a sentinel.
  const std::size_t n = rows;
  const std::size_t m = cols;
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  auto cost = [&](std::size_t i, std::size_t j) { return -weights[i - 1][j - 1]; };
  std::vector<std::int64_t> u(n + 1, 0);
  std::vector<std::int64_t> v(m + 1, 0);
  std::vector<std::size_t> p(m + 1, 0);
  std::vector<std::size_t> way(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::int64_t> minv(m + 1, kInf);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::int64_t delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = cost(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  for (std::size_t j = 1; j <= m; ++j) {
    if (p[j] != 0) result[p[j] - 1] = j - 1;
  }
  return result;
}

SpeakerMapping optimal_mapping(const ContingencyTable& table) {
  SpeakerMapping out;
  out.row_for_col.assign(table.cols(), std::nullopt);

  auto row_of = [&](int id) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < table.rows(); ++i) {
      if (table.row_ids[i] == id) return i;
    }
    return std::nullopt;
  };

  std::vector<bool> row_taken(table.rows(), false);
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < table.cols(); ++j) {
    const int id = table.col_ids[j];
    if (id == FrameLabels::kNonSpeech || id == FrameLabels::kOverlap) {
      if (auto r = row_of(id)) {
        out.row_for_col[j] = *r;
        row_taken[*r] = true;
        out.mapped_mass += table.counts[*r][j];
      }
    } else {
      free_cols.push_back(j);
    }
  }
  std::vector<std::size_t> free_rows;
  for (std::size_t i = 0; i < table.rows(); ++i) {
    if (!row_taken[i] && table.row_ids[i] != FrameLabels::kNonSpeech) free_rows.push_back(i);
  }

  // Columns are the "rows" of the assignment problem here.
  std::vector<std::vector<std::int64_t>> w(free_cols.size(),
                                           std::vector<std::int64_t>(free_rows.size(), 0));
  for (std::size_t a = 0; a < free_cols.size(); ++a) {
    for (std::size_t b = 0; b < free_rows.size(); ++b) {
      w[a][b] = table.counts[free_rows[b]][free_cols[a]];
    }
  }
  const auto assignment = max_weight_assignment(w);
  for (std::size_t a = 0; a < free_cols.size(); ++a) {
    if (!assignment[a]) continue;
    const std::size_t r = free_rows[*assignment[a]];
    out.row_for_col[free_cols[a]] = r;
    out.mapped_mass += table.counts[r][free_cols[a]];
  }
  return out;
}

DerBreakdown compute_der(const FrameLabels& ref, const FrameLabels& sys,
                         const std::vector<bool>& scored) {
  const ContingencyTable table = contingency(ref, sys);
  if (!scored.empty() && scored.size() != ref.size()) {
    throw Error(ErrorCode::kLengthMismatch, "scoring mask length differs from frame count");
  }
  const SpeakerMapping mapping = optimal_mapping(table);
  std::map<int, int> ref_for_sys;
  for (std::size_t j = 0; j < table.cols(); ++j) {
    if (mapping.row_for_col[j]) ref_for_sys[table.col_ids[j]] = table.row_ids[*mapping.row_for_col[j]];
  }

  DerBreakdown out;
  for (std::size_t t = 0; t < ref.size(); ++t) {
    if (!scored.empty() && !scored[t]) continue;
    const int r = ref.labels[t];
    const int s = sys.labels[t];
    if (is_speech(r)) {
      ++out.total_frames;
      if (!is_speech(s)) {
        ++out.miss_frames;
      } else {
        const auto it = ref_for_sys.find(s);
        if (it == ref_for_sys.end() || it->second != r) ++out.err_frames;
      }
    } else if (is_speech(s)) {
      ++out.fa_frames;
    }
  }
  if (out.total_frames == 0) {
    throw Error(ErrorCode::kInvalidArgument, "reference contains no scored speech");
  }
  const double fs = ref.frame_size;
  out.phi_fa = static_cast<double>(out.fa_frames) * fs;
  out.phi_miss = static_cast<double>(out.miss_frames) * fs;
  out.phi_err = static_cast<double>(out.err_frames) * fs;
  out.phi_total = static_cast<double>(out.total_frames) * fs;
  out.der = static_cast<double>(out.fa_frames + out.miss_frames + out.err_frames) /
            static_cast<double>(out.total_frames);
  return out;
}

namespace {

std::vector<bool> collar_mask(const SegmentTimeline& ref, std::size_t n, double frame_size,
                              double collar) {
  std::vector<bool> scored(n, true);
  if (collar <= 0.0) return scored;
  for (const auto& s : ref.segments) {
    for (double edge : {s.start, s.end}) {
      const std::size_t lo = first_frame_at_or_after(edge - collar, frame_size, n);
      const std::size_t hi = first_frame_at_or_after(edge + collar, frame_size, n);
      for (std::size_t i = lo; i < hi; ++i) scored[i] = false;
    }
  }
  return scored;
}

void check_frames(const SegmentTimeline& ref, const SegmentTimeline& sys, double frame_size) {
  const std::size_t nr = frame_count(ref.duration, frame_size);
  const std::size_t ns = frame_count(sys.duration, frame_size);
  if (nr != ns) {
    throw Error(ErrorCode::kDurationMismatch,
                "reference spans " + std::to_string(nr) + " frames, system " + std::to_string(ns));
  }
}

}  // namespace

DerBreakdown compute_der(const SegmentTimeline& ref, const SegmentTimeline& sys,
                         const ScoringConfig& config) {
  check_frames(ref, sys, config.frame_size);
  const FrameLabels r = discretize(ref, config.frame_size);
  const FrameLabels s = discretize(sys, config.frame_size);
  if (config.collar <= 0.0) return compute_der(r, s);
  return compute_der(r, s, collar_mask(ref, r.size(), config.frame_size, config.collar));
}

double compute_mi(const ContingencyTable& table) {
  if (table.total <= 0) throw Error(ErrorCode::kEmptyTable, "contingency table has no frames");
  const double n = static_cast<double>(table.total);
  double mi = 0.0;
  for (std::size_t i = 0; i < table.rows(); ++i) {
    for (std::size_t j = 0; j < table.cols(); ++j) {
      const auto c = table.counts[i][j];
      if (c == 0) continue;
      const double nij = static_cast<double>(c);
      mi += (nij / n) *
            std::log2(nij * n / (static_cast<double>(table.row_sums[i]) *
                                 static_cast<double>(table.col_sums[j])));
    }
  }
  return std::max(0.0, mi);
}

double row_entropy_bits(const ContingencyTable& table) {
  return entropy_bits(table.row_sums, table.total);
}

double col_entropy_bits(const ContingencyTable& table) {
  return entropy_bits(table.col_sums, table.total);
}

ScoreReport score_timelines(const SegmentTimeline& ref, const SegmentTimeline& sys,
                            const ScoringConfig& config) {
  check_frames(ref, sys, config.frame_size);
  const FrameLabels r = discretize(ref, config.frame_size);
  FrameLabels s = discretize(sys, config.frame_size);
  const auto mask = collar_mask(ref, r.size(), config.frame_size, config.collar);

  ScoreReport report;
  report.der = compute_der(r, s, mask);

  // Unscored frames are dropped by marking them as joint non-speech.
  FrameLabels rm = r;
  for (std::size_t t = 0; t < mask.size(); ++t) {
    if (!mask[t]) {
      rm.labels[t] = FrameLabels::kNonSpeech;
      s.labels[t] = FrameLabels::kNonSpeech;
    }
  }
  const ContingencyTable table = contingency(rm, s).without_joint_nonspeech();
  report.mi_bits = compute_mi(table);
  report.ref_entropy_bits = row_entropy_bits(table);
  report.sys_entropy_bits = col_entropy_bits(table);
  return report;
}

double adjusted_rand_index(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kLengthMismatch, "labelings differ in length");
  const std::size_t n = a.size();
  if (n < 2) return 1.0;
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> cells;
  std::map<std::size_t, std::int64_t> ra;
  std::map<std::size_t, std::int64_t> rb;
  for (std::size_t i = 0; i < n; ++i) {
    ++cells[{a[i], b[i]}];
    ++ra[a[i]];
    ++rb[b[i]];
  }
  auto pairs = [](std::int64_t x) { return 0.5 * static_cast<double>(x) * static_cast<double>(x - 1); };
  double index = 0.0;
  for (const auto& [k, c] : cells) index += pairs(c);
  double sa = 0.0;
  double sb = 0.0;
  for (const auto& [k, c] : ra) sa += pairs(c);
  for (const auto& [k, c] : rb) sb += pairs(c);
  const double total = pairs(static_cast<std::int64_t>(n));
  const double expected = sa * sb / total;
  const double max_index = 0.5 * (sa + sb);
  if (max_index == expected) return 1.0;
  return (index - expected) / (max_index - expected);
}

}  // namespace movmf
