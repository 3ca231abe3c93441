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

// File formats.
//
// Embeddings
//   CSV:    one embedding per line, comma separated. Blank lines and lines
//           starting with '#' are ignored.
//   Binary: "SCE1", u32 n, u32 d, then n*d float64 values, row major, all
//           little-endian.
// Segments
//   one segment per line: "start end [label]", whitespace separated,
//   seconds. Row i of the segments file belongs to row i of the
//   embeddings file.
// RTTM
//   SPEAKER <file> <chan> <onset> <dur> <NA> <NA> <name> <NA> <NA>
//   Times are written with millisecond precision.

#ifndef MOVMF_DATAIO_HPP_
#define MOVMF_DATAIO_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "movmf/hypersphere.hpp"
#include "movmf/metrics.hpp"

namespace movmf {

enum class EmbeddingFormat { kCsv, kBinary };

inline constexpr char kBinaryMagic[4] = {'S', 'C', 'E', '1'};

/// Picks the format by extension: ".csv" and ".txt" are CSV, anything
/// else is binary.
EmbeddingFormat format_for_path(const std::filesystem::path& path);

/// Reads either format (binary is recognized by its magic bytes).
std::vector<RawEmbedding> read_embeddings(const std::filesystem::path& path);
std::vector<RawEmbedding> read_embeddings_csv(std::istream& in);
std::vector<RawEmbedding> read_embeddings_binary(std::istream& in);

void write_embeddings(const std::filesystem::path& path, std::span<const RawEmbedding> rows,
                      EmbeddingFormat format);
void write_embeddings_csv(std::ostream& out, std::span<const RawEmbedding> rows);
void write_embeddings_binary(std::ostream& out, std::span<const RawEmbedding> rows);

/// Segments in file order.
std::vector<Segment> read_segment_rows(std::istream& in);
std::vector<Segment> read_segment_rows(const std::filesystem::path& path);

/// Segments sorted by start time.
SegmentTimeline read_segments(const std::filesystem::path& path);

void write_segments(std::ostream& out, std::span<const Segment> segments);
void write_segments(const std::filesystem::path& path, std::span<const Segment> segments);

struct RttmReadStats {
  std::size_t speaker_lines = 0;
  std::size_t skipped_lines = 0;  // non-SPEAKER records
};

SegmentTimeline read_rttm(std::istream& in, RttmReadStats* stats = nullptr);
SegmentTimeline read_rttm(const std::filesystem::path& path, RttmReadStats* stats = nullptr);

void write_rttm(std::ostream& out, const SegmentTimeline& timeline,
                std::string_view file_id = "rec");
void write_rttm(const std::filesystem::path& path, const SegmentTimeline& timeline,
                std::string_view file_id = "rec");

/// Seconds with three decimals, as written to every text format.
std::string format_seconds(double seconds);

}  // namespace movmf

#endif  // MOVMF_DATAIO_HPP_
