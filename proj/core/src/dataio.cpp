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

#include "movmf/dataio.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "movmf/error.hpp"

namespace movmf {
namespace {

std::string where(std::size_t line) { return "line " + std::to_string(line); }

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_real(std::string_view token, std::size_t line) {
  token = trim(token);
  double v = 0.0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::kParseError,
                where(line) + ": cannot parse '" + std::string(token) + "' as a number");
  }
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::kParseError, where(line) + ": non-finite value '" +
                                            std::string(token) + "'");
  }
  return v;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "write to '" + path.string() + "' failed");
}

void put_u32(std::ostream& out, std::uint32_t v) {
  std::array<char, 4> b{};
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
  out.write(b.data(), b.size());
}

void put_f64(std::ostream& out, double x) {
  const auto v = std::bit_cast<std::uint64_t>(x);
  std::array<char, 8> b{};
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
  out.write(b.data(), b.size());
}

std::uint64_t get_le(std::istream& in, int bytes, const char* what) {
  std::array<unsigned char, 8> b{};
  in.read(reinterpret_cast<char*>(b.data()), bytes);
  if (in.gcount() != bytes) {
    throw Error(ErrorCode::kParseError, std::string("truncated binary embeddings while reading ") + what);
  }
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}

}  // namespace

std::string format_seconds(double seconds) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.3f", seconds);
  return buf.data();
}

EmbeddingFormat format_for_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  return ext == ".csv" || ext == ".txt" ? EmbeddingFormat::kCsv : EmbeddingFormat::kBinary;
}

std::vector<RawEmbedding> read_embeddings_csv(std::istream& in) {
  std::vector<RawEmbedding> rows;
  std::string line;
  std::size_t lineno = 0;
  std::size_t dim = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::vector<double> values;
    std::size_t pos = 0;
    while (true) {
      const auto comma = body.find(',', pos);
      values.push_back(parse_real(body.substr(pos, comma - pos), lineno));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (rows.empty()) {
      dim = values.size();
    } else if (values.size() != dim) {
      throw Error(ErrorCode::kRaggedRows, where(lineno) + ": expected " + std::to_string(dim) +
                                              " values, found " + std::to_string(values.size()));
    }
    rows.emplace_back(std::move(values));
  }
  if (rows.empty()) throw Error(ErrorCode::kParseError, "no embeddings found");
  return rows;
}

std::vector<RawEmbedding> read_embeddings_binary(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (in.gcount() != 4 || !std::equal(magic.begin(), magic.end(), kBinaryMagic)) {
    throw Error(ErrorCode::kParseError, "missing SCE1 magic");
  }
  const auto n = static_cast<std::size_t>(get_le(in, 4, "count"));
  const auto d = static_cast<std::size_t>(get_le(in, 4, "dimension"));
  if (n == 0 || d == 0) throw Error(ErrorCode::kParseError, "binary embeddings header is empty");
  std::vector<RawEmbedding> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> values(d);
    for (double& v : values) {
      v = std::bit_cast<double>(get_le(in, 8, "values"));
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::kParseError, "row " + std::to_string(i) + ": non-finite value");
      }
    }
    rows.emplace_back(std::move(values));
  }
  return rows;
}

std::vector<RawEmbedding> read_embeddings(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  const bool binary = in.gcount() == 4 && std::equal(magic.begin(), magic.end(), kBinaryMagic);
  in.clear();
  in.seekg(0);
  try {
    return binary ? read_embeddings_binary(in) : read_embeddings_csv(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.detail());
  }
}

void write_embeddings_csv(std::ostream& out, std::span<const RawEmbedding> rows) {
  std::array<char, 32> buf{};
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.dim(); ++j) {
      if (j) out << ',';
      const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), row[j]);
      out.write(buf.data(), res.ptr - buf.data());
    }
    out << '\n';
  }
}

void write_embeddings_binary(std::ostream& out, std::span<const RawEmbedding> rows) {
  if (rows.empty()) throw Error(ErrorCode::kInvalidArgument, "no embeddings to write");
  const std::size_t d = rows.front().dim();
  constexpr auto kMax = std::numeric_limits<std::uint32_t>::max();
  if (rows.size() > kMax || d > kMax) {
    throw Error(ErrorCode::kInvalidArgument, "embedding matrix too large for SCE1");
  }
  out.write(kBinaryMagic, 4);
  put_u32(out, static_cast<std::uint32_t>(rows.size()));
  put_u32(out, static_cast<std::uint32_t>(d));
  for (const auto& row : rows) {
    if (row.dim() != d) throw Error(ErrorCode::kRaggedRows, "embeddings differ in dimension");
    for (double v : row.values()) put_f64(out, v);
  }
}

void write_embeddings(const std::filesystem::path& path, std::span<const RawEmbedding> rows,
                      EmbeddingFormat format) {
  auto out = open_out(path);
  if (format == EmbeddingFormat::kCsv) {
    write_embeddings_csv(out, rows);
  } else {
    write_embeddings_binary(out, rows);
  }
  finish(out, path);
}

std::vector<Segment> read_segment_rows(std::istream& in) {
  std::vector<Segment> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto fields = split_ws(body);
    if (fields.size() < 2 || fields.size() > 3) {
      throw Error(ErrorCode::kParseError, where(lineno) + ": expected 'start end [label]'");
    }
    Segment s;
    s.start = parse_real(fields[0], lineno);
    s.end = parse_real(fields[1], lineno);
    if (fields.size() == 3) s.label = std::string(fields[2]);
    if (s.start < 0.0) throw Error(ErrorCode::kParseError, where(lineno) + ": negative start time");
    if (!(s.end > s.start)) {
      throw Error(ErrorCode::kNegativeDuration, where(lineno) + ": end " + std::string(fields[1]) +
                                                    " is not after start " +
                                                    std::string(fields[0]));
    }
    rows.push_back(std::move(s));
  }
  return rows;
}

std::vector<Segment> read_segment_rows(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return read_segment_rows(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.detail());
  }
}

SegmentTimeline read_segments(const std::filesystem::path& path) {
  return make_timeline(read_segment_rows(path));
}

void write_segments(std::ostream& out, std::span<const Segment> segments) {
  for (const auto& s : segments) {
    out << format_seconds(s.start) << ' ' << format_seconds(s.end);
    if (!s.label.empty()) out << ' ' << s.label;
    out << '\n';
  }
}

void write_segments(const std::filesystem::path& path, std::span<const Segment> segments) {
  auto out = open_out(path);
  write_segments(out, segments);
  finish(out, path);
}

SegmentTimeline read_rttm(std::istream& in, RttmReadStats* stats) {
  RttmReadStats local;
  std::vector<Segment> segments;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto fields = split_ws(body);
    if (fields.front() != "SPEAKER") {
      ++local.skipped_lines;
      continue;
    }
    if (fields.size() < 8) {
      throw Error(ErrorCode::kParseError,
                  where(lineno) + ": SPEAKER record needs at least 8 fields: '" + std::string(body) + "'");
    }
    const double onset = parse_real(fields[3], lineno);
    const double dur = parse_real(fields[4], lineno);
    if (onset < 0.0) {
      throw Error(ErrorCode::kParseError, where(lineno) + ": negative onset: '" + std::string(body) + "'");
    }
    if (!(dur > 0.0)) {
      throw Error(ErrorCode::kNegativeDuration,
                  where(lineno) + ": non-positive duration: '" + std::string(body) + "'");
    }
    segments.push_back(Segment{onset, onset + dur, std::string(fields[7])});
    ++local.speaker_lines;
  }
  if (stats) *stats = local;
  return make_timeline(std::move(segments));
}

SegmentTimeline read_rttm(const std::filesystem::path& path, RttmReadStats* stats) {
  auto in = open_in(path);
  try {
    return read_rttm(in, stats);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.detail());
  }
}

void write_rttm(std::ostream& out, const SegmentTimeline& timeline, std::string_view file_id) {
  for (const auto& s : timeline.segments) {
    out << "SPEAKER " << file_id << " 1 " << format_seconds(s.start) << ' '
        << format_seconds(s.end - s.start) << " <NA> <NA> " << s.label << " <NA> <NA>\n";
  }
}

void write_rttm(const std::filesystem::path& path, const SegmentTimeline& timeline,
                std::string_view file_id) {
  auto out = open_out(path);
  write_rttm(out, timeline, file_id);
  finish(out, path);
}

}  // namespace movmf
