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

#include "movmf/hypersphere.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "movmf/error.hpp"

namespace movmf {

RawEmbedding::RawEmbedding(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "non-finite embedding entry at index " + std::to_string(i));
    }
  }
}

UnitVector UnitVector::from_normalized(std::vector<double> values) {
  if (values.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "unit vectors need dimension >= 2");
  }
  const double n = norm2(values);
  if (!std::isfinite(n) || std::abs(n - 1.0) > 1e-12) {
    throw Error(ErrorCode::kInvalidArgument, "vector is not unit length");
  }
  return UnitVector(std::move(values));
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> v) {
  // Scaled accumulation so that tiny and huge entries neither underflow nor
  // overflow.
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  if (scale == 0.0 || !std::isfinite(scale)) return scale;
  double s = 0.0;
  for (double x : v) {
    const double y = x / scale;
    s += y * y;
  }
  return scale * std::sqrt(s);
}

UnitVector length_normalize(std::span<const double> v) {
  if (v.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "unit vectors need dimension >= 2");
  }
  const double n = norm2(v);
  if (!(n >= kZeroNormThreshold)) {
    throw Error(ErrorCode::kZeroVector, "cannot normalize a vector of norm < 1e-30");
  }
  std::vector<double> out(v.begin(), v.end());
  for (double& x : out) x /= n;
  // One refinement pass brings the norm to within a couple of ulps of 1.
  const double m = norm2(out);
  if (m != 1.0) {
    for (double& x : out) x /= m;
  }
  return UnitVector(std::move(out));
}

double cosine_similarity(const UnitVector& u, const UnitVector& v) {
  return std::clamp(dot(u.values(), v.values()), -1.0, 1.0);
}

RawEmbedding pca_project(const PcaModel& model, const RawEmbedding& v) {
  if (v.dim() != model.input_dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "embedding has dimension " + std::to_string(v.dim()) +
                    ", PCA model expects " + std::to_string(model.input_dim()));
  }
  std::vector<double> centered(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) centered[i] = v[i] - model.mean[i];
  std::vector<double> out(model.output_dim());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = dot(model.basis[j], centered);
  return RawEmbedding(std::move(out));
}

RawEmbedding pca_reconstruct(const PcaModel& model, const RawEmbedding& coords) {
  if (coords.dim() != model.output_dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "coordinate count does not match PCA rank");
  }
  std::vector<double> out = model.mean;
  for (std::size_t j = 0; j < coords.dim(); ++j) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += coords[j] * model.basis[j][i];
  }
  return RawEmbedding(std::move(out));
}

}  // namespace movmf
