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

// Vector geometry on the unit hypersphere: length normalization, cosine
// similarity and PCA dimension reduction of raw embeddings.

#ifndef MOVMF_HYPERSPHERE_HPP_
#define MOVMF_HYPERSPHERE_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace movmf {

/// Norms below this are treated as degenerate by length_normalize.
inline constexpr double kZeroNormThreshold = 1e-30;

/// An embedding before post-processing. Entries must be finite.
class RawEmbedding {
 public:
  RawEmbedding() = default;
  explicit RawEmbedding(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  std::size_t dim() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const RawEmbedding&, const RawEmbedding&) = default;

 private:
  std::vector<double> values_;
};

/// A point on S^{d-1}. Only constructible through length_normalize or
/// UnitVector::from_normalized, so ||v|| = 1 within 1e-12 always holds.
class UnitVector {
 public:
  UnitVector() = default;

  /// Wraps values that are already unit length; throws InvalidArgument if
  /// the norm deviates from 1 by more than 1e-12.
  static UnitVector from_normalized(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  std::size_t dim() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const UnitVector&, const UnitVector&) = default;

 private:
  explicit UnitVector(std::vector<double> values) : values_(std::move(values)) {}
  friend UnitVector length_normalize(std::span<const double> v);

  std::vector<double> values_;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> v);

UnitVector length_normalize(std::span<const double> v);
inline UnitVector length_normalize(const RawEmbedding& v) {
  return length_normalize(v.values());
}

/// u . v clamped to [-1, 1].
double cosine_similarity(const UnitVector& u, const UnitVector& v);

struct PcaModel {
  std::vector<double> mean;
  std::vector<std::vector<double>> basis;  // k rows of length d_raw
  std::vector<double> eigenvalues;         // descending, non-negative

  std::size_t input_dim() const { return mean.size(); }
  std::size_t output_dim() const { return basis.size(); }
};

/// Fits a k-component PCA on the sample covariance (n - 1 denominator) of
/// the centered data. Each basis vector's first non-negligible entry is
/// positive.
PcaModel fit_pca(std::span<const RawEmbedding> data, std::size_t k);

RawEmbedding pca_project(const PcaModel& model, const RawEmbedding& v);

/// Inverse map of pca_project: mean + sum_j coords_j * basis_j.
RawEmbedding pca_reconstruct(const PcaModel& model, const RawEmbedding& coords);

}  // namespace movmf

#endif  // MOVMF_HYPERSPHERE_HPP_
