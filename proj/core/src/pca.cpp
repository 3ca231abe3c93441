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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "movmf/error.hpp"
#include "movmf/hypersphere.hpp"

namespace movmf {

PcaModel fit_pca(std::span<const RawEmbedding> data, std::size_t k) {
  if (data.size() < 2) {
    throw Error(ErrorCode::kInsufficientData, "PCA needs at least two embeddings");
  }
  const std::size_t dim = data.front().dim();
  for (std::size_t i = 1; i < data.size(); ++i) {
    if (data[i].dim() != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "embedding " + std::to_string(i) + " has dimension " +
                      std::to_string(data[i].dim()) + ", expected " + std::to_string(dim));
    }
  }
  if (k == 0 || k > dim) {
    throw Error(ErrorCode::kBadDimension,
                "PCA rank " + std::to_string(k) + " outside [1, " + std::to_string(dim) + "]");
  }

  const auto n = static_cast<Eigen::Index>(data.size());
  const auto d = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXd x(n, d);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) x(i, j) = data[i][j];
  }
  const Eigen::RowVectorXd mean = x.colwise().mean();
  x.rowwise() -= mean;
  const Eigen::MatrixXd cov = (x.transpose() * x) / static_cast<double>(n - 1);

  // Eigenvalues come back ascending.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kInvalidArgument, "covariance eigendecomposition failed");
  }

  PcaModel model;
  model.mean.assign(mean.data(), mean.data() + d);
  model.basis.reserve(k);
  model.eigenvalues.reserve(k);
  for (std::size_t c = 0; c < k; ++c) {
    const Eigen::Index col = d - 1 - static_cast<Eigen::Index>(c);
    Eigen::VectorXd v = solver.eigenvectors().col(col);
    v.normalize();
    for (Eigen::Index j = 0; j < d; ++j) {
      if (std::abs(v(j)) > 1e-12) {
        if (v(j) < 0.0) v = -v;
        break;
      }
    }
    model.basis.emplace_back(v.data(), v.data() + d);
    model.eigenvalues.push_back(std::max(0.0, solver.eigenvalues()(col)));
  }
  return model;
}

}  // namespace movmf
