// include/sensepolar/transform.hpp

// Copyright 2026 The sensepolar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sensepolar/sense_space.hpp"

namespace sensepolar {

struct DimensionScore {
  std::size_t dimension_index = 0;
  SenseIdentifier pole_a;
  SenseIdentifier pole_b;
  double signed_value = 0.0;
  std::size_t rank = 0;  // 1 = largest |signed_value|
};

/// scores = inverse_transform * x. With n >= d and spanning directions this
/// is the minimum-norm solution of directions^T p = x.
PolarEmbedding Transform(const PolarSpace &space, const EmbeddingRecord &x,
                         bool with_residual = false);

/// directions^T * scores, i.e. the raw-space point the scores describe.
Vector Reconstruct(const PolarSpace &space, const Vector &scores);

/// |x - directions^T scores|; non-zero only when the directions do not
/// span R^d.
double ResidualNorm(const PolarSpace &space, const Vector &x, const Vector &scores);

/// Running sum for the corpus mean, so corpora can be streamed.
class MeanAccumulator {
 public:
  explicit MeanAccumulator(const PolarSpace &space);
  void Add(const EmbeddingRecord &record);
  std::size_t count() const { return count_; }
  /// Raw-space mean; throws PreconditionError if nothing was added.
  Vector Mean() const;

 private:
  const PolarSpace *space_;
  std::vector<double> sum_;
  std::size_t count_ = 0;
};

/// Copy of space whose mean_polar is the transformed corpus mean.
PolarSpace ComputeMean(const PolarSpace &space, std::span<const EmbeddingRecord> corpus);

/// p.scores - mean_polar, flagged as normalized. StateError when the space
/// has no mean; ContractViolation on a second normalization or a foreign
/// space_ref.
PolarEmbedding Normalize(const PolarSpace &space, const PolarEmbedding &p);

/// k dimensions by descending |score|, ties broken by lower index.
std::vector<DimensionScore> TopK(const PolarSpace &space, const PolarEmbedding &p,
                                 std::size_t k);

/// 1-based position of dimension_index in the TopK order.
std::size_t RankOf(const PolarEmbedding &p, std::size_t dimension_index);

/// The TopK order over raw scores, shared with the analysis module.
std::vector<std::size_t> RankOrder(std::span<const double> values);

}  // namespace sensepolar
