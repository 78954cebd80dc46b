// include/sensepolar/sense_space.hpp

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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sensepolar/lexicon.hpp"
#include "sensepolar/numerics.hpp"

namespace sensepolar {

/// One contextual vector for one word occurrence, as produced by the
/// extractor (subword averaging already applied).
struct EmbeddingRecord {
  std::string word;
  std::string context_id;
  int layer = 0;
  Vector vector;
  std::string model_id;
};

/// Mean of context_count contextual vectors of one sense.
struct SenseEmbedding {
  SenseIdentifier sense;
  Vector vector;
  std::size_t context_count = 0;
};

struct DimensionLabel {
  SenseIdentifier pole_a;
  SenseIdentifier pole_b;

  /// "pole_a<->pole_b"
  std::string ToString() const;
  bool operator==(const DimensionLabel &) const = default;
};

/// An embedding in polar coordinates; scores[i] > 0 leans toward pole_b of
/// dimension i.
struct PolarEmbedding {
  Vector scores;
  std::string word;
  std::string context_id;
  std::string space_ref;
  bool normalized = false;
  /// |x - directions^T scores|, filled only when requested.
  std::optional<double> residual_norm;
};

/// The interpretable space: n direction vectors in R^d, stacked as rows,
/// and the n x d pseudoinverse of their transpose. Immutable.
class PolarSpace {
 public:
  /// Computes inverse_transform = pinv(directions^T, rcond).
  static PolarSpace FromDirections(std::vector<DimensionLabel> labels,
                                   Matrix directions, std::string model_id,
                                   double rcond = kDefaultRcond);

  /// Assembles a space from stored parts (used when loading files).
  /// Throws ValidationError on any shape or zero-row violation.
  PolarSpace(std::vector<DimensionLabel> labels, Matrix directions,
             Matrix inverse_transform, std::optional<Vector> mean_polar,
             std::string model_id, double rcond_used);

  std::size_t n() const { return directions_.rows(); }
  std::size_t d() const { return directions_.cols(); }

  const std::vector<DimensionLabel> &dimension_labels() const { return labels_; }
  const Matrix &directions() const { return directions_; }
  const Matrix &inverse_transform() const { return inverse_transform_; }
  const std::optional<Vector> &mean_polar() const { return mean_polar_; }
  const std::string &model_id() const { return model_id_; }
  double rcond_used() const { return rcond_used_; }

  /// Fingerprint of model id, labels and the float32-rounded directions.
  /// Stable across save/load; independent of the stored mean.
  const std::string &space_ref() const { return space_ref_; }

  PolarSpace WithMean(Vector mean_polar) const;
  PolarSpace WithoutMean() const;

 private:
  std::vector<DimensionLabel> labels_;
  Matrix directions_;
  Matrix inverse_transform_;
  std::optional<Vector> mean_polar_;
  std::string model_id_;
  double rcond_used_ = kDefaultRcond;
  std::string space_ref_;
};

/// Componentwise mean of the records' vectors (m = records.size()).
SenseEmbedding BuildSenseEmbedding(const SenseIdentifier &sense,
                                   std::span<const EmbeddingRecord> records);

/// emb_b - emb_a. Throws DegenerateInput when the two coincide.
Vector BuildDirection(const DimensionLabel &label, const SenseEmbedding &emb_a,
                      const SenseEmbedding &emb_b);

/// Stacks one direction per lexicon pair, in lexicon order, and inverts.
/// Missing embeddings raise PreconditionError; all degenerate pairs are
/// reported together in one DegenerateInput.
PolarSpace BuildSpace(const Lexicon &lexicon,
                      const std::map<SenseIdentifier, SenseEmbedding> &sense_embeddings,
                      std::string model_id, double rcond = kDefaultRcond);

/// Keeps the k dimensions whose signed scores have the largest population
/// variance over corpus, in original order, and recomputes the inverse.
PolarSpace SelectDimensionsVariance(const PolarSpace &space,
                                    std::span<const PolarEmbedding> corpus,
                                    std::size_t k);

/// Greedy max-min-angle selection: seed with the longest direction, then
/// repeatedly add the direction with the smallest maximum |cosine| to the
/// selected set. Ties go to the lower index.
PolarSpace SelectDimensionsOrthogonality(const PolarSpace &space, std::size_t k);

/// Restricts a space to the given original dimension indices (ascending)
/// and recomputes the inverse. The stored mean is dropped.
PolarSpace SubSpace(const PolarSpace &space, std::span<const std::size_t> keep);

}  // namespace sensepolar
