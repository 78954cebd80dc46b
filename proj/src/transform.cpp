// src/transform.cpp

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

#include "sensepolar/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sensepolar/error.hpp"

namespace sensepolar {

namespace {

void CheckRecord(const PolarSpace &space, const EmbeddingRecord &x) {
  if (x.model_id != space.model_id()) {
    throw ContractViolation("embedding " + x.context_id + " comes from model \"" +
                            x.model_id + "\" but the space was built for \"" +
                            space.model_id() + "\"");
  }
  if (x.vector.dim() != space.d()) {
    throw ContractViolation("embedding " + x.context_id + " has dimension " +
                            std::to_string(x.vector.dim()) + " but space " +
                            space.space_ref() + " has d = " + std::to_string(space.d()));
  }
}

}  // namespace

PolarEmbedding Transform(const PolarSpace &space, const EmbeddingRecord &x,
                         bool with_residual) {
  CheckRecord(space, x);
  PolarEmbedding p;
  p.scores = MatVec(space.inverse_transform(), x.vector);
  p.word = x.word;
  p.context_id = x.context_id;
  p.space_ref = space.space_ref();
  p.normalized = false;
  if (with_residual) p.residual_norm = ResidualNorm(space, x.vector, p.scores);
  return p;
}

Vector Reconstruct(const PolarSpace &space, const Vector &scores) {
  return TransposeMatVec(space.directions(), scores);
}

double ResidualNorm(const PolarSpace &space, const Vector &x, const Vector &scores) {
  return Norm(Subtract(x, Reconstruct(space, scores)));
}

MeanAccumulator::MeanAccumulator(const PolarSpace &space)
    : space_(&space), sum_(space.d(), 0.0) {}

void MeanAccumulator::Add(const EmbeddingRecord &record) {
  CheckRecord(*space_, record);
  for (std::size_t i = 0; i < sum_.size(); ++i) sum_[i] += record.vector[i];
  ++count_;
}

Vector MeanAccumulator::Mean() const {
  if (count_ == 0) throw PreconditionError("mean of an empty corpus");
  std::vector<double> mean(sum_);
  for (double &x : mean) x /= static_cast<double>(count_);
  return Vector(std::move(mean));
}

PolarSpace ComputeMean(const PolarSpace &space, std::span<const EmbeddingRecord> corpus) {
  MeanAccumulator acc(space);
  for (const auto &r : corpus) acc.Add(r);
  return space.WithMean(MatVec(space.inverse_transform(), acc.Mean()));
}

PolarEmbedding Normalize(const PolarSpace &space, const PolarEmbedding &p) {
  if (!space.mean_polar()) {
    throw StateError("space " + space.space_ref() + " has no mean; compute one first");
  }
  if (p.normalized) {
    throw ContractViolation("embedding " + p.context_id + " is already normalized");
  }
  if (p.space_ref != space.space_ref()) {
    throw ContractViolation("embedding " + p.context_id + " belongs to space " +
                            p.space_ref + ", not " + space.space_ref());
  }
  PolarEmbedding out = p;
  out.scores = Subtract(p.scores, *space.mean_polar());
  out.normalized = true;
  return out;
}

std::vector<std::size_t> RankOrder(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(values[a]) > std::abs(values[b]);
  });
  return order;
}

std::vector<DimensionScore> TopK(const PolarSpace &space, const PolarEmbedding &p,
                                 std::size_t k) {
  if (p.scores.dim() != space.n()) {
    throw ContractViolation("embedding " + p.context_id + " has " +
                            std::to_string(p.scores.dim()) + " scores, space has n = " +
                            std::to_string(space.n()));
  }
  if (k < 1 || k > space.n()) {
    throw PreconditionError("k = " + std::to_string(k) + " outside [1, " +
                            std::to_string(space.n()) + "]");
  }
  const auto order = RankOrder(p.scores.values());
  std::vector<DimensionScore> out;
  out.reserve(k);
  for (std::size_t r = 0; r < k; ++r) {
    const std::size_t i = order[r];
    const auto &label = space.dimension_labels()[i];
    out.push_back({i, label.pole_a, label.pole_b, p.scores[i], r + 1});
  }
  return out;
}

std::size_t RankOf(const PolarEmbedding &p, std::size_t dimension_index) {
  if (dimension_index >= p.scores.dim()) {
    throw PreconditionError("dimension index " + std::to_string(dimension_index) +
                            " out of range for n = " + std::to_string(p.scores.dim()));
  }
  const auto order = RankOrder(p.scores.values());
  return static_cast<std::size_t>(
             std::find(order.begin(), order.end(), dimension_index) - order.begin()) +
         1;
}

}  // namespace sensepolar
