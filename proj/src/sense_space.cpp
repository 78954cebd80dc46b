// src/sense_space.cpp

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

#include "sensepolar/sense_space.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>

#include "sensepolar/error.hpp"

namespace sensepolar {

namespace {

class Fnv1a {
 public:
  void Bytes(const void *data, std::size_t n) {
    const auto *p = static_cast<const unsigned char *>(data);
    for (std::size_t i = 0; i < n; ++i) {
      hash_ ^= p[i];
      hash_ *= 0x100000001b3ULL;
    }
  }
  void String(const std::string &s) {
    Bytes(s.data(), s.size());
    const char nul = '\0';
    Bytes(&nul, 1);
  }
  void Float32(double x) {
    const auto bits = std::bit_cast<std::uint32_t>(static_cast<float>(x));
    const unsigned char le[4] = {
        static_cast<unsigned char>(bits), static_cast<unsigned char>(bits >> 8),
        static_cast<unsigned char>(bits >> 16), static_cast<unsigned char>(bits >> 24)};
    Bytes(le, 4);
  }
  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

std::string ComputeSpaceRef(const std::string &model_id,
                            const std::vector<DimensionLabel> &labels,
                            const Matrix &directions) {
  Fnv1a h;
  h.String(model_id);
  for (const auto &l : labels) h.String(l.ToString());
  for (double x : directions.values()) h.Float32(x);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "sp-%016llx",
                static_cast<unsigned long long>(h.value()));
  return buf;
}

}  // namespace

std::string DimensionLabel::ToString() const {
  return pole_a.ToString() + "<->" + pole_b.ToString();
}

PolarSpace PolarSpace::FromDirections(std::vector<DimensionLabel> labels,
                                      Matrix directions, std::string model_id,
                                      double rcond) {
  Matrix inverse = PseudoInverse(directions.Transpose(), rcond);
  return PolarSpace(std::move(labels), std::move(directions), std::move(inverse),
                    std::nullopt, std::move(model_id), rcond);
}

PolarSpace::PolarSpace(std::vector<DimensionLabel> labels, Matrix directions,
                       Matrix inverse_transform, std::optional<Vector> mean_polar,
                       std::string model_id, double rcond_used)
    : labels_(std::move(labels)),
      directions_(std::move(directions)),
      inverse_transform_(std::move(inverse_transform)),
      mean_polar_(std::move(mean_polar)),
      model_id_(std::move(model_id)),
      rcond_used_(rcond_used) {
  if (directions_.rows() == 0 || directions_.cols() == 0) {
    throw ValidationError("polar space needs at least one dimension and d >= 1");
  }
  if (labels_.size() != directions_.rows()) {
    throw ValidationError("polar space has " + std::to_string(labels_.size()) +
                          " labels but " + std::to_string(directions_.rows()) +
                          " directions");
  }
  if (inverse_transform_.rows() != directions_.rows() ||
      inverse_transform_.cols() != directions_.cols()) {
    throw ValidationError("inverse transform is " + inverse_transform_.ShapeString() +
                          ", expected " + directions_.ShapeString());
  }
  for (std::size_t i = 0; i < directions_.rows(); ++i) {
    const auto row = directions_.row(i);
    if (std::all_of(row.begin(), row.end(), [](double x) { return x == 0.0; })) {
      throw ValidationError("direction " + std::to_string(i) + " (" +
                            labels_[i].ToString() + ") is the zero vector");
    }
  }
  if (mean_polar_ && mean_polar_->dim() != directions_.rows()) {
    throw ValidationError("mean_polar has dimension " +
                          std::to_string(mean_polar_->dim()) + ", expected " +
                          std::to_string(directions_.rows()));
  }
  space_ref_ = ComputeSpaceRef(model_id_, labels_, directions_);
}

PolarSpace PolarSpace::WithMean(Vector mean_polar) const {
  PolarSpace copy = *this;
  if (mean_polar.dim() != n()) {
    throw ContractViolation("mean_polar has dimension " +
                            std::to_string(mean_polar.dim()) + ", space has n = " +
                            std::to_string(n()));
  }
  copy.mean_polar_ = std::move(mean_polar);
  return copy;
}

PolarSpace PolarSpace::WithoutMean() const {
  PolarSpace copy = *this;
  copy.mean_polar_.reset();
  return copy;
}

SenseEmbedding BuildSenseEmbedding(const SenseIdentifier &sense,
                                   std::span<const EmbeddingRecord> records) {
  if (records.empty()) {
    throw PreconditionError("no context embeddings for sense " + sense.ToString());
  }
  const std::size_t d = records.front().vector.dim();
  const std::string &model = records.front().model_id;
  std::vector<double> sum(d, 0.0);
  for (const auto &r : records) {
    if (r.vector.dim() != d) {
      throw ContractViolation("sense " + sense.ToString() + ": context " +
                              r.context_id + " has dimension " +
                              std::to_string(r.vector.dim()) + ", expected " +
                              std::to_string(d));
    }
    if (r.model_id != model) {
      throw ContractViolation("sense " + sense.ToString() + ": context " +
                              r.context_id + " comes from model " + r.model_id +
                              ", expected " + model);
    }
    for (std::size_t i = 0; i < d; ++i) sum[i] += r.vector[i];
  }
  const double m = static_cast<double>(records.size());
  for (double &x : sum) x /= m;
  return SenseEmbedding{sense, Vector(std::move(sum)), records.size()};
}

Vector BuildDirection(const DimensionLabel &label, const SenseEmbedding &emb_a,
                      const SenseEmbedding &emb_b) {
  if (emb_a.sense != label.pole_a || emb_b.sense != label.pole_b) {
    throw ContractViolation("embeddings " + emb_a.sense.ToString() + ", " +
                            emb_b.sense.ToString() + " do not match dimension " +
                            label.ToString());
  }
  Vector dir = Subtract(emb_b.vector, emb_a.vector);
  const auto v = dir.values();
  if (std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; })) {
    throw DegenerateInput("degenerate dimension " + label.ToString() +
                          ": both poles have the same sense embedding");
  }
  return dir;
}

PolarSpace BuildSpace(const Lexicon &lexicon,
                      const std::map<SenseIdentifier, SenseEmbedding> &sense_embeddings,
                      std::string model_id, double rcond) {
  if (lexicon.pairs.empty()) throw PreconditionError("lexicon has no pairs");
  std::vector<std::string> missing;
  for (const auto &p : lexicon.pairs) {
    for (const auto *s : {&p.pole_a, &p.pole_b}) {
      if (!sense_embeddings.contains(*s)) missing.push_back(s->ToString());
    }
  }
  if (!missing.empty()) {
    std::string msg = "missing sense embeddings:";
    for (const auto &m : missing) msg += " " + m;
    throw PreconditionError(msg);
  }

  std::vector<DimensionLabel> labels;
  std::vector<Vector> rows;
  std::vector<std::string> degenerate;
  for (const auto &p : lexicon.pairs) {
    DimensionLabel label{p.pole_a, p.pole_b};
    try {
      rows.push_back(BuildDirection(label, sense_embeddings.at(p.pole_a),
                                    sense_embeddings.at(p.pole_b)));
    } catch (const DegenerateInput &) {
      degenerate.push_back(label.ToString());
    }
    labels.push_back(std::move(label));
  }
  if (!degenerate.empty()) {
    std::string msg = "degenerate dimensions (identical pole embeddings):";
    for (const auto &d : degenerate) msg += " " + d;
    throw DegenerateInput(msg);
  }
  return PolarSpace::FromDirections(std::move(labels), Matrix::FromRows(rows),
                                    std::move(model_id), rcond);
}

PolarSpace SubSpace(const PolarSpace &space, std::span<const std::size_t> keep) {
  if (keep.empty()) throw PreconditionError("cannot keep zero dimensions");
  std::vector<DimensionLabel> labels;
  std::vector<Vector> rows;
  for (std::size_t idx : keep) {
    if (idx >= space.n()) {
      throw PreconditionError("dimension index " + std::to_string(idx) +
                              " out of range for n = " + std::to_string(space.n()));
    }
    labels.push_back(space.dimension_labels()[idx]);
    rows.push_back(space.directions().RowVector(idx));
  }
  return PolarSpace::FromDirections(std::move(labels), Matrix::FromRows(rows),
                                    space.model_id(), space.rcond_used());
}

namespace {

void CheckK(std::size_t k, std::size_t n) {
  if (k < 1 || k > n) {
    throw PreconditionError("k = " + std::to_string(k) + " outside [1, " +
                            std::to_string(n) + "]");
  }
}

}  // namespace

PolarSpace SelectDimensionsVariance(const PolarSpace &space,
                                    std::span<const PolarEmbedding> corpus,
                                    std::size_t k) {
  CheckK(k, space.n());
  if (corpus.empty()) throw PreconditionError("variance selection needs a non-empty corpus");
  const std::size_t n = space.n();
  std::vector<double> mean(n, 0.0), var(n, 0.0);
  for (const auto &p : corpus) {
    if (p.scores.dim() != n) {
      throw ContractViolation("corpus embedding " + p.context_id + " has dimension " +
                              std::to_string(p.scores.dim()) + ", space has n = " +
                              std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) mean[i] += p.scores[i];
  }
  const double count = static_cast<double>(corpus.size());
  for (double &m : mean) m /= count;
  for (const auto &p : corpus) {
    for (std::size_t i = 0; i < n; ++i) {
      const double dev = p.scores[i] - mean[i];
      var[i] += dev * dev;
    }
  }
  for (double &v : var) v /= count;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return var[a] > var[b]; });
  order.resize(k);
  std::sort(order.begin(), order.end());
  return SubSpace(space, order);
}

PolarSpace SelectDimensionsOrthogonality(const PolarSpace &space, std::size_t k) {
  CheckK(k, space.n());
  const std::size_t n = space.n();
  std::vector<Vector> dirs;
  std::vector<double> norms;
  for (std::size_t i = 0; i < n; ++i) {
    dirs.push_back(space.directions().RowVector(i));
    norms.push_back(Norm(dirs.back()));
  }

  std::vector<std::size_t> selected;
  std::size_t first = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (norms[i] > norms[first]) first = i;
  selected.push_back(first);

  // worst[i]: max |cos| between candidate i and the selected set so far.
  std::vector<double> worst(n, 0.0);
  std::vector<bool> taken(n, false);
  taken[first] = true;
  while (selected.size() < k) {
    const Vector &last = dirs[selected.back()];
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      worst[i] = std::max(worst[i], std::abs(CosineSimilarity(dirs[i], last)));
      if (best == n || worst[i] < worst[best]) best = i;
    }
    taken[best] = true;
    selected.push_back(best);
  }
  std::sort(selected.begin(), selected.end());
  return SubSpace(space, selected);
}

}  // namespace sensepolar
