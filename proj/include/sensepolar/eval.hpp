// include/sensepolar/eval.hpp

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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sensepolar/numerics.hpp"

namespace sensepolar {

struct LabeledExample {
  Vector features;
  int label = 0;  // 0 or 1
};

struct TrainingMeta {
  int epochs = 0;
  double learning_rate = 0.0;
  std::uint64_t seed = 0;
  double final_loss = 0.0;
};

/// Logistic regression: p(y = 1 | x) = sigmoid(weights . x + bias).
struct LinearModel {
  Vector weights;
  double bias = 0.0;
  std::size_t feature_dim = 0;
  TrainingMeta training_meta;
};

struct Prediction {
  int label = 0;
  double probability = 0.5;
};

struct Metrics {
  double accuracy = 0.0;
  double f1 = 0.0;
};

/// Mean log-loss of (weights, bias) over data.
double LogLoss(const Vector &weights, double bias, std::span<const LabeledExample> data);

/// Gradient of LogLoss; the last entry is d/d bias.
std::vector<double> LogLossGradient(const Vector &weights, double bias,
                                    std::span<const LabeledExample> data);

/// Full-batch gradient descent from zero weights. Examples are put in a
/// canonical order and reshuffled every epoch from `seed`, so the result
/// does not depend on input order. Throws PreconditionError on single-class
/// data and NumericFailure if the loss diverges.
LinearModel TrainLogistic(std::span<const LabeledExample> data, int epochs,
                          double learning_rate, std::uint64_t seed);

Prediction Predict(const LinearModel &model, const Vector &features);

/// Accuracy and binary F1 for the positive class; F1 is 0 when
/// precision + recall is 0.
Metrics Evaluate(const LinearModel &model, std::span<const LabeledExample> data);

/// {"features":[...],"label":0|1}
LabeledExample ParseLabeledExample(std::string_view line);
std::string SerializeLabeledExample(const LabeledExample &example);
std::vector<LabeledExample> ReadDataset(const std::string &path);

std::string SerializeModel(const LinearModel &model);
LinearModel ParseModel(std::string_view bytes);

}  // namespace sensepolar
