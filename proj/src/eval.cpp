// src/eval.cpp

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

#include "sensepolar/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <json.hpp>

#include "json_util.hpp"
#include "sensepolar/embedding_io.hpp"
#include "sensepolar/error.hpp"

namespace sensepolar {

using nlohmann::json;

namespace {

double Sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + e^z) without overflow.
double Softplus(double z) {
  return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

double Margin(std::span<const double> w, double b, const Vector &x) {
  double z = b;
  for (std::size_t i = 0; i < w.size(); ++i) z += w[i] * x[i];
  return z;
}

void CheckDataset(std::span<const LabeledExample> data, std::size_t dim) {
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data[i].features.dim() != dim) {
      throw ContractViolation("example " + std::to_string(i) + " has " +
                              std::to_string(data[i].features.dim()) +
                              " features, expected " + std::to_string(dim));
    }
    if (data[i].label != 0 && data[i].label != 1) {
      throw ValidationError("example " + std::to_string(i) + " has label " +
                            std::to_string(data[i].label) + ", expected 0 or 1");
    }
  }
}

double LossOver(std::span<const double> w, double b, std::span<const LabeledExample> data,
                std::span<const std::size_t> order) {
  double sum = 0.0;
  for (std::size_t i : order) {
    const double z = Margin(w, b, data[i].features);
    sum += Softplus(z) - data[i].label * z;
  }
  return sum / static_cast<double>(order.size());
}

void GradientOver(std::span<const double> w, double b, std::span<const LabeledExample> data,
                  std::span<const std::size_t> order, std::vector<double> &grad) {
  std::fill(grad.begin(), grad.end(), 0.0);
  const std::size_t dim = w.size();
  for (std::size_t i : order) {
    const auto &x = data[i].features;
    const double residual = Sigmoid(Margin(w, b, x)) - data[i].label;
    for (std::size_t j = 0; j < dim; ++j) grad[j] += residual * x[j];
    grad[dim] += residual;
  }
  for (double &g : grad) g /= static_cast<double>(order.size());
}

std::vector<std::size_t> Identity(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

}  // namespace

double LogLoss(const Vector &weights, double bias, std::span<const LabeledExample> data) {
  if (data.empty()) throw PreconditionError("log-loss of an empty dataset");
  CheckDataset(data, weights.dim());
  return LossOver(weights.values(), bias, data, Identity(data.size()));
}

std::vector<double> LogLossGradient(const Vector &weights, double bias,
                                    std::span<const LabeledExample> data) {
  if (data.empty()) throw PreconditionError("gradient over an empty dataset");
  CheckDataset(data, weights.dim());
  std::vector<double> grad(weights.dim() + 1);
  GradientOver(weights.values(), bias, data, Identity(data.size()), grad);
  return grad;
}

LinearModel TrainLogistic(std::span<const LabeledExample> data, int epochs,
                          double learning_rate, std::uint64_t seed) {
  if (data.size() < 2) throw PreconditionError("training needs at least two examples");
  if (epochs < 1) throw PreconditionError("epochs must be positive");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw PreconditionError("learning rate must be positive");
  }
  const std::size_t dim = data.front().features.dim();
  CheckDataset(data, dim);
  const bool has0 = std::any_of(data.begin(), data.end(), [](const auto &e) { return e.label == 0; });
  const bool has1 = std::any_of(data.begin(), data.end(), [](const auto &e) { return e.label == 1; });
  if (!has0 || !has1) throw PreconditionError("training data contains a single class");

  // Canonical order first, so permuted inputs train identically.
  std::vector<std::size_t> order = Identity(data.size());
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (data[a].label != data[b].label) return data[a].label < data[b].label;
    const auto fa = data[a].features.values(), fb = data[b].features.values();
    return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end());
  });

  const std::vector<std::size_t> canonical = order;
  std::mt19937_64 rng(seed);
  std::vector<double> w(dim, 0.0), grad(dim + 1);
  double b = 0.0;
  for (int epoch = 0; epoch < epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    GradientOver(w, b, data, order, grad);
    for (std::size_t j = 0; j < dim; ++j) w[j] -= learning_rate * grad[j];
    b -= learning_rate * grad[dim];
    const bool finite = std::isfinite(b) &&
                        std::all_of(w.begin(), w.end(), [](double x) { return std::isfinite(x); });
    if (!finite) {
      throw NumericFailure("logistic regression diverged at epoch " +
                           std::to_string(epoch + 1) + "; try a smaller learning rate than " +
                           std::to_string(learning_rate));
    }
  }
  const double loss = LossOver(w, b, data, canonical);
  if (!std::isfinite(loss)) {
    throw NumericFailure("training loss is not finite; try a smaller learning rate than " +
                         std::to_string(learning_rate));
  }

  LinearModel model;
  model.weights = Vector(std::move(w));
  model.bias = b;
  model.feature_dim = dim;
  model.training_meta = {epochs, learning_rate, seed, loss};
  return model;
}

Prediction Predict(const LinearModel &model, const Vector &features) {
  if (features.dim() != model.feature_dim) {
    throw ContractViolation("model expects " + std::to_string(model.feature_dim) +
                            " features, got " + std::to_string(features.dim()));
  }
  const double p = Sigmoid(Margin(model.weights.values(), model.bias, features));
  return Prediction{p >= 0.5 ? 1 : 0, p};
}

Metrics Evaluate(const LinearModel &model, std::span<const LabeledExample> data) {
  if (data.empty()) throw PreconditionError("evaluation needs at least one example");
  std::size_t tp = 0, fp = 0, fn = 0, correct = 0;
  for (const auto &e : data) {
    const int y = Predict(model, e.features).label;
    if (y == e.label) ++correct;
    if (y == 1 && e.label == 1) ++tp;
    if (y == 1 && e.label == 0) ++fp;
    if (y == 0 && e.label == 1) ++fn;
  }
  Metrics m;
  m.accuracy = static_cast<double>(correct) / static_cast<double>(data.size());
  const double precision = tp + fp ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
  const double recall = tp + fn ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
  m.f1 = precision + recall > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
  return m;
}

LabeledExample ParseLabeledExample(std::string_view line) {
  json j;
  try {
    j = json::parse(line.begin(), line.end());
  } catch (const json::parse_error &e) {
    const auto [l, column] = internal::LineColumn(line, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("labeled example is not valid JSON: ") + e.what(), l, column);
  }
  internal::RequireKeys(j, {"features", "label"}, "labeled example");
  const json &features = j.at("features");
  if (!features.is_array() || features.empty()) {
    throw ValidationError("labeled example: \"features\" must be a non-empty array");
  }
  std::vector<double> values;
  for (const auto &x : features) {
    if (!x.is_number()) throw ValidationError("labeled example: non-numeric feature");
    values.push_back(x.get<double>());
  }
  const json &label = j.at("label");
  if (!label.is_number_integer() || (label.get<int>() != 0 && label.get<int>() != 1)) {
    throw ValidationError("labeled example: \"label\" must be 0 or 1");
  }
  return LabeledExample{Vector(std::move(values)), label.get<int>()};
}

std::string SerializeLabeledExample(const LabeledExample &example) {
  json features = json::array();
  for (double x : example.features.values()) features.push_back(x);
  return json{{"features", features}, {"label", example.label}}.dump();
}

std::vector<LabeledExample> ReadDataset(const std::string &path) {
  JsonlReader reader(path);
  std::vector<LabeledExample> out;
  while (auto line = reader.NextLine()) {
    try {
      out.push_back(ParseLabeledExample(*line));
    } catch (const Error &e) {
      throw ValidationError(path + ":" + std::to_string(reader.line_number()) + ": " +
                            e.what());
    }
  }
  return out;
}

std::string SerializeModel(const LinearModel &model) {
  json weights = json::array();
  for (double x : model.weights.values()) weights.push_back(x);
  const json j{{"weights", weights},
               {"bias", model.bias},
               {"feature_dim", model.feature_dim},
               {"training_meta", {{"epochs", model.training_meta.epochs},
                                  {"learning_rate", model.training_meta.learning_rate},
                                  {"seed", model.training_meta.seed},
                                  {"final_loss", model.training_meta.final_loss}}}};
  return j.dump(2) + "\n";
}

LinearModel ParseModel(std::string_view bytes) {
  json j;
  try {
    j = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error &e) {
    const auto [l, column] = internal::LineColumn(bytes, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("model file is not valid JSON: ") + e.what(), l, column);
  }
  internal::RequireKeys(j, {"weights", "bias", "feature_dim", "training_meta"}, "model");
  internal::RequireKeys(j.at("training_meta"),
                        {"epochs", "learning_rate", "seed", "final_loss"}, "training_meta");
  LinearModel m;
  try {
    m.weights = Vector(j.at("weights").get<std::vector<double>>());
    m.bias = j.at("bias").get<double>();
    m.feature_dim = j.at("feature_dim").get<std::size_t>();
    const json &meta = j.at("training_meta");
    m.training_meta = {meta.at("epochs").get<int>(), meta.at("learning_rate").get<double>(),
                       meta.at("seed").get<std::uint64_t>(),
                       meta.at("final_loss").get<double>()};
  } catch (const json::exception &e) {
    throw ValidationError(std::string("model: ") + e.what());
  }
  if (m.weights.dim() != m.feature_dim || !std::isfinite(m.bias)) {
    throw ValidationError("model: weights do not match feature_dim or bias is not finite");
  }
  return m;
}

}  // namespace sensepolar
