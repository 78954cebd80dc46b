// tests/test_eval.cpp

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

#include <algorithm>
#include <cmath>
#include <random>

#include <doctest.h>

#include "sensepolar/error.hpp"
#include "sensepolar/eval.hpp"
#include "support/fixtures.hpp"

using namespace sensepolar;
using namespace sensepolar::testing;

namespace {

LinearModel Fixed(Vector w, double b) {
  LinearModel m;
  m.feature_dim = w.dim();
  m.weights = std::move(w);
  m.bias = b;
  return m;
}

// Two Gaussian blobs separated along a random unit direction.
std::vector<LabeledExample> Blobs(std::mt19937_64 &rng, std::size_t per_class, std::size_t dim,
                                  double margin) {
  Vector u = RandomVector(rng, dim);
  u = Scale(u, 1.0 / Norm(u));
  std::normal_distribution<double> n(0.0, 0.3);
  std::vector<LabeledExample> out;
  for (int label : {0, 1}) {
    for (std::size_t i = 0; i < per_class; ++i) {
      std::vector<double> x(dim);
      for (auto &v : x) v = n(rng);
      const double shift = (label == 1 ? 1.0 : -1.0) * (margin / 2.0 + 0.5);
      for (std::size_t j = 0; j < dim; ++j) x[j] += shift * u[j];
      out.push_back({Vector(x), label});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("separable one-dimensional data") {
  std::vector<LabeledExample> data;
  for (double x : {-3.0, -2.0, -1.5, -1.0}) data.push_back({Vector{x}, 0});
  for (double x : {1.0, 1.5, 2.0, 3.0}) data.push_back({Vector{x}, 1});
  const LinearModel m = TrainLogistic(data, 200, 0.5, 1);
  CHECK(m.weights[0] > 0.0);
  CHECK(Evaluate(m, data).accuracy == 1.0);
  CHECK(Evaluate(m, data).f1 == 1.0);
  CHECK(m.training_meta.epochs == 200);
  CHECK(m.training_meta.final_loss == doctest::Approx(LogLoss(m.weights, m.bias, data)));
  CHECK(m.training_meta.final_loss < std::log(2.0));
}

TEST_CASE("training ignores input order") {
  std::mt19937_64 rng(51);
  auto data = Blobs(rng, 20, 4, 1.0);
  const std::string first = SerializeModel(TrainLogistic(data, 100, 0.2, 9));
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(data.begin(), data.end(), rng);
    CHECK(SerializeModel(TrainLogistic(data, 100, 0.2, 9)) == first);
  }
}

TEST_CASE("gradient matches central differences") {
  std::mt19937_64 rng(52);
  const auto data = Blobs(rng, 10, 5, 0.5);
  for (int point = 0; point < 10; ++point) {
    const Vector w = RandomVector(rng, 5);
    const double b = RandomVector(rng, 1)[0];
    const auto grad = LogLossGradient(w, b, data);
    REQUIRE(grad.size() == 6);
    const double h = 1e-6;
    for (std::size_t j = 0; j < 6; ++j) {
      double numeric;
      if (j < 5) {
        Vector wp = w, wm = w;
        wp[j] += h;
        wm[j] -= h;
        numeric = (LogLoss(wp, b, data) - LogLoss(wm, b, data)) / (2 * h);
      } else {
        numeric = (LogLoss(w, b + h, data) - LogLoss(w, b - h, data)) / (2 * h);
      }
      CHECK(std::abs(grad[j] - numeric) <= 1e-6 * std::max(1.0, std::abs(numeric)));
    }
  }
}

TEST_CASE("predict") {
  const LinearModel zero = Fixed(Vector(3), 0.0);
  CHECK(Predict(zero, Vector{1, 2, 3}).probability == 0.5);
  CHECK(Predict(zero, Vector{1, 2, 3}).label == 1);

  const LinearModel m = Fixed(Vector{0.5, -1.0}, 0.25);
  std::mt19937_64 rng(53);
  for (int i = 0; i < 20; ++i) {
    const Vector x = RandomVector(rng, 2, 5.0);
    const double z = 0.5 * x[0] - 1.0 * x[1] + 0.25;
    const double want = 1.0 / (1.0 + std::exp(-z));
    const Prediction p = Predict(m, x);
    CHECK(p.probability == doctest::Approx(want).epsilon(1e-12));
    CHECK(p.label == (want >= 0.5 ? 1 : 0));
  }
  CHECK(Predict(Fixed(Vector{1.0}, 0.0), Vector{800.0}).probability == 1.0);
  CHECK(Predict(Fixed(Vector{1.0}, 0.0), Vector{-800.0}).probability == 0.0);
  CHECK_THROWS_AS(Predict(m, Vector{1.0}), ContractViolation);
}

TEST_CASE("evaluate counts") {
  // predicted label is the sign of the single feature
  const LinearModel m = Fixed(Vector{1.0}, 0.0);
  const std::vector<LabeledExample> data{
      {Vector{1.0}, 1},   // tp
      {Vector{2.0}, 1},   // tp
      {Vector{3.0}, 0},   // fp
      {Vector{-1.0}, 1},  // fn
      {Vector{-2.0}, 0},  // tn
  };
  const Metrics got = Evaluate(m, data);
  CHECK(got.accuracy == doctest::Approx(3.0 / 5.0));
  // precision 2/3, recall 2/3
  CHECK(got.f1 == doctest::Approx(2.0 / 3.0));

  const std::vector<LabeledExample> negatives{{Vector{-1.0}, 0}, {Vector{-2.0}, 0}};
  CHECK(Evaluate(m, negatives).accuracy == 1.0);
  CHECK(Evaluate(m, negatives).f1 == 0.0);
  CHECK_THROWS_AS(Evaluate(m, {}), PreconditionError);
}

TEST_CASE("training errors") {
  const std::vector<LabeledExample> single{{Vector{1.0}, 1}, {Vector{2.0}, 1}};
  CHECK_THROWS_AS(TrainLogistic(single, 10, 0.1, 0), PreconditionError);
  const std::vector<LabeledExample> ok{{Vector{1.0}, 1}, {Vector{-1.0}, 0}};
  CHECK_THROWS_AS(TrainLogistic(ok, 0, 0.1, 0), PreconditionError);
  CHECK_THROWS_AS(TrainLogistic(ok, 10, 0.0, 0), PreconditionError);
  const std::vector<LabeledExample> ragged{{Vector{1.0}, 1}, {Vector{1.0, 2.0}, 0}};
  CHECK_THROWS_AS(TrainLogistic(ragged, 10, 0.1, 0), ContractViolation);
  const std::vector<LabeledExample> huge{{Vector{1e308}, 1}, {Vector{-1e308}, 0}};
  CHECK_THROWS_AS(TrainLogistic(huge, 10, 1e300, 0), NumericFailure);
}

TEST_CASE("separated blobs are learned across seeds") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng(1000 + seed);
    const auto data = Blobs(rng, 50, 6, 1.0);
    const LinearModel m = TrainLogistic(data, 500, 0.1, seed);
    CHECK(Evaluate(m, data).accuracy >= 0.95);
  }
}

TEST_CASE("datasets and models serialize") {
  const LabeledExample e{Vector{0.5, -2.0}, 1};
  const LabeledExample back = ParseLabeledExample(SerializeLabeledExample(e));
  CHECK(back.features == e.features);
  CHECK(back.label == 1);
  CHECK_THROWS_AS(ParseLabeledExample(R"({"features":[1],"label":2})"), ValidationError);
  CHECK_THROWS_AS(ParseLabeledExample(R"({"features":[],"label":1})"), ValidationError);
  CHECK_THROWS_AS(ParseLabeledExample("[1,2"), ParseError);

  std::mt19937_64 rng(54);
  const LinearModel m = TrainLogistic(Blobs(rng, 10, 3, 1.0), 50, 0.1, 4);
  const LinearModel again = ParseModel(SerializeModel(m));
  CHECK(again.weights == m.weights);
  CHECK(again.bias == m.bias);
  CHECK(again.feature_dim == 3);
  CHECK(again.training_meta.seed == 4);
  CHECK(SerializeModel(again) == SerializeModel(m));
  CHECK_THROWS_AS(ParseModel("{}"), ValidationError);
}
