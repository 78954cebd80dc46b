// tests/test_numerics.cpp

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

#include <cmath>
#include <random>

#include <doctest.h>

#include "sensepolar/error.hpp"
#include "sensepolar/numerics.hpp"
#include "support/oracles.hpp"

using namespace sensepolar;
using namespace sensepolar::testing;

namespace {

double Reconstruction(const Matrix &m, const SvdResult &svd) {
  Matrix us = svd.u;
  for (std::size_t i = 0; i < us.rows(); ++i)
    for (std::size_t j = 0; j < us.cols(); ++j) us(i, j) *= svd.singular_values[j];
  return MaxAbs(NaiveMatMul(us, svd.v_transpose), m);
}

double OrthonormalityError(const Matrix &q, bool columns) {
  const Matrix g = columns ? NaiveMatMul(q.Transpose(), q) : NaiveMatMul(q, q.Transpose());
  return MaxAbs(g, Matrix::Identity(g.rows()));
}

}  // namespace

TEST_CASE("svd of the identity and of a diagonal matrix") {
  const SvdResult id = Svd(Matrix::Identity(2));
  CHECK(id.singular_values == std::vector<double>{1.0, 1.0});

  const SvdResult diag = Svd(Matrix{{3.0, 0.0}, {0.0, 0.0}});
  CHECK(diag.singular_values == std::vector<double>{3.0, 0.0});
  CHECK(OrthonormalityError(diag.u, true) < 1e-12);
  CHECK(Reconstruction(Matrix{{3.0, 0.0}, {0.0, 0.0}}, diag) == 0.0);
}

TEST_CASE("svd of a hand-solved 2x2") {
  // [[3,0],[4,5]]: s1^2 + s2^2 = 50, s1 s2 = |det| = 15, so s^2 in {45, 5}.
  const SvdResult svd = Svd(Matrix{{3.0, 0.0}, {4.0, 5.0}});
  CHECK(svd.singular_values[0] == doctest::Approx(std::sqrt(45.0)).epsilon(1e-14));
  CHECK(svd.singular_values[1] == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
}

TEST_CASE("svd reconstructs random matrices and agrees with Eigen") {
  std::mt19937_64 rng(11);
  for (auto [r, c] : {std::pair{5, 3}, {3, 5}, {1, 4}, {4, 1}, {7, 7}, {30, 12}}) {
    const Matrix m = RandomMatrix(rng, r, c);
    const SvdResult svd = Svd(m);
    const double smax = svd.singular_values.front();
    CHECK(Reconstruction(m, svd) < 1e-8 * smax);
    CHECK(OrthonormalityError(svd.u, true) < 1e-8);
    CHECK(OrthonormalityError(svd.v_transpose, false) < 1e-8);
    CHECK(std::is_sorted(svd.singular_values.rbegin(), svd.singular_values.rend()));
    const auto oracle = OracleSingularValues(m);
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      CHECK(svd.singular_values[i] == doctest::Approx(oracle[i]).epsilon(1e-10));
    }
  }
}

TEST_CASE("svd of rank-deficient matrices keeps orthonormal factors") {
  std::mt19937_64 rng(12);
  const Matrix m = RandomLowRank(rng, 9, 6, 2);
  const SvdResult svd = Svd(m);
  CHECK(OrthonormalityError(svd.u, true) < 1e-8);
  CHECK(OrthonormalityError(svd.v_transpose, false) < 1e-8);
  CHECK(Reconstruction(m, svd) < 1e-8 * svd.singular_values.front());
  CHECK(svd.singular_values[2] < 1e-12 * svd.singular_values.front());

  const SvdResult zero = Svd(Matrix(3, 2));
  CHECK(zero.singular_values == std::vector<double>{0.0, 0.0});
  CHECK(OrthonormalityError(zero.u, true) < 1e-12);
}

TEST_CASE("svd is deterministic") {
  std::mt19937_64 rng(13);
  const Matrix m = RandomMatrix(rng, 12, 8);
  const SvdResult a = Svd(m), b = Svd(m);
  CHECK(a.u == b.u);
  CHECK(a.singular_values == b.singular_values);
  CHECK(a.v_transpose == b.v_transpose);
}

TEST_CASE("svd rejects empty input") {
  CHECK_THROWS_AS(Svd(Matrix()), PreconditionError);
}

TEST_CASE("pseudo_inverse analytic cases") {
  CHECK(PseudoInverse(Matrix::Identity(3)) == Matrix::Identity(3));
  const Matrix row{{2.0, 0.0}};
  const Matrix pinv = PseudoInverse(row);
  CHECK(pinv.rows() == 2);
  CHECK(pinv.cols() == 1);
  CHECK(pinv(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(pinv(1, 0) == 0.0);

  const Matrix zero = PseudoInverse(Matrix(2, 5));
  CHECK(zero == Matrix(5, 2));
}

TEST_CASE("pseudo_inverse of identities is exact") {
  for (std::size_t k = 1; k <= 64; ++k) {
    CHECK(MaxAbs(PseudoInverse(Matrix::Identity(k)), Matrix::Identity(k)) <= 1e-12);
  }
}

TEST_CASE("pseudo_inverse satisfies the Penrose conditions") {
  std::mt19937_64 rng(21);
  const Matrix wide = RandomMatrix(rng, 4, 7);
  CHECK(CheckPenrose(wide, PseudoInverse(wide)).worst() < 1e-8);

  std::uniform_int_distribution<int> size(1, 50);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = size(rng), c = size(rng);
    const Matrix m = trial % 3 == 0
                         ? RandomLowRank(rng, r, c, std::max<std::size_t>(1, std::min(r, c) / 2))
                         : RandomMatrix(rng, r, c);
    CAPTURE(m.ShapeString());
    CHECK(CheckPenrose(m, PseudoInverse(m)).worst() < 1e-8);
  }
}

TEST_CASE("pseudo_inverse matches Eigen's complete orthogonal decomposition") {
  std::mt19937_64 rng(22);
  const Matrix m = RandomMatrix(rng, 6, 9);
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(ToEigen(m));
  CHECK(MaxAbs(PseudoInverse(m), FromEigen(Eigen::MatrixXd(cod.pseudoInverse()))) < 1e-10);
}

TEST_CASE("pinv(M Q) == Q^T pinv(M) for orthogonal Q") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix m = RandomMatrix(rng, 5, 8);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(ToEigen(RandomMatrix(rng, 8, 8)));
    const Matrix q = FromEigen(Eigen::MatrixXd(qr.householderQ()));
    const Matrix lhs = PseudoInverse(NaiveMatMul(m, q));
    const Matrix rhs = NaiveMatMul(q.Transpose(), PseudoInverse(m));
    CHECK(MaxAbs(lhs, rhs) < 1e-8);
  }
}

TEST_CASE("pseudo_inverse cutoff and rcond range") {
  // diag(1, 1e-14): below 1e-12 relative the second value is dropped.
  const Matrix m{{1.0, 0.0}, {0.0, 1e-14}};
  CHECK(PseudoInverse(m)(1, 1) == 0.0);
  CHECK(PseudoInverse(m, 1e-15)(1, 1) == doctest::Approx(1e14));
  CHECK_THROWS_AS(PseudoInverse(m, 0.0), PreconditionError);
  CHECK_THROWS_AS(PseudoInverse(m, 1.0), PreconditionError);
  CHECK(NumericalRank(m) == 1);
}

TEST_CASE("matvec") {
  CHECK(MatVec(Matrix::Identity(2), Vector{3.0, 4.0}) == Vector{3.0, 4.0});
  CHECK(MatVec(Matrix{{1.0, 2.0}, {3.0, 4.0}}, Vector{1.0, 1.0}) == Vector{3.0, 7.0});
  CHECK_THROWS_AS(MatVec(Matrix(2, 3), Vector(2)), ContractViolation);

  std::mt19937_64 rng(31);
  const Matrix m = RandomMatrix(rng, 6, 3);
  const Vector v = RandomVector(rng, 3);
  CHECK(MatVec(m, v) == NaiveMatVec(m, v));
  std::uniform_int_distribution<int> size(1, 16);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix a = RandomMatrix(rng, size(rng), size(rng));
    const Vector x = RandomVector(rng, a.cols());
    CHECK(MatVec(a, x) == NaiveMatVec(a, x));
    const Vector y = RandomVector(rng, a.rows());
    CHECK(TransposeMatVec(a, y) == NaiveMatVec(a.Transpose(), y));
  }
}

TEST_CASE("cosine similarity") {
  CHECK(CosineSimilarity(Vector{0.3, -2.0}, Vector{0.3, -2.0}) == doctest::Approx(1.0));
  CHECK(CosineSimilarity(Vector{1.0, 0.0}, Vector{0.0, 1.0}) == 0.0);
  CHECK(CosineSimilarity(Vector{1.0, 1.0}, Vector{1.0, 0.0}) ==
        doctest::Approx(0.7071067811865476).epsilon(1e-6));
  CHECK_THROWS_AS(CosineSimilarity(Vector{0.0, 0.0}, Vector{1.0, 0.0}), DegenerateInput);
  CHECK_THROWS_AS(CosineSimilarity(Vector{1.0}, Vector{1.0, 0.0}), ContractViolation);

  std::mt19937_64 rng(32);
  for (int i = 0; i < 100; ++i) {
    const double c = CosineSimilarity(RandomVector(rng, 5), RandomVector(rng, 5));
    CHECK(c >= -1.0);
    CHECK(c <= 1.0);
  }
}

TEST_CASE("non-finite values are rejected") {
  CHECK_THROWS_AS(Vector({1.0, std::nan("")}), NumericFailure);
  CHECK_THROWS_AS(Matrix(1, 2, std::vector<double>{1.0, INFINITY}), NumericFailure);
  CHECK_THROWS_AS(Matrix(2, 2, std::vector<double>{1.0}), ContractViolation);
}
