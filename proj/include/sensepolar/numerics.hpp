// include/sensepolar/numerics.hpp

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
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sensepolar {

/// Dense vector of doubles. Every value stays finite; constructors check it.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim, double fill = 0.0);
  explicit Vector(std::vector<double> values);
  Vector(std::initializer_list<double> values);

  std::size_t dim() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  double operator[](std::size_t i) const { return values_[i]; }
  double &operator[](std::size_t i) { return values_[i]; }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  bool operator==(const Vector &other) const = default;

 private:
  std::vector<double> values_;
};

/// Row-major dense matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> values);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix Identity(std::size_t k);
  /// Stacks equally sized vectors as rows.
  static Matrix FromRows(std::span<const Vector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double operator()(std::size_t r, std::size_t c) const {
    return values_[r * cols_ + c];
  }
  double &operator()(std::size_t r, std::size_t c) {
    return values_[r * cols_ + c];
  }

  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(values_).subspan(r * cols_, cols_);
  }
  std::span<double> row(std::size_t r) {
    return std::span<double>(values_).subspan(r * cols_, cols_);
  }
  Vector RowVector(std::size_t r) const;

  std::span<const double> values() const { return values_; }

  Matrix Transpose() const;
  /// "rows x cols" for error messages.
  std::string ShapeString() const;

  bool operator==(const Matrix &other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

/// Thin SVD m = u * diag(singular_values) * v_transpose with
/// k = min(rows, cols): u is rows x k, v_transpose is k x cols.
struct SvdResult {
  Matrix u;
  std::vector<double> singular_values;  // non-increasing, non-negative
  Matrix v_transpose;
};

/// Default relative cutoff for pseudo_inverse, as a fraction of sigma_max.
inline constexpr double kDefaultRcond = 1e-12;

/// One-sided Jacobi SVD. Deterministic: fixed sweep order, no threading.
/// Throws NumericFailure if the sweeps do not converge.
SvdResult Svd(const Matrix &m);

/// Moore-Penrose generalized inverse (cols x rows). Singular values below
/// rcond * sigma_max are treated as zero; an all-zero matrix maps to the
/// zero matrix of transposed shape.
Matrix PseudoInverse(const Matrix &m, double rcond = kDefaultRcond);

/// Number of singular values above rcond * sigma_max.
std::size_t NumericalRank(const Matrix &m, double rcond = kDefaultRcond);

Vector MatVec(const Matrix &m, const Vector &v);
/// m^T v without forming the transpose.
Vector TransposeMatVec(const Matrix &m, const Vector &v);
Matrix MatMul(const Matrix &a, const Matrix &b);

double Dot(const Vector &u, const Vector &v);
double Norm(const Vector &v);
double CosineSimilarity(const Vector &u, const Vector &v);

Vector Add(const Vector &u, const Vector &v);
Vector Subtract(const Vector &u, const Vector &v);
Vector Scale(const Vector &v, double alpha);

/// Largest absolute entry of a - b; shapes must agree.
double MaxAbsDiff(const Matrix &a, const Matrix &b);
double MaxAbsDiff(const Vector &a, const Vector &b);

}  // namespace sensepolar
