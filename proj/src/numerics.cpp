// src/numerics.cpp

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

#include "sensepolar/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sensepolar/error.hpp"

namespace sensepolar {

namespace {

void CheckFinite(std::span<const double> values, const char *what) {
  for (double x : values) {
    if (!std::isfinite(x)) {
      throw NumericFailure(std::string(what) + " contains a non-finite value");
    }
  }
}

std::string DimString(std::size_t d) { return std::to_string(d); }

// Cap on Jacobi sweeps; well-conditioned inputs converge in < 15.
constexpr int kMaxSweeps = 100;
// Columns p, q count as orthogonal once |a_p . a_q| <= tol * |a_p| |a_q|.
constexpr double kOrthoTol = 1e-15;

struct TallSvd {
  // Column-major: column j of u is u[j * rows .. (j+1) * rows).
  std::vector<double> u;
  std::vector<double> v;  // cols x cols, column-major
  std::vector<double> sigma;
};

double ColumnDot(const double *a, const double *b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void Rotate(double *a, double *b, std::size_t n, double c, double s) {
  for (std::size_t i = 0; i < n; ++i) {
    const double x = a[i], y = b[i];
    a[i] = c * x - s * y;
    b[i] = s * x + c * y;
  }
}

// Fills column `j` of the column-major rows x k matrix `u` with a unit vector
// orthogonal to the columns listed in `basis`.
void CompleteColumn(std::vector<double> &u, std::size_t rows,
                    const std::vector<std::size_t> &basis, std::size_t j) {
  double *target = &u[j * rows];
  double best_norm = -1.0;
  std::vector<double> best(rows), cand(rows);
  for (std::size_t e = 0; e < rows; ++e) {
    std::fill(cand.begin(), cand.end(), 0.0);
    cand[e] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t b : basis) {
        const double *col = &u[b * rows];
        const double proj = ColumnDot(col, cand.data(), rows);
        for (std::size_t i = 0; i < rows; ++i) cand[i] -= proj * col[i];
      }
    }
    const double norm = std::sqrt(ColumnDot(cand.data(), cand.data(), rows));
    if (norm > best_norm) {
      best_norm = norm;
      best = cand;
    }
    if (norm > 0.5) break;
  }
  for (std::size_t i = 0; i < rows; ++i) target[i] = best[i] / best_norm;
}

// Hestenes one-sided Jacobi on a matrix with rows >= cols.
TallSvd JacobiTall(const Matrix &m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<double> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[c * rows + r] = m(r, c);
  std::vector<double> v(cols * cols, 0.0);
  for (std::size_t c = 0; c < cols; ++c) v[c * cols + c] = 1.0;

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        double *ap = &a[p * rows], *aq = &a[q * rows];
        const double alpha = ColumnDot(ap, ap, rows);
        const double beta = ColumnDot(aq, aq, rows);
        const double gamma = ColumnDot(ap, aq, rows);
        if (gamma == 0.0 || std::abs(gamma) <= kOrthoTol * std::sqrt(alpha * beta))
          continue;
        converged = false;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        Rotate(ap, aq, rows, c, s);
        Rotate(&v[p * cols], &v[q * cols], cols, c, s);
      }
    }
  }
  if (!converged) {
    throw NumericFailure("SVD did not converge after " +
                         std::to_string(kMaxSweeps) + " sweeps for a " +
                         m.ShapeString() + " matrix");
  }

  std::vector<double> norms(cols);
  for (std::size_t c = 0; c < cols; ++c)
    norms[c] = std::sqrt(ColumnDot(&a[c * rows], &a[c * rows], rows));
  std::vector<std::size_t> order(cols);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return norms[i] > norms[j];
  });

  TallSvd out;
  out.u.assign(rows * cols, 0.0);
  out.v.assign(cols * cols, 0.0);
  out.sigma.resize(cols);
  const double sigma_max = norms[order[0]];
  // Below this the column is rounding noise and gets an explicit completion.
  const double zero_cut = sigma_max * 1e-18;
  std::vector<std::size_t> basis;
  std::vector<std::size_t> missing;
  for (std::size_t j = 0; j < cols; ++j) {
    const std::size_t src = order[j];
    std::copy_n(&v[src * cols], cols, &out.v[j * cols]);
    if (norms[src] > zero_cut && norms[src] > 0.0) {
      out.sigma[j] = norms[src];
      for (std::size_t i = 0; i < rows; ++i)
        out.u[j * rows + i] = a[src * rows + i] / norms[src];
      basis.push_back(j);
    } else {
      out.sigma[j] = 0.0;
      missing.push_back(j);
    }
  }
  for (std::size_t j : missing) {
    CompleteColumn(out.u, rows, basis, j);
    basis.push_back(j);
  }
  return out;
}

}  // namespace

Vector::Vector(std::size_t dim, double fill) : values_(dim, fill) {
  CheckFinite(values_, "vector");
}

Vector::Vector(std::vector<double> values) : values_(std::move(values)) {
  CheckFinite(values_, "vector");
}

Vector::Vector(std::initializer_list<double> values) : values_(values) {
  CheckFinite(values_, "vector");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), values_(rows * cols, fill) {
  CheckFinite(values_, "matrix");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows * cols) {
    throw ContractViolation("matrix of shape " + ShapeString() + " given " +
                            std::to_string(values_.size()) + " values");
  }
  CheckFinite(values_, "matrix");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  values_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_) throw ContractViolation("ragged matrix literal");
    values_.insert(values_.end(), r.begin(), r.end());
  }
  CheckFinite(values_, "matrix");
}

Matrix Matrix::Identity(std::size_t k) {
  Matrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::FromRows(std::span<const Vector> rows) {
  if (rows.empty()) return Matrix();
  const std::size_t cols = rows.front().dim();
  std::vector<double> values;
  values.reserve(rows.size() * cols);
  for (const Vector &r : rows) {
    if (r.dim() != cols) {
      throw ContractViolation("cannot stack rows of dimension " +
                              DimString(cols) + " and " + DimString(r.dim()));
    }
    values.insert(values.end(), r.values().begin(), r.values().end());
  }
  return Matrix(rows.size(), cols, std::move(values));
}

Vector Matrix::RowVector(std::size_t r) const {
  auto span = row(r);
  return Vector(std::vector<double>(span.begin(), span.end()));
}

Matrix Matrix::Transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::string Matrix::ShapeString() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

SvdResult Svd(const Matrix &m) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw PreconditionError("SVD of an empty " + m.ShapeString() + " matrix");
  }
  const bool tall = m.rows() >= m.cols();
  const Matrix work = tall ? m : m.Transpose();
  const TallSvd t = JacobiTall(work);
  const std::size_t r = work.rows(), k = work.cols();

  // work = U S V^T with U r x k, V k x k.
  Matrix big_u(r, k), v(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < r; ++i) big_u(i, j) = t.u[j * r + i];
    for (std::size_t i = 0; i < k; ++i) v(i, j) = t.v[j * k + i];
  }
  SvdResult out;
  out.singular_values = t.sigma;
  if (tall) {
    out.u = std::move(big_u);
    out.v_transpose = v.Transpose();
  } else {
    // m = work^T = V S U^T
    out.u = std::move(v);
    out.v_transpose = big_u.Transpose();
  }
  return out;
}

Matrix PseudoInverse(const Matrix &m, double rcond) {
  if (!(rcond > 0.0 && rcond < 1.0)) {
    throw PreconditionError("rcond must lie in (0, 1), got " +
                            std::to_string(rcond));
  }
  const SvdResult svd = Svd(m);
  Matrix pinv(m.cols(), m.rows());
  const double sigma_max = svd.singular_values.front();
  if (sigma_max == 0.0) return pinv;
  const double cut = rcond * sigma_max;
  for (std::size_t j = 0; j < svd.singular_values.size(); ++j) {
    const double s = svd.singular_values[j];
    if (s <= cut) break;
    const double inv = 1.0 / s;
    for (std::size_t i = 0; i < m.cols(); ++i) {
      const double vi = svd.v_transpose(j, i) * inv;
      if (vi == 0.0) continue;
      auto out_row = pinv.row(i);
      for (std::size_t r = 0; r < m.rows(); ++r) out_row[r] += vi * svd.u(r, j);
    }
  }
  return pinv;
}

std::size_t NumericalRank(const Matrix &m, double rcond) {
  const SvdResult svd = Svd(m);
  const double cut = rcond * svd.singular_values.front();
  std::size_t rank = 0;
  for (double s : svd.singular_values)
    if (s > cut) ++rank;
  return rank;
}

Vector MatVec(const Matrix &m, const Vector &v) {
  if (m.cols() != v.dim()) {
    throw ContractViolation("matvec of " + m.ShapeString() +
                            " matrix with vector of dimension " +
                            DimString(v.dim()));
  }
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    double s = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) s += row[c] * v[c];
    out[r] = s;
  }
  return out;
}

Vector TransposeMatVec(const Matrix &m, const Vector &v) {
  if (m.rows() != v.dim()) {
    throw ContractViolation("transposed matvec of " + m.ShapeString() +
                            " matrix with vector of dimension " +
                            DimString(v.dim()));
  }
  std::vector<double> out(m.cols(), 0.0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] += row[c] * v[r];
  }
  return Vector(std::move(out));
}

Matrix MatMul(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.rows()) {
    throw ContractViolation("cannot multiply " + a.ShapeString() + " by " +
                            b.ShapeString());
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out_row = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      const auto b_row = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) out_row[j] += aik * b_row[j];
    }
  }
  return out;
}

double Dot(const Vector &u, const Vector &v) {
  if (u.dim() != v.dim()) {
    throw ContractViolation("dot product of dimensions " + DimString(u.dim()) +
                            " and " + DimString(v.dim()));
  }
  double s = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
  return s;
}

double Norm(const Vector &v) { return std::sqrt(Dot(v, v)); }

double CosineSimilarity(const Vector &u, const Vector &v) {
  if (u.dim() != v.dim()) {
    throw ContractViolation("cosine similarity of dimensions " +
                            DimString(u.dim()) + " and " + DimString(v.dim()));
  }
  const double nu = Norm(u), nv = Norm(v);
  if (nu == 0.0 || nv == 0.0) {
    throw DegenerateInput("cosine similarity with a zero vector");
  }
  return std::clamp(Dot(u, v) / (nu * nv), -1.0, 1.0);
}

Vector Add(const Vector &u, const Vector &v) {
  if (u.dim() != v.dim()) {
    throw ContractViolation("cannot add vectors of dimension " +
                            DimString(u.dim()) + " and " + DimString(v.dim()));
  }
  Vector out(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) out[i] = u[i] + v[i];
  return out;
}

Vector Subtract(const Vector &u, const Vector &v) {
  if (u.dim() != v.dim()) {
    throw ContractViolation("cannot subtract vectors of dimension " +
                            DimString(u.dim()) + " and " + DimString(v.dim()));
  }
  Vector out(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) out[i] = u[i] - v[i];
  return out;
}

Vector Scale(const Vector &v, double alpha) {
  Vector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = alpha * v[i];
  return out;
}

double MaxAbsDiff(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ContractViolation("shape mismatch " + a.ShapeString() + " vs " +
                            b.ShapeString());
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i)
    m = std::max(m, std::abs(a.values()[i] - b.values()[i]));
  return m;
}

double MaxAbsDiff(const Vector &a, const Vector &b) {
  if (a.dim() != b.dim()) {
    throw ContractViolation("dimension mismatch " + DimString(a.dim()) +
                            " vs " + DimString(b.dim()));
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace sensepolar
