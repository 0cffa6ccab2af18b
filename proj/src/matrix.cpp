// Copyright (C) 2026 The paln authors
// SPDX-License-Identifier: Apache-2.0

#include "paln/matrix.hpp"

#include <cmath>

#include "paln/error.hpp"
#include "paln/kernels.hpp"

namespace paln {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
  if (rows == 0 || cols == 0)
    raise(ErrorCode::InvalidArgument, "matrix dimensions must be positive");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

bool all_finite(const Vector& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

bool all_finite(const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!std::isfinite(m.data()[i])) return false;
  return true;
}

void require_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    raise(ErrorCode::DimMismatch, std::string(what) + ": dimension " +
                                      std::to_string(got) + " != expected " +
                                      std::to_string(want));
}

void matvec_into(Vector& y, const Matrix& a, const Vector& x,
                 const char* what) {
  require_dim(x.size(), a.cols(), what);
  y.resize(a.rows());
  kernels::matvec(y.data(), a.data(), x.data(), a.rows(), a.cols());
}

Vector matvec(const Matrix& a, const Vector& x, const char* what) {
  Vector y;
  matvec_into(y, a, x, what);
  return y;
}

void matvec_transpose_add(Vector& y, const Matrix& a, const Vector& x,
                          const char* what) {
  require_dim(x.size(), a.rows(), what);
  require_dim(y.size(), a.cols(), what);
  for (std::size_t r = 0; r < a.rows(); ++r)
    kernels::axpy(y.data(), x[r], a.row(r), a.cols());
}

void add_outer(Matrix& a, const Vector& u, const Vector& v, const char* what) {
  require_dim(u.size(), a.rows(), what);
  require_dim(v.size(), a.cols(), what);
  for (std::size_t r = 0; r < a.rows(); ++r)
    kernels::axpy(a.row(r), u[r], v.data(), a.cols());
}

void add_in_place(Vector& y, const Vector& x) {
  require_dim(x.size(), y.size(), "vector add");
  kernels::axpy(y.data(), 1.0, x.data(), y.size());
}

void hadamard_add_in_place(Vector& y, const Vector& a, const Vector& b) {
  require_dim(a.size(), y.size(), "hadamard");
  require_dim(b.size(), y.size(), "hadamard");
  kernels::hadamard_add(y.data(), a.data(), b.data(), y.size());
}

Vector hadamard(const Vector& a, const Vector& b) {
  require_dim(b.size(), a.size(), "hadamard");
  Vector y(a.size());
  kernels::hadamard(y.data(), a.data(), b.data(), a.size());
  return y;
}

void scale_in_place(Vector& y, double alpha) {
  for (double& v : y) v *= alpha;
}

}  // namespace paln
