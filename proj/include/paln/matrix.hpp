// Copyright (C) 2026 The paln authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PALN_MATRIX_HPP
#define PALN_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace paln {

using Vector = std::vector<double>;

// Dense row-major matrix of doubles. Layer sizes in this project stay small
// (<= 1,024), so there is no sparse or blocked storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

  static Matrix identity(std::size_t n);

  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  double* row(std::size_t r) { return data_.data() + r * cols_; }
  const double* row(std::size_t r) const { return data_.data() + r * cols_; }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

bool all_finite(const Vector& v);
bool all_finite(const Matrix& m);

// y = A x. Throws DimMismatch naming `what` on inconsistent shapes.
void matvec_into(Vector& y, const Matrix& a, const Vector& x,
                 const char* what = "matrix");
Vector matvec(const Matrix& a, const Vector& x, const char* what = "matrix");

// y += A^T x (the reverse-mode companion of matvec).
void matvec_transpose_add(Vector& y, const Matrix& a, const Vector& x,
                          const char* what = "matrix");

// A += u v^T.
void add_outer(Matrix& a, const Vector& u, const Vector& v,
               const char* what = "matrix");

// Elementwise helpers over Vector.
void add_in_place(Vector& y, const Vector& x);
void hadamard_add_in_place(Vector& y, const Vector& a, const Vector& b);
Vector hadamard(const Vector& a, const Vector& b);
void scale_in_place(Vector& y, double alpha);

void require_dim(std::size_t got, std::size_t want, const char* what);

}  // namespace paln

#endif  // PALN_MATRIX_HPP
