// Copyright (C) 2026 The paln authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PALN_KERNELS_HPP
#define PALN_KERNELS_HPP

#include <cstddef>

namespace paln::kernels {

// Dense inner-loop kernels behind the math layer. Every backend must produce
// bit-identical results: reductions use four interleaved partial sums
// combined as (s0+s2)+(s1+s3) followed by a sequential tail, which is exactly
// the lane structure of a 256-bit accumulator. Elementwise kernels are
// trivially order-preserving. No FMA contraction in any backend.
enum class Backend { Scalar, Avx2 };

struct Ops {
  // sum_i a[i]*b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y[i] = dot(A.row(i), x), A row-major rows x cols
  void (*matvec)(double* y, const double* a, const double* x, std::size_t rows,
                 std::size_t cols);
  // y[i] += alpha * x[i]
  void (*axpy)(double* y, double alpha, const double* x, std::size_t n);
  // y[i] = a[i] * b[i]
  void (*hadamard)(double* y, const double* a, const double* b, std::size_t n);
  // y[i] += a[i] * b[i]
  void (*hadamard_add)(double* y, const double* a, const double* b,
                       std::size_t n);
};

// Active backend. Chosen on first use: PALN_SIMD=scalar|avx2|auto (default
// auto = best supported by the CPU). set_backend() overrides at runtime and
// throws paln::Error if the backend is not available on this build/CPU.
const Ops& active();
Backend active_backend();
bool supported(Backend b);
void set_backend(Backend b);
const char* backend_name(Backend b);

inline double dot(const double* a, const double* b, std::size_t n) {
  return active().dot(a, b, n);
}
inline void matvec(double* y, const double* a, const double* x,
                   std::size_t rows, std::size_t cols) {
  active().matvec(y, a, x, rows, cols);
}
inline void axpy(double* y, double alpha, const double* x, std::size_t n) {
  active().axpy(y, alpha, x, n);
}
inline void hadamard(double* y, const double* a, const double* b,
                     std::size_t n) {
  active().hadamard(y, a, b, n);
}
inline void hadamard_add(double* y, const double* a, const double* b,
                         std::size_t n) {
  active().hadamard_add(y, a, b, n);
}

namespace detail {
extern const Ops scalar_ops;
// nullptr when the build has no AVX2 translation unit.
const Ops* avx2_ops();
}  // namespace detail

}  // namespace paln::kernels

#endif  // PALN_KERNELS_HPP
