// Copyright (C) 2026 The paln authors
// SPDX-License-Identifier: Apache-2.0
//
// AVX2 variants. Compiled with -mavx2 -ffp-contract=off only; selected at
// runtime when the CPU reports AVX2. mul+add is kept separate (no FMA) so
// each lane reproduces the scalar reference bit for bit.

#include "paln/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace paln::kernels {
namespace {

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  const std::size_t n4 = n - (n % 4);
  for (; i < n4; i += 4) {
    const __m256d va = _mm256_loadu_pd(a + i);
    const __m256d vb = _mm256_loadu_pd(b + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(va, vb));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = (lanes[0] + lanes[2]) + (lanes[1] + lanes[3]);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void matvec_avx2(double* y, const double* a, const double* x, std::size_t rows,
                 std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = dot_avx2(a + r * cols, x, cols);
}

void axpy_avx2(double* y, double alpha, const double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  const std::size_t n4 = n - (n % 4);
  for (; i < n4; i += 4) {
    const __m256d vy = _mm256_loadu_pd(y + i);
    const __m256d vx = _mm256_loadu_pd(x + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(vy, _mm256_mul_pd(va, vx)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void hadamard_avx2(double* y, const double* a, const double* b,
                   std::size_t n) {
  std::size_t i = 0;
  const std::size_t n4 = n - (n % 4);
  for (; i < n4; i += 4) {
    const __m256d va = _mm256_loadu_pd(a + i);
    const __m256d vb = _mm256_loadu_pd(b + i);
    _mm256_storeu_pd(y + i, _mm256_mul_pd(va, vb));
  }
  for (; i < n; ++i) y[i] = a[i] * b[i];
}

void hadamard_add_avx2(double* y, const double* a, const double* b,
                       std::size_t n) {
  std::size_t i = 0;
  const std::size_t n4 = n - (n % 4);
  for (; i < n4; i += 4) {
    const __m256d vy = _mm256_loadu_pd(y + i);
    const __m256d va = _mm256_loadu_pd(a + i);
    const __m256d vb = _mm256_loadu_pd(b + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(vy, _mm256_mul_pd(va, vb)));
  }
  for (; i < n; ++i) y[i] += a[i] * b[i];
}

const Ops avx2_table = {dot_avx2, matvec_avx2, axpy_avx2, hadamard_avx2,
                        hadamard_add_avx2};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

}  // namespace

namespace detail {
const Ops* avx2_ops() { return cpu_has_avx2() ? &avx2_table : nullptr; }
}  // namespace detail

}  // namespace paln::kernels

#endif  // __AVX2__
