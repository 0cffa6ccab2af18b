// Copyright (C) 2026 The paln authors
// SPDX-License-Identifier: Apache-2.0

#include "paln/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <string>

#include "paln/error.hpp"

namespace paln::kernels {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  const std::size_t n4 = n - (n % 4);
  for (; i < n4; i += 4) {
    s0 += a[i] * b[i];
    s1 += a[i + 1] * b[i + 1];
    s2 += a[i + 2] * b[i + 2];
    s3 += a[i + 3] * b[i + 3];
  }
  double s = (s0 + s2) + (s1 + s3);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void matvec_scalar(double* y, const double* a, const double* x,
                   std::size_t rows, std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = dot_scalar(a + r * cols, x, cols);
}

void axpy_scalar(double* y, double alpha, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void hadamard_scalar(double* y, const double* a, const double* b,
                     std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = a[i] * b[i];
}

void hadamard_add_scalar(double* y, const double* a, const double* b,
                         std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a[i] * b[i];
}

struct DispatchState {
  const Ops* ops;
  Backend backend;
};

DispatchState choose_initial() {
  const char* env = std::getenv("PALN_SIMD");
  std::string mode = env != nullptr ? env : "auto";
  if (mode == "scalar") return {&detail::scalar_ops, Backend::Scalar};
  const Ops* avx2 = detail::avx2_ops();
  if (mode == "avx2") {
    if (avx2 == nullptr)
      raise(ErrorCode::InvalidArgument,
            "PALN_SIMD=avx2 but AVX2 is not available on this build/CPU");
    return {avx2, Backend::Avx2};
  }
  if (mode != "auto")
    raise(ErrorCode::InvalidArgument,
          "PALN_SIMD must be one of scalar|avx2|auto, got '" + mode + "'");
  if (avx2 != nullptr) return {avx2, Backend::Avx2};
  return {&detail::scalar_ops, Backend::Scalar};
}

std::atomic<const Ops*>& ops_slot() {
  static std::atomic<const Ops*> slot{nullptr};
  return slot;
}

std::atomic<Backend>& backend_slot() {
  static std::atomic<Backend> slot{Backend::Scalar};
  return slot;
}

void ensure_init() {
  if (ops_slot().load(std::memory_order_acquire) != nullptr) return;
  DispatchState state = choose_initial();
  backend_slot().store(state.backend, std::memory_order_relaxed);
  ops_slot().store(state.ops, std::memory_order_release);
}

}  // namespace

namespace detail {
const Ops scalar_ops = {dot_scalar, matvec_scalar, axpy_scalar,
                        hadamard_scalar, hadamard_add_scalar};
}  // namespace detail

const Ops& active() {
  ensure_init();
  return *ops_slot().load(std::memory_order_acquire);
}

Backend active_backend() {
  ensure_init();
  return backend_slot().load(std::memory_order_relaxed);
}

bool supported(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
      return detail::avx2_ops() != nullptr;
  }
  return false;
}

void set_backend(Backend b) {
  switch (b) {
    case Backend::Scalar:
      backend_slot().store(Backend::Scalar, std::memory_order_relaxed);
      ops_slot().store(&detail::scalar_ops, std::memory_order_release);
      return;
    case Backend::Avx2: {
      const Ops* avx2 = detail::avx2_ops();
      if (avx2 == nullptr)
        raise(ErrorCode::InvalidArgument,
              "AVX2 backend not available on this build/CPU");
      backend_slot().store(Backend::Avx2, std::memory_order_relaxed);
      ops_slot().store(avx2, std::memory_order_release);
      return;
    }
  }
  raise(ErrorCode::InvalidArgument, "unknown kernel backend");
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

#if !PALN_HAVE_AVX2_TU
namespace detail {
const Ops* avx2_ops() { return nullptr; }
}  // namespace detail
#endif

}  // namespace paln::kernels
