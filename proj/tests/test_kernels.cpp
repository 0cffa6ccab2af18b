// Copyright (C) 2026 The paln authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "paln/kernels.hpp"
#include "paln/rng.hpp"

using namespace paln;
namespace k = paln::kernels;

namespace {

std::vector<double> random_vec(Rng& rng, std::size_t n, double scale = 2.0) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform(-scale, scale);
  return v;
}

// Plain left-to-right reference, independent of the lane-blocked kernels.
double naive_dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST_CASE("scalar kernels match a naive reference within accumulation noise") {
  Rng rng(42);
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 16u, 33u, 115u, 1024u}) {
    auto a = random_vec(rng, n);
    auto b = random_vec(rng, n);
    const double got = k::detail::scalar_ops.dot(a.data(), b.data(), n);
    const double want = naive_dot(a.data(), b.data(), n);
    CHECK(got == doctest::Approx(want).epsilon(1e-13));
  }
}

TEST_CASE("avx2 kernels are bit-identical to scalar kernels") {
  if (!k::supported(k::Backend::Avx2)) {
    MESSAGE("AVX2 not available; skipping equivalence checks");
    return;
  }
  const k::Ops& scalar = k::detail::scalar_ops;
  const k::Ops* avx2 = k::detail::avx2_ops();
  REQUIRE(avx2 != nullptr);

  Rng rng(7);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 1 + rng.index(257);  // covers ragged tails
    auto a = random_vec(rng, n, 3.0);
    auto b = random_vec(rng, n, 3.0);

    CHECK(scalar.dot(a.data(), b.data(), n) == avx2->dot(a.data(), b.data(), n));

    auto y1 = random_vec(rng, n), y2 = y1;
    const double alpha = rng.uniform(-2.0, 2.0);
    scalar.axpy(y1.data(), alpha, a.data(), n);
    avx2->axpy(y2.data(), alpha, a.data(), n);
    CHECK(y1 == y2);

    std::vector<double> h1(n), h2(n);
    scalar.hadamard(h1.data(), a.data(), b.data(), n);
    avx2->hadamard(h2.data(), a.data(), b.data(), n);
    CHECK(h1 == h2);

    auto g1 = random_vec(rng, n), g2 = g1;
    scalar.hadamard_add(g1.data(), a.data(), b.data(), n);
    avx2->hadamard_add(g2.data(), a.data(), b.data(), n);
    CHECK(g1 == g2);
  }

  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t rows = 1 + rng.index(40);
    const std::size_t cols = 1 + rng.index(130);
    auto m = random_vec(rng, rows * cols);
    auto x = random_vec(rng, cols);
    std::vector<double> y1(rows), y2(rows);
    scalar.matvec(y1.data(), m.data(), x.data(), rows, cols);
    avx2->matvec(y2.data(), m.data(), x.data(), rows, cols);
    CHECK(y1 == y2);
  }
}

TEST_CASE("backend selection") {
  CHECK(k::supported(k::Backend::Scalar));
  k::set_backend(k::Backend::Scalar);
  CHECK(k::active_backend() == k::Backend::Scalar);
  double a[4] = {1, 2, 3, 4}, b[4] = {5, 6, 7, 8};
  CHECK(k::dot(a, b, 4) == 70.0);
  if (k::supported(k::Backend::Avx2)) {
    k::set_backend(k::Backend::Avx2);
    CHECK(k::active_backend() == k::Backend::Avx2);
    CHECK(k::dot(a, b, 4) == 70.0);
  }
}
