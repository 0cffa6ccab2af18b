// Copyright (C) 2026 The paln authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "paln/error.hpp"
#include "paln/math.hpp"
#include "paln/matrix.hpp"
#include "paln/rng.hpp"

using namespace paln;

TEST_CASE("sigmoid") {
  CHECK(sigmoid(0.0) == 0.5);
  CHECK(sigmoid(50.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sigmoid(std::log(3.0)) == doctest::Approx(0.75).epsilon(1e-14));
  // strictly monotone on a sample grid
  double prev = sigmoid(-30.0);
  for (double x = -29.5; x <= 30.0; x += 0.5) {
    const double s = sigmoid(x);
    CHECK(s > prev);
    prev = s;
  }
}

TEST_CASE("softmax basics") {
  CHECK(softmax({0.0, 0.0}) == Vector{0.5, 0.5});
  const Vector v = softmax({std::log(2.0), 0.0});
  CHECK(v[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(v[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  const Vector big = softmax({1000.0, 0.0});
  CHECK(big[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(big[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(all_finite(big));

  CHECK_THROWS_AS(softmax({}), Error);
}

TEST_CASE("softmax properties: simplex and shift invariance") {
  Rng rng(11);
  for (int rep = 0; rep < 500; ++rep) {
    const std::size_t n = 1 + rng.index(12);
    Vector v(n);
    for (double& x : v) x = rng.uniform(-1e3, 1e3);
    const Vector p = softmax(v);
    double sum = 0.0;
    for (double x : p) {
      CHECK(x >= 0.0);  // exact 0 only by exp underflow at extreme spreads
      sum += x;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

    const double c = rng.uniform(-50.0, 50.0);
    Vector shifted = v;
    for (double& x : shifted) x += c;
    const Vector q = softmax(shifted);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(q[i] == doctest::Approx(p[i]).epsilon(1e-9));
  }
}

TEST_CASE("cross_entropy") {
  CHECK(cross_entropy({1.0, 0.0}, 0) == 0.0);
  CHECK(cross_entropy({0.5, 0.5}, 1) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(cross_entropy({0.0, 1.0}, 0) ==
        doctest::Approx(-std::log(1e-12)).epsilon(1e-14));
  CHECK_THROWS_AS(cross_entropy({0.5, 0.5}, 2), Error);

  Rng rng(3);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 1 + rng.index(8);
    Vector logits(n);
    for (double& x : logits) x = rng.uniform(-5.0, 5.0);
    const Vector p = softmax(logits);
    const std::size_t target = rng.index(n);
    const double ce = cross_entropy(p, target);
    CHECK(ce >= 0.0);
    if (p[target] == 1.0) CHECK(ce == 0.0);
  }
}

TEST_CASE("finite_diff_grad") {
  auto square = [](const Vector& p) { return p[0] * p[0]; };
  Vector g = finite_diff_grad(square, {3.0}, 1e-5);
  CHECK(g[0] == doctest::Approx(6.0).epsilon(1e-8));

  auto constant = [](const Vector&) { return 4.2; };
  g = finite_diff_grad(constant, {1.0, -2.0, 0.5}, 1e-5);
  for (double x : g) CHECK(x == 0.0);

  auto sig = [](const Vector& p) { return sigmoid(p[0]); };
  g = finite_diff_grad(sig, {0.0}, 1e-5);
  CHECK(g[0] == doctest::Approx(0.25).epsilon(1e-8));

  auto bad = [](const Vector& p) {
    return p[0] > 0.0 ? std::numeric_limits<double>::quiet_NaN() : 0.0;
  };
  CHECK_THROWS_WITH_AS(finite_diff_grad(bad, {0.0}, 1e-5),
                       doctest::Contains("coordinate 0"), Error);
}

TEST_CASE("finite_diff_grad is exact on quadratics") {
  Rng rng(99);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 1 + rng.index(5);
    Vector a(n), b(n);
    for (double& x : a) x = rng.uniform(-2.0, 2.0);
    for (double& x : b) x = rng.uniform(-2.0, 2.0);
    const double c = rng.uniform(-2.0, 2.0);
    auto quad = [&](const Vector& p) {
      double s = c;
      for (std::size_t i = 0; i < n; ++i) s += a[i] * p[i] * p[i] + b[i] * p[i];
      return s;
    };
    Vector p0(n);
    for (double& x : p0) x = rng.uniform(-2.0, 2.0);
    const double eps = 1e-4;
    const Vector g = finite_diff_grad(quad, p0, eps);
    for (std::size_t i = 0; i < n; ++i) {
      const double analytic = 2.0 * a[i] * p0[i] + b[i];
      CHECK(std::abs(g[i] - analytic) <= eps * eps + 1e-9);
    }
  }
}

TEST_CASE("matrix helpers") {
  Matrix m(2, 3);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(0, 2) = 3;
  m(1, 0) = 4;
  m(1, 1) = 5;
  m(1, 2) = 6;
  const Vector y = matvec(m, {1.0, 1.0, 1.0});
  CHECK(y == Vector{6.0, 15.0});
  CHECK_THROWS_WITH_AS(matvec(m, {1.0, 1.0}, "W_test"),
                       doctest::Contains("W_test"), Error);

  Vector yt(3, 0.0);
  matvec_transpose_add(yt, m, {1.0, 1.0});
  CHECK(yt == Vector{5.0, 7.0, 9.0});

  Matrix o(2, 2);
  add_outer(o, {1.0, 2.0}, {3.0, 4.0});
  CHECK(o(0, 0) == 3.0);
  CHECK(o(0, 1) == 4.0);
  CHECK(o(1, 0) == 6.0);
  CHECK(o(1, 1) == 8.0);
}
