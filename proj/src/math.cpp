// Copyright (C) 2026 The paln authors
// SPDX-License-Identifier: Apache-2.0

#include "paln/math.hpp"

#include <algorithm>
#include <cmath>

#include "paln/error.hpp"

namespace paln {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

void softmax_into(Vector& probs, const Vector& logits) {
  if (logits.empty()) raise(ErrorCode::EmptyInput, "empty logits");
  probs.resize(logits.size());
  const double m = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    probs[i] = std::exp(logits[i] - m);
    sum += probs[i];
  }
  const double inv = 1.0 / sum;
  for (double& p : probs) p *= inv;
}

Vector softmax(const Vector& logits) {
  Vector probs;
  softmax_into(probs, logits);
  return probs;
}

double cross_entropy(const Vector& probs, std::size_t target) {
  if (target >= probs.size())
    raise(ErrorCode::InvalidArgument,
          "cross_entropy target " + std::to_string(target) +
              " out of range for dim " + std::to_string(probs.size()));
  return -std::log(std::max(probs[target], kProbFloor));
}

Vector finite_diff_grad(const std::function<double(const Vector&)>& f,
                        const Vector& params, double eps) {
  if (eps <= 0.0) raise(ErrorCode::InvalidArgument, "eps must be positive");
  Vector grad(params.size());
  Vector p = params;
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double orig = p[i];
    p[i] = orig + eps;
    const double fp = f(p);
    p[i] = orig - eps;
    const double fm = f(p);
    p[i] = orig;
    if (!std::isfinite(fp) || !std::isfinite(fm))
      raise(ErrorCode::NonFinite,
            "finite_diff_grad: non-finite f at coordinate " +
                std::to_string(i));
    grad[i] = (fp - fm) / (2.0 * eps);
  }
  return grad;
}

}  // namespace paln
