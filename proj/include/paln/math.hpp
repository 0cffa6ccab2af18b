// Copyright (C) 2026 The paln authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PALN_MATH_HPP
#define PALN_MATH_HPP

#include <functional>

#include "paln/matrix.hpp"

namespace paln {

// Floor applied to the picked probability inside cross_entropy so degenerate
// early-training outputs cannot produce an infinite loss.
inline constexpr double kProbFloor = 1e-12;

double sigmoid(double x);

// Numerically stable softmax (max subtraction). Throws on empty input.
Vector softmax(const Vector& logits);
void softmax_into(Vector& probs, const Vector& logits);

// -log(max(probs[target], kProbFloor)). Throws if target is out of range.
double cross_entropy(const Vector& probs, std::size_t target);

// Central finite differences, (f(p+eps e_i) - f(p-eps e_i)) / (2 eps).
// The gradient oracle every analytic gradient in this project is checked
// against. Throws if f returns a non-finite value, naming the coordinate.
Vector finite_diff_grad(const std::function<double(const Vector&)>& f,
                        const Vector& params, double eps);

}  // namespace paln

#endif  // PALN_MATH_HPP
