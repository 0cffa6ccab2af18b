// Copyright (C) 2026 The paln authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PALN_PARALLEL_HPP
#define PALN_PARALLEL_HPP

#include <cstddef>

#include <functional>

namespace paln {

// Worker count: min(PALN_THREADS, hardware concurrency), at least 1.
std::size_t worker_count();

// Runs fn(i) for i in [0, n). Work items are independent; callers that
// aggregate must reduce over i in fixed order afterwards so results do not
// depend on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace paln

#endif  // PALN_PARALLEL_HPP
