// Copyright 2026 The macroq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MACROQ_PARALLEL_HPP_
#define MACROQ_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace macroq {

/// Worker cap: MACROQ_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Forces worker_count() to `workers` for the whole process; 0 restores the
/// MACROQ_THREADS / hardware default.
void set_worker_override(unsigned workers);

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Callers
/// write results into per-index slots and reduce afterwards in index order,
/// so results do not depend on the thread count. The first exception thrown
/// by any body is rethrown after all workers join.
/// Calls made from inside a running body execute serially.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace macroq

#endif  // MACROQ_PARALLEL_HPP_
