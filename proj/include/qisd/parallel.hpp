// Copyright 2026 The qisd authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace qisd {

/// Worker count: `requested` if positive, else hardware concurrency.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Index-parallel loop. `body(i)` must only write to index-owned state so
/// the result is identical for every thread count.
template <typename Body>
void parallel_for(std::int64_t n, int threads, Body&& body) {
  const int t = std::min<std::int64_t>(resolve_threads(threads), n > 0 ? n : 1);
  if (t <= 1) {
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (int w = 0; w < t; ++w) {
    pool.emplace_back([&, w] {
      for (std::int64_t i = w; i < n; i += t) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace qisd
