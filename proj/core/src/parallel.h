// Copyright 2026 The cgreduce Authors.
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

#ifndef CGR_SRC_PARALLEL_H_
#define CGR_SRC_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace cgr::internal {

inline int ResolveThreads(int requested, std::size_t tasks) {
  int threads = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(threads, 1);
  return static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(threads), std::max<std::size_t>(tasks, 1)));
}

// Runs task(k) for k = 0..count-1, handing out indices in increasing order
// to `threads` OS threads. The calling thread participates.
template <typename Task>
void ParallelFor(std::size_t count, int threads, Task&& task) {
  std::atomic<std::size_t> next{0};
  auto loop = [&] {
    for (std::size_t k = next.fetch_add(1); k < count; k = next.fetch_add(1)) task(k);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(loop);
  loop();
  for (auto& th : pool) th.join();
}

}  // namespace cgr::internal

#endif  // CGR_SRC_PARALLEL_H_
