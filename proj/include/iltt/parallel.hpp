// Copyright 2026 the ILTT toolkit authors
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

#ifndef ILTT_PARALLEL_HPP_
#define ILTT_PARALLEL_HPP_

#include <cstdint>
#include <thread>
#include <vector>

namespace iltt {

inline unsigned default_thread_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Static range split over a worker pool. chunk_fn(chunk_index, begin, end)
// runs on disjoint index ranges; chunk results must be merged by the caller
// in chunk order so outputs stay independent of the thread count.
template <class ChunkFn>
void parallel_chunks(std::size_t count, unsigned threads, ChunkFn&& chunk_fn) {
  if (threads <= 1 || count <= 1) {
    if (count > 0) chunk_fn(0, std::size_t{0}, count);
    return;
  }
  const std::size_t n_chunks = std::min<std::size_t>(threads, count);
  std::vector<std::jthread> pool;
  pool.reserve(n_chunks);
  for (std::size_t c = 0; c < n_chunks; ++c) {
    const std::size_t begin = count * c / n_chunks;
    const std::size_t end = count * (c + 1) / n_chunks;
    pool.emplace_back([&chunk_fn, c, begin, end] { chunk_fn(c, begin, end); });
  }
}

}  // namespace iltt

#endif  // ILTT_PARALLEL_HPP_
