#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace univalent {

/// Splits [0, count) into at most `threads` contiguous chunks and calls
/// fn(chunk, begin, end) for each, one thread per chunk. Chunk boundaries
/// depend only on `count` and `threads`.
template <class Fn>
void parallel_chunks(std::size_t count, unsigned threads, Fn&& fn) {
  const std::size_t chunks = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  const std::size_t step = (count + chunks - 1) / chunks;
  if (chunks == 1) {
    fn(std::size_t{0}, std::size_t{0}, count);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = std::min(count, c * step);
    const std::size_t end = std::min(count, begin + step);
    workers.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
  }
}

}  // namespace univalent
