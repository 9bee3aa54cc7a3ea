#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace setramsey {

template <typename Body>
void parallel_for(std::uint64_t count, unsigned threads, Body&& body) {
  threads = std::max(1u, threads);
  if (threads == 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  const std::uint64_t workers = std::min<std::uint64_t>(threads, count);
  const std::uint64_t block = (count + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * block;
    const std::uint64_t end = std::min(count, begin + block);
    pool.emplace_back([begin, end, &body] {
      for (std::uint64_t i = begin; i < end; ++i) body(i);
    });
  }
}

}  // namespace setramsey
