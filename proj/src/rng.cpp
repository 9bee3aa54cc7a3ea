#include "setramsey/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace setramsey {

namespace {
constexpr std::uint64_t golden_gamma = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += golden_gamma;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

StreamRng::StreamRng(std::uint64_t master_seed, std::uint64_t colour, StreamTag tag) noexcept
    : key_(splitmix64(splitmix64(splitmix64(master_seed) ^ colour) ^
                      static_cast<std::uint64_t>(tag))) {}

std::uint64_t StreamRng::next() noexcept {
  ++counter_;
  return splitmix64(key_ + counter_ * golden_gamma);
}

std::uint64_t StreamRng::below(std::uint64_t bound) noexcept {
  // Lemire's nearly-divisionless method; exact integer arithmetic only.
  unsigned __int128 product = static_cast<unsigned __int128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t floor = (0 - bound) % bound;
    while (low < floor) {
      product = static_cast<unsigned __int128>(next()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

std::vector<std::uint32_t> sample_subset(StreamRng& rng, std::uint32_t n, std::uint32_t k) {
  if (k > n) throw std::invalid_argument("sample_subset: k exceeds n");
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0u);
  for (std::uint32_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::uint32_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace setramsey
