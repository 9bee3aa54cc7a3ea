#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace setramsey {

/// Purpose tags for per-colour random streams.
enum class StreamTag : std::uint64_t {
  seed_graph = 1,
  partition = 2,
  sampling = 3,
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Counter-based stream keyed by (master seed, colour index, purpose tag).
///
/// Output j of a stream is splitmix64(key + (j + 1) * golden_gamma), so every
/// stream is a pure function of its key and the number of draws taken. Two
/// streams with different keys never share state, which makes the results of
/// a construction independent of the order (or thread) in which colours are
/// processed.
class StreamRng {
 public:
  using result_type = std::uint64_t;

  StreamRng(std::uint64_t master_seed, std::uint64_t colour, StreamTag tag) noexcept;
  explicit StreamRng(std::uint64_t key) noexcept : key_(key) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept { return next(); }
  std::uint64_t next() noexcept;

  /// Unbiased integer in [0, bound) via multiply-and-reject; bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;

  /// True with probability threshold / 2^64; `always` short-circuits p = 1.
  bool bernoulli(std::uint64_t threshold, bool always) noexcept {
    const std::uint64_t draw = next();
    return always || draw < threshold;
  }

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t draws() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Uniform k-subset of [0, n), returned sorted. Partial Fisher-Yates.
std::vector<std::uint32_t> sample_subset(StreamRng& rng, std::uint32_t n, std::uint32_t k);

}  // namespace setramsey
