#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "setramsey/colouring.hpp"
#include "setramsey/verifier.hpp"

namespace setramsey {

/// Largest C(n, k) * r the brute-force detector will enumerate.
inline constexpr std::uint64_t brute_force_budget = 1'000'000'000ULL;

class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Enumerates every colour and every k-subset; first hit in (colour, lexicographic subset) order.
/// Test oracle only. Throws GuardError past brute_force_budget.
std::optional<CliqueWitness> brute_force_mono_clique(const SetColouring& colouring, std::uint32_t k);

struct OracleLimits {
  /// Search nodes allowed per level before giving up with GuardError.
  std::uint64_t max_nodes_per_level = 2'000'000'000ULL;
  /// Largest supported n_cap (bitset width).
  static constexpr std::uint32_t max_n = 64;
  /// Largest supported r (colour sets are single-word masks).
  static constexpr std::uint32_t max_r = 16;
};

/// One line of the proof log: the search at a single n.
struct LevelLog {
  std::uint32_t n = 0;
  std::uint64_t nodes = 0;
  bool colourable = false;  // a colouring of K_n without a monochromatic K_k exists
};

struct ExactResult {
  std::uint32_t r = 0;
  std::uint32_t s = 0;
  std::uint32_t k = 0;
  std::uint32_t value = 0;
  SetColouring witness_colouring;  // on value - 1 vertices, exactly s colours per edge
  bool exhaustive_upper_proof = false;
  std::vector<LevelLog> levels;

  std::string proof_log() const;
};

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, SetColouring best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const SetColouring& best_witness() const { return best_; }

 private:
  SetColouring best_;
};

/// Least n <= n_cap such that every assignment of s-subsets of [r] to the
/// edges of K_n has a monochromatic K_k.
///
/// Depth-first, edge by edge in the order (0,1), (0,2), (1,2), (0,3), ...,
/// pruning as soon as the newest edge closes a monochromatic K_k. The first
/// edge is fixed to colours {0, ..., s-1}; every s-subset is equivalent to
/// that one under a permutation of the colours, so nothing is lost. The
/// witness is the first valid colouring in that order.
ExactResult exact_ramsey(std::uint32_t r, std::uint32_t s, std::uint32_t k, std::uint32_t n_cap,
                         const OracleLimits& limits = {});

}  // namespace setramsey
