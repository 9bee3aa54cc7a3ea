#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace setramsey {

using Vertex = std::uint32_t;
using Colour = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Number of unordered pairs in [n].
constexpr std::uint64_t pair_count(std::uint64_t n) { return n * (n - (n > 0)) / 2; }

/// An edge set-colouring of K_n with colours [0, r): one r-bit mask per edge.
///
/// Masks are stored contiguously, `words_per_mask()` 64-bit words each, for
/// edges in lexicographic (u, v) order with u < v.
class SetColouring {
 public:
  SetColouring() = default;
  SetColouring(std::uint32_t n, std::uint32_t r);

  std::uint32_t n() const { return n_; }
  std::uint32_t r() const { return r_; }
  std::uint64_t edge_count() const { return pair_count(n_); }
  std::uint32_t words_per_mask() const { return words_; }

  /// Lexicographic index of {u, v}; requires u != v (order irrelevant).
  std::uint64_t edge_index(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return static_cast<std::uint64_t>(u) * (2ull * n_ - u - 1) / 2 + (v - u - 1);
  }
  Edge edge_at(std::uint64_t index) const;

  std::span<std::uint64_t> mask(std::uint64_t e) {
    return {masks_.data() + e * words_, words_};
  }
  std::span<const std::uint64_t> mask(std::uint64_t e) const {
    return {masks_.data() + e * words_, words_};
  }
  std::span<const std::uint64_t> mask(Vertex u, Vertex v) const { return mask(edge_index(u, v)); }

  bool has(std::uint64_t e, Colour c) const {
    return (masks_[e * words_ + c / 64] >> (c % 64)) & 1u;
  }
  bool has(Vertex u, Vertex v, Colour c) const { return has(edge_index(u, v), c); }
  void set(std::uint64_t e, Colour c) { masks_[e * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
  void set(Vertex u, Vertex v, Colour c) { set(edge_index(u, v), c); }
  void clear(std::uint64_t e, Colour c) {
    masks_[e * words_ + c / 64] &= ~(std::uint64_t{1} << (c % 64));
  }
  void fill_all(std::uint64_t e);

  std::uint32_t popcount(std::uint64_t e) const;

  /// Every edge whose mask includes `c`, as adjacency rows of n bitsets.
  std::vector<std::vector<std::uint64_t>> colour_class_rows(Colour c) const;

  /// True when no mask has a bit at or above r.
  bool well_formed() const;

  const std::vector<std::uint64_t>& raw() const { return masks_; }

  friend bool operator==(const SetColouring&, const SetColouring&) = default;

 private:
  std::uint32_t n_ = 0;
  std::uint32_t r_ = 0;
  std::uint32_t words_ = 0;
  std::vector<std::uint64_t> masks_;
};

/// Runs body(index) for index in [0, count) on up to `threads` workers.
/// Each index is processed exactly once; work is split into contiguous blocks.
template <typename Body>
void parallel_for(std::uint64_t count, unsigned threads, Body&& body);

}  // namespace setramsey

#include "setramsey/detail/parallel.hpp"
