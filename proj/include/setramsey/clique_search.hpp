#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "setramsey/colouring.hpp"

namespace setramsey {

/// Undirected graph as bitset adjacency rows.
class BitGraph {
 public:
  BitGraph() = default;
  explicit BitGraph(std::uint32_t n);
  explicit BitGraph(std::vector<std::vector<std::uint64_t>> rows);

  std::uint32_t order() const { return n_; }
  std::size_t words() const { return words_; }
  const std::vector<std::uint64_t>& row(Vertex v) const { return rows_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return (rows_[u][v / 64] >> (v % 64)) & 1u; }
  void add_edge(Vertex u, Vertex v);
  std::uint32_t degree(Vertex v) const;
  std::uint64_t edge_count() const;

  /// True when every pair in `vertices` is adjacent.
  bool is_clique(const std::vector<Vertex>& vertices) const;

 private:
  std::uint32_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::vector<std::uint64_t>> rows_;
};

/// Exact branch-and-bound clique search.
///
/// Vertices are renumbered by a degeneracy (smallest-last) order, and each
/// node bounds its candidate set with a greedy sequential colouring in the
/// style of BBMC. Results are reported in the caller's vertex ids, sorted.
class CliqueSearcher {
 public:
  explicit CliqueSearcher(const BitGraph& graph);

  /// A clique on exactly `size` vertices, or nothing. Deterministic.
  std::optional<std::vector<Vertex>> find(std::uint32_t size);

  /// A maximum clique.
  std::vector<Vertex> maximum();

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool expand(std::vector<std::uint64_t>& candidates);
  std::vector<Vertex> current_in_caller_ids() const;

  std::uint32_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Vertex> original_id_;  // search index -> caller id
  std::vector<std::vector<std::uint64_t>> rows_;

  std::vector<std::uint32_t> current_;
  std::vector<std::uint32_t> best_;
  std::uint32_t target_ = 0;
  bool stop_at_target_ = true;
  std::uint64_t nodes_ = 0;
};

}  // namespace setramsey
