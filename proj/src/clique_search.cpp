#include "setramsey/clique_search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace setramsey {

BitGraph::BitGraph(std::uint32_t n)
    : n_(n), words_((n + 63) / 64), rows_(n, std::vector<std::uint64_t>(words_, 0)) {}

BitGraph::BitGraph(std::vector<std::vector<std::uint64_t>> rows)
    : n_(static_cast<std::uint32_t>(rows.size())), words_((rows.size() + 63) / 64), rows_(std::move(rows)) {
  for (Vertex v = 0; v < n_; ++v) {
    if (rows_[v].size() != words_) throw std::invalid_argument("BitGraph: row width mismatch");
    if (adjacent(v, v)) throw std::invalid_argument("BitGraph: self loop");
  }
}

void BitGraph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("BitGraph: self loop");
  rows_[u][v / 64] |= std::uint64_t{1} << (v % 64);
  rows_[v][u / 64] |= std::uint64_t{1} << (u % 64);
}

std::uint32_t BitGraph::degree(Vertex v) const {
  std::uint32_t d = 0;
  for (auto w : rows_[v]) d += static_cast<std::uint32_t>(std::popcount(w));
  return d;
}

std::uint64_t BitGraph::edge_count() const {
  std::uint64_t total = 0;
  for (Vertex v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

bool BitGraph::is_clique(const std::vector<Vertex>& vertices) const {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (vertices[a] == vertices[b] || !adjacent(vertices[a], vertices[b])) return false;
  return true;
}

namespace {

// Smallest-last order, reversed: high-core vertices come first.
std::vector<Vertex> degeneracy_order(const BitGraph& g) {
  const auto n = g.order();
  std::vector<std::uint32_t> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<bool> removed(n, false);
  std::vector<Vertex> removal;
  removal.reserve(n);
  for (std::uint32_t step = 0; step < n; ++step) {
    Vertex pick = n;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v] && (pick == n || degree[v] < degree[pick])) pick = v;
    removed[pick] = true;
    removal.push_back(pick);
    for (Vertex w = 0; w < n; ++w)
      if (!removed[w] && g.adjacent(pick, w)) --degree[w];
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

}  // namespace

CliqueSearcher::CliqueSearcher(const BitGraph& graph)
    : n_(graph.order()), words_(graph.words()), original_id_(degeneracy_order(graph)) {
  std::vector<std::uint32_t> position(n_);
  for (std::uint32_t i = 0; i < n_; ++i) position[original_id_[i]] = i;
  rows_.assign(n_, std::vector<std::uint64_t>(words_, 0));
  for (std::uint32_t i = 0; i < n_; ++i) {
    const auto& src = graph.row(original_id_[i]);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = src[w];
      while (bits) {
        const auto b = static_cast<std::uint32_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const auto j = position[w * 64 + b];
        rows_[i][j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
  }
}

std::vector<Vertex> CliqueSearcher::current_in_caller_ids() const {
  std::vector<Vertex> out;
  out.reserve(best_.size());
  for (auto i : best_) out.push_back(original_id_[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Vertex>> CliqueSearcher::find(std::uint32_t size) {
  nodes_ = 0;
  current_.clear();
  best_.clear();
  if (size == 0) return std::vector<Vertex>{};
  if (size > n_) return std::nullopt;
  target_ = size;
  stop_at_target_ = true;
  std::vector<std::uint64_t> all(words_, 0);
  for (std::uint32_t v = 0; v < n_; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
  if (!expand(all)) return std::nullopt;
  return current_in_caller_ids();
}

std::vector<Vertex> CliqueSearcher::maximum() {
  nodes_ = 0;
  current_.clear();
  best_.clear();
  if (n_ == 0) return {};
  target_ = 1;
  stop_at_target_ = false;
  std::vector<std::uint64_t> all(words_, 0);
  for (std::uint32_t v = 0; v < n_; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
  expand(all);
  return current_in_caller_ids();
}

// Returns true once a clique of size target_ is recorded and stop_at_target_ is set.
bool CliqueSearcher::expand(std::vector<std::uint64_t>& candidates) {
  ++nodes_;
  const auto depth = static_cast<std::uint32_t>(current_.size());
  const std::uint32_t min_colour = target_ > depth ? target_ - depth : 1;

  // Greedy sequential colouring of the candidate set.
  std::vector<std::uint32_t> order;
  std::vector<std::uint32_t> colour;
  std::vector<std::uint64_t> uncoloured = candidates;
  std::vector<std::uint64_t> pool(words_);
  std::uint32_t c = 1;
  auto any = [](const std::vector<std::uint64_t>& bits) {
    return std::any_of(bits.begin(), bits.end(), [](std::uint64_t w) { return w != 0; });
  };
  while (any(uncoloured)) {
    pool = uncoloured;
    for (std::size_t w = 0; w < words_; ++w) {
      while (pool[w]) {
        const auto v = static_cast<std::uint32_t>(w * 64 + std::countr_zero(pool[w]));
        pool[w] &= pool[w] - 1;
        uncoloured[w] &= ~(std::uint64_t{1} << (v % 64));
        for (std::size_t x = w; x < words_; ++x) pool[x] &= ~rows_[v][x];
        if (c >= min_colour) {
          order.push_back(v);
          colour.push_back(c);
        }
      }
    }
    ++c;
  }

  std::vector<std::uint64_t> next(words_);
  for (std::size_t idx = order.size(); idx-- > 0;) {
    const std::uint32_t bound = static_cast<std::uint32_t>(current_.size()) + colour[idx];
    if (bound < target_) return false;
    const auto v = order[idx];
    current_.push_back(v);
    bool nonempty = false;
    for (std::size_t w = 0; w < words_; ++w) {
      next[w] = candidates[w] & rows_[v][w];
      nonempty = nonempty || next[w];
    }
    if (current_.size() >= target_) {
      best_ = current_;
      if (stop_at_target_) return true;
      target_ = static_cast<std::uint32_t>(current_.size()) + 1;
    }
    if (nonempty) {
      auto child = next;
      if (expand(child)) return true;
    }
    current_.pop_back();
    candidates[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }
  return false;
}

}  // namespace setramsey
