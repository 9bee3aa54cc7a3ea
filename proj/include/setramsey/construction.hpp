#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "setramsey/colouring.hpp"
#include "setramsey/params.hpp"
#include "setramsey/rng.hpp"

namespace setramsey {

/// phi_i : [n] -> [parts] for one colour.
struct PartitionMap {
  Colour colour_index = 0;
  std::uint64_t parts = 1;
  std::vector<std::uint32_t> assignments;

  bool same_part(Vertex u, Vertex v) const { return assignments[u] == assignments[v]; }
  friend bool operator==(const PartitionMap&, const PartitionMap&) = default;
};

/// H_i ~ G(m, p) for one colour, as symmetric bitset rows.
struct SeedGraph {
  Colour colour_index = 0;
  std::uint32_t m = 0;
  std::vector<std::vector<std::uint64_t>> rows;

  bool adjacent(std::uint32_t a, std::uint32_t b) const { return (rows[a][b / 64] >> (b % 64)) & 1u; }
  std::uint64_t edge_count() const;
  friend bool operator==(const SeedGraph&, const SeedGraph&) = default;
};

/// A set of edges of K_n.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::uint32_t n) : n_(n), members_(pair_count(n), false) {}

  std::uint32_t n() const { return n_; }
  bool contains(std::uint64_t e) const { return members_[e]; }
  bool contains(Vertex u, Vertex v) const;
  void insert(std::uint64_t e);
  std::uint64_t size() const { return size_; }
  std::vector<std::uint64_t> indices() const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::uint32_t n_ = 0;
  std::uint64_t size_ = 0;
  std::vector<bool> members_;
};

enum class ConstructionKind { main, simple };

struct ConstructionArtifacts {
  ConstructionKind kind = ConstructionKind::main;
  SetColouring colouring;    // chi
  SetColouring provisional;  // chi'
  EdgeSet bad_edges;         // B = { e : |chi'(e)| < s }
  SetColouring crossing;     // kappa
  std::vector<PartitionMap> partitions;
  std::vector<SeedGraph> seeds;  // empty for the simple construction
  std::uint64_t rng_seed = 0;
};

/// Largest m for which seed graphs are materialised.
inline constexpr std::uint64_t max_seed_graph_order = 4096;

/// Bernoulli threshold floor(p * 2^64); p = 1 is reported through `always`.
struct ProbabilityThreshold {
  std::uint64_t threshold = 0;
  bool always = false;
};
ProbabilityThreshold probability_threshold(const Rational& p);

PartitionMap draw_partition(std::uint64_t rng_seed, Colour colour, std::uint32_t n, std::uint64_t parts);
SeedGraph draw_seed_graph(std::uint64_t rng_seed, Colour colour, std::uint32_t m, const Rational& p);

/// Blows up the given seed graphs along the given partitions; chi is then
/// chi' off B and kappa on B. The random entry point below draws its inputs
/// and delegates here, so tests can supply hand-made partitions.
ConstructionArtifacts assemble_main_colouring(std::uint32_t s, std::vector<PartitionMap> partitions,
                                              std::vector<SeedGraph> seeds, unsigned threads = 1);

ConstructionArtifacts build_main_colouring(const ConstructionParams& params, std::uint64_t rng_seed,
                                           unsigned threads = 1);

/// Colour i holds every edge whose endpoints lie in different parts of phi_i,
/// i.e. each colour class is complete multipartite on `partitions[i].parts` parts.
ConstructionArtifacts assemble_simple_colouring(std::uint32_t s, std::vector<PartitionMap> partitions,
                                                unsigned threads = 1);

ConstructionArtifacts build_simple_colouring(std::uint32_t r, std::uint32_t s, std::uint32_t k, std::uint32_t n,
                                             std::uint64_t rng_seed, unsigned threads = 1);

class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, std::vector<Edge> offending)
      : std::runtime_error(what), offending_(std::move(offending)) {}
  const std::vector<Edge>& offending() const { return offending_; }

 private:
  std::vector<Edge> offending_;
};

/// Keeps the s lowest-indexed colours of every mask.
SetColouring truncate_to_s(const SetColouring& colouring, std::uint32_t s);

}  // namespace setramsey
