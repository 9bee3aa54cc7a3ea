#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "setramsey/clique_search.hpp"
#include "setramsey/colouring.hpp"
#include "setramsey/construction.hpp"

namespace setramsey {

/// G_i: the edges of K_n whose mask contains colour i.
struct ColourClassGraph {
  Colour colour_index = 0;
  BitGraph graph;

  static ColourClassGraph from(const SetColouring& colouring, Colour c);
};

struct CliqueWitness {
  Colour colour_index = 0;
  std::vector<Vertex> vertices;  // strictly increasing
  friend bool operator==(const CliqueWitness&, const CliqueWitness&) = default;
};

struct ViolatingEdge {
  Vertex u;
  Vertex v;
  std::uint32_t popcount;
  friend bool operator==(const ViolatingEdge&, const ViolatingEdge&) = default;
};

struct VerificationReport {
  bool min_colour_ok = false;
  std::vector<ViolatingEdge> violating_edges;
  bool clique_free = false;
  std::optional<CliqueWitness> witness;
  std::optional<std::vector<std::uint32_t>> per_colour_clique_numbers;
  std::chrono::nanoseconds elapsed{0};

  bool valid() const { return min_colour_ok && clique_free; }
};

struct VerifyOptions {
  unsigned threads = 1;
  /// Also compute omega(G_i) for every colour (no early exit).
  bool clique_numbers = false;
};

/// Edges with fewer than s colours, in lexicographic order.
std::vector<ViolatingEdge> check_min_colours(const SetColouring& colouring, std::uint32_t s);

/// A monochromatic K_k in the lowest colour that has one, or nothing.
/// Exact; colour classes are searched in increasing index.
std::optional<CliqueWitness> find_monochromatic_clique(const SetColouring& colouring, std::uint32_t k,
                                                       unsigned threads = 1);

/// Exact clique number of every colour class.
std::vector<std::uint32_t> colour_clique_numbers(const SetColouring& colouring, unsigned threads = 1);

/// True when all pairs of the witness carry its colour in the raw masks.
bool witness_holds(const SetColouring& colouring, const CliqueWitness& witness);

/// Lowest-indexed colour with the most edges.
Colour densest_colour(const SetColouring& colouring);

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Turan: more than (1 - 1/(k-1)) n^2 / 2 edges forces a K_k; finds one.
/// Throws PreconditionError at or below that edge count.
CliqueWitness turan_extract_clique(const ColourClassGraph& graph, std::uint32_t k);

std::uint64_t count_bad_edges_in_set(const std::vector<Vertex>& vertices, const EdgeSet& bad_edges);

VerificationReport verify(const SetColouring& colouring, std::uint32_t s, std::uint32_t k,
                          const VerifyOptions& options = {});

}  // namespace setramsey
