#include "setramsey/verifier.hpp"

#include <atomic>

namespace setramsey {

ColourClassGraph ColourClassGraph::from(const SetColouring& colouring, Colour c) {
  if (c >= colouring.r()) throw std::out_of_range("colour index out of range");
  return {c, BitGraph(colouring.colour_class_rows(c))};
}

std::vector<ViolatingEdge> check_min_colours(const SetColouring& colouring, std::uint32_t s) {
  std::vector<ViolatingEdge> out;
  if (s == 0) return out;
  std::uint64_t e = 0;
  for (Vertex u = 0; u < colouring.n(); ++u)
    for (Vertex v = u + 1; v < colouring.n(); ++v, ++e)
      if (const auto c = colouring.popcount(e); c < s) out.push_back({u, v, c});
  return out;
}

std::optional<CliqueWitness> find_monochromatic_clique(const SetColouring& colouring, std::uint32_t k,
                                                       unsigned threads) {
  const auto r = colouring.r();
  std::atomic<std::uint32_t> lowest_found{r};
  std::vector<std::optional<std::vector<Vertex>>> found(r);
  parallel_for(r, threads, [&](std::uint64_t i) {
    const auto c = static_cast<Colour>(i);
    if (c > lowest_found.load()) return;
    CliqueSearcher searcher(ColourClassGraph::from(colouring, c).graph);
    found[c] = searcher.find(k);
    if (found[c]) {
      auto current = lowest_found.load();
      while (c < current && !lowest_found.compare_exchange_weak(current, c)) {
      }
    }
  });
  const auto c = lowest_found.load();
  if (c == r) return std::nullopt;
  return CliqueWitness{c, *found[c]};
}

std::vector<std::uint32_t> colour_clique_numbers(const SetColouring& colouring, unsigned threads) {
  std::vector<std::uint32_t> out(colouring.r());
  parallel_for(colouring.r(), threads, [&](std::uint64_t i) {
    CliqueSearcher searcher(ColourClassGraph::from(colouring, static_cast<Colour>(i)).graph);
    out[i] = static_cast<std::uint32_t>(searcher.maximum().size());
  });
  return out;
}

bool witness_holds(const SetColouring& colouring, const CliqueWitness& witness) {
  if (witness.colour_index >= colouring.r()) return false;
  const auto& vs = witness.vertices;
  for (std::size_t a = 0; a < vs.size(); ++a) {
    if (vs[a] >= colouring.n()) return false;
    if (a > 0 && vs[a - 1] >= vs[a]) return false;
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (vs[b] >= colouring.n() || !colouring.has(vs[a], vs[b], witness.colour_index)) return false;
  }
  return true;
}

Colour densest_colour(const SetColouring& colouring) {
  std::vector<std::uint64_t> counts(colouring.r(), 0);
  for (std::uint64_t e = 0; e < colouring.edge_count(); ++e)
    for (Colour c = 0; c < colouring.r(); ++c)
      if (colouring.has(e, c)) ++counts[c];
  Colour best = 0;
  for (Colour c = 1; c < colouring.r(); ++c)
    if (counts[c] > counts[best]) best = c;
  return best;
}

CliqueWitness turan_extract_clique(const ColourClassGraph& graph, std::uint32_t k) {
  if (k < 2) throw PreconditionError("turan_extract_clique: k must be at least 2");
  const std::uint64_t n = graph.graph.order();
  const std::uint64_t edges = graph.graph.edge_count();
  // edges > (1 - 1/(k-1)) n^2 / 2  <=>  2 (k-1) edges > (k-2) n^2
  const auto lhs = static_cast<unsigned __int128>(2) * (k - 1) * edges;
  const auto rhs = static_cast<unsigned __int128>(k - 2) * n * n;
  if (lhs <= rhs)
    throw PreconditionError("turan_extract_clique: " + std::to_string(edges) +
                            " edges is at or below the Turan threshold for K_" + std::to_string(k));
  CliqueSearcher searcher(graph.graph);
  auto clique = searcher.find(k);
  if (!clique) throw std::logic_error("turan_extract_clique: no K_k above the Turan threshold");
  return {graph.colour_index, std::move(*clique)};
}

std::uint64_t count_bad_edges_in_set(const std::vector<Vertex>& vertices, const EdgeSet& bad_edges) {
  std::uint64_t total = 0;
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (vertices[a] != vertices[b] && bad_edges.contains(vertices[a], vertices[b])) ++total;
  return total;
}

VerificationReport verify(const SetColouring& colouring, std::uint32_t s, std::uint32_t k,
                          const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.violating_edges = check_min_colours(colouring, s);
  report.min_colour_ok = report.violating_edges.empty();
  report.witness = find_monochromatic_clique(colouring, k, options.threads);
  report.clique_free = !report.witness.has_value();
  if (options.clique_numbers) report.per_colour_clique_numbers = colour_clique_numbers(colouring, options.threads);
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace setramsey
