#include "setramsey/construction.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace setramsey {

std::uint64_t SeedGraph::edge_count() const {
  std::uint64_t total = 0;
  for (const auto& row : rows)
    for (auto w : row) total += static_cast<std::uint64_t>(std::popcount(w));
  return total / 2;
}

bool EdgeSet::contains(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return members_[static_cast<std::uint64_t>(u) * (2ull * n_ - u - 1) / 2 + (v - u - 1)];
}

void EdgeSet::insert(std::uint64_t e) {
  if (!members_[e]) {
    members_[e] = true;
    ++size_;
  }
}

std::vector<std::uint64_t> EdgeSet::indices() const {
  std::vector<std::uint64_t> out;
  out.reserve(size_);
  for (std::uint64_t e = 0; e < members_.size(); ++e)
    if (members_[e]) out.push_back(e);
  return out;
}

ProbabilityThreshold probability_threshold(const Rational& p) {
  if (p < 0 || p > 1) throw std::domain_error("probability outside [0, 1]");
  if (p == Rational(1)) return {0, true};
  const auto num = static_cast<unsigned __int128>(p.numerator());
  const auto den = static_cast<unsigned __int128>(p.denominator());
  return {static_cast<std::uint64_t>((num << 64) / den), false};
}

PartitionMap draw_partition(std::uint64_t rng_seed, Colour colour, std::uint32_t n, std::uint64_t parts) {
  if (parts < 1) throw std::domain_error("draw_partition: need at least one part");
  if (parts > 0xffffffffULL) throw std::domain_error("draw_partition: more than 2^32 - 1 parts");
  StreamRng rng(rng_seed, colour, StreamTag::partition);
  PartitionMap map{colour, parts, std::vector<std::uint32_t>(n)};
  for (auto& a : map.assignments) a = static_cast<std::uint32_t>(rng.below(parts));
  return map;
}

SeedGraph draw_seed_graph(std::uint64_t rng_seed, Colour colour, std::uint32_t m, const Rational& p) {
  if (m > max_seed_graph_order)
    throw std::domain_error("draw_seed_graph: m exceeds " + std::to_string(max_seed_graph_order));
  const auto cut = probability_threshold(p);
  StreamRng rng(rng_seed, colour, StreamTag::seed_graph);
  const std::size_t words = (m + 63) / 64;
  SeedGraph g{colour, m, std::vector<std::vector<std::uint64_t>>(m, std::vector<std::uint64_t>(words, 0))};
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = a + 1; b < m; ++b) {
      if (rng.bernoulli(cut.threshold, cut.always)) {
        g.rows[a][b / 64] |= std::uint64_t{1} << (b % 64);
        g.rows[b][a / 64] |= std::uint64_t{1} << (a % 64);
      }
    }
  }
  return g;
}

namespace {

void check_partitions(const std::vector<PartitionMap>& partitions) {
  if (partitions.empty()) throw std::invalid_argument("construction needs at least one colour");
  const auto n = partitions.front().assignments.size();
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    if (partitions[i].assignments.size() != n)
      throw std::invalid_argument("partition maps disagree on n");
    for (auto a : partitions[i].assignments)
      if (a >= partitions[i].parts) throw std::invalid_argument("partition assignment out of range");
  }
  if (n < 2) throw std::invalid_argument("construction needs n >= 2");
}

// parts[u * r + i] = phi_i(u); vertex-major so one edge touches two contiguous runs.
std::vector<std::uint32_t> vertex_major(const std::vector<PartitionMap>& partitions) {
  const auto r = partitions.size();
  const auto n = partitions.front().assignments.size();
  std::vector<std::uint32_t> parts(n * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t u = 0; u < n; ++u) parts[u * r + i] = partitions[i].assignments[u];
  return parts;
}

}  // namespace

ConstructionArtifacts assemble_main_colouring(std::uint32_t s, std::vector<PartitionMap> partitions,
                                              std::vector<SeedGraph> seeds, unsigned threads) {
  check_partitions(partitions);
  if (seeds.size() != partitions.size()) throw std::invalid_argument("one seed graph per colour required");
  for (std::size_t i = 0; i < seeds.size(); ++i)
    if (seeds[i].m != partitions[i].parts) throw std::invalid_argument("seed graph order differs from m");

  const auto r = static_cast<std::uint32_t>(partitions.size());
  const auto n = static_cast<std::uint32_t>(partitions.front().assignments.size());
  if (s < 1 || s >= r) throw std::domain_error("main construction requires 1 <= s < r");

  ConstructionArtifacts out;
  out.kind = ConstructionKind::main;
  out.provisional = SetColouring(n, r);
  out.crossing = SetColouring(n, r);

  const auto parts = vertex_major(partitions);
  parallel_for(n, threads, [&](std::uint64_t row) {
    const auto u = static_cast<Vertex>(row);
    const std::uint32_t* pu = parts.data() + static_cast<std::size_t>(u) * r;
    for (Vertex v = u + 1; v < n; ++v) {
      const std::uint32_t* pv = parts.data() + static_cast<std::size_t>(v) * r;
      const auto e = out.provisional.edge_index(u, v);
      auto crossing = out.crossing.mask(e);
      auto provisional = out.provisional.mask(e);
      for (Colour i = 0; i < r; ++i) {
        if (pu[i] == pv[i]) continue;
        const std::uint64_t bit = std::uint64_t{1} << (i % 64);
        crossing[i / 64] |= bit;
        if (seeds[i].adjacent(pu[i], pv[i])) provisional[i / 64] |= bit;
      }
    }
  });

  out.colouring = out.provisional;
  out.bad_edges = EdgeSet(n);
  for (std::uint64_t e = 0; e < out.provisional.edge_count(); ++e) {
    if (out.provisional.popcount(e) < s) {
      out.bad_edges.insert(e);
      auto dst = out.colouring.mask(e);
      auto src = out.crossing.mask(e);
      std::copy(src.begin(), src.end(), dst.begin());
    }
  }
  out.partitions = std::move(partitions);
  out.seeds = std::move(seeds);
  return out;
}

ConstructionArtifacts build_main_colouring(const ConstructionParams& params, std::uint64_t rng_seed,
                                           unsigned threads) {
  if (params.m < 1 || params.n < 2) throw std::domain_error("build_main_colouring: need m >= 1 and n >= 2");
  if (params.n > 0xffffffffULL) throw std::domain_error("build_main_colouring: n too large to materialise");
  if (params.m > max_seed_graph_order)
    throw std::domain_error("build_main_colouring: m exceeds " + std::to_string(max_seed_graph_order) +
                            "; override m");
  const auto n = static_cast<std::uint32_t>(params.n);
  const auto m = static_cast<std::uint32_t>(params.m);

  std::vector<PartitionMap> partitions(params.r);
  std::vector<SeedGraph> seeds(params.r);
  parallel_for(params.r, threads, [&](std::uint64_t i) {
    partitions[i] = draw_partition(rng_seed, static_cast<Colour>(i), n, m);
    seeds[i] = draw_seed_graph(rng_seed, static_cast<Colour>(i), m, params.p);
  });
  auto out = assemble_main_colouring(params.s, std::move(partitions), std::move(seeds), threads);
  out.rng_seed = rng_seed;
  return out;
}

ConstructionArtifacts assemble_simple_colouring(std::uint32_t s, std::vector<PartitionMap> partitions,
                                                unsigned threads) {
  check_partitions(partitions);
  const auto r = static_cast<std::uint32_t>(partitions.size());
  const auto n = static_cast<std::uint32_t>(partitions.front().assignments.size());
  if (s < 1 || s > r) throw std::domain_error("simple construction requires 1 <= s <= r");

  ConstructionArtifacts out;
  out.kind = ConstructionKind::simple;
  out.colouring = SetColouring(n, r);
  const auto parts = vertex_major(partitions);
  const auto words = out.colouring.words_per_mask();
  parallel_for(n, threads, [&](std::uint64_t row) {
    const auto u = static_cast<Vertex>(row);
    const std::uint32_t* pu = parts.data() + static_cast<std::size_t>(u) * r;
    for (Vertex v = u + 1; v < n; ++v) {
      const std::uint32_t* pv = parts.data() + static_cast<std::size_t>(v) * r;
      auto mask = out.colouring.mask(out.colouring.edge_index(u, v));
      for (std::uint32_t w = 0; w < words; ++w) {
        std::uint64_t bits = 0;
        const std::uint32_t end = std::min<std::uint32_t>(r, (w + 1) * 64);
        for (std::uint32_t i = w * 64; i < end; ++i) bits |= std::uint64_t{pu[i] != pv[i]} << (i % 64);
        mask[w] = bits;
      }
    }
  });
  out.provisional = out.colouring;
  out.crossing = out.colouring;
  out.bad_edges = EdgeSet(n);
  for (std::uint64_t e = 0; e < out.colouring.edge_count(); ++e)
    if (out.colouring.popcount(e) < s) out.bad_edges.insert(e);
  out.partitions = std::move(partitions);
  return out;
}

ConstructionArtifacts build_simple_colouring(std::uint32_t r, std::uint32_t s, std::uint32_t k, std::uint32_t n,
                                             std::uint64_t rng_seed, unsigned threads) {
  if (k < 2) throw std::domain_error("build_simple_colouring: k must be at least 2");
  if (n < 2) throw std::domain_error("build_simple_colouring: n must be at least 2");
  if (r < 1 || s < 1 || s > r) throw std::domain_error("build_simple_colouring: need 1 <= s <= r");
  std::vector<PartitionMap> partitions(r);
  parallel_for(r, threads, [&](std::uint64_t i) {
    partitions[i] = draw_partition(rng_seed, static_cast<Colour>(i), n, k - 1);
  });
  auto out = assemble_simple_colouring(s, std::move(partitions), threads);
  out.rng_seed = rng_seed;
  return out;
}

SetColouring truncate_to_s(const SetColouring& colouring, std::uint32_t s) {
  std::vector<Edge> offending;
  for (std::uint64_t e = 0; e < colouring.edge_count(); ++e)
    if (colouring.popcount(e) < s) offending.push_back(colouring.edge_at(e));
  if (!offending.empty()) {
    std::string msg = "truncate_to_s: " + std::to_string(offending.size()) + " edge(s) have fewer than " +
                      std::to_string(s) + " colours:";
    for (std::size_t i = 0; i < offending.size() && i < 8; ++i)
      msg += " (" + std::to_string(offending[i].u) + "," + std::to_string(offending[i].v) + ")";
    if (offending.size() > 8) msg += " ...";
    throw TruncationError(msg, std::move(offending));
  }

  SetColouring out(colouring.n(), colouring.r());
  for (std::uint64_t e = 0; e < colouring.edge_count(); ++e) {
    auto src = colouring.mask(e);
    auto dst = out.mask(e);
    std::uint32_t kept = 0;
    for (std::uint32_t w = 0; w < src.size() && kept < s; ++w) {
      std::uint64_t bits = src[w];
      while (bits && kept < s) {
        const std::uint64_t lowest = bits & (~bits + 1);
        dst[w] |= lowest;
        bits ^= lowest;
        ++kept;
      }
    }
  }
  return out;
}

}  // namespace setramsey
