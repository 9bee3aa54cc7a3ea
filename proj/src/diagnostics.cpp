#include "setramsey/diagnostics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "setramsey/verifier.hpp"

namespace setramsey {

SubgraphF::SubgraphF(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw std::invalid_argument("SubgraphF: repeated vertex");
  for (auto& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("SubgraphF: loop edge");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("SubgraphF: repeated edge");

  degree_.assign(vertices_.size(), 0);
  for (const auto& e : edges_) {
    ++degree_[slot(e.u)];
    ++degree_[slot(e.v)];
  }
  std::vector<std::size_t> idx(vertices_.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return degree_[a] > degree_[b]; });
  rank_.assign(vertices_.size(), 0);
  order_.reserve(vertices_.size());
  for (std::size_t pos = 0; pos < idx.size(); ++pos) {
    rank_[idx[pos]] = static_cast<std::uint32_t>(pos);
    order_.push_back(vertices_[idx[pos]]);
  }
}

std::size_t SubgraphF::slot(Vertex v) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw std::invalid_argument("SubgraphF: vertex not in F");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::uint32_t SubgraphF::degree(Vertex v) const { return degree_[slot(v)]; }
std::uint32_t SubgraphF::rank(Vertex v) const { return rank_[slot(v)]; }

SubgraphF sample_subgraph(StreamRng& rng, std::uint32_t n, std::uint32_t k, std::uint64_t edges) {
  auto vertices = sample_subset(rng, n, k);
  const auto pairs = pair_count(k);
  if (edges > pairs) throw std::invalid_argument("sample_subgraph: more edges than pairs");
  const auto chosen = sample_subset(rng, static_cast<std::uint32_t>(pairs), static_cast<std::uint32_t>(edges));
  std::vector<Edge> out;
  out.reserve(chosen.size());
  std::uint64_t index = 0;
  std::size_t next = 0;
  for (std::uint32_t a = 0; a < k && next < chosen.size(); ++a)
    for (std::uint32_t b = a + 1; b < k && next < chosen.size(); ++b, ++index)
      if (chosen[next] == index) {
        out.push_back({vertices[a], vertices[b]});
        ++next;
      }
  return SubgraphF(std::move(vertices), std::move(out));
}

std::uint32_t bucket_count(std::uint32_t k) {
  std::uint32_t j = 0;
  while ((std::uint64_t{1} << j) < k) ++j;
  return j;
}

namespace {

std::vector<std::vector<Vertex>> q_sets_of(const SubgraphF& f, const std::vector<PartitionMap>& partitions) {
  std::vector<std::vector<Vertex>> out(partitions.size());
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    std::unordered_map<std::uint32_t, bool> seen;
    for (auto v : f.degree_order()) {
      if (v >= partitions[i].assignments.size()) throw std::invalid_argument("F vertex outside partition domain");
      const auto part = partitions[i].assignments[v];
      if (seen.contains(part)) out[i].push_back(v);
      seen[part] = true;
    }
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

}  // namespace

ClusterDiagnostics compute_cluster_diagnostics(const SubgraphF& f, const std::vector<PartitionMap>& partitions,
                                               const Rational& delta, const Rational& eps) {
  ClusterDiagnostics out;
  out.q_sets = q_sets_of(f, partitions);
  for (const auto& q : out.q_sets)
    for (auto v : q) out.x_f += f.degree(v);

  const auto k = f.order();
  const auto buckets = bucket_count(k);
  out.buckets.assign(buckets, {});
  for (std::size_t slot = 0; slot < f.vertices().size(); ++slot) {
    const auto v = f.vertices()[slot];
    const std::uint64_t d = f.degree(v);
    if (d == 0) continue;
    std::uint32_t j = 1;
    while ((d << j) < k) ++j;
    out.buckets[j - 1].push_back(v);
  }

  out.s_values.assign(buckets, 0);
  for (const auto& q : out.q_sets)
    for (auto v : q)
      if (const auto d = static_cast<std::uint64_t>(f.degree(v)); d > 0) {
        std::uint32_t j = 1;
        while ((d << j) < k) ++j;
        ++out.s_values[j - 1];
      }

  const Rational delta_eps_r = delta * eps * Rational(static_cast<std::int64_t>(partitions.size()));
  std::int64_t prefix = 0;
  for (std::uint32_t ell = 1; ell <= buckets; ++ell) {
    prefix += static_cast<std::int64_t>(out.buckets[ell - 1].size());
    if (Rational(static_cast<std::int64_t>(out.s_values[ell - 1])) > delta_eps_r * prefix) {
      out.bottleneck_ell = ell;
      out.a_prefix_size = static_cast<std::uint64_t>(prefix);
      break;
    }
  }
  return out;
}

Rational weighted_bucket_sum(const ClusterDiagnostics& diagnostics) {
  Rational total(0);
  for (std::size_t j = 1; j <= diagnostics.buckets.size(); ++j)
    total += Rational(static_cast<std::int64_t>(diagnostics.buckets[j - 1].size()), std::int64_t{1} << j);
  return total;
}

Rational bucket_bound_on_x(const ClusterDiagnostics& diagnostics, std::uint32_t k) {
  Rational total(0);
  for (std::size_t j = 1; j <= diagnostics.s_values.size(); ++j)
    total += Rational(static_cast<std::int64_t>(k), std::int64_t{1} << (j - 1)) *
             static_cast<std::int64_t>(diagnostics.s_values[j - 1]);
  return total;
}

BadPairStats compute_bad_pair_stats(const SubgraphF& f, const ConstructionArtifacts& artifacts) {
  const auto q = q_sets_of(f, artifacts.partitions);
  BadPairStats out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (const auto& e : f.edges()) {
      if (std::binary_search(q[i].begin(), q[i].end(), e.u) || std::binary_search(q[i].begin(), q[i].end(), e.v))
        continue;
      ++out.y_size;
      if (!artifacts.provisional.has(e.u, e.v, static_cast<Colour>(i))) ++out.z_value;
    }
  }
  return out;
}

std::uint64_t max_bad_edges_over_sampled_cliques(const ConstructionArtifacts& artifacts, std::uint32_t k,
                                                 std::uint64_t samples, std::uint64_t rng_seed) {
  if (samples < 1) throw std::invalid_argument("max_bad_edges_over_sampled_cliques: samples must be >= 1");
  const auto n = artifacts.colouring.n();
  if (k > n) throw std::invalid_argument("max_bad_edges_over_sampled_cliques: k exceeds n");
  StreamRng rng(rng_seed, 0, StreamTag::sampling);
  std::uint64_t best = 0;
  for (std::uint64_t s = 0; s < samples; ++s)
    best = std::max(best, count_bad_edges_in_set(sample_subset(rng, n, k), artifacts.bad_edges));
  return best;
}

}  // namespace setramsey
