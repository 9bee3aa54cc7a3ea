#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "setramsey/colouring.hpp"
#include "setramsey/construction.hpp"
#include "setramsey/params.hpp"
#include "setramsey/rng.hpp"

namespace setramsey {

/// A graph F on k vertices of K_n, with its degree order.
///
/// degree_order lists the vertices by non-increasing degree in F, ties broken
/// by ascending vertex id. rank(v) is the position of v in that list.
class SubgraphF {
 public:
  SubgraphF(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& degree_order() const { return order_; }

  std::uint32_t order() const { return static_cast<std::uint32_t>(vertices_.size()); }
  std::uint64_t size() const { return edges_.size(); }
  std::uint32_t degree(Vertex v) const;
  std::uint32_t rank(Vertex v) const;

 private:
  std::size_t slot(Vertex v) const;

  std::vector<Vertex> vertices_;  // sorted
  std::vector<Edge> edges_;       // u < v, sorted
  std::vector<std::uint32_t> degree_;
  std::vector<std::uint32_t> rank_;
  std::vector<Vertex> order_;
};

/// Uniform k-subset of [n], then a uniform `edges`-subset of its pairs.
SubgraphF sample_subgraph(StreamRng& rng, std::uint32_t n, std::uint32_t k, std::uint64_t edges);

struct ClusterDiagnostics {
  /// Q_i(F): vertices sharing a part of phi_i with an earlier vertex of the order.
  std::vector<std::vector<Vertex>> q_sets;
  std::uint64_t x_f = 0;
  /// buckets[j - 1] = A_j(F) = { v : k / 2^j <= d_F(v) < k / 2^(j-1) }, j = 1..ceil(log2 k).
  std::vector<std::vector<Vertex>> buckets;
  /// s_values[j - 1] = s_j(F) = sum_i |A_j(F) cap Q_i(F)|.
  std::vector<std::uint64_t> s_values;
  /// Least l with s_l(F) > delta eps r sum_{j <= l} |A_j(F)|.
  std::optional<std::uint32_t> bottleneck_ell;
  /// |A| = |A_1 cup ... cup A_l| for that l.
  std::optional<std::uint64_t> a_prefix_size;
};

/// ceil(log2 k) for k >= 1.
std::uint32_t bucket_count(std::uint32_t k);

ClusterDiagnostics compute_cluster_diagnostics(const SubgraphF& f, const std::vector<PartitionMap>& partitions,
                                               const Rational& delta, const Rational& eps);

/// sum_j |A_j(F)| / 2^j, exactly.
Rational weighted_bucket_sum(const ClusterDiagnostics& diagnostics);

/// sum_j (k / 2^(j-1)) s_j(F), the bucket upper bound on X_F.
Rational bucket_bound_on_x(const ClusterDiagnostics& diagnostics, std::uint32_t k);

struct BadPairStats {
  std::uint64_t y_size = 0;   // |{(uv, i) in E(F) x [r] : u, v not in Q_i(F)}|
  std::uint64_t z_value = 0;  // members of Y with uv not in G_i
};

BadPairStats compute_bad_pair_stats(const SubgraphF& f, const ConstructionArtifacts& artifacts);

std::uint64_t max_bad_edges_over_sampled_cliques(const ConstructionArtifacts& artifacts, std::uint32_t k,
                                                 std::uint64_t samples, std::uint64_t rng_seed);

}  // namespace setramsey
