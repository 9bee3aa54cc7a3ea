#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "setramsey/diagnostics.hpp"
#include "setramsey/verifier.hpp"
#include "support/oracles.hpp"

using namespace setramsey;

namespace {

SubgraphF random_f(std::uint32_t n, std::uint32_t k, std::uint64_t t, std::mt19937_64& gen) {
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  std::shuffle(all.begin(), all.end(), gen);
  std::vector<Vertex> vs(all.begin(), all.begin() + k);
  std::vector<Edge> pairs;
  for (auto a : vs)
    for (auto b : vs)
      if (a < b) pairs.push_back({a, b});
  std::shuffle(pairs.begin(), pairs.end(), gen);
  pairs.resize(t);
  return SubgraphF(vs, pairs);
}

std::vector<PartitionMap> random_partitions(std::uint32_t r, std::uint32_t n, std::uint64_t m, std::mt19937_64& gen) {
  std::vector<PartitionMap> out;
  for (Colour i = 0; i < r; ++i) {
    PartitionMap p{i, m, std::vector<std::uint32_t>(n)};
    for (auto& a : p.assignments) a = static_cast<std::uint32_t>(gen() % m);
    out.push_back(p);
  }
  return out;
}

// Direct evaluation of the definitions, independent of the library code paths.
struct Naive {
  std::vector<std::set<Vertex>> q;
  std::uint64_t x = 0;
  std::vector<std::set<Vertex>> buckets;
  std::vector<std::uint64_t> s_values;
};

Naive naive(const SubgraphF& f, const std::vector<PartitionMap>& partitions) {
  const auto& vs = f.vertices();
  std::vector<std::uint32_t> deg(vs.size(), 0);
  auto pos = [&](Vertex v) { return std::find(vs.begin(), vs.end(), v) - vs.begin(); };
  for (const auto& e : f.edges()) ++deg[pos(e.u)], ++deg[pos(e.v)];
  auto earlier = [&](Vertex a, Vertex b) {  // a strictly before b
    const auto da = deg[pos(a)], db = deg[pos(b)];
    return da != db ? da > db : a < b;
  };
  Naive out;
  for (const auto& p : partitions) {
    std::set<Vertex> q;
    for (auto v : vs)
      for (auto u : vs)
        if (earlier(u, v) && p.assignments[u] == p.assignments[v]) q.insert(v);
    for (auto v : q) out.x += deg[pos(v)];
    out.q.push_back(q);
  }
  const double k = static_cast<double>(vs.size());
  std::uint32_t jmax = 0;
  while ((1u << jmax) < vs.size()) ++jmax;
  for (std::uint32_t j = 1; j <= jmax; ++j) {
    std::set<Vertex> a;
    for (auto v : vs) {
      const double d = deg[pos(v)];
      if (d * (1u << j) >= k && d * (1u << (j - 1)) < k) a.insert(v);
    }
    std::uint64_t s = 0;
    for (const auto& q : out.q)
      for (auto v : a) s += q.count(v);
    out.buckets.push_back(a);
    out.s_values.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("degree order sorts by degree, ties by id") {
  const SubgraphF f({2, 5, 7, 9}, {{2, 9}, {5, 9}, {7, 9}, {2, 5}});
  CHECK(f.degree_order() == std::vector<Vertex>{9, 2, 5, 7});
  CHECK(f.degree(9) == 3);
  CHECK(f.degree(7) == 1);
  CHECK(f.rank(9) == 0);
  CHECK(f.rank(7) == 3);
  CHECK(f.order() == 4);
  CHECK(f.size() == 4);
}

TEST_CASE("bucket_count is ceil(log2 k)") {
  CHECK(bucket_count(1) == 0);
  CHECK(bucket_count(2) == 1);
  CHECK(bucket_count(3) == 2);
  CHECK(bucket_count(4) == 2);
  CHECK(bucket_count(5) == 3);
  CHECK(bucket_count(1024) == 10);
  CHECK(bucket_count(1025) == 11);
}

TEST_CASE("m = 1: Q_i is everything but the first vertex; triangle gives X_F = 4r") {
  const SubgraphF tri({3, 4, 8}, {{3, 4}, {3, 8}, {4, 8}});
  std::vector<PartitionMap> parts;
  for (Colour i = 0; i < 7; ++i) parts.push_back({i, 1, std::vector<std::uint32_t>(10, 0)});
  const auto d = compute_cluster_diagnostics(tri, parts, Rational(1, 32), Rational(1, 2));
  CHECK(d.x_f == 28);
  for (const auto& q : d.q_sets) CHECK(q == std::vector<Vertex>{4, 8});

  const SubgraphF path({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}});
  const auto e = compute_cluster_diagnostics(path, parts, Rational(1, 32), Rational(1, 2));
  for (const auto& q : e.q_sets) CHECK(q == std::vector<Vertex>{0, 2, 3});
}

TEST_CASE("injective partitions give empty Q and X_F = 0") {
  const SubgraphF f({0, 1, 2, 3, 4}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  std::vector<PartitionMap> parts;
  for (Colour i = 0; i < 5; ++i) {
    PartitionMap p{i, 5, {}};
    for (Vertex v = 0; v < 5; ++v) p.assignments.push_back((v + i) % 5);
    parts.push_back(p);
  }
  const auto d = compute_cluster_diagnostics(f, parts, Rational(1, 32), Rational(1, 2));
  CHECK(d.x_f == 0);
  for (const auto& q : d.q_sets) CHECK(q.empty());
  for (auto s : d.s_values) CHECK(s == 0);
  CHECK_FALSE(d.bottleneck_ell.has_value());
}

TEST_CASE("diagnostics agree with direct evaluation and satisfy the bucket identities") {
  std::mt19937_64 gen(101);
  for (int trial = 0; trial < 300; ++trial) {
    const auto k = std::uniform_int_distribution<std::uint32_t>(2, 14)(gen);
    const auto n = k + std::uniform_int_distribution<std::uint32_t>(0, 20)(gen);
    const auto t = std::uniform_int_distribution<std::uint64_t>(0, pair_count(k))(gen);
    const auto m = std::uniform_int_distribution<std::uint64_t>(1, 8)(gen);
    const auto r = std::uniform_int_distribution<std::uint32_t>(1, 10)(gen);
    const auto f = random_f(n, k, t, gen);
    const auto parts = random_partitions(r, n, m, gen);
    const Rational delta(1, 20), eps(1, 4);
    const auto d = compute_cluster_diagnostics(f, parts, delta, eps);
    const auto ref = naive(f, parts);

    CHECK(d.x_f == ref.x);
    REQUIRE(d.q_sets.size() == r);
    for (Colour i = 0; i < r; ++i)
      CHECK(std::set<Vertex>(d.q_sets[i].begin(), d.q_sets[i].end()) == ref.q[i]);
    REQUIRE(d.buckets.size() == ref.buckets.size());
    std::uint64_t bucketed = 0, positive = 0;
    for (std::size_t j = 0; j < d.buckets.size(); ++j) {
      CHECK(std::set<Vertex>(d.buckets[j].begin(), d.buckets[j].end()) == ref.buckets[j]);
      CHECK(d.s_values[j] == ref.s_values[j]);
      bucketed += d.buckets[j].size();
    }
    for (auto v : f.vertices()) positive += f.degree(v) > 0;
    CHECK(bucketed == positive);

    CHECK(weighted_bucket_sum(d) <= Rational(static_cast<std::int64_t>(2 * t), k));
    CHECK(Rational(static_cast<std::int64_t>(d.x_f)) <= bucket_bound_on_x(d, k));

    // Bottleneck: least l with s_l > delta eps r |A_1 u ... u A_l|.
    std::optional<std::uint32_t> ell;
    std::uint64_t prefix = 0;
    for (std::uint32_t j = 1; j <= ref.buckets.size() && !ell; ++j) {
      prefix += ref.buckets[j - 1].size();
      if (Rational(static_cast<std::int64_t>(ref.s_values[j - 1])) >
          delta * eps * Rational(r) * Rational(static_cast<std::int64_t>(prefix)))
        ell = j;
    }
    CHECK(d.bottleneck_ell == ell);
    if (ell) CHECK(d.a_prefix_size == prefix);

    if (Rational(static_cast<std::int64_t>(d.x_f)) >= eps * Rational(r) * Rational(static_cast<std::int64_t>(t), 2) &&
        t > 0)
      CHECK(d.bottleneck_ell.has_value());
  }
}

TEST_CASE("sample_subgraph draws k distinct vertices and t distinct pairs") {
  StreamRng rng(5, 0, StreamTag::sampling);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = sample_subgraph(rng, 40, 9, 12);
    CHECK(f.order() == 9);
    CHECK(f.size() == 12);
    CHECK(std::is_sorted(f.vertices().begin(), f.vertices().end()));
    CHECK(std::adjacent_find(f.vertices().begin(), f.vertices().end()) == f.vertices().end());
    CHECK(std::adjacent_find(f.edges().begin(), f.edges().end()) == f.edges().end());
    for (const auto& e : f.edges()) {
      CHECK(e.u < e.v);
      CHECK(std::binary_search(f.vertices().begin(), f.vertices().end(), e.u));
      CHECK(std::binary_search(f.vertices().begin(), f.vertices().end(), e.v));
    }
  }
  CHECK_THROWS(sample_subgraph(rng, 5, 6, 1));
  CHECK_THROWS(sample_subgraph(rng, 10, 4, 7));
}

TEST_CASE("bad pair stats") {
  const SubgraphF f({0, 3, 5, 6, 9, 11}, {{0, 3}, {0, 5}, {0, 6}, {3, 5}, {3, 9}, {5, 11}, {6, 9}});
  SUBCASE("p = 1 gives Z = 0") {
    const auto params = override_params(derive_params(12, 8, 6), 20, 12, Rational(1));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto stats = compute_bad_pair_stats(f, build_main_colouring(params, seed));
      CHECK(stats.z_value == 0);
      CHECK(stats.y_size <= 12 * 7);
    }
  }
  SUBCASE("m = 1 gives Y = 0") {
    const auto params = override_params(derive_params(12, 8, 6), 1, 12, Rational(7, 10));
    const auto stats = compute_bad_pair_stats(f, build_main_colouring(params, 4));
    CHECK(stats.y_size == 0);
    CHECK(stats.z_value == 0);
  }
  SUBCASE("matches direct counting") {
    const auto params = override_params(derive_params(12, 8, 6), 5, 12, Rational(1, 2));
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto a = build_main_colouring(params, seed);
      const auto ref = naive(f, a.partitions);
      std::uint64_t y = 0, z = 0;
      for (Colour i = 0; i < 12; ++i)
        for (const auto& e : f.edges())
          if (!ref.q[i].count(e.u) && !ref.q[i].count(e.v)) {
            ++y;
            z += !a.provisional.has(e.u, e.v, i);
          }
      const auto stats = compute_bad_pair_stats(f, a);
      CHECK(stats.y_size == y);
      CHECK(stats.z_value == z);
    }
  }
}

TEST_CASE("max bad edges over sampled cliques") {
  const auto params = override_params(derive_params(12, 8, 6), 20, 30, Rational(7, 10));
  auto a = build_main_colouring(params, 1);
  const auto observed = max_bad_edges_over_sampled_cliques(a, 6, 500, 3);
  CHECK(observed <= 15);
  CHECK(observed == max_bad_edges_over_sampled_cliques(a, 6, 500, 3));
  a.bad_edges = EdgeSet(30);
  CHECK(max_bad_edges_over_sampled_cliques(a, 6, 100, 3) == 0);
  for (std::uint64_t e = 0; e < pair_count(30); ++e) a.bad_edges.insert(e);
  CHECK(max_bad_edges_over_sampled_cliques(a, 6, 100, 3) == 15);
}
