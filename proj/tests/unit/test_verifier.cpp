#include <doctest.h>

#include <cmath>
#include <random>

#include "setramsey/construction.hpp"
#include "setramsey/oracle.hpp"
#include "setramsey/verifier.hpp"
#include "support/oracles.hpp"

using namespace setramsey;

namespace {

SetColouring full_colouring(std::uint32_t n, std::uint32_t r) {
  SetColouring c(n, r);
  for (std::uint64_t e = 0; e < c.edge_count(); ++e) c.fill_all(e);
  return c;
}

ColourClassGraph multipartite(std::uint32_t n, std::uint32_t parts) {
  SetColouring c(n, 1);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (u % parts != v % parts) c.set(u, v, 0);
  return ColourClassGraph::from(c, 0);
}

}  // namespace

TEST_CASE("colour class graph mirrors the masks") {
  std::mt19937_64 gen(1);
  const auto c = testing::random_bit_colouring(30, 5, 0.4, gen);
  for (Colour i = 0; i < 5; ++i) {
    const auto g = ColourClassGraph::from(c, i);
    CHECK(g.colour_index == i);
    for (Vertex u = 0; u < 30; ++u) {
      CHECK_FALSE(g.graph.adjacent(u, u));
      for (Vertex v = u + 1; v < 30; ++v) {
        CHECK(g.graph.adjacent(u, v) == c.has(u, v, i));
        CHECK(g.graph.adjacent(v, u) == c.has(u, v, i));
      }
    }
  }
}

TEST_CASE("check_min_colours") {
  std::mt19937_64 gen(2);
  const auto c = testing::random_bit_colouring(25, 7, 0.5, gen);
  CHECK(check_min_colours(c, 0).empty());
  const auto bad = check_min_colours(c, 4);
  std::vector<ViolatingEdge> expected;
  for (std::uint64_t e = 0; e < c.edge_count(); ++e)
    if (c.popcount(e) < 4) expected.push_back({c.edge_at(e).u, c.edge_at(e).v, c.popcount(e)});
  CHECK(bad == expected);

  const auto params = override_params(derive_params(12, 8, 6), 1, 20, Rational(7, 10));
  CHECK(check_min_colours(build_main_colouring(params, 9).colouring, 8).size() == pair_count(20));
}

TEST_CASE("simple construction violation count matches the binomial tail (10^4 seeds)") {
  const double q = 1.0 / 12.0;
  const double expected = pair_count(40) * testing::binomial_upper_tail(20, q, 4);
  const int seeds = 10000;
  double sum = 0, sum_sq = 0;
  for (int seed = 0; seed < seeds; ++seed) {
    const auto a = build_simple_colouring(20, 16, 13, 40, static_cast<std::uint64_t>(seed));
    const double v = static_cast<double>(check_min_colours(a.colouring, 16).size());
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / seeds;
  const double se = std::sqrt((sum_sq / seeds - mean * mean) / (seeds - 1));
  CHECK(std::abs(mean - expected) <= 4 * se);
}

TEST_CASE("full masks contain K_k in colour 0 on the first k vertices") {
  const auto c = full_colouring(9, 4);
  const auto w = find_monochromatic_clique(c, 5);
  REQUIRE(w.has_value());
  CHECK(w->colour_index == 0);
  CHECK(w->vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(witness_holds(c, *w));
  CHECK_FALSE(find_monochromatic_clique(c, 10).has_value());

  const auto report = verify(c, 4, 5);
  CHECK(report.min_colour_ok);
  CHECK_FALSE(report.clique_free);
  CHECK(report.witness == w);
  CHECK_FALSE(report.valid());
}

TEST_CASE("the lowest colour with a clique is reported, for any thread count") {
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = testing::random_bit_colouring(16, 6, 0.45, gen);
    std::optional<Colour> lowest;
    for (Colour i = 0; i < 6 && !lowest; ++i)
      if (testing::naive_has_clique(c, i, 5)) lowest = i;
    for (unsigned threads : {1u, 2u, 4u}) {
      const auto w = find_monochromatic_clique(c, 5, threads);
      CHECK(w.has_value() == lowest.has_value());
      if (w) {
        CHECK(w->colour_index == *lowest);
        CHECK(w->vertices.size() == 5);
        CHECK(witness_holds(c, *w));
      }
    }
  }
}

TEST_CASE("exactness against brute force: r=2, s=1, k=5 on K_14 (200 seeds)") {
  std::mt19937_64 gen(14);
  int with_clique = 0;
  for (int seed = 0; seed < 200; ++seed) {
    const auto c = testing::random_exact_colouring(14, 2, 1, gen);
    const auto fast = find_monochromatic_clique(c, 5);
    const auto slow = brute_force_mono_clique(c, 5);
    CHECK(fast.has_value() == slow.has_value());
    if (fast) {
      CHECK(fast->colour_index == slow->colour_index);
      ++with_clique;
    }
  }
  // R(5,5) > 14 means some colourings avoid K_5; most random ones do not.
  CHECK(with_clique > 0);
}

TEST_CASE("simple construction outputs are K_k-free and verify when masks are large enough") {
  const auto golden = build_simple_colouring(20, 16, 13, 40, 37935646);
  const auto report = verify(golden.colouring, 16, 13);
  CHECK(report.valid());
  CHECK(report.violating_edges.empty());
  CHECK_FALSE(report.witness.has_value());
  CHECK(verify(truncate_to_s(golden.colouring, 16), 16, 13).clique_free);
}

TEST_CASE("empty masks fail the minimum-colour check on every edge") {
  SetColouring c(6, 3);
  const auto report = verify(c, 1, 3);
  CHECK_FALSE(report.min_colour_ok);
  CHECK(report.violating_edges.size() == 15);
  CHECK(report.clique_free);
}

TEST_CASE("clique numbers are exact per colour") {
  std::mt19937_64 gen(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = testing::random_bit_colouring(14, 3, 0.5, gen);
    const auto omegas = colour_clique_numbers(c, 2);
    REQUIRE(omegas.size() == 3);
    for (Colour i = 0; i < 3; ++i) {
      std::vector<std::vector<bool>> adj(14, std::vector<bool>(14, false));
      for (Vertex u = 0; u < 14; ++u)
        for (Vertex v = u + 1; v < 14; ++v) adj[u][v] = adj[v][u] = c.has(u, v, i);
      CHECK(omegas[i] == testing::naive_clique_number(adj));
    }
    VerifyOptions opts;
    opts.clique_numbers = true;
    const auto report = verify(c, 0, 6, opts);
    REQUIRE(report.per_colour_clique_numbers.has_value());
    CHECK(*report.per_colour_clique_numbers == omegas);
  }
}

TEST_CASE("anti-monotonicity: clearing bits keeps a clique-free colouring clique-free") {
  std::mt19937_64 gen(10);
  for (int seed = 0; seed < 20; ++seed) {
    auto a = build_simple_colouring(8, 5, 5, 30, static_cast<std::uint64_t>(seed));
    auto c = a.colouring;
    REQUIRE(verify(c, 0, 5).clique_free);
    for (std::uint64_t e = 0; e < c.edge_count(); ++e)
      for (Colour i = 0; i < 8; ++i)
        if (c.has(e, i) && gen() % 4 == 0) c.clear(e, i);
    CHECK(verify(c, 0, 5).clique_free);
  }
}

TEST_CASE("densest colour ties go to the lowest index") {
  SetColouring c(4, 3);
  c.set(0, 1, 1), c.set(0, 2, 1);
  c.set(1, 2, 2), c.set(2, 3, 2);
  CHECK(densest_colour(c) == 1);
  c.set(0, 3, 0), c.set(1, 3, 0), c.set(1, 2, 0);
  CHECK(densest_colour(c) == 0);
}

TEST_CASE("turan_extract_clique") {
  const auto full = full_colouring(7, 1);
  const auto w = turan_extract_clique(ColourClassGraph::from(full, 0), 7);
  CHECK(w.vertices == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6});

  CHECK_THROWS_AS(turan_extract_clique(multipartite(12, 3), 4), PreconditionError);
  CHECK_THROWS_AS(turan_extract_clique(multipartite(20, 4), 5), PreconditionError);

  SetColouring dense(12, 1);
  for (Vertex u = 0; u < 12; ++u)
    for (Vertex v = u + 1; v < 12; ++v)
      if (u % 3 != v % 3) dense.set(u, v, 0);
  dense.set(0, 3, 0);
  const auto g = ColourClassGraph::from(dense, 0);
  const auto x = turan_extract_clique(g, 4);
  CHECK(x.vertices.size() >= 4);
  CHECK(g.graph.is_clique(x.vertices));
}

TEST_CASE("count_bad_edges_in_set") {
  EdgeSet none(10);
  const std::vector<Vertex> s{1, 3, 4, 8, 9};
  CHECK(count_bad_edges_in_set(s, none) == 0);
  EdgeSet all(10);
  for (std::uint64_t e = 0; e < pair_count(10); ++e) all.insert(e);
  CHECK(count_bad_edges_in_set(s, all) == 10);
  EdgeSet some(10);
  SetColouring index_helper(10, 1);
  some.insert(index_helper.edge_index(3, 8));
  some.insert(index_helper.edge_index(0, 1));
  CHECK(count_bad_edges_in_set(s, some) == 1);
}
