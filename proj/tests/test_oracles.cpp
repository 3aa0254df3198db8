#include <doctest.h>

#include <cstdlib>

#include "corpus.hpp"
#include "theta/bounds.hpp"
#include "theta/generators.hpp"
#include "theta/oracles.hpp"

using namespace theta;

TEST_CASE("theta girth on named graphs") {
  CHECK(brute_theta_girth(theta_graph(5), 5).value == 5);
  for (int n = 3; n <= 12; ++n) CHECK(brute_theta_girth(cycle_graph(n), 2).value == n);
  CHECK(brute_theta_girth(complete_graph(4), 3).value == 5);
  CHECK_FALSE(brute_theta_girth(figure2_graph(), 3).value);
  CHECK_FALSE(brute_theta_girth(path_graph(6), 2).value);
  CHECK(brute_theta_girth(path_graph(2), 1).value == 1);

  const auto w = brute_theta_girth(complete_graph(4), 3);
  REQUIRE(w.witness);
  CHECK(verify_theta_certificate(complete_graph(4), *w.witness, 3, 5));
}

TEST_CASE("theta girth properties on the small corpus") {
  for (const auto& g : corpus::small_connected_graphs(6)) {
    std::optional<long long> prev;
    for (int r = 1; r <= 4; ++r) {
      const auto cur = brute_theta_girth(g, r);
      if (r > 1 && prev && cur.value) CHECK(*prev <= *cur.value);
      if (r > 1 && !prev) CHECK_FALSE(cur.value);
      prev = cur.value;
      if (r == 1 && g.edge_count() == 0) CHECK_FALSE(cur.value);
      if (cur.witness) CHECK(verify_theta_certificate(g, *cur.witness, r, *cur.value));
    }
    const auto girth = brute_theta_girth(g, 2).value;
    const auto bfs = girth_bfs(g);
    CHECK(girth.has_value() == bfs.has_value());
    if (girth && bfs) CHECK(*girth == *bfs);
    const auto cycle = shortest_cycle(g);
    CHECK(cycle.has_value() == bfs.has_value());
    if (cycle && bfs) CHECK(static_cast<int>(cycle->edges.size()) == *bfs);

    // Deleting an edge never decreases the theta_3-girth.
    if (g.edge_count() > 0) {
      std::vector<Edge> fewer(g.edges().begin() + 1, g.edges().end());
      const Multigraph h(g.vertex_count(), fewer);
      const auto before = brute_theta_girth(g, 3).value;
      const auto after = brute_theta_girth(h, 3).value;
      if (after) CHECK((before && *before <= *after));
    }
  }
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(brute_theta_girth(cycle_graph(20), 2, 14), SizeGuardError);
  CHECK(brute_theta_girth(cycle_graph(20), 2, 20).value == 20);
  ::setenv("THETA_MINER_SIZE_GUARD", "21", 1);
  CHECK(oracle_size_guard() == 21);
  ::setenv("THETA_MINER_SIZE_GUARD", "99", 1);
  CHECK(oracle_size_guard() == kHardSizeCap);
  ::unsetenv("THETA_MINER_SIZE_GUARD");
  CHECK(oracle_size_guard() == 14);
}

TEST_CASE("loose connectivity") {
  const auto p5 = check_loose_connectivity(path_graph(5), 1, 2);
  CHECK_FALSE(p5.loosely_connected);
  REQUIRE(p5.witness);
  CHECK(p5.witness->separator == std::vector<VertexId>{2});

  for (int alpha = 0; alpha <= 3; ++alpha) {
    for (int beta = 0; beta <= 3; ++beta) CHECK(check_loose_connectivity(complete_graph(4), alpha, beta).loosely_connected);
  }

  std::vector<Edge> edges;
  for (VertexId u = 0; u < 4; ++u)
    for (VertexId v = u + 1; v < 4; ++v) edges.push_back({u, v});
  for (VertexId u = 3; u < 7; ++u)
    for (VertexId v = u + 1; v < 7; ++v) edges.push_back({u, v});
  const Multigraph bowtie(7, edges);
  CHECK(check_loose_connectivity(bowtie, 3, 2).loosely_connected);
  const auto split = check_loose_connectivity(bowtie, 2, 2);
  CHECK_FALSE(split.loosely_connected);
  REQUIRE(split.witness);
  CHECK(split.witness->separator == std::vector<VertexId>{3});
}

TEST_CASE("bound lemma") {
  CHECK(check_bound_lemma(2, 2));
  CHECK(check_bound_lemma(3, 3));
  CHECK(check_bound_lemma(4, 10));
  CHECK_THROWS_AS(check_bound_lemma(3, 2), GraphError);
  CHECK_THROWS_AS(check_bound_lemma(1, 4), GraphError);
}

TEST_CASE("quotient degrees") {
  const std::vector<std::vector<VertexId>> pairs{{0, 1}, {2, 3}, {4, 5}};
  CHECK(quotient_min_degree(cycle_graph(6), pairs) == 2);
  const std::vector<std::vector<VertexId>> singles{{0}, {1}, {2}, {3}};
  CHECK(quotient_min_degree(complete_graph(4), singles) == 3);
  const std::vector<std::vector<VertexId>> one{{0, 1, 2, 3}};
  CHECK(quotient_min_degree(complete_graph(4), one) == 0);
  const std::vector<std::vector<VertexId>> broken{{0, 2}, {1, 3}};
  CHECK_THROWS_AS(quotient_min_degree(cycle_graph(4), broken), GraphError);
}

TEST_CASE("exact bounds") {
  CHECK(ceil_pow2_root(0, 5) == 1);
  CHECK(ceil_pow2_root(10, 1) == 1024);
  CHECK(ceil_pow2_root(10, 2) == 32);
  CHECK(ceil_pow2_root(11, 2) == 46);  // 45^2 = 2025 < 2048 <= 2116
  CHECK(theorem5_bound(2, 1, 10) == 1);
  CHECK(grouping_radius(2, 10) == 1);
  CHECK(grouping_radius(3, 2) == 0);
  // (delta - 2r + 3) * floor(delta/(r-1) - 1)^d / (r-1) with r=2, delta=6, d=1.
  CHECK(theorem4_bound(2, 6, 10) == 25);
}
