#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "theta/decomposition.hpp"
#include "theta/generators.hpp"

using namespace theta;

namespace {

NodeId node_with(const DistanceDecomposition& dd, VertexId v) { return dd.node_of.at(static_cast<std::size_t>(v)); }

}  // namespace

TEST_CASE("Fig. 2 decomposition with origin u5") {
  const auto g = figure2_graph();
  const auto dd = distance_decomposition(g, 5);
  REQUIRE(dd.node_count() == 6);
  const std::vector<std::vector<VertexId>> bags{{5}, {3, 4}, {6, 7}, {0, 2}, {1}, {8}};
  const std::vector<NodeId> parent{kNone, 0, 0, 1, 1, 2};
  CHECK(dd.base.bags == bags);
  CHECK(dd.base.parent == parent);
  CHECK(dd.depth == std::vector<int>{0, 1, 1, 2, 2, 2});
  CHECK(dd.height == 2);
  CHECK(dd.parent_edges[2].size() == 2);
  CHECK(dd.parent_edges[1].size() == 2);
  CHECK(dd.parent_edges[3].size() == 2);
  CHECK(dd.parent_edges[4].size() == 1);
  CHECK(check_dd_invariants(g, dd));
}

TEST_CASE("small decompositions") {
  const auto one = distance_decomposition(path_graph(1), 0);
  CHECK(one.node_count() == 1);
  CHECK(one.height == 0);
  CHECK(check_dd_invariants(path_graph(1), one));

  const auto c6 = cycle_graph(6);
  const auto dd = distance_decomposition(c6, 0);
  const std::vector<std::vector<VertexId>> bags{{0}, {1, 5}, {2, 4}, {3}};
  CHECK(dd.base.bags == bags);
  CHECK(dd.base.parent == std::vector<NodeId>{kNone, 0, 1, 2});
  CHECK(dd.height == 3);

  Multigraph split(3, {{0, 1}});
  CHECK_THROWS_AS(distance_decomposition(split, 0), GraphError);
}

TEST_CASE("invariant checker rejects mutated decompositions") {
  const auto g = figure2_graph();
  const auto dd = distance_decomposition(g, 5);

  auto moved = dd;
  const NodeId t67 = node_with(dd, 6);
  const NodeId t8 = node_with(dd, 8);
  REQUIRE(t8 == dd.node_count() - 1);
  moved.base.bags[t67] = {6, 7, 8};
  moved.base.bags.pop_back();
  moved.base.parent.pop_back();
  moved.depth.pop_back();
  moved.parent_edges.pop_back();
  moved.node_height.pop_back();
  moved.node_of[8] = t67;
  const auto moved_report = check_dd_invariants(g, moved);
  CHECK_FALSE(moved_report);
  CHECK(moved_report.summary().find("(ii)") != std::string::npos);

  auto merged = dd;
  const NodeId t02 = node_with(dd, 0);
  const NodeId t1 = node_with(dd, 1);
  merged.base.bags[t02] = {0, 1, 2};
  merged.base.bags.erase(merged.base.bags.begin() + t1);
  merged.base.parent.erase(merged.base.parent.begin() + t1);
  for (auto& p : merged.base.parent) {
    if (p > t1) --p;
  }
  merged.depth.erase(merged.depth.begin() + t1);
  merged.parent_edges[t02].insert(merged.parent_edges[t02].end(), dd.parent_edges[t1].begin(),
                                  dd.parent_edges[t1].end());
  std::sort(merged.parent_edges[t02].begin(), merged.parent_edges[t02].end());
  merged.parent_edges.erase(merged.parent_edges.begin() + t1);
  merged.node_height.erase(merged.node_height.begin() + t1);
  for (auto& t : merged.node_of) {
    if (t == t1) t = t02;
    else if (t > t1) --t;
  }
  const auto report = check_dd_invariants(g, merged);
  CHECK_FALSE(report);
  CHECK(report.summary().find("(iv)") != std::string::npos);
}

TEST_CASE("tree partitions") {
  const auto g = cycle_graph(4);
  RootedTreePartition tp{{kNone, 0}, {{0, 1}, {2, 3}}, 0};
  const std::vector<VertexId> all{0, 1, 2, 3};
  CHECK(check_tree_partition(g, tp, all));
  CHECK(tree_partition_width(g, tp) == 2);

  RootedTreePartition one{{kNone}, {{0, 1, 2, 3}}, 0};
  CHECK(check_tree_partition(g, one, all));

  RootedTreePartition gap{{kNone, 0, 1}, {{0}, {1, 3}, {2}}, 0};
  CHECK(check_tree_partition(g, gap, all));
  RootedTreePartition bad{{kNone, 0, 0}, {{0}, {1}, {2, 3}}, 0};
  CHECK_FALSE(check_tree_partition(g, bad, all));
}

TEST_CASE("bounded escape paths") {
  const auto g = figure2_graph();
  const auto dd = distance_decomposition(g, 5);
  const std::vector<VertexId> u6{6};
  const auto p = bounded_escape_path(g, dd, node_with(dd, 6), u6);
  CHECK(p.vertices == std::vector<VertexId>{6, 8, 7});
  CHECK(p.length() == 2);

  const std::vector<VertexId> u4{4};
  const auto q = bounded_escape_path(g, dd, node_with(dd, 3), u4);
  CHECK(q.vertices == std::vector<VertexId>{4, 3});
  CHECK(q.length() == 1);

  const std::vector<VertexId> whole{6, 7};
  CHECK_THROWS_AS(bounded_escape_path(g, dd, node_with(dd, 6), whole), GraphError);
}

TEST_CASE("escape paths can need 2k+1 edges") {
  // o-u, o-v, u-a1, a1-a2, a2-v: X_t = {u, v}, subtree height 1.
  Multigraph g(5, {{0, 1}, {0, 2}, {1, 3}, {3, 4}, {4, 2}});
  const auto dd = distance_decomposition(g, 0);
  const NodeId t = node_with(dd, 1);
  CHECK(dd.node_height[t] == 1);
  const std::vector<VertexId> u{1};
  CHECK(bounded_escape_path(g, dd, t, u).length() == 3);
}

TEST_CASE("decomposition invariants on random multigraphs") {
  for (const auto& g : corpus::random_graphs(150, 40, 21)) {
    for (VertexId origin = 0; origin < g.vertex_count(); origin += 3) {
      const auto dd = distance_decomposition(g, origin);
      const auto report = check_dd_invariants(g, dd);
      CHECK_MESSAGE(report, report.summary());
      CHECK(dd.height == eccentricity(g, origin));
      // Every edge between consecutive layers lies in exactly one E^(t).
      std::vector<int> seen(static_cast<std::size_t>(g.edge_count()), 0);
      for (NodeId t = 0; t < dd.node_count(); ++t) {
        for (const EdgeId e : dd.parent_edges[t]) ++seen[e];
      }
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        const bool layered = std::abs(dd.dist[edge.u] - dd.dist[edge.v]) == 1;
        CHECK(seen[e] == (layered ? 1 : 0));
      }
    }
  }
}

TEST_CASE("paths to the origin are shortest") {
  for (const auto& g : corpus::random_graphs(30, 30, 23)) {
    const auto dd = distance_decomposition(g, 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const auto p = path_to_origin(g, dd, v);
      CHECK(p.length() == dd.dist[v]);
      CHECK(p.vertices.front() == v);
      CHECK(p.vertices.back() == 0);
    }
  }
}
