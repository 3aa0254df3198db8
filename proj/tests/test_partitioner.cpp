#include <doctest.h>

#include <algorithm>
#include <functional>

#include "corpus.hpp"
#include "theta/generators.hpp"
#include "theta/partitioner.hpp"

using namespace theta;

namespace {

std::vector<VertexId> bag_vertices(const GroupedPartition& gp, int i, std::span<const NodeId> nodes) {
  std::vector<VertexId> out;
  for (NodeId t : nodes) {
    const auto& bag = gp.region_dds[i].bag(t);
    out.insert(out.end(), bag.begin(), bag.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Binary tree of height h in preorder parent form; leaves listed separately.
std::vector<NodeId> binary_tree(int h, int subdivide, std::vector<NodeId>& leaves) {
  std::vector<NodeId> parent{kNone};
  std::function<void(NodeId, int)> grow = [&](NodeId at, int level) {
    if (level == h) {
      leaves.push_back(at);
      return;
    }
    for (int child = 0; child < 2; ++child) {
      NodeId prev = at;
      for (int s = 0; s < subdivide; ++s) {
        parent.push_back(prev);
        prev = static_cast<NodeId>(parent.size()) - 1;
      }
      parent.push_back(prev);
      grow(static_cast<NodeId>(parent.size()) - 1, level + 1);
    }
  };
  grow(0, 0);
  return parent;
}

}  // namespace

TEST_CASE("maximal scattered sets") {
  CHECK(maximal_scattered_set(path_graph(9), 2) == std::vector<VertexId>{0, 3, 6});
  CHECK(maximal_scattered_set(cycle_graph(6), 2) == std::vector<VertexId>{0, 3});
  CHECK(maximal_scattered_set(petersen_graph(), 2).size() == 1);
  CHECK(maximal_scattered_set(grid_graph(3, 3), 4).size() == 1);
}

TEST_CASE("grouped partitions") {
  const auto p9 = grouped_partition(path_graph(9), 1);
  const std::vector<std::vector<VertexId>> p9_regions{{0, 1}, {2, 3, 4}, {5, 6, 7, 8}};
  CHECK(p9.regions == p9_regions);
  CHECK(p9.centers == std::vector<VertexId>{0, 3, 6});
  CHECK(check_grouped_partition(path_graph(9), p9));

  const auto k4 = grouped_partition(complete_graph(4), 1);
  CHECK(k4.region_count() == 1);

  const auto c6 = grouped_partition(cycle_graph(6), 1);
  const std::vector<std::vector<VertexId>> c6_regions{{0, 1, 5}, {2, 3, 4}};
  CHECK(c6.regions == c6_regions);
  CHECK(check_grouped_partition(cycle_graph(6), c6));

  CHECK_THROWS_AS(grouped_partition(path_graph(3), 0), GraphError);
}

TEST_CASE("frontiers and ports") {
  const auto single = grouped_partition(complete_graph(5), 2);
  const auto s = frontier_report(complete_graph(5), single, 0);
  CHECK(s.vertex_frontier.empty());
  CHECK(s.node_frontier.empty());
  CHECK(s.ports.empty());

  const auto c6g = cycle_graph(6);
  const auto c6 = grouped_partition(c6g, 1);
  const auto f = frontier_report(c6g, c6, 0);
  // 0 reaches vertex 2 through 1, which lies at distance d = 1.
  CHECK(f.vertex_frontier == std::vector<VertexId>{0});
  CHECK(f.vertex_frontier == frontier_by_definition(c6g, c6, 0));
  CHECK(bag_vertices(c6, 0, f.ports) == std::vector<VertexId>{1, 5});

  const auto p9g = path_graph(9);
  const auto p9 = grouped_partition(p9g, 1);
  const auto mid = frontier_report(p9g, p9, 1);
  CHECK(mid.ports.size() == 2);
  CHECK(bag_vertices(p9, 1, mid.ports) == std::vector<VertexId>{2, 4});
}

TEST_CASE("grouped partitions on random graphs") {
  for (const auto& g : corpus::random_graphs(120, 40, 31)) {
    for (int d = 1; d <= 3; ++d) {
      const auto gp = grouped_partition(g, d);
      const auto report = check_grouped_partition(g, gp);
      CHECK_MESSAGE(report, report.summary());
      for (int i = 0; i < gp.region_count(); ++i) {
        const auto f = frontier_report(g, gp, i);
        CHECK(f.vertex_frontier == frontier_by_definition(g, gp, i));
        CHECK(f.ports.size() >= f.node_frontier.size());
      }
    }
  }
}

TEST_CASE("critical vertices") {
  const std::vector<NodeId> star{kNone, 0, 0};
  const std::vector<NodeId> ab{1, 2};
  CHECK(critical_vertices(star, ab) == std::vector<NodeId>{0, 1, 2});

  const std::vector<NodeId> path{kNone, 0, 1, 2, 3, 4};
  const std::vector<NodeId> x{5};
  CHECK(critical_vertices(path, x) == std::vector<NodeId>{5});

  const std::vector<NodeId> chain{1, 3};
  CHECK_THROWS_AS(critical_vertices(path, chain), GraphError);

  // Fig. 3: a caterpillar spine 0-1-2-3 with marked legs under 1 and 3.
  const std::vector<NodeId> caterpillar{kNone, 0, 1, 2, 1, 3, 3};
  const std::vector<NodeId> marks{4, 5, 6};
  CHECK(critical_vertices(caterpillar, marks) == std::vector<NodeId>{1, 3, 4, 5, 6});
  const auto paths = unimportant_paths(caterpillar, marks);
  CHECK(std::find(paths.begin(), paths.end(), std::vector<NodeId>{1, 2, 3}) != paths.end());
}

TEST_CASE("unimportant paths") {
  const std::vector<NodeId> path{kNone, 0, 1, 2, 3, 4};
  const std::vector<NodeId> x{5};
  CHECK(unimportant_paths(path, x).empty());

  const std::vector<NodeId> star{kNone, 0, 0};
  const std::vector<NodeId> ab{1, 2};
  const std::vector<std::vector<NodeId>> star_paths{{0, 1}, {0, 2}};
  auto got = unimportant_paths(star, ab);
  std::sort(got.begin(), got.end());
  CHECK(got == star_paths);

  std::vector<NodeId> leaves;
  const auto bin = binary_tree(3, 0, leaves);
  const auto bin_paths = unimportant_paths(bin, leaves);
  CHECK(bin_paths.size() == bin.size() - 1);
  for (const auto& p : bin_paths) CHECK(p.size() == 2);
}

TEST_CASE("leaf lower bound") {
  for (int h = 1; h <= 4; ++h) {
    std::vector<NodeId> leaves;
    const auto bin = binary_tree(h, 0, leaves);
    CHECK(leaf_lower_bound_check(bin, leaves, h, 1));

    std::vector<NodeId> sub_leaves;
    const auto sub = binary_tree(h, 1, sub_leaves);
    CHECK(sub_leaves.size() == (std::size_t{1} << h));
    CHECK(leaf_lower_bound_check(sub, sub_leaves, 2 * h, 2));
  }

  // Preconditions are enforced.
  std::vector<NodeId> leaves;
  const auto bin = binary_tree(2, 0, leaves);
  CHECK_THROWS_AS(leaf_lower_bound_check(bin, leaves, 3, 1), GraphError);
  std::vector<NodeId> sub_leaves;
  const auto sub = binary_tree(2, 1, sub_leaves);
  CHECK_THROWS_AS(leaf_lower_bound_check(sub, sub_leaves, 4, 1), GraphError);

  // A lone marked node deep in a path satisfies both preconditions.
  const std::vector<NodeId> path{kNone, 0, 1, 2};
  const std::vector<NodeId> deep{3};
  CHECK_FALSE(leaf_lower_bound_check(path, deep, 3, 1));
  CHECK(anchored_leaf_lower_bound_check(path, deep, 1));
}

TEST_CASE("anchored leaf bound on every small rooted tree") {
  const std::vector<std::size_t> counts{1, 1, 2, 4, 9, 20, 48, 115, 286};
  for (int n = 1; n <= 9; ++n) {
    const auto trees = corpus::rooted_trees(n);
    CHECK(trees.size() == counts[n - 1]);
    for (const auto& parent : trees) {
      std::vector<NodeId> leaves;
      for (NodeId v = 0; v < n; ++v) {
        if (std::find(parent.begin(), parent.end(), v) == parent.end()) leaves.push_back(v);
      }
      int k = 1;
      for (const auto& p : unimportant_paths(parent, leaves)) k = std::max(k, static_cast<int>(p.size()) - 1);
      CHECK(anchored_leaf_lower_bound_check(parent, leaves, k));
    }
  }
}
