#include "theta/partitioner.hpp"

#include <algorithm>
#include <deque>

#include "theta/bigint.hpp"

namespace theta {

std::vector<VertexId> maximal_scattered_set(const Multigraph& g, int spread) {
  if (spread < 0) throw GraphError("spread must be nonnegative");
  const int n = g.vertex_count();
  std::vector<char> blocked(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> chosen;
  for (VertexId v = 0; v < n; ++v) {
    if (blocked[v]) continue;
    chosen.push_back(v);
    // Mark the ball of radius `spread` around v.
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::deque<VertexId> queue{v};
    dist[v] = 0;
    blocked[v] = 1;
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      if (dist[x] == spread) continue;
      for (const auto& inc : g.incident(x)) {
        if (dist[inc.neighbor] >= 0) continue;
        dist[inc.neighbor] = dist[x] + 1;
        blocked[inc.neighbor] = 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return chosen;
}

namespace {

bool diameter_at_most(const Multigraph& g, int bound) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (eccentricity(g, v) > bound) return false;
  }
  return true;
}

}  // namespace

GroupedPartition grouped_partition(const Multigraph& g, int d) {
  if (d < 1) throw GraphError("grouped partition needs d >= 1, got " + std::to_string(d));
  const int n = g.vertex_count();
  if (n == 0) throw GraphError("graph has no vertices");
  if (!is_connected(g)) throw GraphError("graph is disconnected");

  GroupedPartition gp;
  gp.radius = d;
  gp.region_of.assign(static_cast<std::size_t>(n), kNone);
  if (diameter_at_most(g, 2 * d)) {
    gp.centers = {0};
    gp.regions.emplace_back();
    for (VertexId v = 0; v < n; ++v) gp.regions[0].push_back(v);
    std::fill(gp.region_of.begin(), gp.region_of.end(), 0);
  } else {
    gp.centers = maximal_scattered_set(g, 2 * d);
    const int l = static_cast<int>(gp.centers.size());
    gp.regions.assign(static_cast<std::size_t>(l), {});
    std::vector<std::vector<VertexId>> frontier(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) {
      gp.region_of[gp.centers[i]] = i;
      gp.regions[i].push_back(gp.centers[i]);
      frontier[i] = {gp.centers[i]};
    }
    for (int round = 0; round < 2 * d; ++round) {
      for (int i = 0; i < l; ++i) {
        std::vector<VertexId> next;
        for (VertexId v : frontier[i]) {
          for (VertexId u : g.neighbors(v)) {
            if (gp.region_of[u] != kNone) continue;
            gp.region_of[u] = i;
            next.push_back(u);
          }
        }
        std::sort(next.begin(), next.end());
        gp.regions[i].insert(gp.regions[i].end(), next.begin(), next.end());
        frontier[i] = std::move(next);
      }
    }
    for (auto& region : gp.regions) std::sort(region.begin(), region.end());
    for (VertexId v = 0; v < n; ++v) {
      if (gp.region_of[v] == kNone) throw GraphError("internal invariant failure: vertex left unassigned");
    }
  }
  for (int i = 0; i < gp.region_count(); ++i) {
    gp.region_dds.push_back(distance_decomposition(g, gp.centers[i], mask_of(n, gp.regions[i])));
  }
  return gp;
}

VerifyReport check_grouped_partition(const Multigraph& g, const GroupedPartition& gp) {
  VerifyReport report;
  const int n = g.vertex_count();
  const int d = gp.radius;
  std::vector<int> index;
  try {
    index = partition_index(g, gp.regions);
  } catch (const GraphError& e) {
    report.fail(e.what());
    return report;
  }
  if (gp.centers.size() != gp.regions.size() || gp.region_dds.size() != gp.regions.size()) {
    report.fail("centers, regions and decompositions differ in count");
    return report;
  }
  for (int i = 0; i < gp.region_count(); ++i) {
    const auto mask = mask_of(n, gp.regions[i]);
    if (!mask[gp.centers[i]]) report.fail("center of region " + std::to_string(i) + " lies outside it");
    if (!is_connected(g, mask)) {
      report.fail("region " + std::to_string(i) + " is disconnected");
      continue;
    }
    if (eccentricity(g, gp.centers[i], mask) > 2 * d) {
      report.fail("(i) eccentricity of center " + std::to_string(gp.centers[i]) + " exceeds 2d");
    }
    const auto sub = check_dd_invariants(g, gp.region_dds[i]);
    if (!sub) report.fail("region " + std::to_string(i) + " decomposition: " + sub.summary());
    if (gp.region_dds[i].origin != gp.centers[i]) report.fail("decomposition origin is not the center");
  }
  if (!report) return report;
  std::vector<std::vector<int>> dist_to_center;
  for (VertexId s : gp.centers) {
    const VertexId src[] = {s};
    dist_to_center.push_back(bfs_distances(g, src));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const int a = index[ed.u];
    const int b = index[ed.v];
    if (a == b) continue;
    if (dist_to_center[a][ed.u] < d || dist_to_center[b][ed.v] < d) {
      report.fail("(ii) inter-region edge " + std::to_string(e) + " has an endpoint closer than d to its center");
    }
  }
  return report;
}

std::vector<EdgeId> edges_between(const Multigraph& g, const GroupedPartition& gp, int i, int j) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const int a = gp.region_of[ed.u];
    const int b = gp.region_of[ed.v];
    if ((a == i && b == j) || (a == j && b == i)) out.push_back(e);
  }
  return out;
}

namespace {

bool touches_outside(const Multigraph& g, const GroupedPartition& gp, int i, VertexId v) {
  for (const auto& inc : g.incident(v)) {
    if (gp.region_of[inc.neighbor] != i) return true;
  }
  return false;
}

}  // namespace

FrontierReport frontier_report(const Multigraph& g, const GroupedPartition& gp, int i) {
  if (i < 0 || i >= gp.region_count()) throw GraphError("invalid region index " + std::to_string(i));
  const int n = g.vertex_count();
  const int d = gp.radius;
  const auto& dd = gp.region_dds[i];
  FrontierReport report;
  report.region = i;

  // Q: deep vertices that reach the outside through deep vertices only.
  std::vector<char> reaches(static_cast<std::size_t>(n), 0);
  std::deque<VertexId> queue;
  for (VertexId v : gp.regions[i]) {
    if (dd.dist[v] >= d && touches_outside(g, gp, i, v)) {
      reaches[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(x)) {
      const VertexId y = inc.neighbor;
      if (gp.region_of[y] != i || dd.dist[y] < d || reaches[y]) continue;
      reaches[y] = 1;
      queue.push_back(y);
    }
  }
  for (VertexId v : gp.regions[i]) {
    if (dd.dist[v] != d - 1) continue;
    bool hit = false;
    for (const auto& inc : g.incident(v)) {
      const VertexId y = inc.neighbor;
      if (gp.region_of[y] != i || reaches[y]) {
        hit = true;
        break;
      }
    }
    if (hit) report.vertex_frontier.push_back(v);
  }
  for (VertexId v : report.vertex_frontier) report.node_frontier.push_back(dd.node_of[v]);
  std::sort(report.node_frontier.begin(), report.node_frontier.end());
  report.node_frontier.erase(std::unique(report.node_frontier.begin(), report.node_frontier.end()),
                             report.node_frontier.end());

  for (NodeId t = 0; t < dd.node_count(); ++t) {
    if (dd.depth[t] < d - 1) continue;
    for (VertexId v : dd.bag(t)) {
      if (touches_outside(g, gp, i, v)) {
        report.ports.push_back(t);
        break;
      }
    }
  }
  return report;
}

std::vector<VertexId> frontier_by_definition(const Multigraph& g, const GroupedPartition& gp, int i) {
  const int d = gp.radius;
  const auto& dd = gp.region_dds[i];
  std::vector<VertexId> out;
  for (VertexId v : gp.regions[i]) {
    if (dd.dist[v] != d - 1) continue;
    // Walk from v; every vertex after v must be deep until we step outside.
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<VertexId> stack{v};
    seen[v] = 1;
    bool found = false;
    while (!stack.empty() && !found) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : g.neighbors(x)) {
        if (gp.region_of[y] != i) {
          found = true;
          break;
        }
        if (!seen[y] && dd.dist[y] >= d) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    if (found) out.push_back(v);
  }
  return out;
}

std::vector<int> tree_depths(std::span<const NodeId> parent) {
  const int k = static_cast<int>(parent.size());
  std::vector<int> depth(static_cast<std::size_t>(k), -1);
  for (NodeId t = 0; t < k; ++t) {
    std::vector<NodeId> chain;
    NodeId x = t;
    while (x != kNone && depth[x] < 0) {
      chain.push_back(x);
      if (static_cast<int>(chain.size()) > k) throw GraphError("parent array contains a cycle");
      x = parent[x];
      if (x != kNone && (x < 0 || x >= k)) throw GraphError("parent array has an invalid entry");
    }
    int base = x == kNone ? -1 : depth[x];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++base;
  }
  if (std::count(parent.begin(), parent.end(), kNone) != 1) throw GraphError("tree must have exactly one root");
  return depth;
}

namespace {

struct MarkedTree {
  std::vector<int> depth;
  std::vector<char> in_n;
  std::vector<char> has_n;  // subtree meets N
  std::vector<char> critical;
};

MarkedTree mark_tree(std::span<const NodeId> parent, std::span<const NodeId> n_set) {
  const int k = static_cast<int>(parent.size());
  MarkedTree m;
  m.depth = tree_depths(parent);
  m.in_n.assign(static_cast<std::size_t>(k), 0);
  for (NodeId x : n_set) {
    if (x < 0 || x >= k) throw GraphError("N contains invalid node " + std::to_string(x));
    m.in_n[x] = 1;
  }
  for (NodeId x = 0; x < k; ++x) {
    if (!m.in_n[x]) continue;
    for (NodeId a = parent[x]; a != kNone; a = parent[a]) {
      if (m.in_n[a]) {
        throw GraphError("N is not an antichain: " + std::to_string(x) + " descends from " + std::to_string(a));
      }
    }
  }
  std::vector<NodeId> order(static_cast<std::size_t>(k));
  for (NodeId t = 0; t < k; ++t) order[t] = t;
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return m.depth[a] > m.depth[b]; });
  m.has_n = m.in_n;
  std::vector<int> marked_children(static_cast<std::size_t>(k), 0);
  for (NodeId t : order) {
    if (parent[t] == kNone || !m.has_n[t]) continue;
    m.has_n[parent[t]] = 1;
    ++marked_children[parent[t]];
  }
  m.critical.assign(static_cast<std::size_t>(k), 0);
  for (NodeId t = 0; t < k; ++t) m.critical[t] = m.in_n[t] || marked_children[t] >= 2;
  return m;
}

}  // namespace

std::vector<NodeId> critical_vertices(std::span<const NodeId> parent, std::span<const NodeId> n_set) {
  const auto m = mark_tree(parent, n_set);
  std::vector<NodeId> out;
  for (NodeId t = 0; t < static_cast<int>(parent.size()); ++t) {
    if (m.critical[t]) out.push_back(t);
  }
  return out;
}

std::vector<std::vector<NodeId>> unimportant_paths(std::span<const NodeId> parent,
                                                   std::span<const NodeId> n_set) {
  const auto m = mark_tree(parent, n_set);
  const int k = static_cast<int>(parent.size());
  std::vector<std::vector<NodeId>> paths;
  std::vector<char> internal(static_cast<std::size_t>(k), 0);
  for (NodeId c = 0; c < k; ++c) {
    if (!m.critical[c]) continue;
    std::vector<NodeId> path{c};
    NodeId a = parent[c];
    while (a != kNone && !m.critical[a]) {
      path.push_back(a);
      a = parent[a];
    }
    if (a == kNone) continue;
    path.push_back(a);
    std::reverse(path.begin(), path.end());
    for (std::size_t j = 1; j + 1 < path.size(); ++j) {
      if (internal[path[j]]) throw GraphError("internal invariant failure: unimportant paths share an internal node");
      internal[path[j]] = 1;
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

namespace {

bool power_bound(std::size_t count, int d, int k) {
  BigInt lhs = 1;
  for (int j = 0; j < k; ++j) lhs *= count;
  return lhs >= (BigInt(1) << d);
}

void check_path_lengths(std::span<const NodeId> parent, std::span<const NodeId> n_set, int k) {
  for (const auto& path : unimportant_paths(parent, n_set)) {
    if (static_cast<int>(path.size()) - 1 > k) {
      throw GraphError("precondition: unimportant path of length " + std::to_string(path.size() - 1) +
                       " exceeds k=" + std::to_string(k));
    }
  }
}

}  // namespace

bool leaf_lower_bound_check(std::span<const NodeId> parent, std::span<const NodeId> n_set, int d, int k) {
  if (k < 1) throw GraphError("precondition: k must be at least 1");
  if (d < 0) throw GraphError("precondition: d must be nonnegative");
  if (n_set.empty()) throw GraphError("precondition: N is empty");
  const auto depth = tree_depths(parent);
  for (NodeId x : n_set) {
    if (x < 0 || x >= static_cast<int>(parent.size())) throw GraphError("N contains invalid node " + std::to_string(x));
    if (depth[x] < d) {
      throw GraphError("precondition: node " + std::to_string(x) + " of N lies at depth " + std::to_string(depth[x]) +
                       " < d=" + std::to_string(d));
    }
  }
  check_path_lengths(parent, n_set, k);
  std::vector<NodeId> distinct(n_set.begin(), n_set.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  return power_bound(distinct.size(), d, k);
}

bool anchored_leaf_lower_bound_check(std::span<const NodeId> parent, std::span<const NodeId> n_set, int k) {
  if (k < 1) throw GraphError("precondition: k must be at least 1");
  if (n_set.empty()) throw GraphError("precondition: N is empty");
  check_path_lengths(parent, n_set, k);
  const auto critical = critical_vertices(parent, n_set);
  const auto depth = tree_depths(parent);
  NodeId anchor = critical.front();
  for (NodeId c : critical) {
    if (depth[c] < depth[anchor]) anchor = c;
  }
  int reach = -1;
  std::vector<NodeId> distinct(n_set.begin(), n_set.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (NodeId x : distinct) {
    const int below = depth[x] - depth[anchor];
    reach = reach < 0 ? below : std::min(reach, below);
  }
  return power_bound(distinct.size(), reach, k);
}

}  // namespace theta
