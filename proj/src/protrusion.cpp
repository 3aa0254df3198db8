#include "theta/protrusion.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace theta {

std::vector<VertexId> open_neighborhood(const Multigraph& g, std::span<const VertexId> y) {
  const auto inside = mask_of(g.vertex_count(), y);
  std::vector<VertexId> out;
  for (VertexId v : y) {
    for (const auto& inc : g.incident(v)) {
      if (!inside[inc.neighbor]) out.push_back(inc.neighbor);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ProtrusionCertificate fold_tree_path(const Multigraph& g, const DistanceDecomposition& dd,
                                     std::span<const NodeId> path, int t) {
  const int p = static_cast<int>(path.size()) - 1;
  if (p < 2) throw GraphError("fold needs a path with at least 2 edges");
  for (int j = 0; j < p; ++j) {
    if (dd.parent(path[j + 1]) != path[j]) throw GraphError("fold path is not a top-down tree path");
  }
  const NodeId t0 = path.front();
  const NodeId tp = path.back();
  const int k = dd.node_count();

  std::vector<char> keep(static_cast<std::size_t>(k), 0);
  keep[t0] = 1;
  for (NodeId x : dd.subtree_nodes(path[1])) keep[x] = 1;
  for (NodeId x : dd.subtree_nodes(tp)) {
    if (x != tp) keep[x] = 0;
  }

  ProtrusionCertificate c;
  for (NodeId x = 0; x < k; ++x) {
    if (!keep[x] || x == t0 || x == tp) continue;
    c.y.insert(c.y.end(), dd.bag(x).begin(), dd.bag(x).end());
  }
  std::sort(c.y.begin(), c.y.end());
  c.boundary = open_neighborhood(g, c.y);
  for (VertexId v : c.boundary) {
    if (dd.node_of[v] != t0 && dd.node_of[v] != tp) {
      throw GraphError("fold boundary vertex " + std::to_string(v) + " lies outside X_t0 and X_tp");
    }
  }

  // Classes 0..h are the identified pairs; the rest follow in BFS order.
  std::vector<int> cls(static_cast<std::size_t>(k), kNone);
  const int h = (p - 1) / 2;
  for (int j = 0; j <= h; ++j) {
    cls[path[j]] = j;
    cls[path[p - j]] = j;
  }
  int next = h + 1;
  const auto kids = dd.base.children();
  std::deque<NodeId> queue{t0};
  std::vector<NodeId> visit_order;
  while (!queue.empty()) {
    const NodeId x = queue.front();
    queue.pop_front();
    visit_order.push_back(x);
    if (cls[x] == kNone) cls[x] = next++;
    for (NodeId ch : kids[x]) {
      if (keep[ch] && (x != t0 || ch == path[1])) queue.push_back(ch);
    }
  }

  auto& tp_out = c.tree_partition;
  tp_out.root = 0;
  tp_out.bags.assign(static_cast<std::size_t>(next), {});
  tp_out.parent.assign(static_cast<std::size_t>(next), kNone);
  std::set<std::pair<int, int>> edges;
  for (NodeId x : visit_order) {
    if (x != t0 && x != tp) {
      auto& bag = tp_out.bags[cls[x]];
      bag.insert(bag.end(), dd.bag(x).begin(), dd.bag(x).end());
    }
    if (x == t0) continue;
    const int a = cls[x];
    const int b = cls[dd.parent(x)];
    if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
  }
  tp_out.bags[0] = c.boundary;
  for (auto& bag : tp_out.bags) std::sort(bag.begin(), bag.end());

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(next));
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(static_cast<std::size_t>(next), 0);
  std::deque<int> bfs{0};
  seen[0] = 1;
  int reached = 1;
  while (!bfs.empty()) {
    const int x = bfs.front();
    bfs.pop_front();
    for (int y : adj[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      tp_out.parent[y] = x;
      ++reached;
      bfs.push_back(y);
    }
  }
  if (reached != next || static_cast<int>(edges.size()) != next - 1) {
    throw GraphError("internal invariant failure: folded tree is not a tree");
  }

  c.t = t;
  c.extension = next;
  c.folded_path_length = p / 2;
  std::vector<VertexId> closed = c.y;
  closed.insert(closed.end(), c.boundary.begin(), c.boundary.end());
  c.connected = induces_connected(g, closed);
  return c;
}

ProtrusionCertificate fold_unimportant_path(const Multigraph& g, const GroupedPartition& gp, int i,
                                            std::span<const NodeId> path, int r, int w) {
  if (i < 0 || i >= gp.region_count()) throw GraphError("invalid region index " + std::to_string(i));
  if (r < 1 || w < 0) throw GraphError("fold needs r >= 1 and w >= 0");
  const auto& dd = gp.region_dds[i];
  const int p = static_cast<int>(path.size()) - 1;
  if (p < 2 * (w + 1)) {
    throw GraphError("precondition: path length " + std::to_string(p) + " is below 2(w+1)=" +
                     std::to_string(2 * (w + 1)));
  }
  for (NodeId x = 1; x < dd.node_count(); ++x) {
    if (static_cast<int>(dd.parent_edges[x].size()) > r - 1) {
      throw GraphError("precondition: |E^(t)| >= r at node " + std::to_string(x));
    }
  }
  const auto frontier = frontier_report(g, gp, i);
  const auto paths = unimportant_paths(dd.base.parent, frontier.node_frontier);
  const std::vector<NodeId> wanted(path.begin(), path.end());
  if (std::find(paths.begin(), paths.end(), wanted) == paths.end()) {
    throw GraphError("precondition: path is not an N_i-unimportant path of T_i");
  }
  auto c = fold_tree_path(g, dd, path, 2 * r - 2);
  const int width = tree_partition_width(g, c.tree_partition);
  if (width > 2 * r - 2) {
    throw GraphError("internal invariant failure: folded width " + std::to_string(width) + " exceeds 2r-2");
  }
  return c;
}

ProtrusionCertificate global_protrusion(const Multigraph& g, VertexId s) {
  if (g.vertex_count() < 2) throw GraphError("global protrusion needs at least 2 vertices");
  const auto dd = distance_decomposition(g, s);
  ProtrusionCertificate c;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v != s) c.y.push_back(v);
  }
  c.boundary = open_neighborhood(g, c.y);
  c.tree_partition = dd.base;
  for (auto& bag : c.tree_partition.bags) std::sort(bag.begin(), bag.end());
  c.t = tree_partition_width(g, c.tree_partition);
  c.extension = dd.node_count();
  c.folded_path_length = dd.height;
  c.connected = is_connected(g);
  return c;
}

VerifyReport verify_protrusion(const Multigraph& g, const ProtrusionCertificate& c, int t, int w,
                               bool require_connected) {
  VerifyReport report;
  for (VertexId v : c.y) {
    if (!g.valid_vertex(v)) {
      report.fail("Y holds invalid vertex " + std::to_string(v));
      return report;
    }
  }
  if (c.y.empty()) report.fail("Y is empty");
  std::vector<VertexId> y_sorted = c.y;
  std::sort(y_sorted.begin(), y_sorted.end());
  if (std::adjacent_find(y_sorted.begin(), y_sorted.end()) != y_sorted.end()) report.fail("Y repeats a vertex");
  const auto boundary = open_neighborhood(g, y_sorted);
  std::vector<VertexId> claimed = c.boundary;
  std::sort(claimed.begin(), claimed.end());
  if (claimed != boundary) report.fail("boundary is not N_G(Y)");

  std::vector<VertexId> closed = y_sorted;
  closed.insert(closed.end(), boundary.begin(), boundary.end());
  std::sort(closed.begin(), closed.end());
  const auto tp_report = check_tree_partition(g, c.tree_partition, closed);
  if (!tp_report) {
    for (const auto& v : tp_report.violations) report.fail("tree-partition: " + v);
    return report;
  }
  std::vector<VertexId> root_bag = c.tree_partition.bags[c.tree_partition.root];
  std::sort(root_bag.begin(), root_bag.end());
  if (root_bag != boundary) report.fail("root bag is not N_G(Y)");

  const int width = tree_partition_width(g, c.tree_partition);
  if (width > c.t) report.fail("width " + std::to_string(width) + " exceeds claimed t=" + std::to_string(c.t));
  if (c.t > t) report.fail("claimed t=" + std::to_string(c.t) + " exceeds allowed " + std::to_string(t));
  if (c.extension != c.tree_partition.node_count()) report.fail("extension is not the node count");
  if (c.extension <= w) {
    report.fail("extension " + std::to_string(c.extension) + " is not more than w=" + std::to_string(w));
  }
  const bool connected = induces_connected(g, closed);
  if ((c.connected || require_connected) && !connected) report.fail("Y ∪ N_G(Y) is not connected");
  return report;
}

}  // namespace theta
