#include "theta/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace theta {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<std::vector<NodeId>> RootedTreePartition::children() const {
  std::vector<std::vector<NodeId>> out(parent.size());
  for (NodeId t = 0; t < node_count(); ++t) {
    if (parent[t] != kNone) out[parent[t]].push_back(t);
  }
  return out;
}

std::vector<VertexId> RootedTreePartition::covered() const {
  std::vector<VertexId> out;
  for (const auto& bag : bags) out.insert(out.end(), bag.begin(), bag.end());
  std::sort(out.begin(), out.end());
  return out;
}

int tree_partition_width(const Multigraph& g, const RootedTreePartition& tp) {
  std::vector<NodeId> node(static_cast<std::size_t>(g.vertex_count()), kNone);
  int width = 0;
  for (NodeId t = 0; t < tp.node_count(); ++t) {
    width = std::max(width, static_cast<int>(tp.bags[t].size()));
    for (VertexId v : tp.bags[t]) node[v] = t;
  }
  std::map<std::pair<NodeId, NodeId>, int> across;
  for (const Edge& e : g.edges()) {
    const NodeId a = node[e.u];
    const NodeId b = node[e.v];
    if (a == kNone || b == kNone || a == b) continue;
    width = std::max(width, ++across[{std::min(a, b), std::max(a, b)}]);
  }
  return width;
}

VerifyReport check_tree_partition(const Multigraph& g, const RootedTreePartition& tp,
                                  std::span<const VertexId> vertices) {
  VerifyReport report;
  const int k = tp.node_count();
  if (k == 0) {
    report.fail("tree has no nodes");
    return report;
  }
  if (static_cast<int>(tp.parent.size()) != k) {
    report.fail("parent array and bag list differ in length");
    return report;
  }
  if (tp.root < 0 || tp.root >= k || tp.parent[tp.root] != kNone) {
    report.fail("root " + std::to_string(tp.root) + " is invalid or has a parent");
    return report;
  }
  for (NodeId t = 0; t < k; ++t) {
    if (t == tp.root) continue;
    if (tp.parent[t] < 0 || tp.parent[t] >= k) {
      report.fail("node " + std::to_string(t) + " has an invalid parent");
      return report;
    }
  }
  // Every node must reach the root without revisiting.
  for (NodeId t = 0; t < k; ++t) {
    NodeId x = t;
    for (int steps = 0; x != tp.root; ++steps) {
      if (steps > k) {
        report.fail("parent pointers contain a cycle through node " + std::to_string(t));
        return report;
      }
      x = tp.parent[x];
    }
  }

  std::vector<NodeId> node(static_cast<std::size_t>(g.vertex_count()), kNone);
  for (NodeId t = 0; t < k; ++t) {
    if (tp.bags[t].empty()) report.fail("bag " + std::to_string(t) + " is empty");
    for (VertexId v : tp.bags[t]) {
      if (!g.valid_vertex(v)) {
        report.fail("bag " + std::to_string(t) + " holds invalid vertex " + std::to_string(v));
        return report;
      }
      if (node[v] != kNone) report.fail("vertex " + std::to_string(v) + " lies in two bags");
      node[v] = t;
    }
  }
  const auto inside = mask_of(g.vertex_count(), vertices);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (inside[v] && node[v] == kNone) report.fail("vertex " + std::to_string(v) + " is in no bag");
    if (!inside[v] && node[v] != kNone) {
      report.fail("vertex " + std::to_string(v) + " is bagged but not covered");
    }
  }
  if (!report || k == 1) return report;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (!inside[ed.u] || !inside[ed.v]) continue;
    const NodeId a = node[ed.u];
    const NodeId b = node[ed.v];
    if (a == b || tp.parent[a] == b || tp.parent[b] == a) continue;
    report.fail("edge " + std::to_string(e) + " joins non-adjacent bags " + std::to_string(a) + " and " +
                std::to_string(b));
    return report;
  }
  return report;
}

VertexMask DistanceDecomposition::subtree_mask(NodeId t) const {
  VertexMask mask(node_of.size(), 0);
  for (NodeId x : subtree_nodes(t)) {
    for (VertexId v : bag(x)) mask[v] = 1;
  }
  return mask;
}

std::vector<NodeId> DistanceDecomposition::subtree_nodes(NodeId t) const {
  // BFS numbering puts every descendant after its ancestor.
  std::vector<char> below(static_cast<std::size_t>(node_count()), 0);
  below[t] = 1;
  std::vector<NodeId> out{t};
  for (NodeId x = t + 1; x < node_count(); ++x) {
    if (below[parent(x)]) {
      below[x] = 1;
      out.push_back(x);
    }
  }
  return out;
}

bool DistanceDecomposition::is_descendant(NodeId x, NodeId ancestor) const {
  while (x != kNone) {
    if (x == ancestor) return true;
    x = parent(x);
  }
  return false;
}

DistanceDecomposition distance_decomposition(const Multigraph& g, VertexId origin, const VertexMask& region) {
  if (!g.valid_vertex(origin)) throw GraphError("invalid origin " + std::to_string(origin));
  if (!region.empty() && (static_cast<int>(region.size()) != g.vertex_count() || !region[origin])) {
    throw GraphError("origin lies outside the region");
  }
  const int n = g.vertex_count();
  DistanceDecomposition dd;
  dd.origin = origin;
  dd.region = region;
  const VertexId src[] = {origin};
  dd.dist = bfs_distances(g, src, region);
  int height = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (!dd.in_region(v)) continue;
    if (dd.dist[v] < 0) throw GraphError("graph is disconnected: vertex " + std::to_string(v) + " is unreachable");
    height = std::max(height, dd.dist[v]);
  }
  dd.height = height;

  std::vector<std::vector<VertexId>> layer(static_cast<std::size_t>(height) + 1);
  for (VertexId v = 0; v < n; ++v) {
    if (dd.in_region(v)) layer[dd.dist[v]].push_back(v);
  }

  // Activate layers bottom-up; after layer h is active, each component that
  // meets layer h is one node at depth h.
  UnionFind uf(n);
  std::vector<char> active(static_cast<std::size_t>(n), 0);
  // raw node per (depth, component representative), with parent links filled
  // once the next layer up is merged in.
  struct RawNode {
    int depth;
    std::vector<VertexId> bag;
    VertexId anchor;
    int parent = kNone;
  };
  std::vector<RawNode> raw;
  std::vector<int> raw_of(static_cast<std::size_t>(n), kNone);
  std::vector<int> pending;  // raw nodes of the layer below awaiting a parent
  for (int h = height; h >= 0; --h) {
    for (VertexId v : layer[h]) {
      active[v] = 1;
      for (const auto& inc : g.incident(v)) {
        if (active[inc.neighbor]) uf.unite(v, inc.neighbor);
      }
    }
    std::map<int, int> node_of_rep;
    for (VertexId v : layer[h]) {
      const int rep = uf.find(v);
      auto [it, fresh] = node_of_rep.try_emplace(rep, static_cast<int>(raw.size()));
      if (fresh) raw.push_back({h, {}, v});
      raw[it->second].bag.push_back(v);
      raw_of[v] = it->second;
    }
    for (int child : pending) raw[child].parent = node_of_rep.at(uf.find(raw[child].anchor));
    pending.clear();
    for (const auto& [rep, id] : node_of_rep) pending.push_back(id);
  }

  // Relabel in BFS order, children by smallest bag vertex.
  std::vector<std::vector<int>> raw_children(raw.size());
  int raw_root = kNone;
  for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
    if (raw[i].parent == kNone) raw_root = i;
    else raw_children[raw[i].parent].push_back(i);
  }
  for (auto& kids : raw_children) {
    std::sort(kids.begin(), kids.end(), [&](int a, int b) { return raw[a].bag.front() < raw[b].bag.front(); });
  }
  std::vector<int> label(raw.size(), kNone);
  std::vector<int> order{raw_root};
  for (std::size_t i = 0; i < order.size(); ++i) {
    label[order[i]] = static_cast<int>(i);
    for (int c : raw_children[order[i]]) order.push_back(c);
  }

  const int k = static_cast<int>(raw.size());
  dd.base.root = 0;
  dd.base.parent.assign(k, kNone);
  dd.base.bags.assign(k, {});
  dd.depth.assign(k, 0);
  for (int i = 0; i < k; ++i) {
    const int t = label[i];
    dd.base.parent[t] = raw[i].parent == kNone ? kNone : label[raw[i].parent];
    dd.base.bags[t] = raw[i].bag;
    dd.depth[t] = raw[i].depth;
  }
  dd.node_of.assign(static_cast<std::size_t>(n), kNone);
  for (VertexId v = 0; v < n; ++v) {
    if (raw_of[v] != kNone) dd.node_of[v] = label[raw_of[v]];
  }

  dd.parent_edges.assign(k, {});
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (!dd.in_region(ed.u) || !dd.in_region(ed.v)) continue;
    const NodeId a = dd.node_of[ed.u];
    const NodeId b = dd.node_of[ed.v];
    if (dd.parent(a) == b) dd.parent_edges[a].push_back(e);
    else if (dd.parent(b) == a) dd.parent_edges[b].push_back(e);
  }

  dd.node_height.assign(k, 0);
  for (NodeId t = k - 1; t > 0; --t) {
    const NodeId p = dd.parent(t);
    dd.node_height[p] = std::max(dd.node_height[p], dd.node_height[t] + 1);
  }
  return dd;
}

VerifyReport check_dd_invariants(const Multigraph& g, const DistanceDecomposition& dd) {
  VerifyReport report;
  const int n = g.vertex_count();
  std::vector<VertexId> region;
  for (VertexId v = 0; v < n; ++v) {
    if (dd.in_region(v)) region.push_back(v);
  }
  report = check_tree_partition(g, dd.base, region);
  if (!report) return report;
  if (dd.base.root != 0) {
    report.fail("root is not node 0");
    return report;
  }
  if (dd.bag(0).size() != 1 || dd.bag(0).front() != dd.origin) {
    report.fail("(i) root bag is not {origin}");
    return report;
  }
  const int k = dd.node_count();
  if (static_cast<int>(dd.depth.size()) != k || static_cast<int>(dd.parent_edges.size()) != k) {
    report.fail("per-node arrays have the wrong length");
    return report;
  }

  std::vector<int> tree_depth(static_cast<std::size_t>(k), 0);
  for (NodeId t = 0; t < k; ++t) {
    int steps = 0;
    for (NodeId x = t; x != 0; x = dd.parent(x)) ++steps;
    tree_depth[t] = steps;
    if (dd.depth[t] != steps) report.fail("stored depth of node " + std::to_string(t) + " is wrong");
  }
  const VertexId src[] = {dd.origin};
  const auto dist = bfs_distances(g, src, dd.region);
  std::vector<NodeId> node(static_cast<std::size_t>(n), kNone);
  for (NodeId t = 0; t < k; ++t) {
    for (VertexId x : dd.bag(t)) {
      node[x] = t;
      if (dist[x] != tree_depth[t]) {
        report.fail("(ii) vertex " + std::to_string(x) + " at distance " + std::to_string(dist[x]) +
                    " sits in a bag of depth " + std::to_string(tree_depth[t]));
        return report;
      }
    }
  }

  const auto kids = dd.base.children();
  for (NodeId t = 0; t < k; ++t) {
    // Collect G_t from the tree directly rather than trusting subtree_nodes.
    std::vector<char> below(static_cast<std::size_t>(k), 0);
    std::deque<NodeId> queue{t};
    below[t] = 1;
    while (!queue.empty()) {
      const NodeId x = queue.front();
      queue.pop_front();
      for (NodeId c : kids[x]) {
        below[c] = 1;
        queue.push_back(c);
      }
    }
    VertexMask gt(static_cast<std::size_t>(n), 0);
    std::vector<VertexId> gt_vertices;
    for (NodeId x = 0; x < k; ++x) {
      if (!below[x]) continue;
      for (VertexId v : dd.bag(x)) {
        gt[v] = 1;
        gt_vertices.push_back(v);
      }
    }
    if (!is_connected(g, gt)) {
      report.fail("(iii) G_" + std::to_string(t) + " is disconnected");
      return report;
    }
    // (iv): components of G_t \ X_t must be exactly the child subtrees.
    VertexMask rest = gt;
    for (VertexId v : dd.bag(t)) rest[v] = 0;
    std::vector<int> comp(static_cast<std::size_t>(n), kNone);
    int comps = 0;
    for (VertexId v : gt_vertices) {
      if (!rest[v] || comp[v] != kNone) continue;
      const VertexId s[] = {v};
      const auto reach = bfs_distances(g, s, rest);
      for (VertexId x = 0; x < n; ++x) {
        if (reach[x] >= 0) comp[x] = comps;
      }
      ++comps;
    }
    if (comps != static_cast<int>(kids[t].size())) {
      report.fail("(iv) node " + std::to_string(t) + " has " + std::to_string(kids[t].size()) +
                  " children but G_t minus X_t has " + std::to_string(comps) + " components");
      return report;
    }
    for (NodeId c : kids[t]) {
      const auto child_mask = dd.subtree_mask(c);
      const int id = comp[dd.bag(c).front()];
      for (VertexId x = 0; x < n; ++x) {
        if ((child_mask[x] != 0) != (rest[x] && comp[x] == id)) {
          report.fail("(iv) child " + std::to_string(c) + " of node " + std::to_string(t) +
                      " is not a component of G_t minus X_t");
          return report;
        }
      }
    }
  }

  for (NodeId t = 0; t < k; ++t) {
    std::vector<EdgeId> expected;
    if (t != 0) {
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (node[ed.u] == kNone || node[ed.v] == kNone) continue;
        const bool ab = node[ed.u] == t && node[ed.v] == dd.parent(t);
        const bool ba = node[ed.v] == t && node[ed.u] == dd.parent(t);
        if (ab || ba) expected.push_back(e);
      }
    }
    if (expected != dd.parent_edges[t]) {
      report.fail("E^(t) of node " + std::to_string(t) + " is wrong");
      return report;
    }
  }
  return report;
}

EdgeId predecessor_edge(const Multigraph& g, const DistanceDecomposition& dd, VertexId v) {
  for (const auto& inc : g.incident(v)) {
    if (dd.in_region(inc.neighbor) && dd.dist[inc.neighbor] == dd.dist[v] - 1) return inc.edge;
  }
  throw GraphError("vertex " + std::to_string(v) + " has no predecessor");
}

VertexPath path_to_origin(const Multigraph& g, const DistanceDecomposition& dd, VertexId v) {
  VertexPath path;
  path.vertices.push_back(v);
  while (v != dd.origin) {
    const EdgeId e = predecessor_edge(g, dd, v);
    v = g.other_end(e, v);
    path.edges.push_back(e);
    path.vertices.push_back(v);
  }
  return path;
}

VertexPath bounded_escape_path(const Multigraph& g, const DistanceDecomposition& dd, NodeId t,
                               std::span<const VertexId> u_side) {
  if (t == 0) throw GraphError("escape paths are defined for non-root nodes only");
  const auto& xt = dd.bag(t);
  std::vector<char> in_u(static_cast<std::size_t>(g.vertex_count()), 0);
  for (VertexId v : u_side) {
    if (!g.valid_vertex(v) || dd.node_of[v] != t) throw GraphError("U is not a subset of X_t");
    in_u[v] = 1;
  }
  const auto u_count = std::count(in_u.begin(), in_u.end(), 1);
  if (u_count == 0 || u_count >= static_cast<long>(xt.size())) throw GraphError("U must be a proper nonempty subset of X_t");

  const auto gt = dd.subtree_mask(t);
  std::vector<EdgeId> via(static_cast<std::size_t>(g.vertex_count()), kNone);
  std::vector<int> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::deque<VertexId> queue;
  std::vector<VertexId> sources(u_side.begin(), u_side.end());
  std::sort(sources.begin(), sources.end());
  for (VertexId s : sources) {
    if (seen[s]) continue;
    seen[s] = 1;
    queue.push_back(s);
  }
  VertexId hit = kNone;
  while (!queue.empty() && hit == kNone) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(x)) {
      const VertexId y = inc.neighbor;
      if (!gt[y] || seen[y]) continue;
      seen[y] = 1;
      via[y] = inc.edge;
      if (dd.node_of[y] == t && !in_u[y]) {
        hit = y;
        break;
      }
      queue.push_back(y);
    }
  }
  if (hit == kNone) throw GraphError("internal invariant failure: X_t \\ U unreachable inside G_t");

  VertexPath path;
  for (VertexId v = hit;;) {
    path.vertices.push_back(v);
    if (via[v] == kNone) break;
    path.edges.push_back(via[v]);
    v = g.other_end(via[v], v);
  }
  std::reverse(path.vertices.begin(), path.vertices.end());
  std::reverse(path.edges.begin(), path.edges.end());

  const int bound = 2 * dd.node_height[t] + 1;
  if (path.length() > bound) {
    throw GraphError("escape path of length " + std::to_string(path.length()) + " exceeds 2h+1=" +
                     std::to_string(bound));
  }
  // Depth profile: strictly down, at most one level step, strictly up.
  int phase = 0;
  int level_steps = 0;
  for (std::size_t i = 1; i < path.vertices.size(); ++i) {
    const int step = dd.dist[path.vertices[i]] - dd.dist[path.vertices[i - 1]];
    if (step > 0 && phase != 0) throw GraphError("escape path is not straight");
    if (step == 0) {
      if (++level_steps > 1 || phase == 2) throw GraphError("escape path is not straight");
      phase = 1;
    }
    if (step < 0) phase = 2;
  }
  return path;
}

}  // namespace theta
