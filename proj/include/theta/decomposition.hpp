#pragma once

#include <vector>

#include "theta/certificates.hpp"
#include "theta/graph.hpp"

namespace theta {

using NodeId = int;

/// Rooted tree over nodes 0..k-1 with one bag per node. The bags partition
/// the covered vertex set, which need not be all of V(G).
struct RootedTreePartition {
  std::vector<NodeId> parent;  // parent[root] == kNone
  std::vector<std::vector<VertexId>> bags;
  NodeId root = 0;

  int node_count() const noexcept { return static_cast<int>(bags.size()); }
  std::vector<std::vector<NodeId>> children() const;
  std::vector<VertexId> covered() const;
};

/// Width as max(|X_t|, |E_f|) over G[covered]. Assumes a valid partition.
int tree_partition_width(const Multigraph& g, const RootedTreePartition& tp);

/// Checks that the bags partition `vertices`, the tree is a tree rooted at
/// tp.root, and every edge of G[vertices] lies in one bag or adjacent bags.
VerifyReport check_tree_partition(const Multigraph& g, const RootedTreePartition& tp,
                                  std::span<const VertexId> vertices);

/// BFS-layered decomposition of G[region] with a single-vertex root bag.
/// Nodes are numbered in BFS order of the tree, children ordered by the
/// smallest vertex of their bag; node 0 is the root.
struct DistanceDecomposition {
  RootedTreePartition base;
  VertexId origin = kNone;
  std::vector<int> depth;                      // per node
  std::vector<std::vector<EdgeId>> parent_edges;  // E^(t), ascending; empty for the root
  std::vector<int> node_height;                // height of the subtree below each node
  std::vector<NodeId> node_of;                 // per vertex, kNone outside the region
  std::vector<int> dist;                       // per vertex distance to origin in G[region]
  VertexMask region;                           // empty = whole graph
  int height = 0;

  int node_count() const noexcept { return base.node_count(); }
  const std::vector<VertexId>& bag(NodeId t) const { return base.bags.at(static_cast<std::size_t>(t)); }
  NodeId parent(NodeId t) const { return base.parent.at(static_cast<std::size_t>(t)); }
  bool in_region(VertexId v) const { return region.empty() || region[static_cast<std::size_t>(v)] != 0; }

  /// Vertex mask of G_t, the union of bags below and including t.
  VertexMask subtree_mask(NodeId t) const;
  std::vector<NodeId> subtree_nodes(NodeId t) const;
  bool is_descendant(NodeId x, NodeId ancestor) const;
};

/// Throws GraphError if G[region] is disconnected or origin lies outside it.
DistanceDecomposition distance_decomposition(const Multigraph& g, VertexId origin,
                                             const VertexMask& region = {});

/// Re-derives distances, G_t connectivity, child components and E^(t).
VerifyReport check_dd_invariants(const Multigraph& g, const DistanceDecomposition& dd);

struct VertexPath {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  int length() const noexcept { return static_cast<int>(edges.size()); }
};

/// Shortest path inside G_t from U to X_t \ U. Length is at most
/// 2·node_height(t)+1, and the depth profile descends strictly, takes at
/// most one level edge, then ascends strictly; both are asserted.
VertexPath bounded_escape_path(const Multigraph& g, const DistanceDecomposition& dd, NodeId t,
                               std::span<const VertexId> u_side);

/// Smallest-id edge from v to a vertex one layer closer to the origin.
EdgeId predecessor_edge(const Multigraph& g, const DistanceDecomposition& dd, VertexId v);

/// Chain of predecessor edges from v up to the origin.
VertexPath path_to_origin(const Multigraph& g, const DistanceDecomposition& dd, VertexId v);

}  // namespace theta
