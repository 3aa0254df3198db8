#pragma once

#include <vector>

#include "theta/decomposition.hpp"

namespace theta {

/// Greedy maximal set with pairwise distance > spread, scanning ids upward.
std::vector<VertexId> maximal_scattered_set(const Multigraph& g, int spread);

struct GroupedPartition {
  std::vector<std::vector<VertexId>> regions;  // each sorted
  std::vector<VertexId> centers;
  int radius = 0;
  std::vector<DistanceDecomposition> region_dds;
  std::vector<int> region_of;  // per vertex

  int region_count() const noexcept { return static_cast<int>(regions.size()); }
};

/// d-grouped partition by round-synchronous growth from a maximal
/// 2d-scattered set; a single region when diam(G) <= 2d.
GroupedPartition grouped_partition(const Multigraph& g, int d);

/// Exhaustive check of the grouped-partition definition and region decompositions.
VerifyReport check_grouped_partition(const Multigraph& g, const GroupedPartition& gp);

/// Edge records between two regions, ascending.
std::vector<EdgeId> edges_between(const Multigraph& g, const GroupedPartition& gp, int i, int j);

struct FrontierReport {
  int region = 0;
  std::vector<VertexId> vertex_frontier;  // F_i
  std::vector<NodeId> node_frontier;      // N_i
  std::vector<NodeId> ports;
};

FrontierReport frontier_report(const Multigraph& g, const GroupedPartition& gp, int i);

/// Literal-definition frontier: for each vertex of V^{d-1}, search for a
/// path to the outside through V^{>=d}. Independent of frontier_report.
std::vector<VertexId> frontier_by_definition(const Multigraph& g, const GroupedPartition& gp, int i);

// Rooted trees are given as parent arrays; the root is the unique node
// whose parent is kNone.

std::vector<int> tree_depths(std::span<const NodeId> parent);

/// N plus every node with two children whose subtrees meet N. Sorted.
std::vector<NodeId> critical_vertices(std::span<const NodeId> parent, std::span<const NodeId> n_set);

/// Every path between a critical node and its nearest critical proper
/// ancestor, listed top-down; ordered by the lower endpoint.
std::vector<std::vector<NodeId>> unimportant_paths(std::span<const NodeId> parent,
                                                   std::span<const NodeId> n_set);

/// |N| >= 2^{d/k}, i.e. |N|^k >= 2^d, under the lemma's preconditions
/// (N at depth >= d, unimportant paths of length <= k). Throws on violation.
bool leaf_lower_bound_check(std::span<const NodeId> parent, std::span<const NodeId> n_set, int d, int k);

/// Corrected form: depths measured from the topmost critical node, the
/// lowest common ancestor of N. Checks |N|^k >= 2^{d'} where d' is the
/// smallest depth of an N node below that anchor.
bool anchored_leaf_lower_bound_check(std::span<const NodeId> parent, std::span<const NodeId> n_set, int k);

}  // namespace theta
