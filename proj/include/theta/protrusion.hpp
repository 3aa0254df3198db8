#pragma once

#include <vector>

#include "theta/partitioner.hpp"

namespace theta {

/// Edge-protrusion Y with a rooted tree-partition of G[Y ∪ N_G(Y)] whose
/// root bag is N_G(Y).
struct ProtrusionCertificate {
  std::vector<VertexId> y;
  std::vector<VertexId> boundary;
  RootedTreePartition tree_partition;
  int t = 0;
  int extension = 0;           // node count of the tree
  int folded_path_length = 0;  // length of the path left after folding
  bool connected = false;
};

/// Folds the top-down tree path t_0..t_p of `dd` (p >= 2) by identifying
/// t_j with t_{p-j} for j <= ⌊(p-1)/2⌋. Y is the union of bags below t_0
/// along the path, excluding X_{t_0}, X_{t_p} and everything under t_p.
/// `t` is the width recorded on the certificate.
ProtrusionCertificate fold_tree_path(const Multigraph& g, const DistanceDecomposition& dd,
                                     std::span<const NodeId> path, int t);

/// Lemma-checked fold of an N_i-unimportant path of T_i.
ProtrusionCertificate fold_unimportant_path(const Multigraph& g, const GroupedPartition& gp, int i,
                                            std::span<const NodeId> path, int r, int w);

/// Y = V \ {s} with the whole-graph decomposition from s as tree-partition.
ProtrusionCertificate global_protrusion(const Multigraph& g, VertexId s);

/// Checks the definition: boundary = N_G(Y), valid tree-partition of
/// G[Y ∪ N_G(Y)] rooted at the boundary, width <= c.t <= t, extension = node
/// count > w, and connectivity when claimed or required.
VerifyReport verify_protrusion(const Multigraph& g, const ProtrusionCertificate& c, int t, int w,
                               bool require_connected = false);

std::vector<VertexId> open_neighborhood(const Multigraph& g, std::span<const VertexId> y);

}  // namespace theta
