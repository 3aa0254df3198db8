#pragma once

#include <cstdint>
#include <vector>

#include "theta/certificates.hpp"
#include "theta/graph.hpp"

namespace theta {

/// Grows a maximal path by smallest-id neighbours inside `part` (empty =
/// all vertices); its last vertex v sees >= r path vertices. Branch A is {v},
/// branch B the path segment from v's r-th nearest path neighbour onward.
ThetaCertificate theta_by_maximal_path(const Multigraph& g, int r, std::span<const VertexId> part = {});

struct StiebitzResult {
  std::vector<std::vector<VertexId>> parts;
  std::vector<int> part_of;
  int moves = 0;
  int restarts = 0;
  std::uint64_t seed = 0;  // seed of the initialisation that succeeded; 0 = round-robin
};

/// Local search for k nonempty parts with δ(G[V_i]) >= r. Requires
/// δ(G) >= k(r+1)−1.
StiebitzResult stiebitz_partition(const Multigraph& g, int k, int r, std::uint64_t seed = 1, int max_restarts = 64);

struct PackingCertificate {
  std::vector<ThetaCertificate> models;
  std::vector<int> part_assignment;
  std::uint64_t seed = 0;
  int restarts = 0;
};

PackingCertificate pack_k_theta(const Multigraph& g, int k, int r, std::uint64_t seed = 1);

VerifyReport verify_packing(const Multigraph& g, const PackingCertificate& c, int k, int r);

/// Minimum number of distinct neighbours inside the part, over its vertices.
int internal_min_degree(const Multigraph& g, std::span<const VertexId> part);

}  // namespace theta
