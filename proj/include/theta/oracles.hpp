#pragma once

#include <optional>
#include <vector>

#include "theta/certificates.hpp"
#include "theta/graph.hpp"

namespace theta {

/// Largest n accepted by the exhaustive oracles; THETA_MINER_SIZE_GUARD
/// overrides the default of 14, capped at kHardSizeCap.
int oracle_size_guard();
inline constexpr int kHardSizeCap = 26;

class SizeGuardError : public GraphError {
 public:
  using GraphError::GraphError;
};

struct ThetaGirth {
  std::optional<long long> value;  // empty = infinity
  std::optional<ThetaCertificate> witness;
};

/// Minimum of |A|-1 + |B|-1 + r over disjoint connected A, B joined by at
/// least r edge records.
ThetaGirth brute_theta_girth(const Multigraph& g, int r, int size_guard = -1);

/// Shortest cycle length by BFS from every vertex; 2 for a parallel pair.
std::optional<int> girth_bfs(const Multigraph& g);

/// A shortest cycle as a vertex sequence with its edges; empty for forests.
struct Cycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};
std::optional<Cycle> shortest_cycle(const Multigraph& g);

struct LooseConnectivityWitness {
  std::vector<VertexId> a_side;
  std::vector<VertexId> b_side;
  std::vector<VertexId> separator;
};

struct LooseConnectivity {
  bool loosely_connected = true;
  std::optional<LooseConnectivityWitness> witness;
};

/// Enumerates separators S with |S| < β and splits the components of G−S
/// into two groups by subset-sum; a witness has both strict sides > α.
LooseConnectivity check_loose_connectivity(const Multigraph& g, int alpha, int beta, int size_guard = -1);

/// Exact check of (1/(r−1))·2^{(c^r·log k − 5r)/(4r(2g(2r−2)+1))} >= k(r+1)−1
/// with c = 216 and g(n) = (6^{n−1}−1)/5.
bool check_bound_lemma(int r, int k);

/// δ of the quotient with distinct-neighbour degrees; written without
/// contract_partition so it can cross-check it.
int quotient_min_degree(const Multigraph& g, std::span<const std::vector<VertexId>> parts);

}  // namespace theta
