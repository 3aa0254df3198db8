#pragma once

#include <cstdint>

#include "theta/graph.hpp"

namespace theta {

Multigraph path_graph(int n);
Multigraph cycle_graph(int n);
Multigraph complete_graph(int n);
/// Two vertices joined by r parallel edges.
Multigraph theta_graph(int r);
Multigraph grid_graph(int rows, int cols);
Multigraph petersen_graph();

/// The 9-vertex, 11-edge graph of the distance-decomposition figure; u_i is vertex i.
Multigraph figure2_graph();

/// Pairing model, rejecting pairs that would form a loop or a parallel edge
/// and restarting when no legal pair remains. Edges sorted. Throws when n·d
/// is odd or d >= n.
Multigraph random_regular(int n, int d, std::uint64_t seed);

/// Connected multigraph: a random spanning tree plus m-n+1 random extra
/// edges, parallels allowed.
Multigraph random_multigraph(int n, int m, std::uint64_t seed);

/// Connected simple graph with n vertices and m edges.
Multigraph random_simple_connected(int n, int m, std::uint64_t seed);

}  // namespace theta
