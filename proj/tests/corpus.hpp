#pragma once

#include <cstdint>
#include <vector>

#include "theta/graph.hpp"

namespace theta::corpus {

/// Connected simple graphs on n vertices, one per isomorphism class (n ≤ 8).
std::vector<Multigraph> connected_graphs(int n);

/// Every connected graph on 1..max_n vertices.
std::vector<Multigraph> small_connected_graphs(int max_n);

/// Rooted trees on n nodes, one per isomorphism class, as parent arrays in
/// preorder (node 0 is the root).
std::vector<std::vector<int>> rooted_trees(int n);

/// Seeded connected graphs with 2..max_n vertices; even indices are
/// multigraphs with parallel edges, odd indices are simple.
std::vector<Multigraph> random_graphs(int count, int max_n, std::uint64_t seed);

/// Every edge replaced by a path with `extra` internal vertices.
Multigraph subdivide(const Multigraph& g, int extra);

/// A path with `leaves` pendant vertices on each end.
Multigraph double_broom(int path_vertices, int leaves);

/// Long cycles, brooms, ladders and subdivided multigraphs: sparse graphs with large
/// distance-decompositions.
std::vector<Multigraph> structured_graphs();

}  // namespace theta::corpus
