#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace theta {

using VertexId = int;
using EdgeId = int;

inline constexpr int kNone = -1;

/// Raised for malformed graphs and invalid arguments to graph operations.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation's parameters fall outside their legal range.
class ParameterError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Raised by the edge-list reader; carries the 1-based line number.
class ParseError : public GraphError {
 public:
  ParseError(int line, const std::string& what);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
};

struct Incidence {
  VertexId neighbor = 0;
  EdgeId edge = 0;
};

/// Undirected loopless multigraph. Vertices are 0..n-1, edges 0..m-1 in
/// insertion order. Parallel edges are distinct records. Immutable once built.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Incidences of v in ascending edge id.
  std::span<const Incidence> incident(VertexId v) const;

  /// Number of distinct neighbours; parallel edges count once.
  int degree(VertexId v) const;

  /// Number of incident edge records (parallel edges counted separately).
  int incident_edge_count(VertexId v) const;

  /// Distinct neighbours of v in ascending id.
  std::vector<VertexId> neighbors(VertexId v) const;

  VertexId other_end(EdgeId e, VertexId v) const;

  bool valid_vertex(VertexId v) const noexcept { return v >= 0 && v < vertex_count(); }
  bool valid_edge(EdgeId e) const noexcept { return e >= 0 && e < edge_count(); }

  /// Minimum distinct-neighbour degree; 0 for the empty graph.
  int min_degree() const;

  friend bool operator==(const Multigraph& a, const Multigraph& b);

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

Multigraph read_edge_list(std::istream& in);
Multigraph parse_edge_list(std::string_view text);
std::string to_edge_list(const Multigraph& g);

/// Vertex membership mask; an empty mask means "every vertex".
using VertexMask = std::vector<char>;

VertexMask mask_of(int vertex_count, std::span<const VertexId> vertices);

/// BFS distances from `sources` restricted to `mask`; -1 marks unreached.
std::vector<int> bfs_distances(const Multigraph& g, std::span<const VertexId> sources,
                               const VertexMask& mask = {});

bool is_connected(const Multigraph& g, const VertexMask& mask = {});
bool induces_connected(const Multigraph& g, std::span<const VertexId> vertices);

/// Eccentricity of v in G[mask]; throws if some masked vertex is unreachable.
int eccentricity(const Multigraph& g, VertexId v, const VertexMask& mask = {});

/// Quotient multigraph: part i becomes vertex i, intra-part edges vanish,
/// inter-part edges survive as parallels in ascending edge-id order.
/// Throws GraphError if the parts are not a partition or a part is disconnected.
Multigraph contract_partition(const Multigraph& g, std::span<const std::vector<VertexId>> parts);

/// part index of every vertex; throws unless `parts` partitions V(g) into nonempty sets.
std::vector<int> partition_index(const Multigraph& g, std::span<const std::vector<VertexId>> parts);

}  // namespace theta
