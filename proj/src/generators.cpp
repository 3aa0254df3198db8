#include "theta/generators.hpp"

#include <algorithm>
#include <set>

#include "theta/random.hpp"

namespace theta {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

}  // namespace

Multigraph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Multigraph(n, std::move(edges));
}

Multigraph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({n - 1, 0});
  return Multigraph(n, std::move(edges));
}

Multigraph complete_graph(int n) {
  require(n >= 1, "clique needs n >= 1");
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Multigraph(n, std::move(edges));
}

Multigraph theta_graph(int r) {
  require(r >= 1, "theta needs r >= 1");
  return Multigraph(2, std::vector<Edge>(static_cast<std::size_t>(r), Edge{0, 1}));
}

Multigraph grid_graph(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid needs rows, cols >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const VertexId v = i * cols + j;
      if (j + 1 < cols) edges.push_back({v, v + 1});
      if (i + 1 < rows) edges.push_back({v, v + cols});
    }
  }
  return Multigraph(rows * cols, std::move(edges));
}

Multigraph petersen_graph() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Multigraph(10, std::move(edges));
}

Multigraph figure2_graph() {
  return Multigraph(9, {{5, 6}, {6, 8}, {8, 7}, {7, 5}, {5, 3}, {3, 4}, {4, 5}, {1, 3}, {3, 0}, {0, 2}, {2, 3}});
}

Multigraph random_regular(int n, int d, std::uint64_t seed) {
  require(n >= 1 && d >= 0, "random-regular needs n >= 1 and d >= 0");
  require(d < n, "random-regular needs d < n");
  require((static_cast<long long>(n) * d) % 2 == 0, "random-regular needs n*d even");
  Rng rng(seed);
  for (;;) {
    std::vector<VertexId> points;
    for (VertexId v = 0; v < n; ++v) points.insert(points.end(), static_cast<std::size_t>(d), v);
    std::set<std::pair<VertexId, VertexId>> used;
    std::vector<Edge> edges;
    bool stuck = false;
    while (!points.empty() && !stuck) {
      // Give up on this attempt after many rejected pairs in a row.
      int rejected = 0;
      for (;;) {
        const auto i = static_cast<std::size_t>(rng.uniform_below(points.size()));
        const auto j = static_cast<std::size_t>(rng.uniform_below(points.size()));
        const VertexId a = std::min(points[i], points[j]);
        const VertexId b = std::max(points[i], points[j]);
        if (i != j && a != b && !used.count({a, b})) {
          used.insert({a, b});
          edges.push_back({a, b});
          points.erase(points.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
          points.erase(points.begin() + static_cast<std::ptrdiff_t>(std::min(i, j)));
          break;
        }
        if (++rejected > 100 * n) {
          stuck = true;
          break;
        }
      }
    }
    if (stuck) continue;
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
      return std::pair(x.u, x.v) < std::pair(y.u, y.v);
    });
    return Multigraph(n, std::move(edges));
  }
}

Multigraph random_multigraph(int n, int m, std::uint64_t seed) {
  require(n >= 1, "random-multigraph needs n >= 1");
  require(m >= n - 1, "random-multigraph needs m >= n-1 to be connected");
  require(n >= 2 || m == 0, "a single vertex cannot carry loopless edges");
  Rng rng(seed);
  std::vector<VertexId> order(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  rng.shuffle(std::span<VertexId>(order));
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    const VertexId a = order[i];
    const VertexId b = order[rng.uniform_below(static_cast<std::uint64_t>(i))];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  while (static_cast<int>(edges.size()) < m) {
    const auto a = static_cast<VertexId>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    const auto b = static_cast<VertexId>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    if (a != b) edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Multigraph(n, std::move(edges));
}

Multigraph random_simple_connected(int n, int m, std::uint64_t seed) {
  require(n >= 1, "random graph needs n >= 1");
  require(m >= n - 1 && static_cast<long long>(m) <= static_cast<long long>(n) * (n - 1) / 2,
          "edge count out of range for a connected simple graph");
  Rng rng(seed);
  std::vector<VertexId> order(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  rng.shuffle(std::span<VertexId>(order));
  std::set<std::pair<VertexId, VertexId>> used;
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    const VertexId a = order[i];
    const VertexId b = order[rng.uniform_below(static_cast<std::uint64_t>(i))];
    used.insert({std::min(a, b), std::max(a, b)});
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  while (static_cast<int>(edges.size()) < m) {
    const auto a = static_cast<VertexId>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    const auto b = static_cast<VertexId>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    if (a == b || !used.insert({std::min(a, b), std::max(a, b)}).second) continue;
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Multigraph(n, std::move(edges));
}

}  // namespace theta
