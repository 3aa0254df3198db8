#include "corpus.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <unordered_set>

#include "theta/generators.hpp"
#include "theta/random.hpp"

namespace theta::corpus {

namespace {

using Adjacency = std::vector<std::uint32_t>;  // bitset rows

int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }  // i < j

std::uint64_t encode(const Adjacency& adj, const std::vector<int>& perm) {
  const int n = static_cast<int>(adj.size());
  std::uint64_t code = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (adj[perm[a]] >> perm[b] & 1U) code |= std::uint64_t{1} << pair_bit(a, b);
    }
  }
  return code;
}

// Minimum code over the labelings that list vertices by descending degree.
std::uint64_t canonical_code(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  auto deg = [&](int v) { return std::popcount(adj[v]); };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg(a) > deg(b); });
  std::vector<std::pair<int, int>> classes;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && deg(order[j]) == deg(order[i])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::function<void(std::size_t)> walk = [&](std::size_t c) {
    if (c == classes.size()) {
      best = std::min(best, encode(adj, order));
      return;
    }
    const auto [lo, hi] = classes[c];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      walk(c + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  walk(0);
  return best;
}

Multigraph to_graph(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (adj[u] >> v & 1U) edges.push_back({u, v});
    }
  }
  return Multigraph(n, std::move(edges));
}

std::vector<Adjacency> connected_adjacencies(int n) {
  if (n == 1) return {Adjacency{0}};
  std::vector<Adjacency> out;
  std::unordered_set<std::uint64_t> seen;
  // Every connected graph has a vertex whose removal keeps it connected.
  for (const auto& base : connected_adjacencies(n - 1)) {
    for (std::uint32_t nb = 1; nb < (1U << (n - 1)); ++nb) {
      Adjacency adj = base;
      adj.push_back(nb);
      for (int v = 0; v < n - 1; ++v) {
        if (nb >> v & 1U) adj[v] |= 1U << (n - 1);
      }
      if (seen.insert(canonical_code(adj)).second) out.push_back(std::move(adj));
    }
  }
  return out;
}

}  // namespace

std::vector<Multigraph> connected_graphs(int n) {
  if (n < 1 || n > 8) throw GraphError("connected_graphs supports 1 <= n <= 8");
  std::vector<Multigraph> out;
  for (const auto& adj : connected_adjacencies(n)) out.push_back(to_graph(adj));
  return out;
}

std::vector<Multigraph> small_connected_graphs(int max_n) {
  std::vector<Multigraph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto layer = connected_graphs(n);
    out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return out;
}

// Beyer-Hedetniemi successor on canonical level sequences.
std::vector<std::vector<int>> rooted_trees(int n) {
  if (n < 1) return {};
  std::vector<int> level(static_cast<std::size_t>(n));
  std::iota(level.begin(), level.end(), 1);
  std::vector<std::vector<int>> out;
  for (;;) {
    std::vector<int> parent(static_cast<std::size_t>(n), kNone);
    std::vector<int> last_at(static_cast<std::size_t>(n + 1), kNone);
    for (int i = 0; i < n; ++i) {
      if (i > 0) parent[i] = last_at[level[i] - 1];
      last_at[level[i]] = i;
    }
    out.push_back(std::move(parent));
    int p = n - 1;
    while (p > 0 && level[p] == 2) --p;
    if (p == 0) break;
    int q = p - 1;
    while (level[q] != level[p] - 1) --q;
    for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }
  return out;
}

std::vector<Multigraph> random_graphs(int count, int max_n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Multigraph> out;
  for (int i = 0; i < count; ++i) {
    const int n = 2 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(max_n - 1)));
    const int extra = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n + 1)));
    const std::uint64_t graph_seed = rng.next();
    if (i % 2 == 0) {
      out.push_back(random_multigraph(n, n - 1 + extra, graph_seed));
    } else {
      const int cap = n * (n - 1) / 2;
      out.push_back(random_simple_connected(n, std::min(n - 1 + extra, cap), graph_seed));
    }
  }
  return out;
}

Multigraph subdivide(const Multigraph& g, int extra) {
  int n = g.vertex_count();
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    VertexId prev = e.u;
    for (int j = 0; j < extra; ++j) {
      edges.push_back({prev, n});
      prev = n++;
    }
    edges.push_back({prev, e.v});
  }
  return Multigraph(n, std::move(edges));
}

Multigraph double_broom(int path_vertices, int leaves) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < path_vertices; ++v) edges.push_back({v, v + 1});
  VertexId next = path_vertices;
  for (int i = 0; i < leaves; ++i) edges.push_back({0, next++});
  for (int i = 0; i < leaves; ++i) edges.push_back({path_vertices - 1, next++});
  return Multigraph(next, std::move(edges));
}

std::vector<Multigraph> structured_graphs() {
  std::vector<Multigraph> out;
  for (int n = 12; n <= 60; n += 6) out.push_back(cycle_graph(n));
  for (int len = 6; len <= 30; len += 6) out.push_back(grid_graph(2, len));
  for (int i = 0; i < 6; ++i) {
    const int n = 4 + i;
    out.push_back(subdivide(random_multigraph(n, n + 2, 300 + static_cast<std::uint64_t>(i)), 2 + i % 3));
  }
  for (int len = 16; len <= 24; len += 4) out.push_back(double_broom(len, 30));
  return out;
}

}  // namespace theta::corpus
