#include "theta/oracles.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <deque>
#include <set>

#include "theta/bigint.hpp"

namespace theta {

int oracle_size_guard() {
  constexpr int kDefault = 14;
  const char* raw = std::getenv("THETA_MINER_SIZE_GUARD");
  if (raw == nullptr || *raw == '\0') return kDefault;
  int value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value < 1) return kDefault;
  return std::min(value, kHardSizeCap);
}

namespace {

int resolve_guard(int size_guard) {
  if (size_guard < 0) return oracle_size_guard();
  return std::min(size_guard, kHardSizeCap);
}

void enforce_guard(const Multigraph& g, int size_guard) {
  const int guard = resolve_guard(size_guard);
  if (g.vertex_count() > guard) {
    throw SizeGuardError("graph has " + std::to_string(g.vertex_count()) + " vertices; oracle size guard is " +
                         std::to_string(guard) + " (set THETA_MINER_SIZE_GUARD to raise it)");
  }
}

using Mask = std::uint32_t;

std::vector<VertexId> bits_of(Mask m) {
  std::vector<VertexId> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// Spanning tree of G[part] using the smallest edge ids first.
std::vector<EdgeId> spanning_edges(const Multigraph& g, const std::vector<VertexId>& part) {
  std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), kNone);
  for (std::size_t i = 0; i < part.size(); ++i) comp[part[i]] = static_cast<int>(i);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const int a = comp[ed.u];
    const int b = comp[ed.v];
    if (a == kNone || b == kNone || a == b) continue;
    out.push_back(e);
    for (int& c : comp) {
      if (c == b) c = a;
    }
  }
  return out;
}

}  // namespace

ThetaGirth brute_theta_girth(const Multigraph& g, int r, int size_guard) {
  if (r < 1) throw GraphError("r must be at least 1");
  enforce_guard(g, size_guard);
  ThetaGirth result;
  const int n = g.vertex_count();
  if (n < 2 || g.edge_count() < r) return result;

  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
    ++mult[e.u][e.v];
    ++mult[e.v][e.u];
  }

  // Connected subsets grouped by size.
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<std::vector<Mask>> by_size(static_cast<std::size_t>(n) + 1);
  for (Mask m = 1; m <= full && m != 0; ++m) {
    Mask reach = m & (~m + 1);
    for (;;) {
      Mask grown = reach;
      for (Mask bits = reach; bits; bits &= bits - 1) grown |= adj[std::countr_zero(bits)] & m;
      if (grown == reach) break;
      reach = grown;
    }
    if (reach == m) by_size[std::popcount(m)].push_back(m);
    if (m == full) break;
  }

  auto cross = [&](Mask a, Mask b) {
    int total = 0;
    for (Mask bits = a; bits; bits &= bits - 1) {
      const int v = std::countr_zero(bits);
      for (Mask nb = adj[v] & b; nb; nb &= nb - 1) {
        total += mult[v][std::countr_zero(nb)];
        if (total >= r) return total;
      }
    }
    return total;
  };

  for (int s = 2; s <= n; ++s) {
    for (int a = 1; a < s; ++a) {
      const int b = s - a;
      for (Mask ma : by_size[a]) {
        const Mask low_a = ma & (~ma + 1);
        for (Mask mb : by_size[b]) {
          if ((ma & mb) != 0 || (mb & (~mb + 1)) < low_a) continue;
          if (cross(ma, mb) < r) continue;
          ThetaCertificate c;
          c.r = r;
          c.branch_a = bits_of(ma);
          c.branch_b = bits_of(mb);
          c.tree_edges_a = spanning_edges(g, c.branch_a);
          c.tree_edges_b = spanning_edges(g, c.branch_b);
          for (EdgeId e = 0; e < g.edge_count() && static_cast<int>(c.cross_edges.size()) < r; ++e) {
            const Edge& ed = g.edge(e);
            const bool ua = (ma >> ed.u) & 1U;
            const bool vb = (mb >> ed.v) & 1U;
            const bool ub = (mb >> ed.u) & 1U;
            const bool va = (ma >> ed.v) & 1U;
            if ((ua && vb) || (ub && va)) c.cross_edges.push_back(e);
          }
          c.normalize();
          result.value = s - 2 + r;
          result.witness = std::move(c);
          return result;
        }
      }
    }
  }
  return result;
}

std::optional<int> girth_bfs(const Multigraph& g) {
  const int n = g.vertex_count();
  std::optional<int> best;
  for (VertexId root = 0; root < n; ++root) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<EdgeId> via(static_cast<std::size_t>(n), kNone);
    std::deque<VertexId> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (const auto& inc : g.incident(x)) {
        if (inc.edge == via[x]) continue;
        const VertexId y = inc.neighbor;
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          via[y] = inc.edge;
          queue.push_back(y);
        } else {
          const int len = dist[x] + dist[y] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

std::optional<Cycle> shortest_cycle(const Multigraph& g) {
  // For each edge uv, the shortest u-v path avoiding it closes a cycle.
  std::optional<Cycle> best;
  const int n = g.vertex_count();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    std::vector<EdgeId> via(static_cast<std::size_t>(n), kNone);
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::deque<VertexId> queue{ed.u};
    dist[ed.u] = 0;
    while (!queue.empty() && dist[ed.v] < 0) {
      const VertexId x = queue.front();
      queue.pop_front();
      if (best && dist[x] + 2 > static_cast<int>(best->edges.size())) break;
      for (const auto& inc : g.incident(x)) {
        if (inc.edge == e || dist[inc.neighbor] >= 0) continue;
        dist[inc.neighbor] = dist[x] + 1;
        via[inc.neighbor] = inc.edge;
        queue.push_back(inc.neighbor);
      }
    }
    if (dist[ed.v] < 0) continue;
    if (best && dist[ed.v] + 1 >= static_cast<int>(best->edges.size())) continue;
    Cycle c;
    for (VertexId x = ed.v; x != ed.u; x = g.other_end(via[x], x)) {
      c.vertices.push_back(x);
      c.edges.push_back(via[x]);
    }
    c.vertices.push_back(ed.u);
    c.edges.push_back(e);
    best = std::move(c);
  }
  return best;
}

LooseConnectivity check_loose_connectivity(const Multigraph& g, int alpha, int beta, int size_guard) {
  if (alpha < 0 || beta < 0) throw GraphError("alpha and beta must be nonnegative");
  enforce_guard(g, size_guard);
  const int n = g.vertex_count();
  LooseConnectivity result;
  std::vector<VertexId> sep;

  // Returns true when a witness was recorded for the current separator.
  auto try_separator = [&]() {
    VertexMask rest(static_cast<std::size_t>(n), 1);
    for (VertexId v : sep) rest[v] = 0;
    std::vector<std::vector<VertexId>> comps;
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    for (VertexId v = 0; v < n; ++v) {
      if (!rest[v] || done[v]) continue;
      const VertexId s[] = {v};
      const auto dist = bfs_distances(g, s, rest);
      comps.emplace_back();
      for (VertexId x = 0; x < n; ++x) {
        if (dist[x] >= 0) {
          done[x] = 1;
          comps.back().push_back(x);
        }
      }
    }
    const int total = n - static_cast<int>(sep.size());
    // reach[c][s]: whether the first c components can give a group of size s.
    std::vector<std::vector<char>> reach(comps.size() + 1, std::vector<char>(static_cast<std::size_t>(total) + 1, 0));
    reach[0][0] = 1;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      const int sz = static_cast<int>(comps[c].size());
      for (int s = 0; s <= total; ++s) {
        if (!reach[c][s]) continue;
        reach[c + 1][s] = 1;
        if (s + sz <= total) reach[c + 1][s + sz] = 1;
      }
    }
    for (int x = alpha + 1; x <= total; ++x) {
      if (!reach[comps.size()][x] || total - x <= alpha) continue;
      LooseConnectivityWitness w;
      int s = x;
      std::vector<char> in_a(comps.size(), 0);
      for (std::size_t c = comps.size(); c > 0; --c) {
        const int sz = static_cast<int>(comps[c - 1].size());
        if (reach[c - 1][s]) continue;
        in_a[c - 1] = 1;
        s -= sz;
      }
      w.separator = sep;
      w.a_side = sep;
      w.b_side = sep;
      for (std::size_t c = 0; c < comps.size(); ++c) {
        auto& side = in_a[c] ? w.a_side : w.b_side;
        side.insert(side.end(), comps[c].begin(), comps[c].end());
      }
      std::sort(w.a_side.begin(), w.a_side.end());
      std::sort(w.b_side.begin(), w.b_side.end());
      result.loosely_connected = false;
      result.witness = std::move(w);
      return true;
    }
    return false;
  };

  // Separators by size, then lexicographically.
  for (int size = 0; size < beta && size <= n; ++size) {
    sep.assign(static_cast<std::size_t>(size), 0);
    for (int j = 0; j < size; ++j) sep[j] = j;
    for (;;) {
      if (try_separator()) return result;
      int j = size - 1;
      while (j >= 0 && sep[j] == n - size + j) --j;
      if (j < 0) break;
      ++sep[j];
      for (int q = j + 1; q < size; ++q) sep[q] = sep[q - 1] + 1;
    }
  }
  return result;
}

namespace {

// Sandwich b·log2(x): floor and ceil via the bit length of x^b.
struct LogBounds {
  BigInt lo;
  BigInt hi;
};

LogBounds scaled_log2(const BigInt& x, long long b) {
  BigInt power = 1;
  for (long long j = 0; j < b; ++j) power *= x;
  const auto bitlen = [](const BigInt& v) -> long long {
    return v == 0 ? 0 : static_cast<long long>(boost::multiprecision::msb(v)) + 1;
  };
  return {BigInt(bitlen(power) - 1), BigInt(bitlen(power - 1))};
}

}  // namespace

bool check_bound_lemma(int r, int k) {
  if (r < 2 || k < r) throw GraphError("bound lemma needs k >= r >= 2");
  BigInt cr = 1;
  for (int j = 0; j < r; ++j) cr *= 216;
  BigInt six = 1;
  for (int j = 0; j < 2 * r - 3; ++j) six *= 6;
  const BigInt genus = (six - 1) / 5;
  const BigInt q = BigInt(4 * r) * (2 * genus + 1);
  const BigInt m = BigInt(r - 1) * (BigInt(k) * (r + 1) - 1);

  // Decide cr·log2 k − 5r >= q·log2 m using log2 k ∈ [lk/b, hk/b] and
  // log2 m ∈ [lm/b, hm/b]; refine b until one side is proved.
  for (long long b = 1; b <= (1LL << 16); b *= 2) {
    const auto lk = scaled_log2(k, b);
    const auto lm = scaled_log2(m, b);
    if (cr * lk.lo - BigInt(5 * r) * b >= q * lm.hi) return true;
    if (cr * lk.hi - BigInt(5 * r) * b < q * lm.lo) return false;
  }
  throw GraphError("bound lemma undecided at maximum precision");
}

int quotient_min_degree(const Multigraph& g, std::span<const std::vector<VertexId>> parts) {
  const int n = g.vertex_count();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) throw GraphError("empty part " + std::to_string(p));
    for (VertexId v : parts[p]) {
      if (v < 0 || v >= n || owner[v] != -1) throw GraphError("parts do not partition the vertex set");
      owner[v] = static_cast<int>(p);
    }
  }
  if (std::count(owner.begin(), owner.end(), -1) != 0) throw GraphError("parts do not cover the vertex set");
  for (std::size_t p = 0; p < parts.size(); ++p) {
    std::set<VertexId> seen{parts[p].front()};
    std::vector<VertexId> stack{parts[p].front()};
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(x)) {
        if (owner[inc.neighbor] == static_cast<int>(p) && seen.insert(inc.neighbor).second) stack.push_back(inc.neighbor);
      }
    }
    if (seen.size() != parts[p].size()) throw GraphError("part " + std::to_string(p) + " is disconnected");
  }
  if (parts.empty()) return 0;
  std::vector<std::set<int>> nbrs(parts.size());
  for (const Edge& e : g.edges()) {
    const int a = owner[e.u];
    const int b = owner[e.v];
    if (a == b) continue;
    nbrs[a].insert(b);
    nbrs[b].insert(a);
  }
  std::size_t best = nbrs[0].size();
  for (const auto& s : nbrs) best = std::min(best, s.size());
  return static_cast<int>(best);
}

}  // namespace theta
