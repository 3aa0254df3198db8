#include "theta/packing.hpp"

#include <algorithm>

#include "theta/random.hpp"

namespace theta {

int internal_min_degree(const Multigraph& g, std::span<const VertexId> part) {
  if (part.empty()) return 0;
  const auto inside = mask_of(g.vertex_count(), part);
  int best = -1;
  for (VertexId v : part) {
    int deg = 0;
    for (VertexId u : g.neighbors(v)) deg += inside[u] ? 1 : 0;
    best = best < 0 ? deg : std::min(best, deg);
  }
  return best;
}

ThetaCertificate theta_by_maximal_path(const Multigraph& g, int r, std::span<const VertexId> part) {
  if (r < 1) throw GraphError("r must be at least 1");
  const int n = g.vertex_count();
  VertexMask inside = part.empty() ? VertexMask(static_cast<std::size_t>(n), 1) : mask_of(n, part);
  std::vector<VertexId> members;
  for (VertexId v = 0; v < n; ++v) {
    if (inside[v]) members.push_back(v);
  }
  if (members.empty()) throw GraphError("part is empty");
  const int delta = internal_min_degree(g, members);
  if (delta < r) {
    throw GraphError("minimum degree " + std::to_string(delta) + " is below r=" + std::to_string(r));
  }

  std::vector<int> position(static_cast<std::size_t>(n), kNone);
  std::vector<VertexId> path{members.front()};
  position[members.front()] = 0;
  for (;;) {
    VertexId next = kNone;
    for (VertexId u : g.neighbors(path.back())) {
      if (inside[u] && position[u] == kNone) {
        next = u;
        break;
      }
    }
    if (next == kNone) break;
    position[next] = static_cast<int>(path.size());
    path.push_back(next);
  }

  const VertexId v = path.back();
  std::vector<int> seen_at;
  for (VertexId u : g.neighbors(v)) {
    if (inside[u]) seen_at.push_back(position[u]);
  }
  std::sort(seen_at.rbegin(), seen_at.rend());
  if (static_cast<int>(seen_at.size()) < r) throw GraphError("internal invariant failure: path end sees fewer than r path vertices");
  seen_at.resize(static_cast<std::size_t>(r));
  const int first = seen_at.back();
  const int last = static_cast<int>(path.size()) - 1;

  ThetaCertificate c;
  c.r = r;
  c.branch_a = {v};
  for (int j = first; j < last; ++j) c.branch_b.push_back(path[j]);
  auto edge_between = [&](VertexId a, VertexId b) {
    for (const auto& inc : g.incident(a)) {
      if (inc.neighbor == b) return inc.edge;
    }
    throw GraphError("internal invariant failure: missing path edge");
  };
  for (int j = first; j + 1 < last; ++j) c.tree_edges_b.push_back(edge_between(path[j], path[j + 1]));
  for (int pos : seen_at) c.cross_edges.push_back(edge_between(v, path[pos]));
  c.normalize();
  return c;
}

namespace {

int own_degree(const Multigraph& g, const std::vector<int>& part_of, VertexId v, int part) {
  int deg = 0;
  for (VertexId u : g.neighbors(v)) deg += part_of[u] == part ? 1 : 0;
  return deg;
}

long long potential(const Multigraph& g, const std::vector<int>& part_of) {
  long long total = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) total += own_degree(g, part_of, v, part_of[v]);
  return total / 2;
}

enum class SearchEnd { kDone, kStalled };

SearchEnd local_search(const Multigraph& g, int k, int r, std::vector<int>& part_of, int& moves) {
  const int n = g.vertex_count();
  std::vector<int> size(static_cast<std::size_t>(k), 0);
  for (int p : part_of) ++size[p];
  long long phi = potential(g, part_of);
  for (;;) {
    bool deficient = false;
    bool moved = false;
    for (VertexId v = 0; v < n && !moved; ++v) {
      const int own = part_of[v];
      const int here = own_degree(g, part_of, v, own);
      if (here >= r) continue;
      deficient = true;
      if (size[own] == 1) continue;
      std::vector<int> count(static_cast<std::size_t>(k), 0);
      for (VertexId u : g.neighbors(v)) ++count[part_of[u]];
      int best = kNone;
      for (int q = 0; q < k; ++q) {
        if (q != own && (best == kNone || count[q] > count[best])) best = q;
      }
      if (best == kNone || count[best] <= here) continue;
      part_of[v] = best;
      --size[own];
      ++size[best];
      ++moves;
      const long long updated = potential(g, part_of);
      if (updated <= phi) throw GraphError("internal invariant failure: local search potential did not increase");
      phi = updated;
      moved = true;
    }
    if (!deficient) return SearchEnd::kDone;
    if (!moved) return SearchEnd::kStalled;
  }
}

}  // namespace

StiebitzResult stiebitz_partition(const Multigraph& g, int k, int r, std::uint64_t seed, int max_restarts) {
  if (k < 1 || r < 0) throw GraphError("stiebitz partition needs k >= 1 and r >= 0");
  const int n = g.vertex_count();
  if (n < k) throw GraphError("fewer vertices than parts");
  const int needed = k * (r + 1) - 1;
  if (g.min_degree() < needed) {
    throw GraphError("minimum degree " + std::to_string(g.min_degree()) + " is below k(r+1)-1=" +
                     std::to_string(needed));
  }
  StiebitzResult result;
  std::vector<int> part_of(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) part_of[v] = v % k;
  for (int attempt = 0;; ++attempt) {
    if (local_search(g, k, r, part_of, result.moves) == SearchEnd::kDone) break;
    if (attempt >= max_restarts) {
      throw GraphError("local search stalled after " + std::to_string(attempt) +
                       " restarts; retry with a different --seed");
    }
    result.seed = seed + static_cast<std::uint64_t>(attempt);
    result.restarts = attempt + 1;
    Rng rng(result.seed);
    std::vector<VertexId> order(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) order[v] = v;
    rng.shuffle(std::span<VertexId>(order));
    for (int j = 0; j < n; ++j) part_of[order[j]] = j % k;
  }
  result.part_of = part_of;
  result.parts.assign(static_cast<std::size_t>(k), {});
  for (VertexId v = 0; v < n; ++v) result.parts[part_of[v]].push_back(v);
  for (const auto& part : result.parts) {
    if (part.empty() || internal_min_degree(g, part) < r) {
      throw GraphError("internal invariant failure: partition violates its postcondition");
    }
  }
  return result;
}

PackingCertificate pack_k_theta(const Multigraph& g, int k, int r, std::uint64_t seed) {
  if (r < 1) throw GraphError("r must be at least 1");
  const auto split = stiebitz_partition(g, k, r, seed);
  PackingCertificate c;
  c.part_assignment = split.part_of;
  c.seed = split.seed;
  c.restarts = split.restarts;
  for (const auto& part : split.parts) c.models.push_back(theta_by_maximal_path(g, r, part));
  const auto report = verify_packing(g, c, k, r);
  if (!report) throw GraphError("internal invariant failure: " + report.summary());
  return c;
}

VerifyReport verify_packing(const Multigraph& g, const PackingCertificate& c, int k, int r) {
  VerifyReport report;
  if (static_cast<int>(c.models.size()) != k) {
    report.fail("packing has " + std::to_string(c.models.size()) + " models, expected " + std::to_string(k));
  }
  std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), kNone);
  for (std::size_t i = 0; i < c.models.size(); ++i) {
    const auto sub = verify_theta_certificate(g, c.models[i], r, -1);
    if (!sub) {
      report.fail("model " + std::to_string(i) + ": " + sub.summary());
      continue;
    }
    for (VertexId v : c.models[i].vertices()) {
      if (owner[v] != kNone) {
        report.fail("models " + std::to_string(owner[v]) + " and " + std::to_string(i) + " share vertex " +
                    std::to_string(v));
      }
      owner[v] = static_cast<int>(i);
    }
  }
  return report;
}

}  // namespace theta
