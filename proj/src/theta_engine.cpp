#include "theta/theta_engine.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "theta/bounds.hpp"

namespace theta {

namespace {

// Predecessor-chain tree from the given vertices up to the origin.
void add_origin_paths(const Multigraph& g, const DistanceDecomposition& dd, std::span<const VertexId> starts,
                      std::vector<VertexId>& branch, std::vector<EdgeId>& tree) {
  std::set<VertexId> vertices(branch.begin(), branch.end());
  std::set<EdgeId> edges(tree.begin(), tree.end());
  for (VertexId v : starts) {
    const auto path = path_to_origin(g, dd, v);
    vertices.insert(path.vertices.begin(), path.vertices.end());
    edges.insert(path.edges.begin(), path.edges.end());
  }
  branch.assign(vertices.begin(), vertices.end());
  tree.assign(edges.begin(), edges.end());
}

std::vector<EdgeId> spanning_forest(const Multigraph& g, std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<int> root(static_cast<std::size_t>(g.vertex_count()));
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  std::vector<EdgeId> out;
  for (EdgeId e : edges) {
    const int a = find(g.edge(e).u);
    const int b = find(g.edge(e).v);
    if (a == b) continue;
    root[b] = a;
    out.push_back(e);
  }
  return out;
}

}  // namespace

ThetaCertificate theta_at_node(const Multigraph& g, const DistanceDecomposition& dd, NodeId t, int r) {
  if (t <= 0 || t >= dd.node_count()) throw GraphError("theta_at_node needs a non-root node");
  if (r < 1) throw GraphError("r must be at least 1");
  const auto& et = dd.parent_edges[t];
  if (static_cast<int>(et.size()) < r) throw GraphError("node has fewer than r parent edges");

  auto lower_end = [&](EdgeId e) {
    const Edge& ed = g.edge(e);
    return dd.node_of[ed.u] == t ? ed.u : ed.v;
  };
  std::vector<char> in_u(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<VertexId> u_side{dd.bag(t).front()};
  in_u[u_side.front()] = 1;
  auto touching = [&] {
    int count = 0;
    for (EdgeId e : et) count += in_u[lower_end(e)] ? 1 : 0;
    return count;
  };

  std::set<VertexId> branch_a(u_side.begin(), u_side.end());
  std::vector<EdgeId> path_edges;
  while (touching() < r) {
    const auto path = bounded_escape_path(g, dd, t, u_side);
    const VertexId reached = path.vertices.back();
    in_u[reached] = 1;
    u_side.push_back(reached);
    branch_a.insert(path.vertices.begin(), path.vertices.end());
    path_edges.insert(path_edges.end(), path.edges.begin(), path.edges.end());
  }

  ThetaCertificate c;
  c.r = r;
  c.branch_a.assign(branch_a.begin(), branch_a.end());
  c.tree_edges_a = spanning_forest(g, path_edges);
  std::vector<VertexId> upper;
  for (EdgeId e : et) {
    if (static_cast<int>(c.cross_edges.size()) == r) break;
    if (!in_u[lower_end(e)]) continue;
    c.cross_edges.push_back(e);
    upper.push_back(g.other_end(e, lower_end(e)));
  }
  add_origin_paths(g, dd, upper, c.branch_b, c.tree_edges_b);
  c.normalize();
  const long long budget = 2LL * r * std::max(dd.height, 1);
  if (c.total_edges > budget) {
    throw GraphError("internal invariant failure: heavy-node model has " + std::to_string(c.total_edges) +
                     " edges, budget 2rd=" + std::to_string(budget));
  }
  return c;
}

std::optional<ThetaCertificate> theta_from_heavy_node(const Multigraph& g, const DistanceDecomposition& dd, int r) {
  for (NodeId t = 1; t < dd.node_count(); ++t) {
    if (static_cast<int>(dd.parent_edges[t].size()) >= r) return theta_at_node(g, dd, t, r);
  }
  return std::nullopt;
}

std::optional<ThetaCertificate> theta_from_big_bag(const Multigraph& g, const DistanceDecomposition& dd, int r) {
  for (NodeId t = 1; t < dd.node_count(); ++t) {
    if (static_cast<int>(dd.bag(t).size()) >= r) return theta_at_node(g, dd, t, r);
  }
  return std::nullopt;
}

std::optional<ThetaCertificate> theta_from_region_pair(const Multigraph& g, const GroupedPartition& gp, int i, int j,
                                                       int r) {
  if (i == j) throw GraphError("region pair needs distinct regions");
  if (i < 0 || j < 0 || i >= gp.region_count() || j >= gp.region_count()) throw GraphError("invalid region index");
  if (r < 1) throw GraphError("r must be at least 1");
  const auto between = edges_between(g, gp, i, j);
  if (static_cast<int>(between.size()) < r) return std::nullopt;

  ThetaCertificate c;
  c.r = r;
  std::vector<VertexId> ends_i;
  std::vector<VertexId> ends_j;
  for (int q = 0; q < r; ++q) {
    const Edge& ed = g.edge(between[q]);
    c.cross_edges.push_back(between[q]);
    const bool u_in_i = gp.region_of[ed.u] == i;
    ends_i.push_back(u_in_i ? ed.u : ed.v);
    ends_j.push_back(u_in_i ? ed.v : ed.u);
  }
  add_origin_paths(g, gp.region_dds[i], ends_i, c.branch_a, c.tree_edges_a);
  add_origin_paths(g, gp.region_dds[j], ends_j, c.branch_b, c.tree_edges_b);
  c.normalize();
  const long long budget = 4LL * r * gp.radius + r;
  if (c.total_edges > budget) {
    throw GraphError("internal invariant failure: region-pair model has " + std::to_string(c.total_edges) +
                     " edges, budget 4rd+r=" + std::to_string(budget));
  }
  return c;
}

ThetaCertificate theta_from_cycle(const Multigraph& g, const Cycle& cycle) {
  const auto len = cycle.vertices.size();
  if (len < 2 || cycle.edges.size() != len) throw GraphError("malformed cycle");
  (void)g;
  ThetaCertificate c;
  c.r = 2;
  c.branch_a = {cycle.vertices[0]};
  c.branch_b.assign(cycle.vertices.begin() + 1, cycle.vertices.end());
  c.tree_edges_b.assign(cycle.edges.begin() + 1, cycle.edges.end() - 1);
  c.cross_edges = {cycle.edges.front(), cycle.edges.back()};
  c.normalize();
  return c;
}

std::optional<ThetaCertificate> small_theta_search(const Multigraph& g, int r, long long z) {
  if (r == 1) {
    if (g.edge_count() == 0 || z < 1) return std::nullopt;
    ThetaCertificate c;
    c.r = 1;
    c.branch_a = {g.edge(0).u};
    c.branch_b = {g.edge(0).v};
    c.cross_edges = {0};
    c.normalize();
    return c;
  }
  if (r == 2) {
    const auto cycle = shortest_cycle(g);
    if (cycle && static_cast<long long>(cycle->edges.size()) <= z) return theta_from_cycle(g, *cycle);
    return std::nullopt;
  }
  for (VertexId origin = 0; origin < g.vertex_count(); ++origin) {
    const auto dd = distance_decomposition(g, origin);
    for (NodeId t = 1; t < dd.node_count(); ++t) {
      if (static_cast<int>(dd.parent_edges[t].size()) < r) continue;
      auto c = theta_at_node(g, dd, t, r);
      if (c.total_edges <= z) return c;
    }
  }
  return std::nullopt;
}

namespace {

MinorOutcome make_minor(const Multigraph& g, std::vector<std::vector<VertexId>> parts) {
  MinorOutcome out;
  out.actual_min_degree = contract_partition(g, parts).min_degree();
  out.model.branch_sets = std::move(parts);
  out.model.claimed_min_degree = out.actual_min_degree;
  return out;
}

std::vector<std::vector<VertexId>> cycle_arc_parts(const Multigraph& g, const Cycle& cycle) {
  const int n = g.vertex_count();
  const int len = static_cast<int>(cycle.vertices.size());
  std::vector<int> owner(static_cast<std::size_t>(n), kNone);
  std::deque<VertexId> queue;
  for (int j = 0; j < len; ++j) {
    owner[cycle.vertices[j]] = j * 3 / len;
    queue.push_back(cycle.vertices[j]);
  }
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : g.neighbors(x)) {
      if (owner[y] != kNone) continue;
      owner[y] = owner[x];
      queue.push_back(y);
    }
  }
  std::vector<std::vector<VertexId>> parts(3);
  for (VertexId v = 0; v < n; ++v) parts[owner[v]].push_back(v);
  return parts;
}

// Last vertex in BFS order is a leaf of the BFS tree, hence not a cut vertex.
VertexId non_cut_vertex(const Multigraph& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::deque<VertexId> queue{0};
  seen[0] = 1;
  VertexId last = 0;
  while (!queue.empty()) {
    last = queue.front();
    queue.pop_front();
    for (VertexId y : g.neighbors(last)) {
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return last;
}

// Candidate minors in priority order; the first meeting the bound wins.
std::optional<std::pair<MinorOutcome, std::string>> alternative_minor(const Multigraph& g, const BigInt& bound,
                                                                      const GroupedPartition* gp) {
  const int n = g.vertex_count();
  if (gp != nullptr && gp->region_count() >= 2) {
    auto m = make_minor(g, gp->regions);
    if (BigInt(m.actual_min_degree) >= bound) return std::make_pair(std::move(m), std::string("region-quotient"));
  }
  {
    std::vector<std::vector<VertexId>> singles(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) singles[v] = {v};
    auto m = make_minor(g, std::move(singles));
    if (BigInt(m.actual_min_degree) >= bound) return std::make_pair(std::move(m), std::string("identity-minor"));
  }
  if (const auto cycle = shortest_cycle(g); cycle && cycle->vertices.size() >= 3) {
    auto m = make_minor(g, cycle_arc_parts(g, *cycle));
    if (BigInt(m.actual_min_degree) >= bound) return std::make_pair(std::move(m), std::string("cycle-arc-minor"));
  }
  if (n >= 2) {
    const VertexId v = non_cut_vertex(g);
    std::vector<VertexId> rest;
    for (VertexId x = 0; x < n; ++x) {
      if (x != v) rest.push_back(x);
    }
    auto m = make_minor(g, {{v}, rest});
    if (BigInt(m.actual_min_degree) >= bound) return std::make_pair(std::move(m), std::string("edge-minor"));
  }
  return std::nullopt;
}

std::optional<ThetaCertificate> oracle_theta(const Multigraph& g, int r, long long z) {
  if (g.vertex_count() > oracle_size_guard()) return std::nullopt;
  auto girth = brute_theta_girth(g, r);
  if (girth.value && *girth.value <= z) return girth.witness;
  return std::nullopt;
}

void require_connected(const Multigraph& g) {
  if (g.vertex_count() == 0) throw ParameterError("graph has no vertices");
  if (!is_connected(g)) throw ParameterError("graph is disconnected; run on each component");
}

void require_theta(const Multigraph& g, const ThetaCertificate& c, int r, long long z, const char* route) {
  const auto report = verify_theta_certificate(g, c, r, z);
  if (!report) throw GraphError(std::string("internal invariant failure in ") + route + ": " + report.summary());
}

}  // namespace

Outcome5 run_theorem5(const Multigraph& g, int r, int w, long long z) {
  if (r < 2) throw ParameterError("theorem 5 needs r >= 2");
  if (w < 1) throw ParameterError("theorem 5 needs w >= 1");
  if (z <= r) throw ParameterError("theorem 5 needs z > r");
  if (z > g.edge_count()) throw ParameterError("theorem 5 needs z <= m");
  require_connected(g);

  Outcome5 out;
  out.d = grouping_radius(r, z);
  out.bound = theorem5_bound(r, w, z);
  auto theta = [&](ThetaCertificate c, const char* route) {
    require_theta(g, c, r, z, route);
    out.value = std::move(c);
    out.route = route;
    return out;
  };
  auto protrusion = [&](ProtrusionCertificate c, const char* route) {
    out.value = std::move(c);
    out.route = route;
    return out;
  };
  auto good_protrusion = [&](const ProtrusionCertificate& c) {
    return c.connected && verify_protrusion(g, c, 2 * r - 2, w, true).ok;
  };

  std::optional<GroupedPartition> gp;
  if (out.d >= 2) {
    gp = grouped_partition(g, out.d);
    const int l = gp->region_count();
    for (int i = 0; i < l; ++i) {
      for (int j = i + 1; j < l; ++j) {
        if (auto c = theta_from_region_pair(g, *gp, i, j, r)) return theta(std::move(*c), "region-pair");
      }
    }
    for (int i = 0; i < l; ++i) {
      if (auto c = theta_from_heavy_node(g, gp->region_dds[i], r)) return theta(std::move(*c), "heavy-node");
    }
    for (int i = 0; i < l; ++i) {
      const auto& dd = gp->region_dds[i];
      const auto frontier = frontier_report(g, *gp, i);
      for (const auto& path : unimportant_paths(dd.base.parent, frontier.node_frontier)) {
        if (static_cast<int>(path.size()) - 1 < 2 * (w + 1)) continue;
        auto c = fold_unimportant_path(g, *gp, i, path, r, w);
        if (good_protrusion(c)) return protrusion(std::move(c), "unimportant-path-fold");
      }
    }
    for (int i = 0; i < l; ++i) {
      const auto& dd = gp->region_dds[i];
      const auto frontier = frontier_report(g, *gp, i);
      if (frontier.node_frontier.empty()) continue;
      const auto critical = critical_vertices(dd.base.parent, frontier.node_frontier);
      NodeId anchor = critical.front();
      for (NodeId c : critical) {
        if (dd.depth[c] < dd.depth[anchor]) anchor = c;
      }
      if (dd.depth[anchor] < 2 * (w + 1)) continue;
      std::vector<NodeId> segment;
      for (NodeId x = anchor; x != kNone; x = dd.parent(x)) segment.push_back(x);
      std::reverse(segment.begin(), segment.end());
      auto c = fold_tree_path(g, dd, segment, 2 * r - 2);
      if (good_protrusion(c)) return protrusion(std::move(c), "root-segment-fold");
    }
    if (l >= 2) {
      auto m = make_minor(g, gp->regions);
      if (BigInt(m.actual_min_degree) >= out.bound) {
        out.value = std::move(m);
        out.route = "region-quotient";
        return out;
      }
    }
  }

  if (auto c = small_theta_search(g, r, z)) return theta(std::move(*c), "theta-search");
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    auto c = global_protrusion(g, s);
    if (c.t > 2 * r - 2 || c.extension <= w) continue;
    c.t = 2 * r - 2;
    if (good_protrusion(c)) return protrusion(std::move(c), "global-protrusion");
  }
  if (!gp) gp = grouped_partition(g, std::max(out.d, 1));
  if (auto m = alternative_minor(g, out.bound, &*gp)) {
    out.value = std::move(m->first);
    out.route = m->second;
    return out;
  }
  if (auto c = oracle_theta(g, r, z)) return theta(std::move(*c), "oracle");
  throw GraphError("no certified outcome found for r=" + std::to_string(r) + " w=" + std::to_string(w) +
                   " z=" + std::to_string(z));
}

Outcome4 run_theorem4(const Multigraph& g, int r, int delta, long long z) {
  if (r < 2) throw ParameterError("theorem 4 needs r >= 2");
  if (delta < 3 * r) throw ParameterError("theorem 4 needs delta >= 3r");
  if (z < r) throw ParameterError("theorem 4 needs z >= r");
  require_connected(g);

  Outcome4 out;
  out.d = grouping_radius(r, z);
  out.bound = theorem4_bound(r, delta, z);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int deg = g.degree(v);
    if (deg < delta) {
      out.value = LowDegreeWitness{v, deg};
      out.route = "low-degree";
      return out;
    }
  }
  auto theta = [&](ThetaCertificate c, const char* route) {
    require_theta(g, c, r, z, route);
    out.value = std::move(c);
    out.route = route;
    return out;
  };

  std::optional<GroupedPartition> gp;
  if (out.d >= 2) {
    gp = grouped_partition(g, out.d);
    const int l = gp->region_count();
    for (int i = 0; i < l; ++i) {
      for (int j = i + 1; j < l; ++j) {
        if (auto c = theta_from_region_pair(g, *gp, i, j, r)) return theta(std::move(*c), "region-pair");
      }
    }
    for (int i = 0; i < l; ++i) {
      if (auto c = theta_from_big_bag(g, gp->region_dds[i], r)) {
        if (c->total_edges <= z) return theta(std::move(*c), "big-bag");
      }
    }
    if (l >= 2) {
      auto m = make_minor(g, gp->regions);
      if (BigInt(m.actual_min_degree) >= out.bound) {
        out.value = std::move(m);
        out.route = "region-quotient";
        return out;
      }
    }
  }

  if (auto c = small_theta_search(g, r, z)) return theta(std::move(*c), "theta-search");
  if (!gp) gp = grouped_partition(g, std::max(out.d, 1));
  if (auto m = alternative_minor(g, out.bound, &*gp)) {
    out.value = std::move(m->first);
    out.route = m->second;
    return out;
  }
  if (auto c = oracle_theta(g, r, z)) return theta(std::move(*c), "oracle");
  throw GraphError("no certified outcome found for r=" + std::to_string(r) + " delta=" + std::to_string(delta) +
                   " z=" + std::to_string(z));
}

namespace {

VerifyReport verify_minor_outcome(const Multigraph& g, const MinorOutcome& m, const BigInt& bound) {
  auto check = verify_minor_model(g, m.model);
  if (!check.report) return check.report;
  if (check.actual_min_degree != m.actual_min_degree) check.report.fail("recorded quotient degree is wrong");
  if (BigInt(check.actual_min_degree) < bound) {
    check.report.fail("quotient minimum degree " + std::to_string(check.actual_min_degree) +
                      " is below the theorem bound " + bound.str());
  }
  return check.report;
}

}  // namespace

VerifyReport verify_outcome5(const Multigraph& g, const Outcome5& out, int r, int w, long long z) {
  const BigInt bound = theorem5_bound(r, w, z);
  if (bound != out.bound) {
    VerifyReport report;
    report.fail("recorded bound " + out.bound.str() + " differs from " + bound.str());
    return report;
  }
  if (const auto* c = std::get_if<ThetaCertificate>(&out.value)) return verify_theta_certificate(g, *c, r, z);
  if (const auto* c = std::get_if<ProtrusionCertificate>(&out.value)) return verify_protrusion(g, *c, 2 * r - 2, w, true);
  return verify_minor_outcome(g, std::get<MinorOutcome>(out.value), bound);
}

VerifyReport verify_outcome4(const Multigraph& g, const Outcome4& out, int r, int delta, long long z) {
  const BigInt bound = theorem4_bound(r, delta, z);
  VerifyReport report;
  if (bound != out.bound) {
    report.fail("recorded bound " + out.bound.str() + " differs from " + bound.str());
    return report;
  }
  if (const auto* c = std::get_if<ThetaCertificate>(&out.value)) return verify_theta_certificate(g, *c, r, z);
  if (const auto* low = std::get_if<LowDegreeWitness>(&out.value)) {
    if (!g.valid_vertex(low->vertex)) {
      report.fail("low-degree vertex is invalid");
    } else if (g.degree(low->vertex) != low->degree || low->degree >= delta) {
      report.fail("vertex " + std::to_string(low->vertex) + " does not have degree below " + std::to_string(delta));
    }
    return report;
  }
  return verify_minor_outcome(g, std::get<MinorOutcome>(out.value), bound);
}

}  // namespace theta
