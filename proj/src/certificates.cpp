#include "theta/certificates.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace theta {

std::string VerifyReport::summary() const {
  if (ok) return "ok";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

void ThetaCertificate::normalize() {
  for (auto* set : {&branch_a, &branch_b}) std::sort(set->begin(), set->end());
  for (auto* set : {&tree_edges_a, &tree_edges_b, &cross_edges}) std::sort(set->begin(), set->end());
  total_edges = static_cast<int>(tree_edges_a.size() + tree_edges_b.size() + cross_edges.size());
}

std::vector<VertexId> ThetaCertificate::vertices() const {
  std::vector<VertexId> out(branch_a);
  out.insert(out.end(), branch_b.begin(), branch_b.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

// Checks that `edges` form a spanning tree of `branch` and stay inside it.
void check_branch(const Multigraph& g, const std::vector<VertexId>& branch,
                  const std::vector<EdgeId>& edges, const char* name, VerifyReport& report) {
  if (branch.empty()) {
    report.fail(std::string(name) + " is empty");
    return;
  }
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), kNone);
  for (std::size_t i = 0; i < branch.size(); ++i) local[branch[i]] = static_cast<int>(i);
  DisjointSets sets(static_cast<int>(branch.size()));
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    if (local[ed.u] == kNone || local[ed.v] == kNone) {
      report.fail("tree edge " + std::to_string(e) + " leaves " + name);
      return;
    }
    if (!sets.unite(local[ed.u], local[ed.v])) {
      report.fail("tree edges of " + std::string(name) + " contain a cycle at edge " + std::to_string(e));
      return;
    }
  }
  if (edges.size() + 1 != branch.size()) {
    report.fail("tree edges do not span " + std::string(name));
  }
}

}  // namespace

VerifyReport verify_theta_certificate(const Multigraph& g, const ThetaCertificate& c, int r, long long z) {
  VerifyReport report;
  for (const auto* set : {&c.branch_a, &c.branch_b}) {
    for (VertexId v : *set) {
      if (!g.valid_vertex(v)) {
        report.fail("invalid vertex id " + std::to_string(v));
        return report;
      }
    }
  }
  for (const auto* set : {&c.tree_edges_a, &c.tree_edges_b, &c.cross_edges}) {
    for (EdgeId e : *set) {
      if (!g.valid_edge(e)) {
        report.fail("invalid edge id " + std::to_string(e));
        return report;
      }
    }
  }

  std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), 0);
  for (VertexId v : c.branch_a) {
    if (side[v] != 0) report.fail("vertex " + std::to_string(v) + " repeated in branch_a");
    side[v] = 1;
  }
  for (VertexId v : c.branch_b) {
    if (side[v] == 1) report.fail("vertex " + std::to_string(v) + " lies in both branch sets");
    else if (side[v] == 2) report.fail("vertex " + std::to_string(v) + " repeated in branch_b");
    side[v] = 2;
  }
  if (!report) return report;

  std::set<EdgeId> used;
  for (const auto* set : {&c.tree_edges_a, &c.tree_edges_b, &c.cross_edges}) {
    for (EdgeId e : *set) {
      if (!used.insert(e).second) report.fail("edge " + std::to_string(e) + " used twice");
    }
  }

  check_branch(g, c.branch_a, c.tree_edges_a, "branch_a", report);
  check_branch(g, c.branch_b, c.tree_edges_b, "branch_b", report);

  for (EdgeId e : c.cross_edges) {
    const Edge& ed = g.edge(e);
    const bool joins = (side[ed.u] == 1 && side[ed.v] == 2) || (side[ed.u] == 2 && side[ed.v] == 1);
    if (!joins) report.fail("cross edge " + std::to_string(e) + " does not join the branch sets");
  }
  if (static_cast<int>(c.cross_edges.size()) != c.r) {
    report.fail("certificate has " + std::to_string(c.cross_edges.size()) + " cross edges but r=" +
                std::to_string(c.r));
  }
  if (c.r != r) report.fail("certificate r=" + std::to_string(c.r) + " but expected r=" + std::to_string(r));

  const auto total = c.tree_edges_a.size() + c.tree_edges_b.size() + c.cross_edges.size();
  if (static_cast<std::size_t>(c.total_edges) != total) {
    report.fail("total_edges=" + std::to_string(c.total_edges) + " but the edge sets hold " +
                std::to_string(total));
  }
  if (z >= 0 && static_cast<long long>(total) > z) {
    report.fail("model uses " + std::to_string(total) + " edges, budget is " + std::to_string(z));
  }
  return report;
}

int quotient_min_degree_via_contraction(const Multigraph& g,
                                        std::span<const std::vector<VertexId>> parts) {
  return contract_partition(g, parts).min_degree();
}

MinorCheck verify_minor_model(const Multigraph& g, const MinorModelCertificate& c) {
  MinorCheck check;
  try {
    const auto index = partition_index(g, c.branch_sets);
    (void)index;
  } catch (const GraphError& e) {
    check.report.fail(e.what());
    return check;
  }
  for (std::size_t p = 0; p < c.branch_sets.size(); ++p) {
    if (!induces_connected(g, c.branch_sets[p])) {
      check.report.fail("branch set " + std::to_string(p) + " is not connected");
    }
  }
  if (!check.report) return check;
  check.actual_min_degree = quotient_min_degree_via_contraction(g, c.branch_sets);
  if (BigInt(check.actual_min_degree) < c.claimed_min_degree) {
    check.report.fail("quotient minimum degree " + std::to_string(check.actual_min_degree) +
                      " is below the claimed " + c.claimed_min_degree.str());
  }
  return check;
}

}  // namespace theta
