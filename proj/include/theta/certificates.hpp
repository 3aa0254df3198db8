#pragma once

#include <string>
#include <vector>

#include "theta/bigint.hpp"
#include "theta/graph.hpp"

namespace theta {

/// Outcome of a certificate check. Violations are collected, never thrown.
struct VerifyReport {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(std::string why) {
    ok = false;
    violations.push_back(std::move(why));
  }
  explicit operator bool() const noexcept { return ok; }
  std::string summary() const;
};

/// A θ_r-model: two disjoint connected branch sets spanned by tree edges,
/// joined by exactly r cross edges.
struct ThetaCertificate {
  std::vector<VertexId> branch_a;
  std::vector<VertexId> branch_b;
  std::vector<EdgeId> tree_edges_a;
  std::vector<EdgeId> tree_edges_b;
  std::vector<EdgeId> cross_edges;
  int r = 0;
  int total_edges = 0;

  /// Sorts every set and recomputes total_edges.
  void normalize();
  std::vector<VertexId> vertices() const;
};

/// Partition of V(G) into connected branch sets whose quotient has
/// minimum (distinct-neighbour) degree at least claimed_min_degree.
struct MinorModelCertificate {
  std::vector<std::vector<VertexId>> branch_sets;
  BigInt claimed_min_degree = 0;
};

/// z < 0 disables the edge budget.
VerifyReport verify_theta_certificate(const Multigraph& g, const ThetaCertificate& c, int r, long long z);

struct MinorCheck {
  VerifyReport report;
  int actual_min_degree = 0;
};

MinorCheck verify_minor_model(const Multigraph& g, const MinorModelCertificate& c);

/// δ of the quotient by `parts`, counting distinct neighbouring parts.
int quotient_min_degree_via_contraction(const Multigraph& g,
                                        std::span<const std::vector<VertexId>> parts);

}  // namespace theta
