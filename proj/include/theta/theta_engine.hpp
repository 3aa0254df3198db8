#pragma once

#include <optional>
#include <string>
#include <variant>

#include "theta/bigint.hpp"
#include "theta/oracles.hpp"
#include "theta/partitioner.hpp"
#include "theta/protrusion.hpp"

namespace theta {

/// θ_r-model at node t, which must satisfy |E^(t)| >= r. Grows U from the
/// smallest vertex of X_t by escape paths until r edges of E^(t) touch U.
ThetaCertificate theta_at_node(const Multigraph& g, const DistanceDecomposition& dd, NodeId t, int r);

/// First non-root node in BFS order with |E^(t)| >= r, or nothing.
std::optional<ThetaCertificate> theta_from_heavy_node(const Multigraph& g, const DistanceDecomposition& dd, int r);

/// First non-root bag with at least r vertices, via theta_at_node.
std::optional<ThetaCertificate> theta_from_big_bag(const Multigraph& g, const DistanceDecomposition& dd, int r);

/// r cross edges between R_i and R_j plus predecessor paths to both centers.
std::optional<ThetaCertificate> theta_from_region_pair(const Multigraph& g, const GroupedPartition& gp, int i, int j,
                                                       int r);

/// θ_2-model on a shortest cycle.
ThetaCertificate theta_from_cycle(const Multigraph& g, const Cycle& cycle);

struct LowDegreeWitness {
  VertexId vertex = kNone;
  int degree = 0;
};

struct MinorOutcome {
  MinorModelCertificate model;
  int actual_min_degree = 0;
};

struct Outcome4 {
  std::variant<ThetaCertificate, LowDegreeWitness, MinorOutcome> value;
  BigInt bound;  // ⌈Theorem 4 bound⌉
  int d = 0;
  std::string route;
};

struct Outcome5 {
  std::variant<ThetaCertificate, ProtrusionCertificate, MinorOutcome> value;
  BigInt bound;  // ⌈Theorem 5 bound⌉
  int d = 0;
  std::string route;
};

/// Theta with <= z edges, a vertex of degree < δ, or a minor with
/// δ(H) >= bound. Requires r >= 2, δ >= 3r, z >= r and G connected.
Outcome4 run_theorem4(const Multigraph& g, int r, int delta, long long z);

/// Theta with <= z edges, a connected (2r−2)-edge-protrusion with extension
/// > w, or a minor with δ(H) >= bound. Requires r >= 2, w >= 1,
/// m >= z > r and G connected.
Outcome5 run_theorem5(const Multigraph& g, int r, int w, long long z);

/// Re-checks an outcome against its verifier and the quantitative bound.
VerifyReport verify_outcome4(const Multigraph& g, const Outcome4& out, int r, int delta, long long z);
VerifyReport verify_outcome5(const Multigraph& g, const Outcome5& out, int r, int w, long long z);

/// Search used when d is too small for the grouped pipeline: exact shortest
/// cycle for r = 2, otherwise heavy nodes of the decompositions from every
/// origin. Returns the first model with at most z edges.
std::optional<ThetaCertificate> small_theta_search(const Multigraph& g, int r, long long z);

}  // namespace theta
