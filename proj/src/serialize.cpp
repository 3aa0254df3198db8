#include "theta/serialize.hpp"

#include "theta/bounds.hpp"

namespace theta {

Json to_json(const ThetaCertificate& c) {
  return Json{{"kind", "theta"},
              {"branch_a", c.branch_a},
              {"branch_b", c.branch_b},
              {"tree_edges_a", c.tree_edges_a},
              {"tree_edges_b", c.tree_edges_b},
              {"cross_edges", c.cross_edges},
              {"r", c.r},
              {"total_edges", c.total_edges}};
}

Json to_json(const MinorModelCertificate& c) {
  return Json{{"kind", "minor_model"}, {"branch_sets", c.branch_sets}, {"claimed_min_degree", c.claimed_min_degree.str()}};
}

Json to_json(const RootedTreePartition& tp) {
  Json nodes = Json::array();
  for (NodeId t = 0; t < tp.node_count(); ++t) {
    nodes.push_back(Json{{"id", t}, {"parent", tp.parent[t]}, {"bag", tp.bags[t]}});
  }
  return Json{{"root", tp.root}, {"nodes", nodes}};
}

Json to_json(const ProtrusionCertificate& c) {
  return Json{{"kind", "protrusion"},
              {"y", c.y},
              {"boundary", c.boundary},
              {"tree_partition", to_json(c.tree_partition)},
              {"t", c.t},
              {"extension", c.extension},
              {"folded_path_length", c.folded_path_length},
              {"connected", c.connected}};
}

Json to_json(const PackingCertificate& c) {
  Json models = Json::array();
  for (const auto& m : c.models) models.push_back(to_json(m));
  return Json{{"kind", "packing"},
              {"models", models},
              {"part_assignment", c.part_assignment},
              {"seed", c.seed},
              {"restarts", c.restarts}};
}

Json to_json(const DistanceDecomposition& dd) {
  Json nodes = Json::array();
  for (NodeId t = 0; t < dd.node_count(); ++t) {
    nodes.push_back(Json{{"id", t},
                         {"parent", dd.parent(t)},
                         {"bag", dd.bag(t)},
                         {"depth", dd.depth[t]},
                         {"parent_edges", dd.parent_edges[t]}});
  }
  return Json{{"kind", "distance_decomposition"}, {"origin", dd.origin}, {"height", dd.height}, {"nodes", nodes}};
}

Json to_json(const GroupedPartition& gp, const Multigraph& g) {
  Json regions = Json::array();
  for (int i = 0; i < gp.region_count(); ++i) {
    const auto f = frontier_report(g, gp, i);
    regions.push_back(Json{{"center", gp.centers[i]},
                           {"vertices", gp.regions[i]},
                           {"decomposition", to_json(gp.region_dds[i])},
                           {"vertex_frontier", f.vertex_frontier},
                           {"node_frontier", f.node_frontier},
                           {"ports", f.ports}});
  }
  return Json{{"kind", "grouped_partition"}, {"radius", gp.radius}, {"regions", regions}};
}

ThetaCertificate theta_from_json(const Json& j) {
  ThetaCertificate c;
  j.at("branch_a").get_to(c.branch_a);
  j.at("branch_b").get_to(c.branch_b);
  j.at("tree_edges_a").get_to(c.tree_edges_a);
  j.at("tree_edges_b").get_to(c.tree_edges_b);
  j.at("cross_edges").get_to(c.cross_edges);
  j.at("r").get_to(c.r);
  j.at("total_edges").get_to(c.total_edges);
  return c;
}

MinorModelCertificate minor_from_json(const Json& j) {
  MinorModelCertificate c;
  j.at("branch_sets").get_to(c.branch_sets);
  c.claimed_min_degree = BigInt(j.at("claimed_min_degree").get<std::string>());
  return c;
}

RootedTreePartition tree_partition_from_json(const Json& j) {
  RootedTreePartition tp;
  j.at("root").get_to(tp.root);
  for (const auto& node : j.at("nodes")) {
    const auto id = node.at("id").get<std::size_t>();
    if (id != tp.bags.size()) throw GraphError("tree-partition nodes must be listed by id");
    tp.parent.push_back(node.at("parent").get<NodeId>());
    tp.bags.push_back(node.at("bag").get<std::vector<VertexId>>());
  }
  return tp;
}

ProtrusionCertificate protrusion_from_json(const Json& j) {
  ProtrusionCertificate c;
  j.at("y").get_to(c.y);
  j.at("boundary").get_to(c.boundary);
  c.tree_partition = tree_partition_from_json(j.at("tree_partition"));
  j.at("t").get_to(c.t);
  j.at("extension").get_to(c.extension);
  j.at("folded_path_length").get_to(c.folded_path_length);
  j.at("connected").get_to(c.connected);
  return c;
}

PackingCertificate packing_from_json(const Json& j) {
  PackingCertificate c;
  for (const auto& m : j.at("models")) c.models.push_back(theta_from_json(m));
  j.at("part_assignment").get_to(c.part_assignment);
  j.at("seed").get_to(c.seed);
  j.at("restarts").get_to(c.restarts);
  return c;
}

namespace {

Json minor_document(const MinorOutcome& m) {
  Json doc = to_json(m.model);
  doc["actual_min_degree"] = m.actual_min_degree;
  return doc;
}

}  // namespace

Json outcome_document(const Outcome4& out, int r, int delta, long long z) {
  Json doc;
  if (const auto* c = std::get_if<ThetaCertificate>(&out.value)) {
    doc = to_json(*c);
  } else if (const auto* low = std::get_if<LowDegreeWitness>(&out.value)) {
    doc = Json{{"kind", "low_degree_vertex"}, {"vertex", low->vertex}, {"degree", low->degree}};
  } else {
    doc = minor_document(std::get<MinorOutcome>(out.value));
  }
  doc["theorem"] = 4;
  doc["theorem_bound"] = out.bound.str();
  doc["route"] = out.route;
  doc["params"] = Json{{"r", r}, {"delta", delta}, {"z", z}, {"d", out.d}};
  return doc;
}

Json outcome_document(const Outcome5& out, int r, int w, long long z) {
  Json doc;
  if (const auto* c = std::get_if<ThetaCertificate>(&out.value)) {
    doc = to_json(*c);
  } else if (const auto* c = std::get_if<ProtrusionCertificate>(&out.value)) {
    doc = to_json(*c);
  } else {
    doc = minor_document(std::get<MinorOutcome>(out.value));
  }
  doc["theorem"] = 5;
  doc["theorem_bound"] = out.bound.str();
  doc["route"] = out.route;
  doc["params"] = Json{{"r", r}, {"w", w}, {"z", z}, {"d", out.d}};
  return doc;
}

Json packing_document(const PackingCertificate& c, int k, int r) {
  Json doc = to_json(c);
  doc["params"] = Json{{"k", k}, {"r", r}};
  return doc;
}

VerifyReport verify_document(const Multigraph& g, const Json& doc) {
  VerifyReport report;
  const auto kind = doc.at("kind").get<std::string>();
  const Json params = doc.contains("params") ? doc.at("params") : Json::object();
  const int theorem = doc.contains("theorem") ? doc.at("theorem").get<int>() : 0;

  // A theorem document must carry the bound its parameters imply.
  std::optional<BigInt> bound;
  if (theorem == 4 || theorem == 5) {
    const int r = params.at("r").get<int>();
    const long long z = params.at("z").get<long long>();
    bound = theorem == 5 ? theorem5_bound(r, params.at("w").get<int>(), z)
                         : theorem4_bound(r, params.at("delta").get<int>(), z);
    if (BigInt(doc.at("theorem_bound").get<std::string>()) != *bound) {
      report.fail("theorem_bound does not match the parameters");
      return report;
    }
  }

  if (kind == "theta") {
    const auto c = theta_from_json(doc);
    const long long z = params.contains("z") ? params.at("z").get<long long>() : -1;
    const int r = params.contains("r") ? params.at("r").get<int>() : c.r;
    return verify_theta_certificate(g, c, r, z);
  }
  if (kind == "minor_model") {
    auto check = verify_minor_model(g, minor_from_json(doc));
    if (check.report && bound && BigInt(check.actual_min_degree) < *bound) {
      check.report.fail("quotient minimum degree " + std::to_string(check.actual_min_degree) + " is below the bound " +
                        bound->str());
    }
    return check.report;
  }
  if (kind == "protrusion") {
    const auto c = protrusion_from_json(doc);
    if (theorem == 5) return verify_protrusion(g, c, 2 * params.at("r").get<int>() - 2, params.at("w").get<int>(), true);
    const int w = params.contains("w") ? params.at("w").get<int>() : 0;
    const int t = params.contains("t") ? params.at("t").get<int>() : c.t;
    return verify_protrusion(g, c, t, w, c.connected);
  }
  if (kind == "low_degree_vertex") {
    const auto v = doc.at("vertex").get<VertexId>();
    const int delta = params.at("delta").get<int>();
    if (!g.valid_vertex(v)) report.fail("invalid vertex " + std::to_string(v));
    else if (g.degree(v) >= delta) report.fail("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    return report;
  }
  if (kind == "packing") {
    return verify_packing(g, packing_from_json(doc), params.at("k").get<int>(), params.at("r").get<int>());
  }
  report.fail("unknown certificate kind '" + kind + "'");
  return report;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace theta
