#include <doctest.h>

#include <sstream>

#include "corpus.hpp"
#include "theta/certificates.hpp"
#include "theta/generators.hpp"
#include "theta/oracles.hpp"

using namespace theta;

TEST_CASE("edge-list parsing") {
  const auto p3 = parse_edge_list("3\n0 1\n1 2\n");
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.edge_count() == 2);

  const auto bundle = parse_edge_list("2\n0 1\n0 1\n");
  CHECK(bundle.edge_count() == 2);
  CHECK(bundle.degree(0) == 1);
  CHECK(bundle.incident_edge_count(0) == 2);
  CHECK(bundle == theta_graph(2));

  const auto fig2 = parse_edge_list(
      "# Fig. 2\n9\n5 6\n6 8\n8 7\n7 5\n5 3\n3 4\n4 5\n1 3\n3 0\n0 2\n2 3\n");
  CHECK(fig2.edge_count() == 11);
  CHECK(fig2 == figure2_graph());
}

TEST_CASE("edge-list errors carry line numbers") {
  try {
    parse_edge_list("3\n0 1\n1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_edge_list("3\n1 1\n"), GraphError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
}

TEST_CASE("edge-list round trip is byte-identical") {
  for (const auto& g : corpus::random_graphs(20, 30, 5)) {
    const auto text = to_edge_list(g);
    CHECK(to_edge_list(parse_edge_list(text)) == text);
  }
}

TEST_CASE("degree counts distinct neighbours") {
  CHECK(theta_graph(5).degree(0) == 1);
  CHECK(theta_graph(5).degree(1) == 1);
  for (VertexId v = 0; v < 4; ++v) CHECK(complete_graph(4).degree(v) == 3);
  CHECK(figure2_graph().degree(3) == 5);
  CHECK_THROWS(figure2_graph().degree(9));
}

TEST_CASE("contract_partition") {
  const std::vector<std::vector<VertexId>> halves{{0, 1}, {2, 3}};
  const auto q = contract_partition(cycle_graph(4), halves);
  CHECK(q.vertex_count() == 2);
  CHECK(q.edge_count() == 2);

  // u1's only neighbour is u3, so {u0, u1, u2} is not a connected part.
  const auto fig2 = figure2_graph();
  const std::vector<std::vector<VertexId>> loose_parts{{5, 6, 7, 8}, {3, 4}, {0, 1, 2}};
  CHECK_THROWS_AS(contract_partition(fig2, loose_parts), GraphError);

  const std::vector<std::vector<VertexId>> parts{{5, 6, 7, 8}, {3, 4}, {0, 2}, {1}};
  const auto h = contract_partition(fig2, parts);
  CHECK(h.vertex_count() == 4);
  int a = 0;
  int b = 0;
  for (const auto& e : h.edges()) {
    const auto lo = std::min(e.u, e.v);
    const auto hi = std::max(e.u, e.v);
    if (lo == 0 && hi == 1) ++a;
    if (lo == 1 && hi >= 2) ++b;
  }
  // u5u3 and u4u5 join the first two groups; u1u3, u3u0, u2u3 leave {u3, u4}.
  CHECK(a == 2);
  CHECK(b == 3);
  CHECK(h.edge_count() == 5);

  std::vector<std::vector<VertexId>> singletons;
  for (VertexId v = 0; v < fig2.vertex_count(); ++v) singletons.push_back({v});
  CHECK(contract_partition(fig2, singletons) == fig2);

  const std::vector<std::vector<VertexId>> broken{{0, 2}, {1, 3}};
  CHECK_THROWS_AS(contract_partition(cycle_graph(4), broken), GraphError);
}

TEST_CASE("theta certificate verifier") {
  const auto t5 = theta_graph(5);
  ThetaCertificate c{{0}, {1}, {}, {}, {0, 1, 2, 3, 4}, 5, 5};
  CHECK(verify_theta_certificate(t5, c, 5, 5));
  CHECK_FALSE(verify_theta_certificate(t5, c, 5, 4));

  // C_5 edges: 0:(0,1) 1:(1,2) 2:(2,3) 3:(3,4) 4:(4,0)
  const auto c5 = cycle_graph(5);
  ThetaCertificate cyc{{0, 1}, {2, 3, 4}, {0}, {2, 3}, {1, 4}, 2, 5};
  CHECK(verify_theta_certificate(c5, cyc, 2, 5));

  auto overlap = cyc;
  overlap.branch_b = {1, 2, 3, 4};
  CHECK_FALSE(verify_theta_certificate(c5, overlap, 2, -1));
  auto disconnected = cyc;
  disconnected.tree_edges_b = {2};
  disconnected.total_edges = 4;
  CHECK_FALSE(verify_theta_certificate(c5, disconnected, 2, -1));
  auto wrong_total = cyc;
  wrong_total.total_edges = 4;
  CHECK_FALSE(verify_theta_certificate(c5, wrong_total, 2, -1));
  auto reused = cyc;
  reused.cross_edges = {1, 1};
  CHECK_FALSE(verify_theta_certificate(c5, reused, 2, -1));
}

TEST_CASE("minor model verifier") {
  std::vector<std::vector<VertexId>> singletons{{0}, {1}, {2}, {3}};
  auto k4 = verify_minor_model(complete_graph(4), {singletons, 3});
  CHECK(k4.report);
  CHECK(k4.actual_min_degree == 3);

  const std::vector<std::vector<VertexId>> pairs{{0, 1}, {2, 3}, {4, 5}};
  auto c6 = verify_minor_model(cycle_graph(6), {pairs, 2});
  CHECK(c6.report);
  CHECK(c6.actual_min_degree == 2);
  CHECK_FALSE(verify_minor_model(cycle_graph(6), {pairs, 3}).report);

  const std::vector<std::vector<VertexId>> not_cover{{0, 1}, {2, 3}};
  CHECK_FALSE(verify_minor_model(cycle_graph(6), {not_cover, 0}).report);
}

TEST_CASE("quotient minimum degree agrees with the independent oracle") {
  for (const auto& g : corpus::random_graphs(40, 20, 11)) {
    // Pair each vertex with its first unused neighbour.
    std::vector<std::vector<VertexId>> parts;
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (used[v]) continue;
      used[v] = 1;
      std::vector<VertexId> part{v};
      for (const auto& inc : g.incident(v)) {
        if (!used[inc.neighbor]) {
          used[inc.neighbor] = 1;
          part.push_back(inc.neighbor);
          break;
        }
      }
      parts.push_back(part);
    }
    CHECK(quotient_min_degree(g, parts) == quotient_min_degree_via_contraction(g, parts));
  }
}
