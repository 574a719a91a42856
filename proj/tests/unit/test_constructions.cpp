#include <set>

#include "copnum/canonical.hpp"
#include "copnum/constructions.hpp"
#include "copnum/solver.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace copnum;

namespace {

TaggedGraph anchored(const Graph& g, Vertex y) { return {g, {{"y", y}}}; }

}  // namespace

TEST_CASE("petersen") {
  const Graph p = petersen();
  CHECK(p.order() == 10);
  CHECK(p.edge_count() == 15);
  CHECK(p.min_degree() == 3);
  CHECK(p.max_degree() == 3);
  CHECK(p.girth() == 5);
  const Graph c6 = standard_family(Family::Cycle, 6);
  for (Vertex u = 0; u < 10; ++u) {
    CHECK(is_isomorphic(p.induced_subgraph(p.vertices() - p.closed_neighborhood(u)).graph, c6));
  }
}

TEST_CASE("standard families") {
  CHECK(cop_number(standard_family(Family::Cycle, 4)) == 2);
  CHECK(standard_family(Family::Path, 1) == Graph(1));
  CHECK(cop_number(standard_family(Family::Complete, 5)) == 1);
  const Graph star = standard_family(Family::Star, 5);
  CHECK(star.degree(0) == 4);
  CHECK(star.edge_count() == 4);
  CHECK_THROWS_AS(standard_family(Family::Cycle, 2), Error);
  CHECK_THROWS_AS(standard_family(Family::Path, 0), Error);
  CHECK_THROWS_AS(standard_family(Family::Complete, 63), Error);
}

TEST_CASE("universal vertex") {
  const TaggedGraph w5 = add_universal(standard_family(Family::Cycle, 5));
  CHECK(w5.graph.order() == 6);
  CHECK(w5.graph.degree(w5.tag("x")) == 5);
  CHECK(dismantling_order(w5.graph).has_value());
  CHECK(cops_win(w5.graph, 1).cops_win_overall());
  CHECK(add_universal(Graph(1)).graph == Graph(2, {{0, 1}}));
  CHECK_THROWS_AS(add_universal(Graph(62)), Error);
  CHECK_THROWS_AS(w5.tag("z"), Error);
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : test::graphs_of_order(n)) {
      CHECK(dismantling_order(add_universal(g).graph).has_value());
    }
  }
}

TEST_CASE("bridge construction") {
  const Graph p3 = standard_family(Family::Path, 3);
  const BridgeConstruction a = plus_k(p3, anchored(petersen(), 0), 3);
  CHECK(a.tagged.graph.order() == 14);
  CHECK(cop_number(a.tagged.graph) == 3);
  CHECK(a.tagged.graph.adjacent(a.tagged.tag("x"), a.tagged.tag("y")));
  CHECK_FALSE(a.anchor_degree_condition);
  CHECK(plus_k(standard_family(Family::Path, 4), anchored(petersen(), 0), 3).anchor_degree_condition);
  CHECK(a.intended_cop_number == 3);

  const Graph c4 = standard_family(Family::Cycle, 4);
  for (Vertex y = 0; y < 4; ++y) {
    CHECK(cop_number(plus_k(Graph(1), anchored(c4, y), 2).tagged.graph) == 2);
  }

  CHECK_THROWS_AS(plus_k(p3, anchored(Graph(2), 0), 1), Error);
  CHECK_THROWS_AS(plus_k(p3, anchored(c4, 0), 3), Error);
  CHECK_THROWS_AS(plus_k(p3, TaggedGraph{c4, {}}, 2), Error);
  CHECK_THROWS_AS(plus_k(Graph(40), anchored(standard_family(Family::Path, 22), 0), 1), Error);
}

TEST_CASE("bridge construction keeps the intended cop number on small seeds") {
  const Graph p = petersen();
  const Graph c4 = standard_family(Family::Cycle, 4);
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : test::graphs_of_order(n)) {
      if (!g.is_connected()) continue;
      CHECK(cop_number(plus_k(g, anchored(p, 0), 3).tagged.graph) == 3);
      CHECK(cop_number(plus_k(g, anchored(c4, 0), 2).tagged.graph) == 2);
    }
  }
}

TEST_CASE("both maps are injective at order 4") {
  std::set<CanonicalForm> universal, bridged, inputs;
  for (const Graph& g : test::graphs_of_order(4)) {
    inputs.insert(canonical_form(g));
    universal.insert(canonical_form(add_universal(g).graph));
    bridged.insert(canonical_form(plus_k(g, anchored(petersen(), 0), 3).tagged.graph));
  }
  CHECK(inputs.size() == 11);
  CHECK(universal.size() == 11);
  CHECK(bridged.size() == 11);
}

TEST_CASE("projective plane incidence graphs") {
  for (int q : {2, 3, 5}) {
    const Graph g = projective_plane_incidence(q);
    const int side = q * q + q + 1;
    CHECK(g.order() == 2 * side);
    CHECK(g.min_degree() == q + 1);
    CHECK(g.max_degree() == q + 1);
    CHECK(g.is_bipartite());
    CHECK(g.girth() == 6);
    for (Vertex v = 0; v < side; ++v) CHECK(g.neighbors(v).subset_of(VertexSet::range(2 * side) - VertexSet::range(side)));
  }
  CHECK(cop_number(projective_plane_incidence(2)) == 3);
  CHECK_THROWS_AS(projective_plane_incidence(4), Error);
  CHECK_THROWS_AS(projective_plane_incidence(7), Error);
  CHECK_THROWS_AS(projective_plane_incidence(1), Error);
}

TEST_CASE("construction specs") {
  CHECK(emit_graph6(construct("cycle:4")) == "Cl");
  CHECK(construct("petersen") == petersen());
  CHECK(construct("pg:2") == projective_plane_incidence(2));
  CHECK(construct("star:4") == standard_family(Family::Star, 4));
  CHECK(construct("universal:Cl") == add_universal(construct("cycle:4")).graph);
  const Graph bridged = construct("plus-k:Ch:IheA@GUAo:0:3");
  CHECK(bridged.order() == 15);
  CHECK(cop_number(bridged) == 3);
  for (const char* bad : {"", "nope", "cycle:", "cycle:x", "cycle:2", "pg:4", "path:-1",
                          "cycle:4:5", "plus-k:Ch:Cl:9:2", "universal:!"}) {
    CHECK_THROWS_AS(construct(bad), Error);
  }
}
