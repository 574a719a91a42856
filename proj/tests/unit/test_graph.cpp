#include <fstream>
#include <random>

#include "copnum/constructions.hpp"
#include "copnum/graph.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace copnum;

namespace {

Graph c4() { return standard_family(Family::Cycle, 4); }
Graph c5() { return standard_family(Family::Cycle, 5); }

VertexSet set_of(std::initializer_list<Vertex> vs) {
  VertexSet s;
  for (Vertex v : vs) s.insert(v);
  return s;
}

Graph6Fault fault_of(std::string_view text) {
  try {
    parse_graph6(text);
  } catch (const Graph6Error& e) {
    return e.fault();
  }
  FAIL("parse succeeded: " << text);
  return Graph6Fault::Empty;
}

}  // namespace

TEST_CASE("closed neighborhoods") {
  CHECK(c4().closed_neighborhood(0) == set_of({3, 0, 1}));
  CHECK(Graph(1).closed_neighborhood(0) == set_of({0}));
  const Graph p = petersen();
  for (Vertex v = 0; v < 10; ++v) CHECK(p.closed_neighborhood(v).size() == 4);
  CHECK_THROWS_AS(c4().closed_neighborhood(4), Error);
  CHECK_THROWS_AS(c4().closed_neighborhood(-1), Error);
}

TEST_CASE("set closed neighborhood and open neighborhood of a set") {
  CHECK(c5().closed_neighborhood(set_of({0})) == set_of({4, 0, 1}));
  CHECK(c5().closed_neighborhood(VertexSet{}).empty());
  CHECK(c5().closed_neighborhood(set_of({0, 2})) == VertexSet::range(5));
  CHECK(c5().neighborhood(set_of({0, 1})) == set_of({2, 4}));
}

TEST_CASE("domination") {
  CHECK(Graph(2, {{0, 1}}).is_dominated(0, 1));
  CHECK_FALSE(c4().is_dominated(0, 2));
  const Graph p3(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(p3.is_dominated(0, 2));
  CHECK(p3.is_dominated(0, 1));
  CHECK_THROWS_AS(p3.is_dominated(1, 1), Error);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = test::random_graph(rng, 7, 0.5);
    for (Vertex v = 0; v < 7; ++v) {
      for (Vertex w = 0; w < 7; ++w) {
        if (v != w && g.is_dominated(v, w)) CHECK(g.adjacent(v, w));
      }
    }
  }
}

TEST_CASE("connectivity") {
  CHECK(c4().is_connected());
  CHECK_FALSE(Graph(4, {{0, 1}, {2, 3}}).is_connected());
  CHECK(Graph(4, {{0, 1}, {2, 3}}).component_count() == 2);
  CHECK(Graph(1).is_connected());
  CHECK(Graph(4, {{0, 1}, {2, 3}}).component_within(2, VertexSet::range(4)) == set_of({2, 3}));
}

TEST_CASE("girth") {
  CHECK(petersen().girth() == 5);
  CHECK_FALSE(standard_family(Family::Path, 4).girth().has_value());
  CHECK(projective_plane_incidence(2).girth() == 6);
  CHECK(Graph(3, {{0, 1}, {1, 2}, {0, 2}}).girth() == 3);
  CHECK(c4().girth() == 4);

  // Acyclic exactly when m = n - components.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = test::random_graph(rng, 2 + trial % 9, 0.25);
    CHECK(!g.girth().has_value() == (g.edge_count() == g.order() - g.component_count()));
  }
}

TEST_CASE("induced subgraphs") {
  const Graph p = petersen();
  for (Vertex u = 0; u < 10; ++u) {
    const auto sub = p.induced_subgraph(p.vertices() - p.closed_neighborhood(u));
    CHECK(sub.graph.order() == 6);
    CHECK(is_isomorphic(sub.graph, standard_family(Family::Cycle, 6)));
  }
  const auto k2 = c4().induced_subgraph(set_of({0, 1}));
  CHECK(k2.graph == Graph(2, {{0, 1}}));
  CHECK(k2.original == std::vector<Vertex>{0, 1});
  CHECK(c5().induced_subgraph(VertexSet::range(5)).graph == c5());
  CHECK_THROWS_AS(c5().induced_subgraph(VertexSet{}), Error);
  CHECK(c5().remove_vertex(0) == standard_family(Family::Path, 4).permuted(std::vector<Vertex>{0, 1, 2, 3}));
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(Graph(0), Error);
  CHECK_THROWS_AS(Graph(63), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);
  const std::uint64_t asym[] = {0b10, 0b00};
  CHECK_THROWS_AS(Graph::from_rows(asym), Error);
  const std::uint64_t ok[] = {0b10, 0b01};
  CHECK(Graph::from_rows(ok) == Graph(2, {{0, 1}}));
}

TEST_CASE("graph6 examples") {
  CHECK(emit_graph6(c4()) == "Cl");
  CHECK(emit_graph6(Graph(1)) == "@");
  CHECK(parse_graph6("Cl") == c4());
  CHECK(parse_graph6("Cl\n") == c4());
  CHECK(emit_graph6(petersen()) == "I?LRCecq?");
  // Reference encodings from standard graph6 corpora.
  CHECK(parse_graph6("C~") == standard_family(Family::Complete, 4));
  CHECK(is_isomorphic(parse_graph6("IheA@GUAo"), petersen()));
}

TEST_CASE("graph6 faults are distinct") {
  CHECK(fault_of("") == Graph6Fault::Empty);
  CHECK(fault_of(" Cl") == Graph6Fault::BadHeader);
  CHECK(fault_of("\x7f") == Graph6Fault::BadHeader);
  CHECK(fault_of("~??") == Graph6Fault::OrderOutOfRange);
  CHECK(fault_of("?") == Graph6Fault::OrderOutOfRange);
  CHECK(fault_of("C ") == Graph6Fault::BadCharacter);
  CHECK(fault_of("D") == Graph6Fault::Truncated);
  CHECK(fault_of("Bx") == Graph6Fault::NonzeroPadding);
  CHECK(fault_of("Cl?") == Graph6Fault::TrailingBytes);
  CHECK(fault_of("Cl\n\n") == Graph6Fault::TrailingBytes);
  CHECK(fault_of("Cl ") == Graph6Fault::TrailingBytes);
  try {
    parse_graph6("Cl?");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % kMaxOrder);
    const Graph g = test::random_graph(rng, n, (trial % 10) / 10.0);
    const std::string text = emit_graph6(g);
    CHECK(text.size() == 1 + (n * (n - 1) / 2 + 5) / 6);
    CHECK(parse_graph6(text) == g);
    CHECK(emit_graph6(parse_graph6(text)) == text);
  }
}

TEST_CASE("graph6 round trip on the reference corpus") {
  std::ifstream in(std::string(COPNUM_TEST_DATA) + "/reference.g6");
  REQUIRE(in);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    CHECK(emit_graph6(parse_graph6(line)) == line);
    ++count;
  }
  CHECK(count > 0);
}

TEST_CASE("relabeling") {
  const Graph g(4, {{0, 1}, {1, 2}});
  const Graph h = g.permuted(std::vector<Vertex>{3, 2, 1, 0});
  CHECK(h == Graph(4, {{3, 2}, {2, 1}}));
  CHECK_THROWS_AS(g.permuted(std::vector<Vertex>{0, 0, 1, 2}), Error);
}
