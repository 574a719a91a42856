#pragma once

#include <map>
#include <string>
#include <string_view>

#include "copnum/graph.hpp"

namespace copnum {

/// A graph with named distinguished vertices.
struct TaggedGraph {
  Graph graph;
  std::map<std::string, Vertex, std::less<>> tags;

  Vertex tag(std::string_view name) const;
};

/// Kneser graph K(5,2): the 2-subsets of {0..4} in lexicographic order,
/// adjacent when disjoint.
Graph petersen();

enum class Family { Cycle, Path, Complete, Star };

/// C_n (n >= 3), P_n, K_n, or K_{1,n-1} with the center at vertex 0.
Graph standard_family(Family family, int n);

/// G plus a new vertex (tag "x") adjacent to every vertex of G.
TaggedGraph add_universal(const Graph& g);

struct BridgeConstruction {
  /// Tags: "x" (the universal vertex over G), "y" (the anchor inside H),
  /// "h_first" (first vertex of the copy of H).
  TaggedGraph tagged;
  int intended_cop_number = 0;
  /// deg(y) < deg(x) in the result, which makes x and y recoverable up to
  /// isomorphism.
  bool anchor_degree_condition = false;
};

/// add_universal(g) and a disjoint copy of h joined by the bridge x-y, where
/// y is h's "y" tag. h must be connected. When `check_cop_number` is set and
/// the solver can handle h, c(h) = k is verified.
BridgeConstruction plus_k(const Graph& g, const TaggedGraph& h, int k,
                          bool check_cop_number = true);

/// Incidence graph of the projective plane over the prime field F_q, q <= 5:
/// points then lines, each as normalized homogeneous coordinates in
/// lexicographic order.
Graph projective_plane_incidence(int q);

/// Parses a construction name: petersen, cycle:N, path:N, complete:N,
/// star:N, pg:Q, universal:<graph6>, plus-k:<graph6 G>:<graph6 H>:<anchor>:<k>.
Graph construct(std::string_view spec);

}  // namespace copnum
