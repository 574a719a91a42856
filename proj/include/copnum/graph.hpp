#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "copnum/error.hpp"
#include "copnum/vertex_set.hpp"

namespace copnum {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1, 1 <= n <= 62.
///
/// Adjacency is stored as one 64-bit row per vertex holding the open
/// neighborhood N(v). Rows are symmetric and never contain the vertex itself;
/// the game's "pass" move is expressed through closed neighborhoods instead of
/// stored loops.
class Graph {
 public:
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from adjacency rows. Rejects asymmetric rows, loops and bits at or
  /// beyond n.
  static Graph from_rows(std::span<const std::uint64_t> rows);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  /// N(v)
  VertexSet neighbors(Vertex v) const {
    check_vertex(v);
    return VertexSet(adj_[v]);
  }
  /// N[v] = N(v) + v
  VertexSet closed_neighborhood(Vertex v) const {
    check_vertex(v);
    return VertexSet(adj_[v] | (std::uint64_t{1} << v));
  }
  /// N[S], the union of closed neighborhoods.
  VertexSet closed_neighborhood(VertexSet s) const;
  /// N(S) = union of N(v) over S, minus S.
  VertexSet neighborhood(VertexSet s) const;

  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1U;
  }
  int degree(Vertex v) const { return neighbors(v).size(); }
  int max_degree() const;
  int min_degree() const;
  int edge_count() const;
  std::vector<Edge> edges() const;

  /// True iff N[v] is a subset of N[w]. Requires v != w.
  bool is_dominated(Vertex v, Vertex w) const;
  bool is_connected() const;
  int component_count() const;
  /// Vertices reachable from `start` while staying inside `allowed`.
  /// `start` must be a member of `allowed`.
  VertexSet component_within(Vertex start, VertexSet allowed) const;
  /// Length of a shortest cycle, absent for forests.
  std::optional<int> girth() const;
  bool is_bipartite() const;

  struct Induced;
  /// G[S] with vertices relabeled 0..|S|-1 in increasing original order.
  Induced induced_subgraph(VertexSet s) const;
  /// G - v, relabeled like induced_subgraph.
  Graph remove_vertex(Vertex v) const;
  /// Relabels vertex v as perm[v]. `perm` must be a permutation of 0..n-1.
  Graph permuted(std::span<const Vertex> perm) const;

  std::uint64_t row(Vertex v) const { return adj_[v]; }
  std::span<const std::uint64_t> rows() const {
    return {adj_.data(), static_cast<std::size_t>(n_)};
  }

  bool operator==(const Graph& o) const;

 private:
  Graph() = default;
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) contract_violation("vertex out of range");
  }

  int n_ = 0;
  std::array<std::uint64_t, kMaxOrder> adj_{};
};

struct Graph::Induced {
  Graph graph;
  /// original[i] is the label in the parent graph of vertex i.
  std::vector<Vertex> original;
};

/// Decodes one graph6 record. A single trailing newline is accepted; any
/// other trailing byte is an error.
Graph parse_graph6(std::string_view text);
/// Encodes without a trailing newline.
std::string emit_graph6(const Graph& g);

}  // namespace copnum
