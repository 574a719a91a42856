#include "copnum/graph.hpp"

#include <algorithm>
#include <limits>

namespace copnum {

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxOrder) {
    contract_violation("graph order must be in 1.." +
                       std::to_string(kMaxOrder) + ", got " +
                       std::to_string(n));
  }
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) contract_violation("self-loops are not stored");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }
}

Graph Graph::from_rows(std::span<const std::uint64_t> rows) {
  Graph g(static_cast<int>(rows.size()));
  const std::uint64_t mask = VertexSet::range(g.n_).bits();
  for (int v = 0; v < g.n_; ++v) {
    if (rows[v] & ~mask) contract_violation("adjacency bit beyond order");
    if ((rows[v] >> v) & 1U) contract_violation("self-loops are not stored");
    g.adj_[v] = rows[v];
  }
  for (int u = 0; u < g.n_; ++u) {
    for (Vertex v : VertexSet(g.adj_[u])) {
      if (!((g.adj_[v] >> u) & 1U)) {
        contract_violation("adjacency rows are not symmetric");
      }
    }
  }
  return g;
}

VertexSet Graph::closed_neighborhood(VertexSet s) const {
  VertexSet out = s;
  for (Vertex v : s) out |= VertexSet(adj_[v]);
  return out;
}

VertexSet Graph::neighborhood(VertexSet s) const {
  VertexSet out;
  for (Vertex v : s) out |= VertexSet(adj_[v]);
  return out - s;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::min_degree() const {
  int best = std::numeric_limits<int>::max();
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (Vertex v : VertexSet(adj_[u])) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_dominated(Vertex v, Vertex w) const {
  check_vertex(v);
  check_vertex(w);
  if (v == w) contract_violation("is_dominated requires distinct vertices");
  return closed_neighborhood(v).subset_of(closed_neighborhood(w));
}

VertexSet Graph::component_within(Vertex start, VertexSet allowed) const {
  check_vertex(start);
  if (!allowed.contains(start)) {
    contract_violation("component start vertex outside the allowed set");
  }
  VertexSet seen = VertexSet::singleton(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= VertexSet(adj_[v]);
    next = (next & allowed) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool Graph::is_connected() const {
  return component_within(0, vertices()) == vertices();
}

int Graph::component_count() const {
  int count = 0;
  VertexSet rest = vertices();
  while (!rest.empty()) {
    rest -= component_within(rest.first(), rest);
    ++count;
  }
  return count;
}

std::optional<int> Graph::girth() const {
  // Breadth-first search from every root; a non-tree edge (u, w) closes a
  // walk of length dist[u] + dist[w] + 1 that contains a cycle at most that
  // long, and the minimum over all roots is attained by a shortest cycle.
  int best = std::numeric_limits<int>::max();
  std::array<int, kMaxOrder> dist{};
  std::array<int, kMaxOrder> parent{};
  std::array<int, kMaxOrder> queue{};
  for (int root = 0; root < n_; ++root) {
    dist.fill(-1);
    dist[root] = 0;
    parent[root] = -1;
    int head = 0;
    int tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const int u = queue[head++];
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : VertexSet(adj_[u])) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

bool Graph::is_bipartite() const {
  std::array<int, kMaxOrder> side{};
  side.fill(-1);
  for (int root = 0; root < n_; ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (Vertex w : VertexSet(adj_[u])) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          stack.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph::Induced Graph::induced_subgraph(VertexSet s) const {
  if (s.empty()) contract_violation("induced subgraph of the empty set");
  if (!s.subset_of(vertices())) contract_violation("vertex set out of range");
  std::vector<Vertex> original = s.to_vector();
  std::array<int, kMaxOrder> relabel{};
  for (std::size_t i = 0; i < original.size(); ++i) {
    relabel[original[i]] = static_cast<int>(i);
  }
  Graph h(static_cast<int>(original.size()));
  for (std::size_t i = 0; i < original.size(); ++i) {
    for (Vertex w : VertexSet(adj_[original[i]]) & s) {
      h.adj_[i] |= std::uint64_t{1} << relabel[w];
    }
  }
  return {h, std::move(original)};
}

Graph Graph::remove_vertex(Vertex v) const {
  check_vertex(v);
  VertexSet rest = vertices();
  rest.erase(v);
  return induced_subgraph(rest).graph;
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    contract_violation("permutation length differs from graph order");
  }
  VertexSet image;
  for (Vertex p : perm) {
    check_vertex(p);
    image.insert(p);
  }
  if (image != vertices()) contract_violation("not a permutation");
  Graph h(n_);
  for (int u = 0; u < n_; ++u) {
    for (Vertex w : VertexSet(adj_[u])) {
      h.adj_[perm[u]] |= std::uint64_t{1} << perm[w];
    }
  }
  return h;
}

bool Graph::operator==(const Graph& o) const {
  return n_ == o.n_ && std::equal(adj_.begin(), adj_.begin() + n_,
                                  o.adj_.begin());
}

}  // namespace copnum
