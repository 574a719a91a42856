#include "copnum/constructions.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <vector>

#include "copnum/solver.hpp"

namespace copnum {

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    contract_violation("invalid " + std::string(what) + " '" +
                       std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto at = text.find(sep);
    out.push_back(text.substr(0, at));
    if (at == std::string_view::npos) return out;
    text.remove_prefix(at + 1);
  }
}

}  // namespace

Vertex TaggedGraph::tag(std::string_view name) const {
  auto it = tags.find(name);
  if (it == tags.end()) contract_violation("no tag named " + std::string(name));
  return it->second;
}

Graph petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  }
  std::vector<Edge> edges;
  for (int i = 0; i < 10; ++i) {
    for (int j = i + 1; j < 10; ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) edges.emplace_back(i, j);
    }
  }
  return Graph(10, edges);
}

Graph standard_family(Family family, int n) {
  const int min_order = family == Family::Cycle ? 3 : 1;
  if (n < min_order || n > kMaxOrder) {
    contract_violation("family order must be in " + std::to_string(min_order) +
                       ".." + std::to_string(kMaxOrder) + ", got " +
                       std::to_string(n));
  }
  std::vector<Edge> edges;
  switch (family) {
    case Family::Cycle:
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      break;
    case Family::Path:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::Complete:
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      }
      break;
    case Family::Star:
      for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
      break;
  }
  return Graph(n, edges);
}

TaggedGraph add_universal(const Graph& g) {
  const int n = g.order();
  if (n + 1 > kMaxOrder) {
    contract_violation("adding a universal vertex exceeds order " +
                       std::to_string(kMaxOrder));
  }
  std::vector<Edge> edges = g.edges();
  for (int v = 0; v < n; ++v) edges.emplace_back(v, n);
  return {Graph(n + 1, edges), {{"x", n}}};
}

BridgeConstruction plus_k(const Graph& g, const TaggedGraph& h, int k,
                          bool check_cop_number) {
  const int hn = h.graph.order();
  const int total = g.order() + 1 + hn;
  if (total > kMaxOrder) {
    contract_violation("plus_k result would have order " +
                       std::to_string(total) + " > " +
                       std::to_string(kMaxOrder));
  }
  if (!h.graph.is_connected()) {
    throw Error(ErrorCode::Disconnected, "plus_k requires a connected H");
  }
  const Vertex y = h.tag("y");
  if (check_cop_number && hn <= kSolverMaxOrder && k <= kSolverMaxCops) {
    const int c = cop_number(h.graph);
    if (c != k) {
      contract_violation("H has cop number " + std::to_string(c) +
                         ", expected " + std::to_string(k));
    }
  }

  const TaggedGraph base = add_universal(g);
  const Vertex x = base.tag("x");
  const int offset = base.graph.order();
  std::vector<Edge> edges = base.graph.edges();
  for (auto [u, v] : h.graph.edges()) edges.emplace_back(u + offset, v + offset);
  edges.emplace_back(x, y + offset);

  BridgeConstruction out{
      {Graph(total, edges), {{"x", x}, {"y", y + offset}, {"h_first", offset}}},
      k,
      false};
  out.anchor_degree_condition =
      out.tagged.graph.degree(y + offset) < out.tagged.graph.degree(x);
  return out;
}

Graph projective_plane_incidence(int q) {
  if (!is_prime(q)) {
    contract_violation("q must be prime, got " + std::to_string(q));
  }
  const int side = q * q + q + 1;
  if (2 * side > kMaxOrder) {
    contract_violation("incidence graph of order " + std::to_string(2 * side) +
                       " exceeds " + std::to_string(kMaxOrder));
  }
  // Normalized representatives: first nonzero coordinate equal to 1. The
  // nested loops emit them in lexicographic order.
  std::vector<std::array<int, 3>> reps;
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      for (int c = 0; c < q; ++c) {
        const int lead = a != 0 ? a : (b != 0 ? b : c);
        if (lead == 1) reps.push_back({a, b, c});
      }
    }
  }
  std::vector<Edge> edges;
  for (int p = 0; p < side; ++p) {
    for (int l = 0; l < side; ++l) {
      const auto& x = reps[p];
      const auto& u = reps[l];
      if ((x[0] * u[0] + x[1] * u[1] + x[2] * u[2]) % q == 0) {
        edges.emplace_back(p, side + l);
      }
    }
  }
  return Graph(2 * side, edges);
}

Graph construct(std::string_view spec) {
  const auto parts = split(spec, ':');
  const std::string_view name = parts[0];
  auto want = [&](std::size_t count) {
    if (parts.size() != count) {
      contract_violation("construction '" + std::string(name) + "' takes " +
                         std::to_string(count - 1) + " parameter(s)");
    }
  };
  if (name == "petersen") {
    want(1);
    return petersen();
  }
  if (name == "cycle" || name == "path" || name == "complete" ||
      name == "star") {
    want(2);
    const Family f = name == "cycle"  ? Family::Cycle
                     : name == "path" ? Family::Path
                     : name == "star" ? Family::Star
                                      : Family::Complete;
    return standard_family(f, parse_int(parts[1], "order"));
  }
  if (name == "pg") {
    want(2);
    return projective_plane_incidence(parse_int(parts[1], "q"));
  }
  if (name == "universal") {
    want(2);
    return add_universal(parse_graph6(parts[1])).graph;
  }
  if (name == "plus-k") {
    want(5);
    TaggedGraph h{parse_graph6(parts[2]), {}};
    const int anchor = parse_int(parts[3], "anchor");
    if (anchor < 0 || anchor >= h.graph.order()) {
      contract_violation("anchor vertex out of range");
    }
    h.tags["y"] = anchor;
    return plus_k(parse_graph6(parts[1]), h, parse_int(parts[4], "k"))
        .tagged.graph;
  }
  contract_violation("unknown construction '" + std::string(name) + "'");
}

}  // namespace copnum
