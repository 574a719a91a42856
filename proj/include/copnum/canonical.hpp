#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "copnum/graph.hpp"

namespace copnum {

/// Order-independent encoding of a graph: one order byte followed by the
/// upper triangle (x01, x02, x12, x03, ...) of the canonically relabeled
/// adjacency matrix, packed most-significant-bit first and zero padded.
///
/// Two forms compare equal iff the graphs are isomorphic. Byte order is the
/// order used to sort generated streams.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::vector<std::uint8_t> bytes)
      : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  int order() const { return bytes_.empty() ? 0 : bytes_[0]; }
  /// The canonical representative itself.
  Graph graph() const;
  std::string hex() const;

  auto operator<=>(const CanonicalForm&) const = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

struct CanonicalLabeling {
  /// label[v] is the canonical position of original vertex v.
  std::vector<Vertex> label;
  CanonicalForm form;
};

CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
/// g relabeled into its canonical representative.
Graph canonical_graph(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

/// Largest order whose upper triangle fits in a single 64-bit code.
inline constexpr int kMaxCodeOrder = 11;

/// Canonical form packed into one word (bit i of the upper-triangle sequence
/// at bit 63-i), for n <= kMaxCodeOrder. Numeric order equals CanonicalForm
/// order among graphs of the same order.
std::uint64_t canonical_code(const Graph& g);
/// Same as canonical_code, straight from adjacency rows (no validation).
std::uint64_t canonical_code(int n, const std::uint64_t* rows);
/// Rebuilds the canonical representative from a packed code.
Graph graph_from_code(int n, std::uint64_t code);
CanonicalForm form_from_code(int n, std::uint64_t code);

}  // namespace copnum
