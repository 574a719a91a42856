#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "copnum/graph.hpp"

namespace copnum {

/// Largest cop count and order the exact solver accepts.
inline constexpr int kSolverMaxCops = 4;
inline constexpr int kSolverMaxOrder = 30;

enum class Turn : std::uint8_t { Cops, Robber };

/// A position of the game: cop multiset (sorted ascending), robber vertex and
/// the side to move.
struct GameState {
  std::vector<Vertex> cops;
  Vertex robber = 0;
  Turn turn = Turn::Cops;

  bool captured() const;
  auto operator<=>(const GameState&) const = default;
};

/// Renders a state in bracket form, underlining the side to move, e.g.
/// `(_0, 3_ ; 5)` when the cops move and `(0, 3 ; _5_)` when the robber does.
std::string to_string(const GameState& s);

/// Ranks sorted k-multisets over 0..n-1 in colex order.
class MultisetIndex {
 public:
  MultisetIndex(int n, int k);

  int order() const { return n_; }
  int size() const { return k_; }
  std::size_t count() const { return count_; }
  std::size_t rank(std::span<const Vertex> sorted) const;
  std::span<const std::int8_t> tuple(std::size_t rank) const {
    return {tuples_.data() + rank * k_, static_cast<std::size_t>(k_)};
  }

 private:
  int n_;
  int k_;
  std::size_t count_;
  std::vector<std::vector<std::size_t>> binom_;
  std::vector<std::int8_t> tuples_;
};

/// Outcome of retrograde analysis of the k-cop game on one graph.
///
/// capture_time counts cop moves still needed under optimal play by both
/// sides; it is 0 exactly on states where the robber shares a vertex with a
/// cop and absent on states the robber wins.
class SolveResult {
 public:
  const Graph& graph() const { return graph_; }
  int k() const { return index_->size(); }
  bool cops_win_overall() const { return overall_; }

  bool is_winning(const GameState& s) const;
  std::optional<int> capture_time(const GameState& s) const;

  /// Cop placement minimizing the worst-case capture time (ties: least tuple);
  /// absent when the robber wins.
  std::optional<std::vector<Vertex>> optimal_opening() const;
  std::optional<int> opening_capture_time() const;

  std::size_t placement_count() const { return index_->count(); }
  std::vector<Vertex> placement(std::size_t i) const;
  /// Joint cop moves from a placement, each cop within its closed
  /// neighborhood; deduplicated, in rank order.
  std::vector<std::vector<Vertex>> cop_moves(std::span<const Vertex> cops) const;

 private:
  friend SolveResult cops_win(const Graph& g, int k);

  SolveResult(const Graph& g, int k);
  std::size_t slot(const GameState& s) const;

  Graph graph_;
  std::shared_ptr<const MultisetIndex> index_;
  // -1 marks robber-winning states.
  std::vector<std::int32_t> cop_time_;
  std::vector<std::int32_t> robber_time_;
  bool overall_ = false;
};

/// Decides whether k cops win on g (connected, 1 <= k <= n, k <= 4, n <= 30).
SolveResult cops_win(const Graph& g, int k);

/// Least k such that k cops win. Uses dismantlability for k = 1.
int cop_number(const Graph& g);

/// A cop-win (dismantling) ordering: vertices in deletion order, each
/// dominated in the graph that remains, ending with the last survivor.
/// Absent when the graph is not dismantlable.
std::optional<std::vector<Vertex>> dismantling_order(const Graph& g);

struct SafeNeighborhood {
  VertexSet vertices;
  bool trapped() const { return vertices.empty(); }
};

/// The robber's region beyond the cops' reach. When the robber is outside
/// N[C] this is its component of G - N[C]. When it stands in N(C) it is the
/// union of the components of G - N[C] it can enter in one move. Empty when
/// the robber is on a cop.
SafeNeighborhood safe_neighborhood(const Graph& g, std::span<const Vertex> cops,
                                   Vertex robber);

/// Robber adjacent to a cop with every neighbor covered: r in N(C) and
/// N(r) within N[C]. Requires the robber not to share a vertex with a cop.
bool is_trapped(const Graph& g, std::span<const Vertex> cops, Vertex robber);

/// Sufficient cop-win test for a cops-to-move state with k >= 2 cops:
/// |S| <= 2 and |N(S)| <= 2k - 1 for the safe neighborhood S.
bool endgame_cop_win_small_safe(const Graph& g, std::span<const Vertex> cops,
                                Vertex robber);

/// Sufficient cop-win test for a cops-to-move state with k >= 2 cops: every
/// vertex of S has degree at most 3 in G, and at most one has degree 3.
bool endgame_cop_win_low_degree(const Graph& g, std::span<const Vertex> cops,
                                Vertex robber);

/// Next state under optimal play. Cops minimize capture time, the robber
/// maximizes it on lost states and stays safe on won ones; ties go to the
/// least successor. Throws Error(NoWinningMove) for cops to move from a
/// robber-winning state.
GameState optimal_move(const SolveResult& solved, const GameState& state);

struct Transcript {
  std::vector<Vertex> opening;
  Vertex robber_start = 0;
  /// Alternating states starting at the first cops-to-move state.
  std::vector<GameState> states;
  int cop_moves = 0;
  std::string text;
};

/// Optimal-versus-optimal play from the optimal opening, ending in capture.
/// Throws Error(NoWinningMove) when k cops lose on g.
Transcript play_transcript(const Graph& g, int k);

}  // namespace copnum
