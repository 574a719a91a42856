#include "copnum/solver.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <mutex>

namespace copnum {

namespace {

// Upper bound on the number of raw joint cop moves (before deduplication)
// the solver will enumerate for one table.
constexpr std::uint64_t kMaxJointMoves = 120'000'000;

void check_solvable(const Graph& g, int k) {
  if (k < 1 || k > g.order()) {
    contract_violation("cop count must be in 1..n (n = " +
                       std::to_string(g.order()) + "), got " +
                       std::to_string(k));
  }
  if (!g.is_connected()) {
    throw Error(ErrorCode::Disconnected,
                "the game is defined on connected graphs only");
  }
  if (k > kSolverMaxCops || g.order() > kSolverMaxOrder) {
    throw Error(ErrorCode::SolverCap,
                "solver supports at most " + std::to_string(kSolverMaxCops) +
                    " cops on at most " + std::to_string(kSolverMaxOrder) +
                    " vertices (requested k = " + std::to_string(k) +
                    ", n = " + std::to_string(g.order()) + ")");
  }
}

void check_state_vertices(const Graph& g, std::span<const Vertex> cops,
                          Vertex robber) {
  if (cops.empty()) contract_violation("at least one cop is required");
  for (Vertex c : cops) {
    if (c < 0 || c >= g.order()) contract_violation("cop vertex out of range");
  }
  if (robber < 0 || robber >= g.order()) {
    contract_violation("robber vertex out of range");
  }
}

VertexSet cop_set(std::span<const Vertex> cops) {
  VertexSet s;
  for (Vertex c : cops) s.insert(c);
  return s;
}

// Shared multiset indices; building the tuple table dominates small solves.
std::shared_ptr<const MultisetIndex> shared_index(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const MultisetIndex>>
      cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, k}];
  if (!slot) slot = std::make_shared<const MultisetIndex>(n, k);
  return slot;
}

/// Calls emit(rank) for every distinct joint move from the placement `from`.
template <class Emit>
void for_each_joint_move(const Graph& g, const MultisetIndex& index,
                         std::span<const std::int8_t> from,
                         std::vector<std::uint32_t>& stamp,
                         std::uint32_t mark, Emit&& emit) {
  const int k = index.size();
  std::array<VertexSet, kSolverMaxCops> choices{};
  for (int i = 0; i < k; ++i) choices[i] = g.closed_neighborhood(from[i]);
  std::array<Vertex, kSolverMaxCops> pick{};
  std::array<Vertex, kSolverMaxCops> sorted{};
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      std::copy_n(pick.begin(), k, sorted.begin());
      std::sort(sorted.begin(), sorted.begin() + k);
      const std::size_t r =
          index.rank({sorted.data(), static_cast<std::size_t>(k)});
      if (stamp[r] != mark) {
        stamp[r] = mark;
        emit(r);
      }
      return;
    }
    for (Vertex v : choices[i]) {
      pick[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

bool GameState::captured() const {
  return std::find(cops.begin(), cops.end(), robber) != cops.end();
}

std::string to_string(const GameState& s) {
  std::string cops;
  for (std::size_t i = 0; i < s.cops.size(); ++i) {
    if (i) cops += ", ";
    cops += std::to_string(s.cops[i]);
  }
  const std::string r = std::to_string(s.robber);
  if (s.turn == Turn::Cops) return "(_" + cops + "_ ; " + r + ")";
  return "(" + cops + " ; _" + r + "_)";
}

MultisetIndex::MultisetIndex(int n, int k) : n_(n), k_(k) {
  if (n < 1 || k < 1 || k > kSolverMaxCops || n > kMaxOrder) {
    contract_violation("multiset index out of range");
  }
  const int top = n + k;
  binom_.assign(top + 1, std::vector<std::size_t>(k + 2, 0));
  for (int a = 0; a <= top; ++a) {
    binom_[a][0] = 1;
    for (int b = 1; b <= k + 1 && b <= a; ++b) {
      binom_[a][b] = binom_[a - 1][b - 1] + (b <= a - 1 ? binom_[a - 1][b] : 0);
    }
  }
  count_ = binom_[n + k - 1][k];
  tuples_.assign(count_ * k, 0);
  std::vector<Vertex> t(k, 0);
  for (;;) {
    const std::size_t r = rank(t);
    for (int i = 0; i < k; ++i) tuples_[r * k + i] = static_cast<std::int8_t>(t[i]);
    int i = k - 1;
    while (i >= 0 && t[i] == n - 1) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[i];
  }
}

std::size_t MultisetIndex::rank(std::span<const Vertex> sorted) const {
  // Sorted multiset c_0 <= ... <= c_{k-1} maps to the strictly increasing
  // combination c_i + i, ranked in the combinatorial number system.
  std::size_t r = 0;
  for (int i = 0; i < k_; ++i) r += binom_[sorted[i] + i][i + 1];
  return r;
}

SolveResult::SolveResult(const Graph& g, int k)
    : graph_(g), index_(shared_index(g.order(), k)) {}

std::size_t SolveResult::slot(const GameState& s) const {
  if (static_cast<int>(s.cops.size()) != k()) {
    contract_violation("state has " + std::to_string(s.cops.size()) +
                       " cops, table was solved for " + std::to_string(k()));
  }
  check_state_vertices(graph_, s.cops, s.robber);
  if (!std::is_sorted(s.cops.begin(), s.cops.end())) {
    contract_violation("cop positions must be sorted ascending");
  }
  return index_->rank(s.cops) * graph_.order() + s.robber;
}

bool SolveResult::is_winning(const GameState& s) const {
  return capture_time(s).has_value();
}

std::optional<int> SolveResult::capture_time(const GameState& s) const {
  const std::size_t i = slot(s);
  const std::int32_t t =
      s.turn == Turn::Cops ? cop_time_[i] : robber_time_[i];
  if (t < 0) return std::nullopt;
  return t;
}

std::vector<Vertex> SolveResult::placement(std::size_t i) const {
  auto t = index_->tuple(i);
  return {t.begin(), t.end()};
}

std::optional<std::vector<Vertex>> SolveResult::optimal_opening() const {
  if (!overall_) return std::nullopt;
  const int n = graph_.order();
  std::optional<std::vector<Vertex>> best;
  int best_time = std::numeric_limits<int>::max();
  for (std::size_t c = 0; c < index_->count(); ++c) {
    int worst = 0;
    bool wins = true;
    for (int r = 0; r < n; ++r) {
      const std::int32_t t = cop_time_[c * n + r];
      if (t < 0) {
        wins = false;
        break;
      }
      worst = std::max(worst, static_cast<int>(t));
    }
    if (!wins) continue;
    std::vector<Vertex> p = placement(c);
    if (worst < best_time || (worst == best_time && p < *best)) {
      best_time = worst;
      best = std::move(p);
    }
  }
  return best;
}

std::optional<int> SolveResult::opening_capture_time() const {
  auto opening = optimal_opening();
  if (!opening) return std::nullopt;
  int worst = 0;
  for (int r = 0; r < graph_.order(); ++r) {
    worst = std::max(worst, *capture_time({*opening, r, Turn::Cops}));
  }
  return worst;
}

std::vector<std::vector<Vertex>> SolveResult::cop_moves(
    std::span<const Vertex> cops) const {
  std::vector<Vertex> sorted(cops.begin(), cops.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t from = index_->rank(sorted);
  std::vector<std::uint32_t> stamp(index_->count(), 0);
  std::vector<std::size_t> ranks;
  for_each_joint_move(graph_, *index_, index_->tuple(from), stamp, 1,
                      [&](std::size_t r) { ranks.push_back(r); });
  std::sort(ranks.begin(), ranks.end());
  std::vector<std::vector<Vertex>> out;
  out.reserve(ranks.size());
  for (std::size_t r : ranks) out.push_back(placement(r));
  return out;
}

SolveResult cops_win(const Graph& g, int k) {
  check_solvable(g, k);
  SolveResult res(g, k);
  const MultisetIndex& index = *res.index_;
  const int n = g.order();
  const std::size_t placements = index.count();
  const std::size_t states = placements * n;

  std::uint64_t raw_moves = 0;
  for (std::size_t c = 0; c < placements; ++c) {
    std::uint64_t prod = 1;
    for (std::int8_t v : index.tuple(c)) prod *= g.degree(v) + 1;
    raw_moves += prod;
  }
  if (raw_moves > kMaxJointMoves) {
    throw Error(ErrorCode::SolverCap,
                "joint cop move table too large (" + std::to_string(raw_moves) +
                    " raw moves)");
  }

  // Joint move lists in CSR form. The move relation is symmetric, so the
  // same lists serve as predecessor lists during retrograde propagation.
  std::vector<std::uint32_t> offsets(placements + 1, 0);
  std::vector<std::uint32_t> moves;
  moves.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(raw_moves, 1 << 24)));
  {
    std::vector<std::uint32_t> stamp(placements, 0);
    for (std::size_t c = 0; c < placements; ++c) {
      for_each_joint_move(g, index, index.tuple(c), stamp,
                          static_cast<std::uint32_t>(c + 1),
                          [&](std::size_t r) {
                            moves.push_back(static_cast<std::uint32_t>(r));
                          });
      offsets[c + 1] = static_cast<std::uint32_t>(moves.size());
    }
  }

  std::vector<VertexSet> occupied(placements);
  for (std::size_t c = 0; c < placements; ++c) {
    for (std::int8_t v : index.tuple(c)) occupied[c].insert(v);
  }

  res.cop_time_.assign(states, -1);
  res.robber_time_.assign(states, -1);
  std::vector<std::uint8_t> pending(states, 0);

  // Queue entries: state index * 2 + (1 for robber to move).
  std::vector<std::uint32_t> queue;
  queue.reserve(states * 2);
  for (std::size_t c = 0; c < placements; ++c) {
    for (int r = 0; r < n; ++r) {
      const std::size_t s = c * n + r;
      if (occupied[c].contains(r)) {
        res.cop_time_[s] = 0;
        res.robber_time_[s] = 0;
        queue.push_back(static_cast<std::uint32_t>(s * 2 + 1));
      } else {
        pending[s] = static_cast<std::uint8_t>(
            (g.closed_neighborhood(r) - occupied[c]).size());
      }
    }
  }

  // Breadth-first retrograde layers: every robber-to-move state of time t is
  // dequeued before any cops-to-move state of time t + 1, so the first cop
  // claim is a minimum and the last robber release is a maximum.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t s = queue[head] >> 1;
    const std::size_t c = s / n;
    const int r = static_cast<int>(s % n);
    if (queue[head] & 1U) {
      const std::int32_t t = res.robber_time_[s] + 1;
      for (std::uint32_t i = offsets[c]; i < offsets[c + 1]; ++i) {
        const std::size_t prev = static_cast<std::size_t>(moves[i]) * n + r;
        if (res.cop_time_[prev] >= 0) continue;
        res.cop_time_[prev] = t;
        queue.push_back(static_cast<std::uint32_t>(prev * 2));
      }
    } else {
      const std::int32_t t = res.cop_time_[s];
      for (Vertex rp : g.closed_neighborhood(r) - occupied[c]) {
        const std::size_t prev = c * n + rp;
        if (res.robber_time_[prev] >= 0) continue;
        if (--pending[prev] == 0) {
          res.robber_time_[prev] = t;
          queue.push_back(static_cast<std::uint32_t>(prev * 2 + 1));
        }
      }
    }
  }

  for (std::size_t c = 0; c < placements && !res.overall_; ++c) {
    bool all = true;
    for (int r = 0; r < n && all; ++r) all = res.cop_time_[c * n + r] >= 0;
    res.overall_ = all;
  }
  return res;
}

std::optional<std::vector<Vertex>> dismantling_order(const Graph& g) {
  VertexSet rest = g.vertices();
  std::vector<Vertex> order;
  order.reserve(g.order());
  while (rest.size() > 1) {
    bool removed = false;
    for (Vertex v : rest) {
      const VertexSet nv = g.closed_neighborhood(v) & rest;
      for (Vertex w : nv) {
        if (w != v && nv.subset_of(g.closed_neighborhood(w))) {
          removed = true;
          break;
        }
      }
      if (removed) {
        rest.erase(v);
        order.push_back(v);
        break;
      }
    }
    if (!removed) return std::nullopt;
  }
  order.push_back(rest.first());
  return order;
}

int cop_number(const Graph& g) {
  if (!g.is_connected()) {
    throw Error(ErrorCode::Disconnected,
                "the game is defined on connected graphs only");
  }
  if (dismantling_order(g)) return 1;
  for (int k = 2; k <= g.order(); ++k) {
    if (cops_win(g, k).cops_win_overall()) return k;
  }
  return g.order();  // unreachable: n cops always win
}

SafeNeighborhood safe_neighborhood(const Graph& g, std::span<const Vertex> cops,
                                   Vertex robber) {
  check_state_vertices(g, cops, robber);
  const VertexSet c = cop_set(cops);
  if (c.contains(robber)) return {};
  const VertexSet guarded = g.closed_neighborhood(c);
  const VertexSet free = g.vertices() - guarded;
  if (!guarded.contains(robber)) {
    return {g.component_within(robber, free)};
  }
  VertexSet out;
  for (Vertex v : g.neighbors(robber) & free) {
    if (!out.contains(v)) out |= g.component_within(v, free);
  }
  return {out};
}

bool is_trapped(const Graph& g, std::span<const Vertex> cops, Vertex robber) {
  check_state_vertices(g, cops, robber);
  const VertexSet c = cop_set(cops);
  if (c.contains(robber)) {
    contract_violation("is_trapped requires the robber off the cops");
  }
  const VertexSet guarded = g.closed_neighborhood(c);
  return g.neighborhood(c).contains(robber) &&
         g.neighbors(robber).subset_of(guarded);
}

bool endgame_cop_win_small_safe(const Graph& g, std::span<const Vertex> cops,
                                Vertex robber) {
  const int k = static_cast<int>(cops.size());
  if (k < 2) return false;
  const VertexSet s = safe_neighborhood(g, cops, robber).vertices;
  return s.size() <= 2 && g.neighborhood(s).size() <= 2 * k - 1;
}

bool endgame_cop_win_low_degree(const Graph& g, std::span<const Vertex> cops,
                                Vertex robber) {
  if (cops.size() < 2) return false;
  const VertexSet s = safe_neighborhood(g, cops, robber).vertices;
  int cubic = 0;
  for (Vertex v : s) {
    const int d = g.degree(v);
    if (d > 3) return false;
    if (d == 3) ++cubic;
  }
  return cubic <= 1;
}

GameState optimal_move(const SolveResult& solved, const GameState& state) {
  const Graph& g = solved.graph();
  const auto here = solved.capture_time(state);  // validates the state
  if (state.captured()) contract_violation("the robber is already captured");

  if (state.turn == Turn::Cops) {
    if (!here) {
      throw Error(ErrorCode::NoWinningMove,
                  "no winning cop move from " + to_string(state));
    }
    std::optional<GameState> best;
    int best_time = std::numeric_limits<int>::max();
    for (auto& next : solved.cop_moves(state.cops)) {
      GameState cand{std::move(next), state.robber, Turn::Robber};
      const auto t = solved.capture_time(cand);
      if (!t) continue;
      if (*t < best_time || (*t == best_time && cand < *best)) {
        best_time = *t;
        best = std::move(cand);
      }
    }
    return *best;
  }

  std::optional<GameState> best;
  int best_time = -1;
  for (Vertex r : g.closed_neighborhood(state.robber)) {
    GameState cand{state.cops, r, Turn::Cops};
    const auto t = solved.capture_time(cand);
    if (here) {
      // Lost for the robber: delay capture as long as possible.
      if (*t > best_time) {
        best_time = *t;
        best = std::move(cand);
      }
    } else if (!t) {
      return cand;  // least safe successor
    }
  }
  return *best;
}

Transcript play_transcript(const Graph& g, int k) {
  const SolveResult solved = cops_win(g, k);
  if (!solved.cops_win_overall()) {
    throw Error(ErrorCode::NoWinningMove,
                std::to_string(k) + (k == 1 ? " cop" : " cops") +
                    " cannot force a capture on this graph");
  }
  Transcript out;
  out.opening = *solved.optimal_opening();
  int worst = -1;
  for (Vertex r = 0; r < g.order(); ++r) {
    const int t = *solved.capture_time({out.opening, r, Turn::Cops});
    if (t > worst) {
      worst = t;
      out.robber_start = r;
    }
  }

  auto join = [](const std::vector<Vertex>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(vs[i]);
    }
    return s;
  };
  out.text = "cops: " + std::to_string(k) + "\n";
  out.text += "capture time: " + std::to_string(worst) + "\n";
  out.text += "cops place at " + join(out.opening) + "; robber places at " +
              std::to_string(out.robber_start) + "\n";

  GameState s{out.opening, out.robber_start, Turn::Cops};
  out.states.push_back(s);
  while (!s.captured()) {
    GameState after_cops = optimal_move(solved, s);
    ++out.cop_moves;
    std::string line = std::to_string(out.cop_moves) + ". " + to_string(s) +
                       " -> " + to_string(after_cops);
    out.states.push_back(after_cops);
    s = after_cops;
    if (!s.captured()) {
      s = optimal_move(solved, s);
      out.states.push_back(s);
      line += " -> " + to_string(s);
    }
    out.text += line + "\n";
  }
  out.text += "captured at " + std::to_string(s.robber) + " after " +
              std::to_string(out.cop_moves) + " cop move" +
              (out.cop_moves == 1 ? "" : "s") + "\n";
  return out;
}

}  // namespace copnum
