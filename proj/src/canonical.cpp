#include "copnum/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>

namespace copnum {

namespace {

constexpr int kMaxWords = (kMaxOrder * (kMaxOrder - 1) / 2 + 63) / 64;

using Encoding = std::array<std::uint64_t, kMaxWords>;

/// Ordered partition of the vertex set. Cells are contiguous runs of `lab`;
/// bit p of `starts` marks the first position of a cell.
struct Partition {
  std::array<std::int8_t, kMaxOrder> lab;
  std::uint64_t starts;
};

int cell_end(std::uint64_t starts, int pos, int n) {
  const std::uint64_t later = starts & ~((std::uint64_t{2} << pos) - 1);
  return later == 0 ? n : std::countr_zero(later);
}

/// Individualization-refinement search for the least upper-triangle encoding.
class Labeler {
 public:
  Labeler(int n, const std::uint64_t* rows)
      : n_(n), rows_(rows), words_((n * (n - 1) / 2 + 63) / 64) {}

  void run() {
    Partition root{};
    for (int i = 0; i < n_; ++i) root.lab[i] = static_cast<std::int8_t>(i);
    root.starts = 1;
    search(root);
  }

  const Encoding& best() const { return best_; }
  const std::array<std::int8_t, kMaxOrder>& best_lab() const {
    return best_lab_;
  }

 private:
  // Splits every cell by the vector of neighbor counts into each current cell
  // until the partition is equitable. Subcells are ordered by ascending key,
  // which depends only on the partition structure, so refinement commutes
  // with relabeling.
  void refine(Partition& p) const {
    const std::uint64_t all = VertexSet::range(n_).bits();
    for (;;) {
      if (p.starts == all) return;
      int ncells = 0;
      std::array<std::uint64_t, kMaxOrder> masks{};
      std::array<int, kMaxOrder + 1> bounds{};
      for (int pos = 0; pos < n_;) {
        const int end = cell_end(p.starts, pos, n_);
        std::uint64_t m = 0;
        for (int i = pos; i < end; ++i) m |= std::uint64_t{1} << p.lab[i];
        bounds[ncells] = pos;
        masks[ncells++] = m;
        pos = end;
      }
      bounds[ncells] = n_;

      std::uint64_t next = p.starts;
      for (int c = 0; c < ncells; ++c) {
        const int lo = bounds[c];
        const int hi = bounds[c + 1];
        if (hi - lo < 2) continue;
        for (int i = lo; i < hi; ++i) {
          const std::uint64_t row = rows_[p.lab[i]];
          for (int d = 0; d < ncells; ++d) {
            keys_[i][d] = static_cast<std::uint8_t>(std::popcount(row & masks[d]));
          }
        }
        auto less = [&](int a, int b) {
          return std::memcmp(keys_[a].data(), keys_[b].data(), ncells) < 0;
        };
        // Insertion sort of positions lo..hi by key; cells are small.
        for (int i = lo + 1; i < hi; ++i) {
          int j = i;
          while (j > lo && less(j, j - 1)) {
            std::swap(keys_[j], keys_[j - 1]);
            std::swap(p.lab[j], p.lab[j - 1]);
            --j;
          }
        }
        for (int i = lo + 1; i < hi; ++i) {
          if (std::memcmp(keys_[i].data(), keys_[i - 1].data(), ncells) != 0) {
            next |= std::uint64_t{1} << i;
          }
        }
      }
      if (next == p.starts) return;
      p.starts = next;
    }
  }

  bool twins(int u, int v) const {
    const std::uint64_t bu = std::uint64_t{1} << u;
    const std::uint64_t bv = std::uint64_t{1} << v;
    return (rows_[u] & ~bv) == (rows_[v] & ~bu);
  }

  void search(Partition p) {
    refine(p);
    const std::uint64_t all = VertexSet::range(n_).bits();
    if (p.starts == all) {
      leaf(p);
      return;
    }
    // First non-singleton cell.
    int lo = 0;
    int hi = 0;
    for (lo = 0; lo < n_; lo = hi) {
      hi = cell_end(p.starts, lo, n_);
      if (hi - lo > 1) break;
    }
    std::uint64_t members = 0;
    for (int i = lo; i < hi; ++i) members |= std::uint64_t{1} << p.lab[i];

    std::uint64_t tried = 0;
    for (Vertex v : VertexSet(members)) {
      bool redundant = false;
      for (Vertex u : VertexSet(tried)) {
        if (twins(u, v)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      tried |= std::uint64_t{1} << v;

      Partition child = p;
      const int at = static_cast<int>(
          std::find(child.lab.begin() + lo, child.lab.begin() + hi, v) -
          child.lab.begin());
      std::swap(child.lab[lo], child.lab[at]);
      child.starts |= std::uint64_t{1} << (lo + 1);
      search(child);
    }
  }

  void leaf(const Partition& p) {
    Encoding enc{};
    int bit = 0;
    for (int j = 1; j < n_; ++j) {
      const std::uint64_t row = rows_[p.lab[j]];
      for (int i = 0; i < j; ++i, ++bit) {
        if ((row >> p.lab[i]) & 1U) {
          enc[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
        }
      }
    }
    if (!have_best_ || std::lexicographical_compare(
                           enc.begin(), enc.begin() + words_, best_.begin(),
                           best_.begin() + words_)) {
      best_ = enc;
      best_lab_ = p.lab;
      have_best_ = true;
    }
  }

  int n_;
  const std::uint64_t* rows_;
  int words_;
  bool have_best_ = false;
  Encoding best_{};
  std::array<std::int8_t, kMaxOrder> best_lab_{};
  mutable std::array<std::array<std::uint8_t, kMaxOrder>, kMaxOrder> keys_{};
};

CanonicalForm form_from_encoding(int n, const Encoding& enc) {
  const int bits = n * (n - 1) / 2;
  std::vector<std::uint8_t> bytes(1 + (bits + 7) / 8, 0);
  bytes[0] = static_cast<std::uint8_t>(n);
  for (int b = 0; b < bits; ++b) {
    if ((enc[b / 64] >> (63 - b % 64)) & 1U) {
      bytes[1 + b / 8] |= static_cast<std::uint8_t>(0x80U >> (b % 8));
    }
  }
  return CanonicalForm(std::move(bytes));
}

}  // namespace

Graph CanonicalForm::graph() const {
  const int n = order();
  if (n < 1) contract_violation("empty canonical form");
  std::array<std::uint64_t, kMaxOrder> rows{};
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((bytes_[1 + bit / 8] >> (7 - bit % 8)) & 1U) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return Graph::from_rows({rows.data(), static_cast<std::size_t>(n)});
}

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (std::uint8_t b : bytes_) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  Labeler labeler(g.order(), g.rows().data());
  labeler.run();
  CanonicalLabeling out;
  out.label.assign(g.order(), 0);
  for (int pos = 0; pos < g.order(); ++pos) {
    out.label[labeler.best_lab()[pos]] = pos;
  }
  out.form = form_from_encoding(g.order(), labeler.best());
  return out;
}

CanonicalForm canonical_form(const Graph& g) {
  Labeler labeler(g.order(), g.rows().data());
  labeler.run();
  return form_from_encoding(g.order(), labeler.best());
}

Graph canonical_graph(const Graph& g) { return canonical_form(g).graph(); }

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

std::uint64_t canonical_code(int n, const std::uint64_t* rows) {
  Labeler labeler(n, rows);
  labeler.run();
  return labeler.best()[0];
}

std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > kMaxCodeOrder) {
    contract_violation("canonical_code supports orders up to " +
                       std::to_string(kMaxCodeOrder));
  }
  return canonical_code(g.order(), g.rows().data());
}

Graph graph_from_code(int n, std::uint64_t code) {
  if (n < 1 || n > kMaxCodeOrder) contract_violation("code order out of range");
  std::array<std::uint64_t, kMaxOrder> rows{};
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((code >> (63 - bit)) & 1U) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return Graph::from_rows({rows.data(), static_cast<std::size_t>(n)});
}

CanonicalForm form_from_code(int n, std::uint64_t code) {
  Encoding enc{};
  enc[0] = code;
  return form_from_encoding(n, enc);
}

}  // namespace copnum
