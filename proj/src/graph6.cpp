#include <string>

#include "copnum/graph.hpp"

namespace copnum {

namespace {

constexpr int kBias = 63;

std::size_t data_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (text.empty()) throw Graph6Error(Graph6Fault::Empty, "graph6: empty record");

  const int header = static_cast<unsigned char>(text[0]);
  if (header < kBias || header > 126) {
    throw Graph6Error(Graph6Fault::BadHeader,
                      "graph6: invalid header byte " + std::to_string(header));
  }
  const int n = header - kBias;
  if (n < 1 || n > kMaxOrder) {
    throw Graph6Error(Graph6Fault::OrderOutOfRange,
                      "graph6: order must be in 1.." +
                          std::to_string(kMaxOrder) +
                          (header == 126 ? " (long-form header unsupported)"
                                         : ", got " + std::to_string(n)));
  }

  const std::size_t need = data_bytes(n);
  const std::string_view body = text.substr(1);
  for (std::size_t i = 0; i < body.size(); ++i) {
    const int c = static_cast<unsigned char>(body[i]);
    if (c < kBias || c > 126) {
      if (i >= need) {
        throw Graph6Error(Graph6Fault::TrailingBytes,
                          "graph6: trailing bytes after adjacency data");
      }
      throw Graph6Error(Graph6Fault::BadCharacter,
                        "graph6: byte " + std::to_string(c) + " at offset " +
                            std::to_string(i + 1) + " is not in 63..126");
    }
  }
  if (body.size() < need) {
    throw Graph6Error(Graph6Fault::Truncated,
                      "graph6: expected " + std::to_string(need) +
                          " data bytes, got " + std::to_string(body.size()));
  }
  if (body.size() > need) {
    throw Graph6Error(Graph6Fault::TrailingBytes,
                      "graph6: trailing bytes after adjacency data");
  }

  std::array<std::uint64_t, kMaxOrder> rows{};
  std::size_t bit = 0;
  auto next_bit = [&]() {
    const int group = static_cast<unsigned char>(body[bit / 6]) - kBias;
    const bool set = (group >> (5 - bit % 6)) & 1;
    ++bit;
    return set;
  };
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (next_bit()) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  while (bit < need * 6) {
    if (next_bit()) {
      throw Graph6Error(Graph6Fault::NonzeroPadding,
                        "graph6: padding bits must be zero");
    }
  }
  return Graph::from_rows({rows.data(), static_cast<std::size_t>(n)});
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.reserve(1 + data_bytes(n));
  out.push_back(static_cast<char>(n + kBias));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | ((g.row(i) >> j) & 1U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  }
  return out;
}

}  // namespace copnum
