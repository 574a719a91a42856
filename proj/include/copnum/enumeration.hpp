#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "copnum/graph.hpp"

namespace copnum {

/// Hard cap for the internal generator; larger orders come from corpora.
inline constexpr int kMaxGeneratedOrder = 10;

/// 64-bit FNV-1a, used as the content hash of levels, corpora and
/// checkpoints.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hash_hex(std::uint64_t h);

/// All isomorphism classes of one order as sorted canonical codes.
struct GraphLevel {
  int order = 0;
  std::vector<std::uint64_t> codes;

  std::uint64_t content_hash() const;
};

using ProgressFn = std::function<void(const std::string&)>;

/// Order-1 base level.
GraphLevel base_level();
/// Extends every representative of `parent` by one vertex joined to each
/// neighbor subset and keeps one child per canonical code. Children whose new
/// vertex is not of minimum degree are skipped; every class still arises from
/// deleting one of its minimum-degree vertices.
GraphLevel extend_level(const GraphLevel& parent, int jobs = 1,
                        const ProgressFn& progress = {});
/// Levels 1..n in sequence.
GraphLevel generate_level(int n, int jobs = 1, const ProgressFn& progress = {});

/// Binary level file: "CPNMLVL1", order (u32), count (u64), codes (u64 LE),
/// content hash (u64). Readers verify the trailing hash.
void write_level(const std::filesystem::path& path, const GraphLevel& level);
GraphLevel read_level(const std::filesystem::path& path);

enum class StreamFilter { All, Connected };

struct StreamSource {
  std::string kind;         // "generated" or "corpus"
  std::string description;  // order or path
  std::uint64_t content_hash = 0;
};

/// Finite stream of pairwise non-isomorphic graphs of one order with a
/// resumable cursor. The cursor counts source items, including any that the
/// filter skips.
class GraphStream {
 public:
  static GraphStream generated(std::shared_ptr<const GraphLevel> level,
                               StreamFilter filter = StreamFilter::All);
  static GraphStream corpus(const std::filesystem::path& path,
                            StreamFilter filter = StreamFilter::All);

  /// 0 for an empty corpus.
  int order() const { return order_; }
  std::size_t size() const;
  std::size_t position() const { return position_; }
  void seek(std::size_t position);
  const StreamSource& source() const { return source_; }
  StreamFilter filter() const { return filter_; }

  /// Raw source item i, ignoring the filter.
  Graph at(std::size_t i) const;
  std::optional<Graph> next();

 private:
  GraphStream() = default;

  int order_ = 0;
  StreamFilter filter_ = StreamFilter::All;
  std::size_t position_ = 0;
  StreamSource source_;
  std::shared_ptr<const GraphLevel> level_;
  std::shared_ptr<const std::vector<std::string>> lines_;
};

/// Stream of all graphs of order n (1 <= n <= 10), sorted by canonical form.
GraphStream generate_graphs(int n, StreamFilter filter = StreamFilter::All,
                            int jobs = 1);

/// Reads a graph6 file. Fails with Parse (line number in the message) on a
/// bad record, Integrity on mixed orders or on two isomorphic records.
GraphStream ingest_corpus(const std::filesystem::path& path,
                          StreamFilter filter = StreamFilter::All);

}  // namespace copnum
