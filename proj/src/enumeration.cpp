#include "copnum/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <mutex>
#include <thread>

#include "copnum/canonical.hpp"

namespace copnum {

namespace {

constexpr char kLevelMagic[8] = {'C', 'P', 'N', 'M', 'L', 'V', 'L', '1'};
constexpr std::size_t kCompactThreshold = std::size_t{1} << 22;

void rows_from_code(int n, std::uint64_t code, std::uint64_t* rows) {
  std::fill(rows, rows + n, 0);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((code >> (63 - bit)) & 1U) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
}

void sort_unique(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Merges the sorted, duplicate-free `extra` into `into`.
void merge_into(std::vector<std::uint64_t>& into, std::vector<std::uint64_t>& extra) {
  std::vector<std::uint64_t> merged;
  merged.reserve(into.size() + extra.size());
  std::set_union(into.begin(), into.end(), extra.begin(), extra.end(),
                 std::back_inserter(merged));
  into.swap(merged);
  extra.clear();
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::uint64_t get_u64(const char* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(p[i])) << (8 * i);
  }
  return v;
}

std::string level_payload(const GraphLevel& level) {
  std::string out;
  out.reserve(12 + level.codes.size() * 8);
  for (int i = 0; i < 4; ++i) {
    out.push_back(static_cast<char>((level.order >> (8 * i)) & 0xFF));
  }
  put_u64(out, level.codes.size());
  for (std::uint64_t c : level.codes) put_u64(out, c);
  return out;
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = kDigits[h & 15];
  return out;
}

std::uint64_t GraphLevel::content_hash() const {
  return fnv1a(level_payload(*this));
}

GraphLevel base_level() {
  return {1, {0}};
}

GraphLevel extend_level(const GraphLevel& parent, int jobs,
                        const ProgressFn& progress) {
  const int pn = parent.order;
  const int n = pn + 1;
  if (pn < 1 || n > kMaxGeneratedOrder) {
    throw Error(ErrorCode::Contract,
                "internal generation supports orders 1.." +
                    std::to_string(kMaxGeneratedOrder) +
                    "; ingest a graph6 corpus for larger orders");
  }
  jobs = std::max(1, jobs);
  const std::size_t total = parent.codes.size();
  std::vector<std::vector<std::uint64_t>> results(jobs);
  std::mutex progress_mu;

  auto work = [&](int w) {
    std::vector<std::uint64_t>& done = results[w];
    std::vector<std::uint64_t> buffer;
    std::array<std::uint64_t, kMaxOrder> prow{};
    std::array<std::uint64_t, kMaxOrder> crow{};
    std::array<int, kMaxOrder> pdeg{};
    const std::size_t lo = total * w / jobs;
    const std::size_t hi = total * (w + 1) / jobs;
    for (std::size_t p = lo; p < hi; ++p) {
      rows_from_code(pn, parent.codes[p], prow.data());
      for (int u = 0; u < pn; ++u) pdeg[u] = std::popcount(prow[u]);
      const std::uint64_t subsets = std::uint64_t{1} << pn;
      for (std::uint64_t s = 0; s < subsets; ++s) {
        const int d = std::popcount(s);
        bool min_degree = true;
        for (int u = 0; u < pn && min_degree; ++u) {
          min_degree = d <= pdeg[u] + static_cast<int>((s >> u) & 1U);
        }
        if (!min_degree) continue;
        for (int u = 0; u < pn; ++u) {
          crow[u] = prow[u] | (((s >> u) & 1U) << pn);
        }
        crow[pn] = s;
        buffer.push_back(canonical_code(n, crow.data()));
        if (buffer.size() >= kCompactThreshold) {
          sort_unique(buffer);
          merge_into(done, buffer);
        }
      }
      if (progress && w == 0 && (p - lo) % 20000 == 19999) {
        std::lock_guard lock(progress_mu);
        progress("order " + std::to_string(n) + ": extended " +
                 std::to_string((p - lo + 1) * jobs) + " of ~" +
                 std::to_string(total) + " parents");
      }
    }
    sort_unique(buffer);
    merge_into(done, buffer);
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  GraphLevel out{n, std::move(results[0])};
  for (int w = 1; w < jobs; ++w) merge_into(out.codes, results[w]);
  return out;
}

GraphLevel generate_level(int n, int jobs, const ProgressFn& progress) {
  if (n < 1 || n > kMaxGeneratedOrder) {
    throw Error(ErrorCode::Contract,
                "internal generation supports orders 1.." +
                    std::to_string(kMaxGeneratedOrder) + ", got " +
                    std::to_string(n) + "; ingest a graph6 corpus instead");
  }
  GraphLevel level = base_level();
  while (level.order < n) level = extend_level(level, jobs, progress);
  return level;
}

void write_level(const std::filesystem::path& path, const GraphLevel& level) {
  const std::string payload = level_payload(level);
  std::string bytes(kLevelMagic, sizeof kLevelMagic);
  bytes += payload;
  put_u64(bytes, fnv1a(payload));
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot rename " + tmp + ": " + ec.message());
}

GraphLevel read_level(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  const std::string bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
  auto corrupt = [&]() {
    return Error(ErrorCode::CheckpointMismatch,
                 "corrupt level file " + path.string());
  };
  if (bytes.size() < 8 + 12 + 8 ||
      std::memcmp(bytes.data(), kLevelMagic, 8) != 0) {
    throw corrupt();
  }
  GraphLevel level;
  for (int i = 0; i < 4; ++i) {
    level.order |= static_cast<unsigned char>(bytes[8 + i]) << (8 * i);
  }
  const std::uint64_t count = get_u64(bytes.data() + 12);
  if (bytes.size() != 8 + 12 + count * 8 + 8) throw corrupt();
  level.codes.resize(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    level.codes[i] = get_u64(bytes.data() + 20 + i * 8);
  }
  const std::string_view payload(bytes.data() + 8, 12 + count * 8);
  if (fnv1a(payload) != get_u64(bytes.data() + bytes.size() - 8)) throw corrupt();
  return level;
}

GraphStream GraphStream::generated(std::shared_ptr<const GraphLevel> level,
                                   StreamFilter filter) {
  GraphStream s;
  s.order_ = level->order;
  s.filter_ = filter;
  s.source_ = {"generated", "order " + std::to_string(level->order),
               level->content_hash()};
  s.level_ = std::move(level);
  return s;
}

GraphStream GraphStream::corpus(const std::filesystem::path& path,
                                StreamFilter filter) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open corpus " + path.string());
  const std::string bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());

  auto lines = std::make_shared<std::vector<std::string>>();
  std::vector<std::pair<CanonicalForm, std::size_t>> forms;
  int order = 0;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start < bytes.size()) {
    std::size_t end = bytes.find('\n', start);
    if (end == std::string::npos) end = bytes.size();
    ++line_no;
    const std::string_view line(bytes.data() + start, end - start);
    start = end + 1;
    Graph g(1);
    try {
      g = parse_graph6(line);
    } catch (const Graph6Error& e) {
      throw Error(ErrorCode::Parse, path.string() + ":" +
                                        std::to_string(line_no) + ": " +
                                        e.what());
    }
    if (order == 0) order = g.order();
    if (g.order() != order) {
      throw Error(ErrorCode::Integrity,
                  path.string() + ":" + std::to_string(line_no) +
                      ": order " + std::to_string(g.order()) +
                      " differs from the corpus order " + std::to_string(order));
    }
    forms.emplace_back(canonical_form(g), line_no);
    lines->emplace_back(line);
  }
  std::sort(forms.begin(), forms.end());
  for (std::size_t i = 1; i < forms.size(); ++i) {
    if (forms[i].first == forms[i - 1].first) {
      throw Error(ErrorCode::Integrity,
                  path.string() + ": lines " +
                      std::to_string(forms[i - 1].second) + " and " +
                      std::to_string(forms[i].second) +
                      " are isomorphic graphs");
    }
  }

  GraphStream s;
  s.order_ = order;
  s.filter_ = filter;
  s.source_ = {"corpus", path.string(), fnv1a(bytes)};
  s.lines_ = std::move(lines);
  return s;
}

std::size_t GraphStream::size() const {
  return level_ ? level_->codes.size() : lines_->size();
}

void GraphStream::seek(std::size_t position) {
  if (position > size()) contract_violation("stream cursor beyond the end");
  position_ = position;
}

Graph GraphStream::at(std::size_t i) const {
  if (i >= size()) contract_violation("stream index out of range");
  if (level_) return graph_from_code(order_, level_->codes[i]);
  return parse_graph6((*lines_)[i]);
}

std::optional<Graph> GraphStream::next() {
  while (position_ < size()) {
    Graph g = at(position_++);
    if (filter_ == StreamFilter::All || g.is_connected()) return g;
  }
  return std::nullopt;
}

GraphStream generate_graphs(int n, StreamFilter filter, int jobs) {
  return GraphStream::generated(
      std::make_shared<const GraphLevel>(generate_level(n, jobs)), filter);
}

GraphStream ingest_corpus(const std::filesystem::path& path,
                          StreamFilter filter) {
  return GraphStream::corpus(path, filter);
}

}  // namespace copnum
