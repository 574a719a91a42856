#include "copnum/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <thread>

#include "copnum/canonical.hpp"
#include "copnum/solver.hpp"
#include "json.hpp"

namespace copnum {

namespace {

using nlohmann::json;

constexpr std::string_view kCheckpointFormat = "copnum-census-checkpoint";
constexpr int kCheckpointVersion = 1;
constexpr std::string_view kTableSchema = "copnum-census";
constexpr int kTableVersion = 1;
constexpr std::size_t kBatch = 2048;

std::atomic<bool> g_cancel{false};

json row_to_json(const CensusRow& r) {
  json w = json::object();
  for (const auto& [cls, g6] : r.witnesses) w[std::to_string(cls)] = g6;
  return {{"n", r.n},
          {"g", r.g},
          {"g_connected", r.g_connected},
          {"f", r.f},
          {"overflow", r.overflow},
          {"complete", r.complete},
          {"processed", r.processed},
          {"witnesses", w},
          {"source_hash", r.source_hash}};
}

CensusRow row_from_json(const json& j) {
  CensusRow r;
  r.n = j.at("n").get<int>();
  r.g = j.at("g").get<std::uint64_t>();
  r.g_connected = j.at("g_connected").get<std::uint64_t>();
  r.f = j.at("f").get<std::vector<std::uint64_t>>();
  r.overflow = j.at("overflow").get<std::uint64_t>();
  r.complete = j.at("complete").get<bool>();
  r.processed = j.at("processed").get<std::uint64_t>();
  r.source_hash = j.at("source_hash").get<std::string>();
  for (const auto& [cls, g6] : j.at("witnesses").items()) {
    r.witnesses[std::stoi(cls)] = g6.get<std::string>();
  }
  return r;
}

std::string with_commas(std::uint64_t v) {
  std::string digits = std::to_string(v);
  std::string out;
  const int lead = static_cast<int>(digits.size()) % 3;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0 && (static_cast<int>(i) - lead) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return out;
}

void write_atomically(const std::filesystem::path& path, const std::string& text) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot rename " + tmp + ": " + ec.message());
}

/// On-disk census progress: source identity, k_max and one entry per order
/// (row counts plus the hash of the graph source the row was computed from).
class Checkpoint {
 public:
  Checkpoint(const CensusOptions& options, json source)
      : options_(options), source_(std::move(source)) {}

  std::filesystem::path file() const {
    return *options_.checkpoint_dir / "census.json";
  }
  bool enabled() const { return options_.checkpoint_dir.has_value(); }

  void load() {
    if (!enabled() || !std::filesystem::exists(file())) return;
    std::ifstream in(file());
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::CheckpointMismatch,
                  "unreadable checkpoint " + file().string() + ": " + e.what());
    }
    auto mismatch = [&](const std::string& why) {
      return Error(ErrorCode::CheckpointMismatch,
                   "checkpoint " + file().string() + " refused: " + why);
    };
    if (j.value("format", "") != kCheckpointFormat ||
        j.value("version", 0) != kCheckpointVersion) {
      throw mismatch("unknown format or version");
    }
    const std::string stored = j.value("content_hash", "");
    j.erase("content_hash");
    if (stored != hash_hex(fnv1a(j.dump()))) {
      throw mismatch("content hash does not match");
    }
    if (j.at("k_max").get<int>() != options_.k_max) {
      throw mismatch("k_max " + std::to_string(j.at("k_max").get<int>()) +
                     " differs from requested " + std::to_string(options_.k_max));
    }
    if (j.at("source") != source_) {
      throw mismatch("graph source differs (checkpoint " + j.at("source").dump() +
                     ", requested " + source_.dump() + ")");
    }
    for (const auto& e : j.at("rows")) {
      rows_[e.at("n").get<int>()] = {row_from_json(e.at("row")),
                                     e.at("source_hash").get<std::string>()};
    }
  }

  /// Row previously recorded for order n, checked against the current source.
  std::optional<CensusRow> resume(int n, std::uint64_t source_hash) const {
    auto it = rows_.find(n);
    if (it == rows_.end()) return std::nullopt;
    if (it->second.second != hash_hex(source_hash)) {
      throw Error(ErrorCode::CheckpointMismatch,
                  "checkpoint row for order " + std::to_string(n) +
                      " was computed from a different graph source");
    }
    return it->second.first;
  }

  void record(const CensusRow& row, std::uint64_t source_hash) {
    rows_[row.n] = {row, hash_hex(source_hash)};
  }

  void save() const {
    if (!enabled()) return;
    json rows = json::array();
    for (const auto& [n, entry] : rows_) {
      rows.push_back({{"n", n}, {"source_hash", entry.second},
                      {"row", row_to_json(entry.first)}});
    }
    json j = {{"format", kCheckpointFormat},
              {"version", kCheckpointVersion},
              {"k_max", options_.k_max},
              {"source", source_},
              {"rows", rows}};
    j["content_hash"] = hash_hex(fnv1a(j.dump()));
    write_atomically(file(), j.dump(1) + "\n");
  }

 private:
  const CensusOptions& options_;
  json source_;
  std::map<int, std::pair<CensusRow, std::string>> rows_;
};

void tally(CensusRow& row, int cls, int k_max, const Graph& g) {
  ++row.g;
  ++row.processed;
  if (cls == 0) return;
  ++row.g_connected;
  if (cls <= k_max) {
    ++row.f[cls - 1];
  } else {
    ++row.overflow;
  }
  if (!row.witnesses.contains(cls)) {
    row.witnesses[cls] = emit_graph6(canonical_graph(g));
  }
}

CensusRow fresh_row(int n, int k_max) {
  CensusRow r;
  r.n = n;
  r.f.assign(k_max, 0);
  return r;
}

struct RunState {
  const CensusOptions& options;
  Checkpoint& checkpoint;
  CensusTable& table;
  std::uint64_t classified_this_run = 0;
};

/// Classifies the remainder of one order's stream into `row`.
void process(RunState& st, GraphStream& stream, CensusRow& row) {
  const CensusOptions& o = st.options;
  const int jobs = std::max(1, o.jobs);
  const std::uint64_t source_hash = stream.source().content_hash;
  const std::size_t size = stream.size();
  std::size_t pos = row.processed;
  std::uint64_t since_save = 0;
  std::vector<int> classes;

  auto interrupted = [&]() {
    st.checkpoint.record(row, source_hash);
    st.checkpoint.save();
    st.table.rows.push_back(row);
    return CensusInterrupted(st.table);
  };

  while (pos < size) {
    if (g_cancel.load()) throw interrupted();
    std::size_t chunk = std::min<std::size_t>(size - pos, kBatch * jobs);
    if (o.stop_after) {
      if (st.classified_this_run >= *o.stop_after) throw interrupted();
      chunk = std::min<std::size_t>(chunk, *o.stop_after - st.classified_this_run);
    }
    classes.assign(chunk, 0);
    auto work = [&](int w) {
      const std::size_t lo = chunk * w / jobs;
      const std::size_t hi = chunk * (w + 1) / jobs;
      for (std::size_t i = lo; i < hi; ++i) {
        classes[i] = census_class(stream.at(pos + i), o.k_max);
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
      for (auto& t : threads) t.join();
    }
    // Ordered aggregation keeps counts and witnesses independent of jobs.
    for (std::size_t i = 0; i < chunk; ++i) {
      const bool needs_graph = classes[i] > 0 && !row.witnesses.contains(classes[i]);
      tally(row, classes[i], o.k_max, needs_graph ? stream.at(pos + i) : Graph(1));
    }
    const std::uint64_t before = since_save;
    pos += chunk;
    st.classified_this_run += chunk;
    since_save += chunk;
    if (since_save >= o.checkpoint_interval) {
      st.checkpoint.record(row, source_hash);
      st.checkpoint.save();
      since_save = 0;
    }
    if (o.progress && (before / 100'000 != (before + chunk) / 100'000 ||
                       pos == size)) {
      o.progress("order " + std::to_string(row.n) + ": " +
                 std::to_string(pos) + " / " + std::to_string(size) +
                 " graphs classified");
    }
  }
  row.complete = true;
  st.checkpoint.record(row, source_hash);
  st.checkpoint.save();
}

}  // namespace

const CensusRow* CensusTable::row(int n) const {
  for (const auto& r : rows) {
    if (r.n == n) return &r;
  }
  return nullptr;
}

int census_class(const Graph& g, int k_max) {
  if (!g.is_connected()) return 0;
  if (dismantling_order(g)) return 1;
  for (int k = 2; k <= k_max; ++k) {
    if (k >= g.order() || cops_win(g, k).cops_win_overall()) return k;
  }
  return k_max + 1;
}

CensusRow census(GraphStream& stream, int k_max) {
  if (k_max < 1) contract_violation("k_max must be at least 1");
  CensusRow row = fresh_row(stream.order(), k_max);
  row.source_hash = hash_hex(stream.source().content_hash);
  row.processed = stream.position();
  while (stream.position() < stream.size()) {
    Graph g = stream.at(stream.position());
    stream.seek(stream.position() + 1);
    tally(row, census_class(g, k_max), k_max, g);
  }
  row.complete = true;
  return row;
}

void request_cancel() noexcept { g_cancel.store(true); }
void reset_cancel() noexcept { g_cancel.store(false); }
bool cancel_requested() noexcept { return g_cancel.load(); }

CensusTable run_census(const CensusOptions& o) {
  if (o.k_max < 1) contract_violation("k_max must be at least 1");
  if (o.jobs < 1) contract_violation("jobs must be at least 1");
  if (o.checkpoint_interval < 1) contract_violation("checkpoint interval must be positive");
  if (!o.corpus && (o.n_max < 1 || o.n_max > kMaxGeneratedOrder)) {
    throw Error(ErrorCode::Contract,
                "census supports n_max in 1.." +
                    std::to_string(kMaxGeneratedOrder) +
                    " for generated graphs; use a corpus for larger orders");
  }
  const auto started = std::chrono::steady_clock::now();
  if (o.checkpoint_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*o.checkpoint_dir, ec);
    if (ec) {
      throw Error(ErrorCode::Io, "cannot create checkpoint directory " +
                                     o.checkpoint_dir->string() + ": " + ec.message());
    }
  }

  CensusTable table;
  table.k_max = o.k_max;

  std::optional<GraphStream> corpus;
  json source;
  if (o.corpus) {
    corpus.emplace(ingest_corpus(*o.corpus));
    source = {{"kind", "corpus"}, {"hash", hash_hex(corpus->source().content_hash)}};
    table.metadata.source = "corpus " + o.corpus->filename().string();
  } else {
    source = {{"kind", "generated"}};
  }
  Checkpoint checkpoint(o, source);
  checkpoint.load();
  RunState st{o, checkpoint, table};

  auto run_stream = [&](GraphStream& stream) {
    const std::uint64_t h = stream.source().content_hash;
    CensusRow row = checkpoint.resume(stream.order(), h)
                        .value_or(fresh_row(stream.order(), o.k_max));
    row.source_hash = hash_hex(h);
    if (!row.complete) process(st, stream, row);
    table.rows.push_back(row);
  };

  if (corpus) {
    if (corpus->size() > 0) run_stream(*corpus);
  } else {
    std::shared_ptr<const GraphLevel> level;
    for (int n = 1; n <= o.n_max; ++n) {
      const auto cached = o.checkpoint_dir
                              ? *o.checkpoint_dir / ("level-" + std::to_string(n) + ".bin")
                              : std::filesystem::path();
      if (o.checkpoint_dir && std::filesystem::exists(cached)) {
        level = std::make_shared<const GraphLevel>(read_level(cached));
        if (level->order != n) {
          throw Error(ErrorCode::CheckpointMismatch,
                      "level file " + cached.string() + " holds another order");
        }
      } else {
        level = std::make_shared<const GraphLevel>(
            n == 1 ? base_level() : extend_level(*level, o.jobs, o.progress));
        if (o.checkpoint_dir) write_level(cached, *level);
      }
      if (o.progress) {
        o.progress("order " + std::to_string(n) + ": " +
                   std::to_string(level->codes.size()) + " graphs");
      }
      GraphStream stream = GraphStream::generated(level);
      run_stream(stream);
    }
  }

  table.metadata.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return table;
}

MinOrderReport derive_min_orders(const CensusTable& t) {
  if (t.rows.empty()) {
    throw Error(ErrorCode::Integrity, "census table is empty");
  }
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const CensusRow& r = t.rows[i];
    if (r.n != static_cast<int>(i) + 1) {
      throw Error(ErrorCode::Integrity,
                  "census rows must cover orders 1..H without gaps (missing order " +
                      std::to_string(i + 1) + ")");
    }
    if (!r.complete) {
      throw Error(ErrorCode::Integrity,
                  "census row for order " + std::to_string(r.n) + " is incomplete");
    }
  }
  MinOrderReport report;
  report.horizon = t.rows.back().n;
  for (int k = 1; k <= t.k_max; ++k) {
    MinOrderEntry e;
    e.k = k;
    for (const CensusRow& r : t.rows) {
      if (!e.m) {
        for (int cls = k; cls <= t.k_max + 1; ++cls) {
          const std::uint64_t count = cls <= t.k_max ? r.f[cls - 1] : r.overflow;
          if (count > 0) {
            e.m = r.n;
            e.m_witness = r.witnesses.at(cls);
            break;
          }
        }
      }
      if (!e.M && r.f[k - 1] > 0) {
        e.M = r.n;
        e.M_witness = r.witnesses.at(k);
      }
    }
    report.entries.push_back(e);
  }
  return report;
}

std::string render_min_orders(const MinOrderReport& report) {
  std::string out;
  auto value = [&](const std::optional<int>& v) {
    return v ? "= " + std::to_string(*v) : "> " + std::to_string(report.horizon);
  };
  for (const auto& e : report.entries) {
    const std::string k = std::to_string(e.k);
    out += "m_" + k + " " + value(e.m);
    if (e.m_witness) out += " (witness " + *e.m_witness + ")";
    out += "\nM_" + k + " " + value(e.M);
    if (e.M_witness) out += " (witness " + *e.M_witness + ")";
    out += "\n";
  }
  return out;
}

std::string render(const CensusTable& t, Format format, bool include_timing) {
  switch (format) {
    case Format::Csv: {
      std::string out = "n,g,g_connected";
      for (int k = 1; k <= t.k_max; ++k) out += ",f" + std::to_string(k);
      out += ",overflow,complete\n";
      for (const auto& r : t.rows) {
        out += std::to_string(r.n) + "," + std::to_string(r.g) + "," +
               std::to_string(r.g_connected);
        for (std::uint64_t f : r.f) out += "," + std::to_string(f);
        out += "," + std::to_string(r.overflow) + "," +
               (r.complete ? "true" : "false") + "\n";
      }
      return out;
    }
    case Format::Json: {
      json meta = {{"generator_version", t.metadata.generator_version},
                   {"solver_version", t.metadata.solver_version},
                   {"source", t.metadata.source}};
      if (include_timing) meta["wall_time_seconds"] = t.metadata.wall_time_seconds;
      json rows = json::array();
      for (const auto& r : t.rows) rows.push_back(row_to_json(r));
      json j = {{"schema", kTableSchema},
                {"version", kTableVersion},
                {"metadata", meta},
                {"k_max", t.k_max},
                {"rows", rows}};
      return j.dump(2) + "\n";
    }
    case Format::Text: {
      std::vector<std::string> head = {"order n", "g(n)", "g_c(n)"};
      for (int k = 1; k <= t.k_max; ++k) head.push_back("f_" + std::to_string(k) + "(n)");
      head.push_back("c>=" + std::to_string(t.k_max + 1));
      head.push_back("complete");
      std::vector<std::vector<std::string>> cells;
      for (const auto& r : t.rows) {
        std::vector<std::string> line = {std::to_string(r.n), with_commas(r.g),
                                         with_commas(r.g_connected)};
        for (std::uint64_t f : r.f) line.push_back(with_commas(f));
        line.push_back(with_commas(r.overflow));
        line.push_back(r.complete ? "yes" : "no");
        cells.push_back(std::move(line));
      }
      std::vector<std::size_t> width(head.size());
      for (std::size_t c = 0; c < head.size(); ++c) {
        width[c] = head[c].size();
        for (const auto& line : cells) width[c] = std::max(width[c], line[c].size());
      }
      auto format_line = [&](const std::vector<std::string>& line) {
        std::string s;
        for (std::size_t c = 0; c < line.size(); ++c) {
          if (c) s += " | ";
          s += std::string(width[c] - line[c].size(), ' ') + line[c];
        }
        return s + "\n";
      };
      std::string out = format_line(head);
      std::size_t rule = 0;
      for (std::size_t w : width) rule += w + 3;
      out += std::string(rule - 3, '-') + "\n";
      for (const auto& line : cells) out += format_line(line);
      if (include_timing) {
        out += "wall time: " + std::to_string(t.metadata.wall_time_seconds) + " s\n";
      }
      return out;
    }
  }
  return {};
}

CensusTable parse_census_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("census json: ") + e.what());
  }
  try {
    if (j.at("schema").get<std::string>() != kTableSchema ||
        j.at("version").get<int>() != kTableVersion) {
      throw Error(ErrorCode::Parse, "census json: unsupported schema or version");
    }
    CensusTable t;
    t.k_max = j.at("k_max").get<int>();
    const json& meta = j.at("metadata");
    t.metadata.generator_version = meta.at("generator_version").get<std::string>();
    t.metadata.solver_version = meta.at("solver_version").get<std::string>();
    t.metadata.source = meta.at("source").get<std::string>();
    t.metadata.wall_time_seconds = meta.value("wall_time_seconds", 0.0);
    for (const auto& r : j.at("rows")) t.rows.push_back(row_from_json(r));
    return t;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("census json: ") + e.what());
  }
}

}  // namespace copnum
