#include <fstream>
#include <set>

#include "copnum/canonical.hpp"
#include "copnum/constructions.hpp"
#include "copnum/enumeration.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace copnum;

namespace {

std::filesystem::path write_file(const test::TempDir& dir, const std::string& name,
                                 const std::string& content) {
  const auto path = dir.path() / name;
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

std::size_t drain(GraphStream& s) {
  std::size_t count = 0;
  while (s.next()) ++count;
  return count;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("generated counts match known totals") {
  const std::size_t g[] = {0, 1, 2, 4, 11, 34, 156, 1044, 12346};
  const std::size_t gc[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) {
    auto all = generate_graphs(n);
    CHECK(all.size() == g[n]);
    CHECK(drain(all) == g[n]);
    auto connected = generate_graphs(n, StreamFilter::Connected);
    CHECK(drain(connected) == gc[n]);
  }
}

TEST_CASE("generated streams are sorted, distinct and canonical") {
  for (int n = 1; n <= 7; ++n) {
    const auto& graphs = test::graphs_of_order(n);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      CHECK(canonical_graph(graphs[i]) == graphs[i]);
      if (i > 0) CHECK(canonical_form(graphs[i - 1]) < canonical_form(graphs[i]));
    }
  }
}

TEST_CASE("generation is independent of the job count") {
  const GraphLevel one = generate_level(8, 1);
  const GraphLevel three = generate_level(8, 3);
  CHECK(one.codes == three.codes);
  CHECK(one.content_hash() == three.content_hash());
}

TEST_CASE("generator range") {
  CHECK(code_of([] { generate_graphs(0); }) == ErrorCode::Contract);
  CHECK(code_of([] { generate_graphs(11); }) == ErrorCode::Contract);
  CHECK(generate_graphs(1).size() == 1);
}

TEST_CASE("level files") {
  test::TempDir dir("level");
  const GraphLevel level = generate_level(6);
  const auto path = dir.path() / "level-6.bin";
  write_level(path, level);
  const GraphLevel back = read_level(path);
  CHECK(back.order == 6);
  CHECK(back.codes == level.codes);

  std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
  f.seekp(30);
  f.put('\x55');
  f.close();
  CHECK(code_of([&] { read_level(path); }) == ErrorCode::CheckpointMismatch);
  CHECK(code_of([&] { read_level(dir.path() / "missing.bin"); }) == ErrorCode::Io);
}

TEST_CASE("stream cursor") {
  auto s = generate_graphs(5, StreamFilter::Connected);
  s.next();
  s.next();
  const std::size_t pos = s.position();
  const auto third = s.next();
  s.seek(pos);
  CHECK(s.next() == third);
  CHECK(s.source().kind == "generated");
  s.seek(s.size());
  CHECK_FALSE(s.next().has_value());
  CHECK_THROWS_AS(s.seek(s.size() + 1), Error);
}

TEST_CASE("corpus ingestion") {
  test::TempDir dir("corpus");
  std::string connected4;
  for (const Graph& g : test::graphs_of_order(4)) {
    if (g.is_connected()) connected4 += emit_graph6(g) + "\n";
  }
  auto s = ingest_corpus(write_file(dir, "c4.g6", connected4));
  CHECK(s.order() == 4);
  CHECK(drain(s) == 6);
  CHECK(s.source().kind == "corpus");

  auto empty = ingest_corpus(write_file(dir, "empty.g6", ""));
  CHECK(drain(empty) == 0);

  // Connected filter over a mixed corpus.
  auto filtered = ingest_corpus(write_file(dir, "mixed.g6", "Cl\nCC\nC~\n"), StreamFilter::Connected);
  CHECK(filtered.size() == 3);
  CHECK(drain(filtered) == 2);

  // Reference corpus of the six connected order-4 graphs.
  auto ref = ingest_corpus(std::string(COPNUM_TEST_DATA) + "/connected4.g6");
  CHECK(drain(ref) == 6);
}

TEST_CASE("corpus integrity errors") {
  test::TempDir dir("bad");
  try {
    ingest_corpus(write_file(dir, "dup.g6", "Cl\nC~\nCl\n"));
    FAIL("duplicate accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Integrity);
    const std::string what = e.what();
    CHECK(what.find("1") != std::string::npos);
    CHECK(what.find("3") != std::string::npos);
  }
  // Isomorphic but differently labeled copy of C4.
  const std::string relabeled =
      emit_graph6(standard_family(Family::Cycle, 4).permuted(std::vector<Vertex>{0, 2, 1, 3}));
  REQUIRE(relabeled != "Cl");
  CHECK(code_of([&] { ingest_corpus(write_file(dir, "iso.g6", "Cl\n" + relabeled + "\n")); }) ==
        ErrorCode::Integrity);
  CHECK(code_of([&] { ingest_corpus(write_file(dir, "orders.g6", "Cl\nBw\n")); }) ==
        ErrorCode::Integrity);
  try {
    ingest_corpus(write_file(dir, "parse.g6", "Cl\nC~\nC!\n"));
    FAIL("bad record accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find(":3") != std::string::npos);
  }
  CHECK(code_of([&] { ingest_corpus(dir.path() / "absent.g6"); }) == ErrorCode::Io);
}

TEST_CASE("hashes") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(hash_hex(0xabcULL) == "0000000000000abc");
}
