// copnum command-line front end. Talks to the library through the C API only.

#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "copnum/copnum.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitClaimFailed = 1;

// Thrown to unwind with a library status as the process exit code.
struct Failure {
  int code;
  std::string message;
};

void check(copnum_status s) {
  if (s != COPNUM_OK) throw Failure{s, copnum_last_error()};
}

struct StringDeleter {
  void operator()(char* s) const { copnum_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

std::string take(char* s) { return std::string(CString(s).get()); }

struct GraphDeleter {
  void operator()(copnum_graph* g) const { copnum_graph_free(g); }
};
using GraphPtr = std::unique_ptr<copnum_graph, GraphDeleter>;

struct CensusDeleter {
  void operator()(copnum_census* t) const { copnum_census_free(t); }
};
using CensusPtr = std::unique_ptr<copnum_census, CensusDeleter>;

struct SolutionDeleter {
  void operator()(copnum_solution* s) const { copnum_solution_free(s); }
};
using SolutionPtr = std::unique_ptr<copnum_solution, SolutionDeleter>;

GraphPtr parse(const std::string& g6, const std::string& where) {
  copnum_graph* g = nullptr;
  const copnum_status s = copnum_graph_from_graph6(g6.data(), g6.size(), &g);
  if (s != COPNUM_OK) throw Failure{s, where + copnum_last_error()};
  return GraphPtr(g);
}

void read_lines(std::istream& in, const std::string& name,
                std::vector<std::pair<std::string, std::string>>& out) {
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty()) continue;
    out.emplace_back(line, name + ":" + std::to_string(number) + ": ");
  }
}

// A graph6 literal, a file of graph6 lines, or stdin when absent or "-".
std::vector<GraphPtr> load_graphs(const std::string& input) {
  std::vector<std::pair<std::string, std::string>> lines;
  if (input.empty() || input == "-") {
    read_lines(std::cin, "<stdin>", lines);
  } else if (std::filesystem::is_regular_file(input)) {
    std::ifstream f(input, std::ios::binary);
    if (!f) throw Failure{COPNUM_E_IO, "cannot read " + input};
    read_lines(f, input, lines);
  } else {
    lines.emplace_back(input, "");
  }
  if (lines.empty()) throw Failure{COPNUM_E_PARSE, "no graph on input"};
  std::vector<GraphPtr> graphs;
  for (const auto& [text, where] : lines) graphs.push_back(parse(text, where));
  return graphs;
}

void progress_to_stderr(void*, const char* message) {
  std::fprintf(stderr, "%s\n", message);
}

void on_sigint(int) {
  copnum_request_cancel();
  std::signal(SIGINT, SIG_DFL);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !f.write(text.data(), static_cast<std::streamsize>(text.size()))) {
    throw Failure{COPNUM_E_IO, "cannot write " + path};
  }
}

int sink_stdout(void*, const char* g6) {
  std::fputs(g6, stdout);
  std::fputc('\n', stdout);
  return 0;
}

int cop_number(const copnum_graph* g) {
  int c = 0;
  check(copnum_cop_number(g, &c));
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cop numbers, small-graph census and constructions"};
  app.set_version_flag("--version", std::string(copnum_version()));
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Cop number of each input graph");
  std::string solve_input;
  int solve_k = 0;
  bool capture_time = false;
  bool strategy = false;
  solve->add_option("input", solve_input, "graph6 string or file (default: stdin)");
  solve->add_option("--k", solve_k, "Decide whether K cops win instead")
      ->check(CLI::Range(1, 62));
  solve->add_flag("--capture-time", capture_time,
                  "Worst-case capture time from the optimal opening");
  solve->add_flag("--strategy", strategy, "Print an optimal-play transcript");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List non-isomorphic graphs as graph6");
  int enum_n = 0;
  bool enum_connected = false;
  int enum_jobs = 1;
  std::string enum_corpus;
  enumerate->add_option("--n", enum_n, "Order (1-10)")->check(CLI::Range(1, 10));
  enumerate->add_flag("--connected", enum_connected, "Connected graphs only");
  enumerate->add_option("--jobs", enum_jobs, "Worker threads")->check(CLI::Range(1, 256));
  enumerate->add_option("--corpus", enum_corpus, "Read and validate a graph6 corpus instead")
      ->check(CLI::ExistingFile);

  // census
  auto* census = app.add_subcommand("census", "Count graphs by cop number");
  copnum_census_options copts;
  copnum_census_options_init(&copts);
  std::string census_checkpoint, census_corpus, census_format = "text", census_output;
  std::uint64_t census_stop_after = 0, census_interval = 0;
  bool min_orders = false, timing = false, quiet = false;
  census->add_option("--n-max", copts.n_max, "Largest order (1-10)")
      ->check(CLI::Range(1, 10));
  census->add_option("--k-max", copts.k_max, "Largest cop number counted separately")
      ->check(CLI::Range(1, 4));
  census->add_option("--jobs", copts.jobs, "Worker threads")->check(CLI::Range(1, 256));
  census->add_option("--checkpoint", census_checkpoint, "Checkpoint directory (resumable)");
  census->add_option("--checkpoint-interval", census_interval,
                     "Graphs between checkpoints (default 100000)");
  census->add_option("--corpus", census_corpus, "Census of a graph6 corpus instead")
      ->check(CLI::ExistingFile);
  census->add_option("--format", census_format, "csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  census->add_option("-o,--output", census_output, "Output file (default: stdout)");
  census->add_option("--stop-after", census_stop_after,
                     "Stop after classifying this many graphs, as if interrupted");
  census->add_flag("--min-orders", min_orders, "Report m_k and M_k instead of the table");
  census->add_flag("--timing", timing, "Include wall time in the output");
  census->add_flag("--quiet", quiet, "No progress on stderr");

  // construct
  auto* construct = app.add_subcommand("construct", "Emit a named construction as graph6");
  std::string construct_spec;
  construct->add_option("spec", construct_spec,
                        "petersen | cycle:N | path:N | complete:N | star:N | pg:Q |\n"
                        "universal:<g6> | plus-k:<g6 G>:<g6 H>:<anchor>:<k>")
      ->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Check a census claim and emit a certificate");
  std::string claim = "nine-vertex", verify_checkpoint, verify_corpus, verify_output;
  copnum_verify_options vopts;
  copnum_verify_options_init(&vopts);
  std::uint64_t verify_stop_after = 0;
  bool verify_quiet = false;
  verify->add_option("--claim", claim, "nine-vertex or petersen-unique")
      ->check(CLI::IsMember({"nine-vertex", "petersen-unique"}));
  verify->add_option("--horizon", vopts.horizon, "Largest order (default 9 or 10)")
      ->check(CLI::Range(1, 10));
  verify->add_option("--jobs", vopts.jobs, "Worker threads")->check(CLI::Range(1, 256));
  verify->add_option("--checkpoint", verify_checkpoint, "Checkpoint directory (resumable)");
  verify->add_option("--corpus", verify_corpus, "Check the graphs of a corpus instead")
      ->check(CLI::ExistingFile);
  verify->add_option("-o,--output", verify_output, "Certificate file (default: stdout)");
  verify->add_option("--stop-after", verify_stop_after,
                     "Stop after classifying this many graphs, as if interrupted");
  verify->add_flag("--quiet", verify_quiet, "No progress on stderr");

  // play
  auto* play = app.add_subcommand("play", "Optimal-play transcript");
  std::string play_input;
  int play_cops = 0;
  play->add_option("input", play_input, "graph6 string or file (default: stdin)");
  play->add_option("--cops", play_cops, "Number of cops")
      ->required()
      ->check(CLI::Range(1, 62));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  std::signal(SIGINT, on_sigint);

  try {
    if (*solve) {
      for (const auto& g : load_graphs(solve_input)) {
        int k = solve_k;
        if (solve_k > 0) {
          copnum_solution* raw = nullptr;
          check(copnum_solve(g.get(), solve_k, &raw));
          SolutionPtr sol(raw);
          std::printf("%d %s: %s\n", solve_k, solve_k == 1 ? "cop" : "cops",
                      copnum_solution_cops_win(sol.get()) ? "win" : "lose");
        } else {
          k = cop_number(g.get());
          std::printf("c(G) = %d\n", k);
        }
        if (capture_time) {
          copnum_solution* raw = nullptr;
          check(copnum_solve(g.get(), k, &raw));
          SolutionPtr sol(raw);
          int t = 0;
          if (copnum_solution_capture_time(sol.get(), &t) == COPNUM_OK) {
            std::printf("capture time = %d\n", t);
          } else {
            std::printf("capture time = none\n");
          }
        }
        if (strategy) {
          char* text = nullptr;
          const copnum_status s = copnum_play_transcript(g.get(), k, &text);
          if (s == COPNUM_E_REFUSED) {
            std::printf("no winning strategy: %s\n", copnum_last_error());
          } else {
            check(s);
            std::fputs(take(text).c_str(), stdout);
          }
        }
      }
      return 0;
    }

    if (*enumerate) {
      if (!enum_corpus.empty()) {
        check(copnum_ingest_corpus(enum_corpus.c_str(), enum_connected, sink_stdout, nullptr));
      } else {
        if (enum_n == 0) throw Failure{COPNUM_E_CONTRACT, "--n or --corpus is required"};
        check(copnum_enumerate(enum_n, enum_connected, enum_jobs, sink_stdout, nullptr));
      }
      return 0;
    }

    if (*census) {
      if (!census_checkpoint.empty()) copts.checkpoint_dir = census_checkpoint.c_str();
      if (!census_corpus.empty()) copts.corpus_path = census_corpus.c_str();
      copts.stop_after = census_stop_after;
      copts.checkpoint_interval = census_interval;
      if (!quiet) copts.progress = progress_to_stderr;
      copnum_census* raw = nullptr;
      const copnum_status s = copnum_census_run(&copts, &raw);
      CensusPtr table(raw);
      if (s == COPNUM_E_INTERRUPTED) {
        std::fprintf(stderr, "interrupted: %s\n", copnum_last_error());
        return s;
      }
      check(s);
      char* text = nullptr;
      if (min_orders) {
        check(copnum_census_min_orders(table.get(), &text));
      } else {
        const copnum_format f = census_format == "csv"    ? COPNUM_FORMAT_CSV
                                : census_format == "json" ? COPNUM_FORMAT_JSON
                                                          : COPNUM_FORMAT_TEXT;
        check(copnum_census_render(table.get(), f, timing, &text));
      }
      write_output(census_output, take(text));
      return 0;
    }

    if (*construct) {
      copnum_graph* raw = nullptr;
      const copnum_status s = copnum_construct(construct_spec.c_str(), &raw);
      if (s != COPNUM_OK) {
        std::fprintf(stderr, "error: %s\n\n%s", copnum_last_error(), construct->help().c_str());
        return s;
      }
      GraphPtr g(raw);
      char* text = nullptr;
      check(copnum_graph_to_graph6(g.get(), &text));
      std::printf("%s\n", take(text).c_str());
      return 0;
    }

    if (*verify) {
      vopts.claim = claim == "nine-vertex" ? COPNUM_CLAIM_NINE_VERTEX
                                           : COPNUM_CLAIM_PETERSEN_UNIQUE;
      if (!verify_checkpoint.empty()) vopts.checkpoint_dir = verify_checkpoint.c_str();
      if (!verify_corpus.empty()) vopts.corpus_path = verify_corpus.c_str();
      vopts.stop_after = verify_stop_after;
      if (!verify_quiet) vopts.progress = progress_to_stderr;
      char* estimate = nullptr;
      check(copnum_verify_estimate(&vopts, &estimate));
      std::fprintf(stderr, "%s\n", take(estimate).c_str());
      int passed = 0;
      char* cert = nullptr;
      const copnum_status s = copnum_verify(&vopts, &passed, &cert);
      if (s == COPNUM_E_INTERRUPTED) {
        std::fprintf(stderr, "interrupted: %s (no certificate written)\n", copnum_last_error());
        return s;
      }
      check(s);
      write_output(verify_output, take(cert));
      std::fprintf(stderr, "%s: %s\n", claim.c_str(), passed ? "PASS" : "FAIL");
      return passed ? 0 : kExitClaimFailed;
    }

    if (*play) {
      auto graphs = load_graphs(play_input);
      if (graphs.size() != 1) throw Failure{COPNUM_E_CONTRACT, "play takes exactly one graph"};
      char* text = nullptr;
      check(copnum_play_transcript(graphs.front().get(), play_cops, &text));
      std::fputs(take(text).c_str(), stdout);
      return 0;
    }
  } catch (const Failure& f) {
    std::fprintf(stderr, "error: %s\n", f.message.c_str());
    return f.code;
  }
  return 0;
}
