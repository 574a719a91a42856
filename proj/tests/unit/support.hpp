#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include "copnum/canonical.hpp"
#include "copnum/enumeration.hpp"
#include "copnum/graph.hpp"

namespace test {

// Generated isomorphism classes of one order, cached per process.
inline const std::vector<copnum::Graph>& graphs_of_order(int n) {
  static std::map<int, std::vector<copnum::Graph>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<copnum::Graph> out;
  auto stream = copnum::generate_graphs(n);
  while (auto g = stream.next()) out.push_back(*g);
  return cache.emplace(n, std::move(out)).first->second;
}

inline std::vector<copnum::Graph> connected_graphs_up_to(int n_max) {
  std::vector<copnum::Graph> out;
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& g : graphs_of_order(n)) {
      if (g.is_connected()) out.push_back(g);
    }
  }
  return out;
}

inline copnum::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  std::vector<copnum::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) edges.emplace_back(u, v);
    }
  }
  return copnum::Graph(n, edges);
}

inline std::vector<copnum::Vertex> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<copnum::Vertex> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Fresh scratch directory removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("copnum-test-" + tag + "-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace test
