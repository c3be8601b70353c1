#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hyperclust/hypergraph.hpp"

namespace hyperclust {

// Vertex i (0-based) is joined to min(d, i) distinct uniformly chosen earlier
// vertices, so the degeneracy is at most d. Vertices "1".."n".
Hypergraph random_degenerate_graph(std::size_t n, std::size_t d, std::uint64_t seed);

// n vertices laid out row-major on a grid of width ceil(sqrt(n)).
Hypergraph grid_graph(std::size_t n);

enum class BenchFamily { random, grid, path };

BenchFamily parse_bench_family(const std::string& name);  // "random", "grid", "path"/"paths"
std::string to_string(BenchFamily f);

struct BenchConfig {
  BenchFamily family = BenchFamily::random;
  std::size_t degeneracy = 2;
  std::vector<std::size_t> sizes{100, 200, 400, 800, 1600};
  std::vector<std::pair<std::string, Hypergraph>> motifs;  // simple motifs; may be empty
  std::size_t repetitions = 1;
  std::uint64_t seed = 1;
  bool timing = true;
};

struct BenchRow {
  std::string motif;
  std::size_t n = 0;
  std::size_t repetition = 0;
  std::size_t edges = 0;
  std::uint64_t count = 0;
  double seconds = 0;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  std::vector<std::pair<std::string, double>> slopes;  // per motif, least squares of log count on log n
};

// An empty motif list yields one zero-count series labelled "{}".
BenchResult run_bench(const BenchConfig& config);

// Least-squares slope of log(y) against log(x); log1p(y) is used when some y is 0.
double loglog_slope(const std::vector<std::pair<double, double>>& points);

std::string bench_to_csv(const BenchResult& result, bool timing);

}  // namespace hyperclust
