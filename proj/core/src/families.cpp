#include "hyperclust/families.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <unordered_set>

#include "hyperclust/motif.hpp"

namespace hyperclust {

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return names;
}

Hypergraph from_pairs(std::size_t n, const std::vector<std::pair<VertexIndex, VertexIndex>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    edges.push_back({"e" + std::to_string(edges.size() + 1), u < v ? VertexSet{u, v} : VertexSet{v, u}});
  }
  return Hypergraph::from_indexed(numbered(n), std::move(edges));
}

}  // namespace

Hypergraph random_degenerate_graph(std::size_t n, std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
  for (std::size_t i = 1; i < n; ++i) {
    const auto k = std::min(d, i);
    std::unordered_set<std::size_t> picked;
    // Floyd's sampling of k distinct values from [0, i).
    for (std::size_t j = i - k; j < i; ++j) {
      const auto t = std::uniform_int_distribution<std::size_t>(0, j)(rng);
      picked.insert(picked.contains(t) ? j : t);
    }
    std::vector<std::size_t> sorted(picked.begin(), picked.end());
    std::sort(sorted.begin(), sorted.end());
    for (auto u : sorted) pairs.emplace_back(static_cast<VertexIndex>(u), static_cast<VertexIndex>(i));
  }
  return from_pairs(n, pairs);
}

Hypergraph grid_graph(std::size_t n) {
  std::size_t w = 1;
  while (w * w < n) ++w;
  std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    if ((i + 1) % w != 0 && i + 1 < n) pairs.emplace_back(static_cast<VertexIndex>(i), static_cast<VertexIndex>(i + 1));
    if (i + w < n) pairs.emplace_back(static_cast<VertexIndex>(i), static_cast<VertexIndex>(i + w));
  }
  return from_pairs(n, pairs);
}

BenchFamily parse_bench_family(const std::string& name) {
  if (name == "random") return BenchFamily::random;
  if (name == "grid") return BenchFamily::grid;
  if (name == "path" || name == "paths") return BenchFamily::path;
  throw DomainError("unknown bench family \"" + name + "\" (expected random, grid or path)");
}

std::string to_string(BenchFamily f) {
  switch (f) {
    case BenchFamily::random:
      return "random";
    case BenchFamily::grid:
      return "grid";
    case BenchFamily::path:
      return "path";
  }
  return "?";
}

double loglog_slope(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) return 0;
  bool zero = false;
  for (const auto& p : points) zero = zero || p.second <= 0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    const double lx = std::log(x);
    const double ly = zero ? std::log1p(y) : std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double m = static_cast<double>(points.size());
  const double denom = m * sxx - sx * sx;
  if (denom == 0) return 0;
  return (m * sxy - sx * sy) / denom;
}

BenchResult run_bench(const BenchConfig& config) {
  for (const auto& [label, motif] : config.motifs) {
    if (!motif.is_simple()) throw DomainError("bench motif " + label + " is not simple");
  }
  BenchResult result;
  std::vector<std::vector<std::pair<double, double>>> series(std::max<std::size_t>(1, config.motifs.size()));
  for (auto n : config.sizes) {
    for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
      Hypergraph g;
      switch (config.family) {
        case BenchFamily::random:
          g = random_degenerate_graph(n, config.degeneracy, config.seed + 1'000'003ull * n + rep);
          break;
        case BenchFamily::grid:
          g = grid_graph(n);
          break;
        case BenchFamily::path:
          g = from_pairs(n, [n] {
            std::vector<std::pair<VertexIndex, VertexIndex>> p;
            for (std::size_t i = 0; i + 1 < n; ++i) p.emplace_back(static_cast<VertexIndex>(i), static_cast<VertexIndex>(i + 1));
            return p;
          }());
          break;
      }
      if (config.motifs.empty()) {
        result.rows.push_back({"{}", n, rep, g.edge_count(), 0, 0});
        series[0].emplace_back(static_cast<double>(n), 0);
        continue;
      }
      for (std::size_t m = 0; m < config.motifs.size(); ++m) {
        const auto start = std::chrono::steady_clock::now();
        const auto count = count_embeddings(config.motifs[m].second, g);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        result.rows.push_back({config.motifs[m].first, n, rep, g.edge_count(), count, elapsed.count()});
        series[m].emplace_back(static_cast<double>(n), static_cast<double>(count));
      }
    }
  }
  if (config.motifs.empty()) {
    result.slopes.emplace_back("{}", loglog_slope(series[0]));
  } else {
    for (std::size_t m = 0; m < config.motifs.size(); ++m) result.slopes.emplace_back(config.motifs[m].first, loglog_slope(series[m]));
  }
  return result;
}

std::string bench_to_csv(const BenchResult& result, bool timing) {
  std::string out = timing ? "motif,n,rep,edges,count,seconds\n" : "motif,n,rep,edges,count\n";
  char buf[64];
  for (const auto& r : result.rows) {
    out += r.motif + "," + std::to_string(r.n) + "," + std::to_string(r.repetition) + "," + std::to_string(r.edges) +
           "," + std::to_string(r.count);
    if (timing) {
      std::snprintf(buf, sizeof buf, ",%.6f", r.seconds);
      out += buf;
    }
    out += "\n";
  }
  for (const auto& [motif, slope] : result.slopes) {
    std::snprintf(buf, sizeof buf, "%.4f", slope);
    out += "# slope " + motif + "=" + buf + "\n";
  }
  return out;
}

}  // namespace hyperclust
