#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hyperclust {

using VertexIndex = std::uint32_t;

// Sorted, duplicate-free list of vertex indices into some graph's vertex list.
using VertexSet = std::vector<VertexIndex>;

inline void normalize(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline std::size_t intersection_size(const VertexSet& a, const VertexSet& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool is_strict_subset(const VertexSet& a, const VertexSet& b) {
  return a.size() < b.size() && is_subset(a, b);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool contains(const VertexSet& s, VertexIndex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

// Image of a set under an index map; result is normalized.
template <class Map>
VertexSet image(const VertexSet& s, const Map& map) {
  VertexSet out;
  out.reserve(s.size());
  for (auto v : s) out.push_back(static_cast<VertexIndex>(map[v]));
  normalize(out);
  return out;
}

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : s) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ s.size());
  }
};

}  // namespace hyperclust
