#pragma once
// Deliberately slow, independent re-implementations used only to
// cross-check the library: direct O(4^n) transforms and BFS components.
// Nothing here shares code with src/.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "plateau/boolfun.hpp"
#include "plateau/cayley.hpp"

namespace oracles {

inline std::vector<std::int64_t> naive_wht(const plateau::BooleanFunction& f) {
  const std::uint32_t size = f.size();
  std::vector<std::int64_t> out(size, 0);
  for (std::uint32_t u = 0; u < size; ++u)
    for (std::uint32_t x = 0; x < size; ++x)
      out[u] += (f[x] ^ plateau::dot_f2(u, x)) ? -1 : 1;
  return out;
}

inline std::vector<std::int64_t> naive_fourier(
    const plateau::BooleanFunction& f) {
  const std::uint32_t size = f.size();
  std::vector<std::int64_t> out(size, 0);
  for (std::uint32_t u = 0; u < size; ++u)
    for (std::uint32_t x = 0; x < size; ++x)
      if (f[x]) out[u] += plateau::dot_f2(u, x) ? -1 : 1;
  return out;
}

// Plain breadth-first search, one sorted vertex list per component.
inline std::vector<std::vector<std::uint32_t>> bfs_components(
    const plateau::CayleyGraph& g) {
  const std::uint64_t size = g.vertex_count();
  std::vector<char> seen(size, 0);
  std::vector<std::vector<std::uint32_t>> components;
  for (std::uint64_t start = 0; start < size; ++start) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> todo{static_cast<std::uint32_t>(start)};
    std::vector<std::uint32_t> component;
    seen[start] = 1;
    while (!todo.empty()) {
      const std::uint32_t v = todo.back();
      todo.pop_back();
      component.push_back(v);
      for (std::uint32_t d : g.support()) {
        const std::uint32_t w = v ^ d;
        if (!seen[w]) {
          seen[w] = 1;
          todo.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

}  // namespace oracles
