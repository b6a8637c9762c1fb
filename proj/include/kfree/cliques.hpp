#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kfree/error.hpp"
#include "kfree/graph.hpp"

namespace kfree {

/// Clique counts reach C(64, 32) > 2^64.
using CliqueCount = unsigned __int128;

inline std::string to_string(CliqueCount x) {
  if (x == 0) return "0";
  std::string s;
  while (x > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
    x /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

namespace detail {

inline CliqueCount choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  CliqueCount c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<CliqueCount>(n - k + i) / static_cast<CliqueCount>(i);
  return c;
}

inline bool is_clique_set(const Graph& g, VertexSet s) {
  for (int v : s)
    if (!(s - g.neighbors(v)).is_subset_of(VertexSet::singleton(v))) return false;
  return true;
}

// Number of `size`-cliques inside `cand`, each counted once by listing its
// vertices in increasing order.
inline CliqueCount count_in(const Graph& g, VertexSet cand, int size) {
  if (size == 0) return 1;
  if (size == 1) return static_cast<CliqueCount>(cand.size());
  if (size == 2) {
    CliqueCount total = 0;
    for (int v : cand) total += (g.neighbors(v) & cand).size();
    return total / 2;
  }
  if (is_clique_set(g, cand)) return choose(cand.size(), size);
  CliqueCount total = 0;
  while (cand.size() >= size) {
    const int v = cand.min();
    cand = cand.without(v);
    const VertexSet next = g.neighbors(v) & cand;
    if (next.size() >= size - 1) total += count_in(g, next, size - 1);
  }
  return total;
}

inline bool has_clique_in(const Graph& g, VertexSet cand, int size) {
  if (size <= 0) return true;
  if (cand.size() < size) return false;
  if (size == 1) return true;
  if (size == 2) {
    for (int v : cand)
      if (g.neighbors(v).intersects(cand)) return true;
    return false;
  }
  while (cand.size() >= size) {
    const int v = cand.min();
    cand = cand.without(v);
    const VertexSet next = g.neighbors(v) & cand;
    if (next.size() >= size - 1 && has_clique_in(g, next, size - 1)) return true;
  }
  return false;
}

}  // namespace detail

/// K_m(G): number of m-vertex subsets spanning a complete graph.
inline CliqueCount count_cliques(const Graph& g, int m) {
  if (m < 1) throw PreconditionError("clique order must be at least 1");
  return detail::count_in(g, g.vertices(), m);
}

/// K_m(v): number of m-cliques containing v.
inline CliqueCount count_cliques_at(const Graph& g, int v, int m) {
  if (m < 1) throw PreconditionError("clique order must be at least 1");
  if (v < 0 || v >= g.order()) throw PreconditionError("vertex out of range");
  return detail::count_in(g, g.neighbors(v), m - 1);
}

/// True iff G has no m-clique; stops at the first one found.
inline bool is_clique_free(const Graph& g, int m) {
  if (m < 1) return false;
  return !detail::has_clique_in(g, g.vertices(), m);
}

/// True iff some m-clique lies inside S.
inline bool has_clique_within(const Graph& g, VertexSet s, int m) {
  return detail::has_clique_in(g, s, m);
}

/// A clique meeting every part in exactly one vertex; result[i] is the vertex
/// chosen from parts[i]. Exact backtracking, always branching on the part
/// with the fewest remaining candidates.
inline std::optional<std::vector<int>> find_transversal_clique(const Graph& g,
                                                                std::span<const VertexSet> parts) {
  const int k = static_cast<int>(parts.size());
  VertexSet seen;
  for (VertexSet p : parts) {
    if (p.intersects(seen)) throw PreconditionError("transversal parts must be disjoint");
    if (!p.is_subset_of(g.vertices())) throw PreconditionError("part has out-of-range vertices");
    seen |= p;
  }
  std::vector<int> chosen(k, -1);
  std::vector<VertexSet> cand(parts.begin(), parts.end());

  auto extend = [&](auto& self, int remaining) -> bool {
    if (remaining == 0) return true;
    int best = -1;
    for (int i = 0; i < k; ++i)
      if (chosen[i] < 0 && (best < 0 || cand[i].size() < cand[best].size())) best = i;
    if (cand[best].empty()) return false;
    const std::vector<VertexSet> saved = cand;
    for (int v : saved[best]) {
      chosen[best] = v;
      for (int i = 0; i < k; ++i)
        if (chosen[i] < 0) cand[i] = saved[i] & g.neighbors(v);
      if (self(self, remaining - 1)) return true;
    }
    chosen[best] = -1;
    cand = saved;
    return false;
  };

  if (!extend(extend, k)) return std::nullopt;
  return chosen;
}

}  // namespace kfree
