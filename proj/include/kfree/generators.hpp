#pragma once

#include <cstdint>
#include <vector>

#include "kfree/error.hpp"
#include "kfree/graph.hpp"
#include "kfree/random.hpp"

namespace kfree {

/// Part sizes of the Turán graph T_r(n): the larger parts come first.
inline std::vector<int> turan_part_sizes(int n, int r) {
  if (r < 1) throw PreconditionError("turan: r must be at least 1");
  if (n < r) throw PreconditionError("turan: need r <= n");
  std::vector<int> sizes(r, n / r);
  for (int i = 0; i < n % r; ++i) ++sizes[i];
  return sizes;
}

/// Part index of every vertex of T_r(n) (contiguous blocks).
inline std::vector<int> turan_assignment(int n, int r) {
  std::vector<int> part;
  part.reserve(n);
  const auto sizes = turan_part_sizes(n, r);
  for (int i = 0; i < r; ++i) part.insert(part.end(), sizes[i], i);
  return part;
}

inline Graph turan_graph(int n, int r) {
  const auto part = turan_assignment(n, r);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part[u] != part[v]) b.add_edge(u, v);
  return b.build();
}

/// t_r(n) = (n^2 - sum of squared part sizes) / 2.
inline std::int64_t turan_edges(int n, int r) {
  std::int64_t squares = 0;
  for (int s : turan_part_sizes(n, r)) squares += static_cast<std::int64_t>(s) * s;
  return (static_cast<std::int64_t>(n) * n - squares) / 2;
}

/// T_r(n) plus the matching {0,1}, {2,3}, ... of t edges inside the first part.
inline Graph turan_plus_matching(int n, int r, int t) {
  const auto sizes = turan_part_sizes(n, r);
  if (t < 0 || 2 * t > sizes[0])
    throw PreconditionError("turan_plus_matching: 2t exceeds the first part size");
  GraphBuilder b(turan_graph(n, r));
  for (int i = 0; i < t; ++i) b.add_edge(2 * i, 2 * i + 1);
  return b.build();
}

/// G(n, p): pair {i, j} is decided by draw number pair_index(i, j).
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("random_graph: p outside [0, 1]");
  const CounterRng rng(seed);
  GraphBuilder b(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (rng.bernoulli_at(static_cast<std::uint64_t>(pair_index(i, j)), p)) b.add_edge(i, j);
  return b.build();
}

inline Graph complete_graph(int n) { return Graph(n).complement(); }

inline Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

inline Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

/// K_{1,leaves}, centre 0.
inline Graph star_graph(int leaves) {
  GraphBuilder b(leaves + 1);
  for (int v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return b.build();
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
    b.add_edge(i, i + 5);
  }
  return b.build();
}

/// Disjoint union; vertices of b are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  GraphBuilder out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(a.order() + u, a.order() + v);
  return out.build();
}

}  // namespace kfree
