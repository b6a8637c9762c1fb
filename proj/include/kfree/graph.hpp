#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kfree/error.hpp"
#include "kfree/vertex_set.hpp"

namespace kfree {

using Edge = std::pair<int, int>;

/// Position of the pair {i, j}, i < j, in the column-major upper triangle
/// (the graph6 bit order): (0,1), (0,2), (1,2), (0,3), ...
constexpr int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Simple undirected graph on n <= 64 labelled vertices, one adjacency word
/// per vertex. Values are immutable once built; use GraphBuilder to make one.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n) : n_(check_order(n)) {}

  /// Builds from adjacency rows, rejecting asymmetric or looped input.
  static Graph from_rows(int n, std::span<const VertexSet> rows) {
    Graph g(n);
    if (static_cast<int>(rows.size()) != n)
      throw PreconditionError("row count does not match vertex count");
    const VertexSet all = VertexSet::full(n);
    for (int v = 0; v < n; ++v) {
      if (!rows[v].is_subset_of(all)) throw PreconditionError("neighbour index out of range");
      if (rows[v].contains(v)) throw PreconditionError("self-loop at vertex " + std::to_string(v));
      g.adj_[v] = rows[v];
    }
    for (int v = 0; v < n; ++v)
      for (int u : rows[v])
        if (!rows[u].contains(v)) throw PreconditionError("adjacency is not symmetric");
    return g;
  }

  static Graph from_edges(int n, std::span<const Edge> edges);

  /// Decodes an upper-triangle bitmask in pair_index order (n <= 11).
  static Graph from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    if (pair_count(n) > 64) throw PreconditionError("bitmask form needs n <= 11");
    int bit = 0;
    for (int j = 1; j < n; ++j) {
      const std::uint64_t col = (mask >> bit) & ((std::uint64_t{1} << j) - 1);
      g.adj_[j] = VertexSet(col);
      for (int i : VertexSet(col)) g.adj_[i] = g.adj_[i].with(j);
      bit += j;
    }
    return g;
  }

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].size(); }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += adj_[v].size();
    return twice / 2;
  }

  /// e(G[S]).
  int edges_within(VertexSet s) const {
    int twice = 0;
    for (int v : s) twice += (adj_[v] & s).size();
    return twice / 2;
  }

  /// e(A, B) for disjoint A, B.
  int edges_between(VertexSet a, VertexSet b) const {
    int count = 0;
    for (int v : a) count += (adj_[v] & b).size();
    return count;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < n_; ++v)
      for (int u : adj_[v])
        if (u > v) out.emplace_back(v, u);
    return out;
  }

  /// Inverse of from_mask.
  std::uint64_t to_mask() const {
    if (pair_count(n_) > 64) throw PreconditionError("bitmask form needs n <= 11");
    std::uint64_t mask = 0;
    int bit = 0;
    for (int j = 1; j < n_; ++j) {
      mask |= (adj_[j] & VertexSet::full(j)).bits() << bit;
      bit += j;
    }
    return mask;
  }

  /// Vertices of S are renumbered 0..|S|-1 in increasing order.
  Graph induced(VertexSet s) const {
    Graph g(s.size());
    int index[kMaxVertices];
    int k = 0;
    for (int v : s) index[v] = k++;
    for (int v : s)
      for (int u : adj_[v] & s) g.adj_[index[v]] = g.adj_[index[v]].with(index[u]);
    return g;
  }

  Graph complement() const {
    Graph g(n_);
    const VertexSet all = vertices();
    for (int v = 0; v < n_; ++v) g.adj_[v] = (all - adj_[v]).without(v);
    return g;
  }

  /// Image under a relabelling: vertex v becomes perm[v].
  Graph relabeled(std::span<const int> perm) const {
    Graph g(n_);
    for (int v = 0; v < n_; ++v)
      for (int u : adj_[v]) g.adj_[perm[v]] = g.adj_[perm[v]].with(perm[u]);
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.adj_[v] != b.adj_[v]) return false;
    return true;
  }

 private:
  friend class GraphBuilder;

  static int check_order(int n) {
    if (n < 0 || n > kMaxVertices)
      throw PreconditionError("vertex count " + std::to_string(n) + " outside [0, 64]");
    return n;
  }

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

/// Mutable staging area for a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : g_(n) {}
  explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

  int order() const { return g_.n_; }

  GraphBuilder& add_edge(int u, int v) {
    check_pair(u, v);
    g_.adj_[u] = g_.adj_[u].with(v);
    g_.adj_[v] = g_.adj_[v].with(u);
    return *this;
  }

  GraphBuilder& remove_edge(int u, int v) {
    check_pair(u, v);
    g_.adj_[u] = g_.adj_[u].without(v);
    g_.adj_[v] = g_.adj_[v].without(u);
    return *this;
  }

  /// Removes every edge with an endpoint in S.
  GraphBuilder& isolate(VertexSet s) {
    for (int v = 0; v < g_.n_; ++v) {
      if (s.contains(v))
        g_.adj_[v] = VertexSet{};
      else
        g_.adj_[v] -= s;
    }
    return *this;
  }

  bool has_edge(int u, int v) const { return g_.adj_[u].contains(v); }

  Graph build() const { return g_; }

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
      throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("self-loops are not allowed");
  }

  Graph g_;
};

inline Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

}  // namespace kfree
