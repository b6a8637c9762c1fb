#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "kfree/error.hpp"
#include "kfree/graph.hpp"
#include "kfree/graph6.hpp"

namespace kfree {

inline constexpr int kMaxCanonicalOrder = 10;

struct CanonicalLabeling {
  /// order[p] = original vertex placed at position p of the canonical graph.
  std::vector<int> order;
  /// Number of relabellings attaining the minimum, i.e. |Aut(G)|.
  std::uint64_t automorphisms = 0;
};

namespace detail {

// Exhaustive search for the relabelling with the lexicographically smallest
// graph6 bit string. Placing position j fixes column j of the upper triangle,
// so prefixes compare column by column and branches whose prefix already
// exceeds the best one are cut. Twins (vertices whose swap is an
// automorphism) are only placed in index order; the count of minimal
// orderings is scaled back by the size of that twin group.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    for (int v = 0; v < n_; ++v) {
      for (int u = 0; u < v; ++u) {
        const bool open = g_.neighbors(u).without(v) == g_.neighbors(v).without(u);
        if (open) earlier_twins_[v] = earlier_twins_[v].with(u);
      }
    }
    twin_group_ = 1;
    for (int v = 0; v < n_; ++v) {
      // Twin classes are cliques or independent sets and the relation is an
      // equivalence, so (class size)! = prod over members of (1 + earlier).
      twin_group_ *= static_cast<std::uint64_t>(earlier_twins_[v].size() + 1);
    }
  }

  CanonicalLabeling run() {
    best_.fill(~std::uint64_t{0});
    placed_order_.assign(n_, 0);
    search(0, VertexSet::full(n_), false);
    return CanonicalLabeling{best_order_, minimal_count_ * twin_group_};
  }

 private:
  std::uint64_t column(int position, int v) const {
    std::uint64_t value = 0;
    for (int i = 0; i < position; ++i)
      value = (value << 1) | (g_.adjacent(placed_order_[i], v) ? 1U : 0U);
    return value;
  }

  void search(int depth, VertexSet unplaced, bool below_best) {
    if (depth == n_) {
      if (below_best || best_order_.empty()) {
        best_order_ = placed_order_;
        minimal_count_ = 1;
      } else {
        ++minimal_count_;
      }
      return;
    }
    std::array<std::pair<std::uint64_t, int>, kMaxVertices> cand;
    int count = 0;
    for (int v : unplaced)
      if (!earlier_twins_[v].intersects(unplaced)) cand[count++] = {column(depth, v), v};
    std::sort(cand.begin(), cand.begin() + count);
    for (int k = 0; k < count; ++k) {
      const auto [col, v] = cand[k];
      bool below = below_best;
      if (!below) {
        if (col > best_[depth]) return;  // sorted: the rest are worse too
        if (col < best_[depth]) below = true;
      }
      if (below) {
        best_[depth] = col;
        for (int d = depth + 1; d < n_; ++d) best_[d] = ~std::uint64_t{0};
        best_order_.clear();
        minimal_count_ = 0;
      }
      placed_order_[depth] = v;
      search(depth + 1, unplaced.without(v), below);
      // After the first descent the prefix ties the (possibly new) best.
      below_best = false;
      // A branch that set a new best made the old best unreachable.
    }
  }

  const Graph& g_;
  int n_;
  std::array<VertexSet, kMaxVertices> earlier_twins_{};
  std::uint64_t twin_group_ = 1;
  std::array<std::uint64_t, kMaxVertices> best_{};
  std::vector<int> placed_order_;
  std::vector<int> best_order_;
  std::uint64_t minimal_count_ = 0;
};

}  // namespace detail

/// Canonical relabelling and |Aut(G)|; refuses n > 10.
inline CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw LimitError("canonical form is brute force and limited to n <= 10");
  return detail::CanonicalSearch(g).run();
}

/// Graph relabelled so that its graph6 string is lexicographically minimal.
inline Graph canonical_graph(const Graph& g) {
  const auto lab = canonical_labeling(g);
  std::vector<int> perm(g.order());
  for (int p = 0; p < g.order(); ++p) perm[lab.order[p]] = p;
  return g.relabeled(perm);
}

/// Lexicographically minimal graph6 string over all vertex relabellings.
inline std::string canonical_form(const Graph& g) { return emit_graph6(canonical_graph(g)); }

/// |Aut(G)| by plain backtracking over degree-preserving partial maps.
inline std::uint64_t automorphism_count(const Graph& g) {
  const int n = g.order();
  std::vector<int> image(n, -1);
  std::uint64_t count = 0;
  auto extend = [&](auto& self, int v, VertexSet used) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (int w : g.vertices() - used) {
      if (g.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(image[u], w);
      if (!ok) continue;
      image[v] = w;
      self(self, v + 1, used.with(w));
    }
  };
  extend(extend, 0, VertexSet{});
  return count;
}

}  // namespace kfree
