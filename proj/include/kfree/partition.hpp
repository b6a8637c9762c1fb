#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "kfree/error.hpp"
#include "kfree/graph.hpp"
#include "kfree/random.hpp"

namespace kfree {

/// Assignment of the vertices of a graph to parts 0..r-1 (parts may be
/// empty), together with its number of interior edges.
class RPartition {
 public:
  RPartition() = default;

  RPartition(const Graph& g, int r, std::vector<int> assignment)
      : r_(r), assignment_(std::move(assignment)) {
    if (r < 1) throw PreconditionError("partition needs at least one part");
    if (static_cast<int>(assignment_.size()) != g.order())
      throw PreconditionError("assignment length differs from vertex count");
    for (int p : assignment_)
      if (p < 0 || p >= r) throw PreconditionError("part index out of range");
    interior_ = 0;
    for (int p = 0; p < r_; ++p) interior_ += g.edges_within(part(p));
  }

  /// Parts given as vertex sets; every vertex must lie in exactly one.
  static RPartition from_parts(const Graph& g, const std::vector<VertexSet>& parts) {
    std::vector<int> assignment(g.order(), -1);
    for (int p = 0; p < static_cast<int>(parts.size()); ++p) {
      for (int v : parts[p]) {
        if (v >= g.order() || assignment[v] >= 0)
          throw PreconditionError("parts must be disjoint subsets of the vertex set");
        assignment[v] = p;
      }
    }
    if (std::find(assignment.begin(), assignment.end(), -1) != assignment.end())
      throw PreconditionError("parts do not cover every vertex");
    return RPartition(g, static_cast<int>(parts.size()), std::move(assignment));
  }

  int parts_count() const { return r_; }
  int order() const { return static_cast<int>(assignment_.size()); }
  const std::vector<int>& assignment() const { return assignment_; }
  int part_of(int v) const { return assignment_[v]; }
  int interior() const { return interior_; }

  VertexSet part(int p) const {
    VertexSet s;
    for (int v = 0; v < order(); ++v)
      if (assignment_[v] == p) s = s.with(v);
    return s;
  }

  std::vector<VertexSet> parts() const {
    std::vector<VertexSet> out(r_);
    for (int v = 0; v < order(); ++v) out[assignment_[v]] = out[assignment_[v]].with(v);
    return out;
  }

  /// Relabels parts in order of their smallest vertex; empty parts go last.
  RPartition normalized(const Graph& g) const {
    std::vector<int> relabel(r_, -1);
    int next = 0;
    std::vector<int> out(order());
    for (int v = 0; v < order(); ++v) {
      int& target = relabel[assignment_[v]];
      if (target < 0) target = next++;
      out[v] = target;
    }
    return RPartition(g, r_, std::move(out));
  }

  friend bool operator==(const RPartition& a, const RPartition& b) {
    return a.r_ == b.r_ && a.assignment_ == b.assignment_;
  }

 private:
  int r_ = 1;
  std::vector<int> assignment_;
  int interior_ = 0;
};

/// Number of edges with both ends in the same part.
inline int interior_edges(const Graph& g, const RPartition& p) {
  if (p.order() != g.order()) throw PreconditionError("partition does not match graph order");
  int total = 0;
  for (const VertexSet s : p.parts()) total += g.edges_within(s);
  return total;
}

struct DistanceResult {
  int distance = 0;
  RPartition witness;
};

enum class DistanceMethod { kAuto, kSubsetDp, kBranchAndBound };

struct DistanceOptions {
  DistanceMethod method = DistanceMethod::kAuto;
  /// Largest n the subset DP accepts (memory is r * 2^n * 2 bytes).
  int max_dp_order = 18;
};

inline constexpr int kHardDpLimit = 22;

/// Exact minimum-interior r-partition by dynamic programming over subsets:
///   f_1(S) = e(G[S]),  f_k(S) = min over T of f_{k-1}(S \ T) + e(G[T]).
/// T always contains min(S), so each set partition (with parts ordered by
/// smallest vertex) is generated exactly once. O(3^n) per level.
class SubsetDistanceSolver {
 public:
  SubsetDistanceSolver(const Graph& g, int r, int max_order = 18)
      : g_(g), n_(g.order()), r_(r) {
    if (r < 1) throw PreconditionError("r must be at least 1");
    if (n_ > std::min(max_order, kHardDpLimit))
      throw LimitError("exact distance: n = " + std::to_string(n_) + " exceeds the subset-DP limit " +
                       std::to_string(std::min(max_order, kHardDpLimit)));
    levels_ = std::min(r, std::max(n_, 1));
    const std::size_t size = std::size_t{1} << n_;
    f_.assign(static_cast<std::size_t>(levels_ - 1) + 1, {});
    auto& edges = f_[0];
    edges.assign(size, 0);
    for (std::size_t s = 1; s < size; ++s) {
      const int v = std::countr_zero(s);
      const std::size_t rest = s & (s - 1);
      edges[s] = static_cast<std::uint16_t>(edges[rest] + (g_.neighbors(v) & VertexSet(rest)).size());
    }
    for (int k = 2; k < levels_; ++k) {
      auto& cur = f_[k - 1];
      const auto& prev = f_[k - 2];
      cur.assign(size, 0);
      for (std::size_t s = 1; s < size; ++s) cur[s] = best_split(s, prev);
    }
    const std::size_t all = size - 1;
    distance_ = levels_ == 1 ? edges[all] : best_split(all, f_[levels_ - 2]);
  }

  int distance() const { return distance_; }

  /// e(G[S]) for any S (the DP's first level).
  int edges_within(std::uint64_t s) const { return f_[0][s]; }

  /// First optimal partition in enumeration order.
  RPartition witness() const {
    RPartition out;
    bool found = false;
    for_each_optimal([&](const RPartition& p) {
      out = p;
      found = true;
      return false;
    });
    if (!found) throw std::logic_error("subset DP: no optimal partition reconstructed");
    return out;
  }

  /// Calls fn on every optimal partition (parts ordered by smallest vertex,
  /// empty parts last) until fn returns false.
  void for_each_optimal(const std::function<bool(const RPartition&)>& fn) const {
    std::vector<int> assignment(n_, 0);
    bool go_on = true;
    auto rec = [&](auto& self, std::uint64_t s, int k, int target, int block) -> void {
      if (!go_on) return;
      if (s == 0) {
        if (target == 0) go_on = fn(RPartition(g_, r_, assignment));
        return;
      }
      if (k == 1) {
        if (f_[0][s] != target) return;
        for (int v : VertexSet(s)) assignment[v] = block;
        go_on = fn(RPartition(g_, r_, assignment));
        return;
      }
      const std::uint64_t low = s & (~s + 1);
      const std::uint64_t rest = s ^ low;
      const auto& prev = f_[k - 2];
      std::uint64_t sub = rest;
      while (true) {
        const std::uint64_t t = sub | low;
        const int cost = f_[0][t];
        if (cost <= target && prev[s ^ t] == target - cost) {
          for (int v : VertexSet(t)) assignment[v] = block;
          self(self, s ^ t, k - 1, target - cost, block + 1);
          if (!go_on) return;
        }
        if (sub == 0) break;
        sub = (sub - 1) & rest;
      }
    };
    rec(rec, VertexSet::full(n_).bits(), levels_, distance_, 0);
  }

 private:
  std::uint16_t best_split(std::uint64_t s, const std::vector<std::uint16_t>& prev) const {
    const std::uint64_t low = s & (~s + 1);
    const std::uint64_t rest = s ^ low;
    const auto& edges = f_[0];
    int best = std::numeric_limits<int>::max();
    std::uint64_t sub = rest;
    while (true) {
      const std::uint64_t t = sub | low;
      best = std::min(best, edges[t] + prev[s ^ t]);
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
    return static_cast<std::uint16_t>(best);
  }

  const Graph& g_;
  int n_;
  int r_;
  int levels_ = 1;
  int distance_ = 0;
  // f_[k-1][S] = f_k(S) for k < levels_; f_[0] is the induced edge table.
  std::vector<std::vector<std::uint16_t>> f_;
};

/// Backtracking r-colouring (2-colouring by propagation).
inline bool is_r_partite(const Graph& g, int r) {
  const int n = g.order();
  if (r < 1) return n == 0;
  if (r >= n) return true;
  if (r == 1) return g.edge_count() == 0;
  if (r == 2) {
    VertexSet side[2];
    VertexSet todo = g.vertices();
    while (!todo.empty()) {
      VertexSet frontier = VertexSet::singleton(todo.min());
      side[0] |= frontier;
      todo -= frontier;
      int colour = 0;
      while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= g.neighbors(v);
        if (next.intersects(side[colour])) return false;
        colour ^= 1;
        next &= todo;
        side[colour] |= next;
        todo -= next;
        frontier = next;
      }
    }
    for (int c = 0; c < 2; ++c)
      for (int v : side[c])
        if (g.neighbors(v).intersects(side[c])) return false;
    return true;
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<VertexSet> colour(r);
  auto place = [&](auto& self, int i, int used) -> bool {
    if (i == n) return true;
    const int v = order[i];
    for (int c = 0; c < std::min(used + 1, r); ++c) {
      if (g.neighbors(v).intersects(colour[c])) continue;
      colour[c] = colour[c].with(v);
      if (self(self, i + 1, std::max(used, c + 1))) return true;
      colour[c] = colour[c].without(v);
    }
    return false;
  };
  return place(place, 0, 0);
}

/// Vertex-by-vertex steepest-free descent: each vertex, in index order, moves
/// to the lowest-index part that strictly lowers its same-part degree. At a
/// local optimum every vertex has at most d(v)/r neighbours in its own part,
/// so the interior is at most e(G)/r.
inline RPartition local_search_partition(const Graph& g, int r, std::uint64_t seed) {
  if (r < 1) throw PreconditionError("r must be at least 1");
  const int n = g.order();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  CounterRng rng(seed);
  rng.shuffle(std::span<int>(order));
  std::vector<int> part(n);
  std::vector<VertexSet> members(r);
  for (int i = 0; i < n; ++i) {
    part[order[i]] = i % r;
    members[i % r] = members[i % r].with(order[i]);
  }
  bool moved = true;
  while (moved) {
    moved = false;
    for (int v = 0; v < n; ++v) {
      const int here = part[v];
      const int own = (g.neighbors(v) & members[here]).size();
      for (int p = 0; p < r; ++p) {
        if (p == here || (g.neighbors(v) & members[p]).size() >= own) continue;
        members[here] = members[here].without(v);
        members[p] = members[p].with(v);
        part[v] = p;
        moved = true;
        break;
      }
    }
  }
  return RPartition(g, r, std::move(part));
}

namespace detail {

// Depth-first assignment in decreasing-degree order with symmetric part
// breaking. Lower bound: current interior plus, for every unassigned vertex,
// its fewest neighbours among the assigned vertices of any single part.
inline DistanceResult branch_and_bound_distance(const Graph& g, int r) {
  const int n = g.order();
  RPartition incumbent = local_search_partition(g, r, 0);
  for (std::uint64_t seed = 1; seed < 8; ++seed) {
    RPartition p = local_search_partition(g, r, seed);
    if (p.interior() < incumbent.interior()) incumbent = std::move(p);
  }
  int best = incumbent.interior();
  std::vector<int> best_assignment = incumbent.assignment();
  if (best == 0) return {0, incumbent.normalized(g)};

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<VertexSet> members(r);
  std::vector<int> assignment(n, 0);
  VertexSet unassigned = g.vertices();

  auto bound = [&](int cost) {
    for (int u : unassigned) {
      int least = std::numeric_limits<int>::max();
      for (int p = 0; p < r && least > 0; ++p)
        least = std::min(least, (g.neighbors(u) & members[p]).size());
      cost += least;
      if (cost >= best) return cost;
    }
    return cost;
  };

  auto rec = [&](auto& self, int i, int used, int cost) -> void {
    if (cost >= best) return;
    if (i == n) {
      best = cost;
      best_assignment = assignment;
      return;
    }
    if (bound(cost) >= best) return;
    const int v = order[i];
    unassigned = unassigned.without(v);
    for (int p = 0; p < std::min(used + 1, r); ++p) {
      const int added = (g.neighbors(v) & members[p]).size();
      members[p] = members[p].with(v);
      assignment[v] = p;
      self(self, i + 1, std::max(used, p + 1), cost + added);
      members[p] = members[p].without(v);
      if (best == 0) break;
    }
    unassigned = unassigned.with(v);
  };
  rec(rec, 0, 0, 0);
  return {best, RPartition(g, r, best_assignment).normalized(g)};
}

}  // namespace detail

/// Minimum number of interior edges over all r-partitions, with a witness.
inline DistanceResult distance_to_r_partite(const Graph& g, int r, const DistanceOptions& opt = {}) {
  if (r < 1) throw PreconditionError("r must be at least 1");
  switch (opt.method) {
    case DistanceMethod::kBranchAndBound:
      return detail::branch_and_bound_distance(g, r);
    case DistanceMethod::kSubsetDp:
    case DistanceMethod::kAuto: {
      SubsetDistanceSolver solver(g, r, opt.max_dp_order);
      return {solver.distance(), solver.witness()};
    }
  }
  throw std::logic_error("unknown distance method");
}

/// Distance only, with fast exits for r = 1, r >= n and r-partite graphs.
inline int distance_value(const Graph& g, int r, int max_dp_order = 18) {
  if (r < 1) throw PreconditionError("r must be at least 1");
  if (r == 1) return g.edge_count();
  if (r >= g.order() || is_r_partite(g, r)) return 0;
  return SubsetDistanceSolver(g, r, max_dp_order).distance();
}

/// G is t-far from r-partite iff t <= distance.
inline bool is_t_far(const Graph& g, int r, int t, const DistanceOptions& opt = {}) {
  if (t <= 0) return true;
  if (opt.method == DistanceMethod::kBranchAndBound) return t <= distance_to_r_partite(g, r, opt).distance;
  return t <= distance_value(g, r, opt.max_dp_order);
}

/// Every optimal r-partition, up to relabelling of parts.
inline std::vector<RPartition> enumerate_optimal_partitions(const Graph& g, int r, int max_dp_order = 18) {
  SubsetDistanceSolver solver(g, r, max_dp_order);
  std::vector<RPartition> out;
  solver.for_each_optimal([&](const RPartition& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace kfree
