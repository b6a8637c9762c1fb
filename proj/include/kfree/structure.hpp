#pragma once

// Structural predicates on optimal partitions of K_{r+1}-free graphs: uniform
// density, internal sparsity, balance, bad sets and the Phi transformation.
// All predicates quantify over every optimal partition and take explicit
// thresholds; StructureThresholds::asymptotic(r) holds the asymptotic defaults,
// which are degenerate for small n.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kfree/cliques.hpp"
#include "kfree/error.hpp"
#include "kfree/graph.hpp"
#include "kfree/graph6.hpp"
#include "kfree/partition.hpp"
#include "kfree/random.hpp"
#include "kfree/rational.hpp"

namespace kfree {

struct StructureThresholds {
  Rational alpha = Rational(1, 32);
  Rational size_fraction = 1;
  Rational sparse_fraction = 1;
  Rational balance_fraction = 1;
  Rational closeness_exponent = 2;

  /// 1/32, 2^{-10r}, 2^{-5r}, 2^{-5r}, 2 - 1/r^2.
  static StructureThresholds asymptotic(int r) {
    if (r < 1) throw PreconditionError("thresholds need r >= 1");
    StructureThresholds th;
    th.alpha = Rational(1, 32);
    th.size_fraction = Rational(1, power(2, 10 * r));
    th.sparse_fraction = Rational(1, power(2, 5 * r));
    th.balance_fraction = Rational(1, power(2, 5 * r));
    th.closeness_exponent = 2 - Rational(1, r * r);
    return th;
  }

  /// Non-degenerate on small graphs: alpha 1/32, size floor 1 for n <= 64,
  /// no sparsity or balance restriction.
  static StructureThresholds relaxed() {
    StructureThresholds th;
    th.size_fraction = Rational(1, 64);
    return th;
  }

  void validate() const {
    auto in_unit = [](const Rational& q, bool allow_zero) { return (allow_zero ? q >= 0 : q > 0) && q <= 1; };
    if (!in_unit(alpha, false)) throw PreconditionError("alpha must lie in (0, 1]");
    if (!in_unit(size_fraction, false)) throw PreconditionError("size_fraction must lie in (0, 1]");
    if (!in_unit(sparse_fraction, true)) throw PreconditionError("sparse_fraction must lie in [0, 1]");
    if (!in_unit(balance_fraction, true)) throw PreconditionError("balance_fraction must lie in [0, 1]");
    if (closeness_exponent < 0) throw PreconditionError("closeness_exponent must be nonnegative");
  }

  /// Smallest admissible |A| = |B|: ceil(size_fraction * n), at least 1.
  int size_floor(int n) const {
    const Rational x = size_fraction * n;
    BigInt q = numerator_of(x) / denominator_of(x);
    if (Rational(q) < x) q += 1;
    return std::max(1, static_cast<int>(q));
  }
};

// ---------------------------------------------------------------------------
// Uniform density

enum class DensityStatus {
  kProved,      ///< exhaustive scan found no sparse pair
  kRefuted,     ///< witness found
  kNotRefuted,  ///< sampling found nothing; nothing proved
};

inline const char* density_status_name(DensityStatus s) {
  switch (s) {
    case DensityStatus::kProved: return "proved";
    case DensityStatus::kRefuted: return "refuted";
    case DensityStatus::kNotRefuted: return "not_refuted";
  }
  return "?";
}

struct DensityWitness {
  RPartition partition;
  int part_a = 0;
  int part_b = 0;
  VertexSet a;
  VertexSet b;
  int edges = 0;  ///< e(A, B) <= alpha |A| |B|
};

struct DensityResult {
  DensityStatus status = DensityStatus::kProved;
  std::optional<DensityWitness> witness;
  std::uint64_t work = 0;  ///< subset evaluations times |U_b|
};

struct DensityOptions {
  std::uint64_t budget = 100'000'000;
  bool allow_sampling = true;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0;
};

namespace detail {

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return c;
}

// floor(alpha * s^2) for s = 0..n, so e(A,B) > alpha s^2 <=> e > table[s].
inline std::vector<std::int64_t> density_thresholds(const Rational& alpha, int n) {
  std::vector<std::int64_t> out(n + 1);
  for (int s = 0; s <= n; ++s) {
    const Rational x = alpha * s * s;
    out[s] = static_cast<std::int64_t>(numerator_of(x) / denominator_of(x));
  }
  return out;
}

// Minimum of e(A, B) over B subset of `side` with |B| = |A|: the |A|
// vertices of `side` with fewest neighbours in A.
inline int sparsest_partner(const Graph& g, VertexSet a, VertexSet side, VertexSet* chosen) {
  std::array<std::pair<int, int>, kMaxVertices> deg;
  int k = 0;
  for (int v : side) deg[k++] = {(g.neighbors(v) & a).size(), v};
  const int s = a.size();
  std::partial_sort(deg.begin(), deg.begin() + s, deg.begin() + k);
  int total = 0;
  VertexSet b;
  for (int i = 0; i < s; ++i) {
    total += deg[i].first;
    b = b.with(deg[i].second);
  }
  if (chosen) *chosen = b;
  return total;
}

}  // namespace detail

/// Is e(A, B) > alpha |A||B| for every optimal r-partition, every pair of
/// distinct parts and all A, B inside them with |A| = |B| >= size floor?
/// For each A the worst B is found directly, so only one side is enumerated.
inline DensityResult is_uniformly_dense(const Graph& g, int r, const StructureThresholds& th,
                                        const DensityOptions& opt = {}) {
  th.validate();
  const int n = g.order();
  const int floor_size = th.size_floor(n);
  const auto cut = detail::density_thresholds(th.alpha, n);
  const auto partitions = enumerate_optimal_partitions(g, r);

  struct Job {
    const RPartition* partition;
    int pa, pb;
    VertexSet a_side, b_side;
  };
  std::vector<Job> jobs;
  std::uint64_t estimate = 0;
  for (const auto& p : partitions) {
    const auto parts = p.parts();
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) {
        Job job{&p, i, j, parts[i], parts[j]};
        if (job.a_side.size() > job.b_side.size()) {
          std::swap(job.pa, job.pb);
          std::swap(job.a_side, job.b_side);
        }
        const int top = job.a_side.size();
        if (top < floor_size) continue;
        for (int s = floor_size; s <= top; ++s)
          estimate += detail::binomial(top, s) * static_cast<std::uint64_t>(job.b_side.size());
        jobs.push_back(job);
      }
    }
  }

  DensityResult result;
  auto fail = [&](const Job& job, VertexSet a, VertexSet b, int edges) {
    result.status = DensityStatus::kRefuted;
    result.witness = DensityWitness{*job.partition, job.pa, job.pb, a, b, edges};
  };

  if (estimate <= opt.budget) {
    for (const Job& job : jobs) {
      const std::uint64_t side = job.a_side.bits();
      for (std::uint64_t sub = side;; sub = (sub - 1) & side) {
        const VertexSet a(sub);
        const int s = a.size();
        if (s >= floor_size) {
          result.work += static_cast<std::uint64_t>(job.b_side.size());
          VertexSet b;
          const int e = detail::sparsest_partner(g, a, job.b_side, &b);
          if (e <= cut[s]) {
            fail(job, a, b, e);
            return result;
          }
        }
        if (sub == 0) break;
      }
    }
    result.status = DensityStatus::kProved;
    return result;
  }

  if (!opt.allow_sampling)
    throw LimitError("uniform density: exhaustive scan needs " + std::to_string(estimate) +
                     " evaluations, budget is " + std::to_string(opt.budget));
  CounterRng rng(opt.seed);
  for (std::uint64_t k = 0; k < opt.samples && !jobs.empty(); ++k) {
    const Job& job = jobs[rng.below(jobs.size())];
    const int top = job.a_side.size();
    const int s = floor_size + static_cast<int>(rng.below(static_cast<std::uint64_t>(top - floor_size + 1)));
    std::vector<int> members(job.a_side.begin(), job.a_side.end());
    rng.shuffle(std::span<int>(members));
    VertexSet a;
    for (int i = 0; i < s; ++i) a = a.with(members[i]);
    result.work += static_cast<std::uint64_t>(job.b_side.size());
    VertexSet b;
    const int e = detail::sparsest_partner(g, a, job.b_side, &b);
    if (e <= cut[s]) {
      fail(job, a, b, e);
      return result;
    }
  }
  result.status = DensityStatus::kNotRefuted;
  return result;
}

// ---------------------------------------------------------------------------
// Internal sparsity and balance

struct SparseWitness {
  RPartition partition;
  int part = 0;
  int vertex = 0;
  int internal_degree = 0;
};

struct SparseResult {
  bool holds = true;
  std::optional<SparseWitness> witness;
};

/// Max degree inside every part of every optimal partition <= sparse_fraction * n.
inline SparseResult is_internally_sparse(const Graph& g, int r, const StructureThresholds& th) {
  th.validate();
  const Rational cap_q = th.sparse_fraction * g.order();
  const int cap = static_cast<int>(numerator_of(cap_q) / denominator_of(cap_q));
  for (const auto& p : enumerate_optimal_partitions(g, r)) {
    const auto parts = p.parts();
    for (int i = 0; i < r; ++i) {
      for (int v : parts[i]) {
        const int d = (g.neighbors(v) & parts[i]).size();
        if (d > cap) return {false, SparseWitness{p, i, v, d}};
      }
    }
  }
  return {};
}

struct BalanceWitness {
  RPartition partition;
  int part = 0;
  int size = 0;
};

struct BalanceResult {
  bool holds = true;
  std::optional<BalanceWitness> witness;
};

/// n/r - b n <= |U_i| <= n/r + b n for every part of every optimal partition.
inline BalanceResult is_balanced(const Graph& g, int r, const StructureThresholds& th) {
  th.validate();
  const int n = g.order();
  const Rational centre(n, r);
  const Rational slack = th.balance_fraction * n;
  for (const auto& p : enumerate_optimal_partitions(g, r)) {
    const auto parts = p.parts();
    for (int i = 0; i < r; ++i) {
      const Rational size = parts[i].size();
      if (size < centre - slack || size > centre + slack)
        return {false, BalanceWitness{p, i, parts[i].size()}};
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Bad sets and m(G)

namespace detail {

// Visits the size-k subsets of `pool` in lexicographic order; visit returns
// false to stop. `skip` is re-read at every level so callers may grow it.
inline bool for_each_subset_lex(VertexSet pool, int k, const VertexSet& skip,
                                const std::function<bool(VertexSet)>& visit) {
  std::vector<int> items(pool.begin(), pool.end());
  const int total = static_cast<int>(items.size());
  auto rec = [&](auto& self, int start, int left, VertexSet acc) -> bool {
    if (acc.intersects(skip)) return true;
    if (left == 0) return visit(acc);
    for (int i = start; i <= total - left; ++i) {
      if (skip.contains(items[i])) continue;
      if (!self(self, i + 1, left - 1, acc.with(items[i]))) return false;
      if (acc.intersects(skip)) return true;
    }
    return true;
  };
  return rec(rec, 0, k, VertexSet{});
}

inline bool is_bad_towards(const Graph& g, VertexSet set, VertexSet target) {
  VertexSet common = target;
  for (int v : set) {
    common &= g.neighbors(v);
    if (common.empty()) return true;
  }
  return common.empty();
}

}  // namespace detail

/// All r-subsets of V \ U_j with no common neighbour in U_j, in
/// lexicographic order (r = number of parts of p).
inline std::vector<VertexSet> bad_sets(const Graph& g, const RPartition& p, int j) {
  if (j < 0 || j >= p.parts_count()) throw PreconditionError("part index out of range");
  const VertexSet target = p.part(j);
  std::vector<VertexSet> out;
  const VertexSet none;
  detail::for_each_subset_lex(g.vertices() - target, p.parts_count(), none, [&](VertexSet s) {
    if (detail::is_bad_towards(g, s, target)) out.push_back(s);
    return true;
  });
  return out;
}

struct MData {
  int m = 0;
  int j = 0;     ///< smallest part index attaining m (0-based)
  VertexSet x;   ///< union of the chosen family for part j
  std::vector<std::vector<VertexSet>> families;  ///< greedy family per part

  int ell(int part) const { return static_cast<int>(families[part].size()); }
};

/// For every part j, the lexicographically greedy maximal family of disjoint
/// r-sets bad towards U_j; m = the largest family size, j its first part.
inline MData compute_m_data(const Graph& g, const RPartition& p) {
  const int r = p.parts_count();
  MData md;
  md.families.resize(r);
  for (int j = 0; j < r; ++j) {
    const VertexSet target = p.part(j);
    VertexSet used;
    detail::for_each_subset_lex(g.vertices() - target, r, used, [&](VertexSet s) {
      if (detail::is_bad_towards(g, s, target)) {
        md.families[j].push_back(s);
        used |= s;
      }
      return true;
    });
    // Maximality: no bad r-set survives among the unused vertices.
    const VertexSet none;
    detail::for_each_subset_lex(g.vertices() - target - used, r, none, [&](VertexSet s) {
      if (detail::is_bad_towards(g, s, target))
        throw std::logic_error("greedy bad-set family is not maximal");
      return true;
    });
    if (md.ell(j) > md.m) {
      md.m = md.ell(j);
      md.j = j;
    }
  }
  for (VertexSet s : md.families[md.j]) md.x |= s;
  return md;
}

struct MPositiveResult {
  bool holds = true;
  int partitions_checked = 0;
  std::optional<RPartition> counterexample;
};

namespace detail {
inline void require_free_non_partite(const Graph& g, int r) {
  if (r < 1) throw PreconditionError("r must be at least 1");
  if (!is_clique_free(g, r + 1)) throw PreconditionError("graph contains K_{r+1}");
  if (is_r_partite(g, r)) throw PreconditionError("graph is r-partite");
}
}  // namespace detail

/// m >= 1 for every optimal partition of a K_{r+1}-free, non-r-partite graph.
inline MPositiveResult check_m_positive_detailed(const Graph& g, int r) {
  detail::require_free_non_partite(g, r);
  MPositiveResult res;
  SubsetDistanceSolver solver(g, r);
  solver.for_each_optimal([&](const RPartition& p) {
    ++res.partitions_checked;
    if (compute_m_data(g, p).m < 1) {
      res.holds = false;
      res.counterexample = p;
      return false;
    }
    return true;
  });
  return res;
}

inline bool check_m_positive(const Graph& g, int r) { return check_m_positive_detailed(g, r).holds; }

// ---------------------------------------------------------------------------
// Phi

/// V \ (X u U_j): the vertices X may be re-joined to.
inline VertexSet phi_targets(const Graph& g, const RPartition& p, const MData& md) {
  return g.vertices() - md.x - p.part(md.j);
}

/// |X| * |V \ (X u U_j)|.
inline int phi_potential_edge_count(const Graph& g, const RPartition& p, const MData& md) {
  return md.x.size() * phi_targets(g, p, md).size();
}

/// Deletes every edge at X, then adds the chosen X-to-target edges. Bit k of
/// the choice is the k-th pair (x, u) in lexicographic order.
inline Graph phi_apply(const Graph& g, const RPartition& p, const MData& md, const std::vector<bool>& choice) {
  const VertexSet targets = phi_targets(g, p, md);
  if (static_cast<int>(choice.size()) != md.x.size() * targets.size())
    throw PreconditionError("edge choice length " + std::to_string(choice.size()) +
                            " differs from the potential edge count " +
                            std::to_string(md.x.size() * targets.size()));
  GraphBuilder b(g);
  b.isolate(md.x);
  std::size_t k = 0;
  for (int x : md.x)
    for (int u : targets)
      if (choice[k++]) b.add_edge(x, u);
  return b.build();
}

/// phi_apply with the choice packed into a word (potential <= 64).
inline Graph phi_apply(const Graph& g, const RPartition& p, const MData& md, std::uint64_t choice) {
  const VertexSet targets = phi_targets(g, p, md);
  if (md.x.size() * targets.size() > 64) throw PreconditionError("potential edge count exceeds 64");
  GraphBuilder b(g);
  b.isolate(md.x);
  int k = 0;
  for (int x : md.x)
    for (int u : targets)
      if ((choice >> k++) & 1U) b.add_edge(x, u);
  return b.build();
}

struct PhiImageReport {
  RPartition partition;
  MData mdata;
  int potential = 0;
  bool exhaustive = false;
  std::uint64_t images_checked = 0;
  std::uint64_t distinct_images = 0;  ///< counted when exhaustive
  bool all_free = true;
  std::optional<Graph> offending_image;
};

/// Builds Phi images of G for its canonical optimal partition and checks each
/// is K_{r+1}-free: all 2^potential images when potential <= exhaustive_limit,
/// otherwise `samples` random ones.
inline PhiImageReport phi_images(const Graph& g, int r, std::uint64_t samples, std::uint64_t seed,
                                 int exhaustive_limit = 20) {
  detail::require_free_non_partite(g, r);
  PhiImageReport rep;
  rep.partition = SubsetDistanceSolver(g, r).witness();
  rep.mdata = compute_m_data(g, rep.partition);
  rep.potential = phi_potential_edge_count(g, rep.partition, rep.mdata);
  auto check = [&](const Graph& h) {
    ++rep.images_checked;
    if (!is_clique_free(h, r + 1)) {
      rep.all_free = false;
      if (!rep.offending_image) rep.offending_image = h;
    }
  };
  if (rep.potential <= std::min(exhaustive_limit, 30)) {
    rep.exhaustive = true;
    const std::uint64_t total = std::uint64_t{1} << rep.potential;
    if (pair_count(g.order()) <= 64) {
      std::vector<std::uint64_t> seen;
      seen.reserve(total);
      for (std::uint64_t c = 0; c < total; ++c) {
        const Graph h = phi_apply(g, rep.partition, rep.mdata, c);
        check(h);
        seen.push_back(h.to_mask());
      }
      std::sort(seen.begin(), seen.end());
      rep.distinct_images = static_cast<std::uint64_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
    } else {
      std::set<std::string> seen;
      for (std::uint64_t c = 0; c < total; ++c) {
        const Graph h = phi_apply(g, rep.partition, rep.mdata, c);
        check(h);
        seen.insert(emit_graph6(h));
      }
      rep.distinct_images = seen.size();
    }
    return rep;
  }
  CounterRng rng(seed);
  std::vector<bool> choice(static_cast<std::size_t>(rep.potential));
  for (std::uint64_t k = 0; k < samples; ++k) {
    for (std::size_t i = 0; i < choice.size(); ++i) choice[i] = rng.next() & 1U;
    check(phi_apply(g, rep.partition, rep.mdata, choice));
  }
  return rep;
}

inline bool phi_image_is_free(const Graph& g, int r, std::uint64_t samples, std::uint64_t seed) {
  return phi_images(g, r, samples, seed).all_free;
}

// ---------------------------------------------------------------------------
// Membership in Q(n, r)

struct QFlags {
  bool clique_free = false;
  bool r_partite = false;
  bool close = false;
  DensityStatus uniformly_dense = DensityStatus::kNotRefuted;
  bool internally_sparse = false;
  bool balanced = false;
  int distance = 0;

  /// Every condition established (uniform density proved, not just unrefuted).
  bool in_q() const {
    return clique_free && !r_partite && close && uniformly_dense == DensityStatus::kProved &&
           internally_sparse && balanced;
  }
  /// All decided conditions pass but uniform density was only sampled.
  bool undecided() const {
    return clique_free && !r_partite && close && uniformly_dense == DensityStatus::kNotRefuted &&
           internally_sparse && balanced;
  }
};

/// distance <= n^{closeness_exponent}, compared exactly as d^q <= n^p.
inline bool is_close(int n, int distance, const Rational& exponent) {
  const BigInt p = numerator_of(exponent);
  const BigInt q = denominator_of(exponent);
  const auto pu = static_cast<unsigned>(p);
  const auto qu = static_cast<unsigned>(q);
  return boost::multiprecision::pow(BigInt(distance), qu) <= boost::multiprecision::pow(BigInt(n), pu);
}

inline QFlags classify_q_membership(const Graph& g, int r, const StructureThresholds& th,
                                    const DensityOptions& opt = {}) {
  th.validate();
  QFlags f;
  f.clique_free = is_clique_free(g, r + 1);
  f.distance = distance_value(g, r);
  f.r_partite = f.distance == 0;
  f.close = is_close(g.order(), f.distance, th.closeness_exponent);
  f.uniformly_dense = is_uniformly_dense(g, r, th, opt).status;
  f.internally_sparse = is_internally_sparse(g, r, th).holds;
  f.balanced = is_balanced(g, r, th).holds;
  return f;
}

}  // namespace kfree
