#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kfree/cliques.hpp"
#include "kfree/error.hpp"
#include "kfree/graph.hpp"
#include "kfree/partition.hpp"
#include "kfree/rational.hpp"

namespace kfree {

/// c(r) = 2 (r+1)^{r-1} r^{r-1} / r!, the constant the induction on r carries.
inline Rational c_const(int r) {
  if (r < 1) throw PreconditionError("c(r) needs r >= 1");
  return Rational(2 * power(r + 1, r - 1) * power(r, r - 1), factorial(r));
}

enum class BoundMode {
  kExact,   ///< n^{r-1} / c(r)
  kStated,  ///< n^{r-1} / (e^{2r} r!), e^{2r} replaced by a rational bracket end
};

struct BoundValue {
  Rational value;
  BoundMode mode = BoundMode::kExact;
};

/// e + t - (1 - 1/r) n^2 / 2.
inline Rational edge_surplus(int n, int r, std::int64_t e, std::int64_t t) {
  return Rational(e + t) - Rational(BigInt(r - 1) * n * n, 2 * r);
}

/// Lower bound on K_{r+1}(G) for an n-vertex graph with e edges that is
/// t-far from r-partite. In stated mode the bracket end of e^{2r} is chosen so
/// the returned value never exceeds the true stated bound.
inline BoundValue supersat_lower_bound(int n, int r, std::int64_t e, std::int64_t t,
                                       BoundMode mode = BoundMode::kExact) {
  if (r < 1) throw PreconditionError("supersaturation bound needs r >= 1");
  if (t < 1) throw PreconditionError("supersaturation bound needs t >= 1");
  const Rational surplus = edge_surplus(n, r, e, t);
  const Rational scale = Rational(power(n, r - 1));
  if (mode == BoundMode::kExact) return {scale * surplus / c_const(r), mode};
  const RationalInterval e2r = exp_bounds(2 * r);
  const Rational& denominator_e = surplus >= 0 ? e2r.upper : e2r.lower;
  return {scale * surplus / (denominator_e * Rational(factorial(r))), mode};
}

enum class Verdict {
  kInapplicable,   ///< t = 0: the graph is r-partite
  kHolds,          ///< positive bound met
  kHoldsBoundary,  ///< bound exactly 0
  kHoldsVacuous,   ///< bound negative
  kViolated,
};

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kInapplicable: return "inapplicable";
    case Verdict::kHolds: return "holds";
    case Verdict::kHoldsBoundary: return "holds_boundary";
    case Verdict::kHoldsVacuous: return "holds_vacuous";
    case Verdict::kViolated: return "violated";
  }
  return "?";
}

inline bool verdict_holds(Verdict v) {
  return v == Verdict::kHolds || v == Verdict::kHoldsBoundary || v == Verdict::kHoldsVacuous;
}

struct SupersatReport {
  int n = 0;
  int r = 0;
  int e = 0;
  int t = 0;
  CliqueCount cliques = 0;
  Rational bound;         // exact mode; 0 when inapplicable
  Rational stated_bound;  // stated mode; 0 when inapplicable
  Rational margin;        // cliques - bound
  Verdict verdict = Verdict::kInapplicable;

  int margin_sign() const { return sign_of(margin); }
};

inline Verdict classify_bound(const Rational& bound, const Rational& margin) {
  if (margin < 0) return Verdict::kViolated;
  if (bound > 0) return Verdict::kHolds;
  return bound == 0 ? Verdict::kHoldsBoundary : Verdict::kHoldsVacuous;
}

/// Checks K_{r+1}(G) against the exact-mode bound. t defaults to the full
/// distance to r-partiteness; an explicit t must not exceed it.
inline SupersatReport verify_supersaturation(const Graph& g, int r, std::optional<int> t = std::nullopt,
                                             int max_dp_order = 18) {
  SupersatReport rep;
  rep.n = g.order();
  rep.r = r;
  rep.e = g.edge_count();
  const int distance = distance_value(g, r, max_dp_order);
  if (t && (*t < 0 || *t > distance))
    throw PreconditionError("t = " + std::to_string(*t) + " is outside [0, distance = " +
                            std::to_string(distance) + "]");
  rep.t = t.value_or(distance);
  rep.cliques = count_cliques(g, r + 1);
  if (rep.t == 0) {
    rep.margin = Rational(to_bigint(rep.cliques));
    rep.verdict = Verdict::kInapplicable;
    return rep;
  }
  rep.bound = supersat_lower_bound(rep.n, r, rep.e, rep.t, BoundMode::kExact).value;
  rep.stated_bound = supersat_lower_bound(rep.n, r, rep.e, rep.t, BoundMode::kStated).value;
  rep.margin = Rational(to_bigint(rep.cliques)) - rep.bound;
  rep.verdict = classify_bound(rep.bound, rep.margin);
  return rep;
}

/// Precomputed exact bounds for one (n, r), indexed by (e, t); used by the
/// exhaustive drivers.
class BoundTable {
 public:
  BoundTable(int n, int r) : n_(n), r_(r), pairs_(pair_count(n)) {
    bounds_.reserve(static_cast<std::size_t>(pairs_ + 1) * (pairs_ + 1));
    for (int e = 0; e <= pairs_; ++e)
      for (int t = 0; t <= pairs_; ++t)
        bounds_.push_back(t == 0 ? Rational(0) : supersat_lower_bound(n, r, e, t).value);
  }

  const Rational& bound(int e, int t) const { return bounds_[static_cast<std::size_t>(e) * (pairs_ + 1) + t]; }

  Verdict check(int e, int t, CliqueCount cliques) const {
    if (t == 0) return Verdict::kInapplicable;
    const Rational& b = bound(e, t);
    if (b <= 0) return b == 0 ? Verdict::kHoldsBoundary : Verdict::kHoldsVacuous;
    return Rational(to_bigint(cliques)) >= b ? Verdict::kHolds : Verdict::kViolated;
  }

  int order() const { return n_; }
  int r() const { return r_; }

 private:
  int n_;
  int r_;
  int pairs_;
  std::vector<Rational> bounds_;
};

struct FarnessCheck {
  bool holds = true;
  /// First vertex where dist_{r-1}(G[N(v)]) < t - e(A_v), if any.
  std::optional<int> failing_vertex;
};

/// For every vertex v with B = N(v) and A = V \ B, checks that G[B] is
/// (t - e(G[A]))-far from (r-1)-partite.
inline FarnessCheck neighborhood_farness(const Graph& g, int r, int t, int max_dp_order = 18) {
  if (r < 2) throw PreconditionError("neighbourhood farness needs r >= 2");
  if (t < 0) throw PreconditionError("t must be nonnegative");
  if (t > distance_value(g, r, max_dp_order))
    throw PreconditionError("graph is not t-far from r-partite for t = " + std::to_string(t));
  const VertexSet all = g.vertices();
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet b = g.neighbors(v);
    const int needed = t - g.edges_within(all - b);
    if (needed <= 0) continue;
    if (distance_value(g.induced(b), r - 1, max_dp_order) < needed) return {false, v};
  }
  return {};
}

inline bool neighborhood_farness_check(const Graph& g, int r, int t) {
  return neighborhood_farness(g, r, t).holds;
}

}  // namespace kfree
