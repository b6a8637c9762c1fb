#pragma once

// Exhaustive enumeration of labelled graphs. A graph on n vertices is the
// upper-triangle bitmask of Graph::to_mask; the last vertex's column occupies
// the top n-1 bits, so a shard (a range of last-column values) is a
// contiguous mask range. K_{r+1}-free graphs on the first n-1 vertices are
// generated once, vertex by vertex (the property is hereditary), and every
// shard extends them by the last vertex.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "kfree/canonical.hpp"
#include "kfree/cliques.hpp"
#include "kfree/error.hpp"
#include "kfree/generators.hpp"
#include "kfree/graph.hpp"
#include "kfree/graph6.hpp"
#include "kfree/parallel.hpp"
#include "kfree/partition.hpp"
#include "kfree/structure.hpp"
#include "kfree/supersat.hpp"

namespace kfree {

inline constexpr int kMaxLabeledCensusOrder = 8;
inline constexpr int kMaxUnlabeledCensusOrder = 10;

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Commutative-monoid totals for a set of graphs.
struct CensusAggregate {
  std::uint64_t total = 0;
  std::uint64_t free = 0;
  std::uint64_t r_partite = 0;
  std::uint64_t free_unlabeled = 0;
  std::uint64_t r_partite_unlabeled = 0;
  std::map<int, std::uint64_t> histogram;  // distance -> free graphs
  std::uint64_t supersat_violations = 0;
  std::uint64_t m_zero_violations = 0;
  std::vector<std::string> violations;  // graph6, sorted after merge

  void merge(const CensusAggregate& o) {
    total += o.total;
    free += o.free;
    r_partite += o.r_partite;
    free_unlabeled += o.free_unlabeled;
    r_partite_unlabeled += o.r_partite_unlabeled;
    for (auto [d, c] : o.histogram) histogram[d] += c;
    supersat_violations += o.supersat_violations;
    m_zero_violations += o.m_zero_violations;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    std::sort(violations.begin(), violations.end());
  }

  friend bool operator==(const CensusAggregate&, const CensusAggregate&) = default;
};

struct ShardRange {
  std::uint64_t begin = 0;  ///< first mask
  std::uint64_t end = 0;    ///< one past the last mask
};

struct CensusOptions {
  int shards = 64;
  int jobs = default_jobs();
  /// Exact distance histogram, supersaturation and m >= 1 checks per free graph.
  bool deep = false;
  /// Canonical representatives weighted by n!/|Aut| (required for n = 9, 10).
  bool unlabeled = false;
  std::string checkpoint_path;
  /// Stop after this many newly finished shards (simulates an interrupted run).
  std::optional<int> stop_after_shards;
};

struct CensusRecord {
  int n = 0;
  int r = 0;
  bool unlabeled = false;
  bool deep = false;
  CensusAggregate totals;
  std::int64_t turan_edges = 0;
  // Run metadata, excluded from the deterministic payload.
  std::vector<ShardRange> shards;
  int shards_completed = 0;
  bool complete = false;
  double runtime_seconds = 0;

  double ratio() const {
    return totals.free == 0 ? 0.0 : static_cast<double>(totals.r_partite) / static_cast<double>(totals.free);
  }
  double log2_free() const { return std::log2(static_cast<double>(totals.free)); }
};

namespace detail {

// Graph on at most 8 vertices: packed mask and one byte per adjacency row.
struct SmallGraph {
  std::uint64_t mask = 0;
  std::array<std::uint8_t, 8> rows{};
};

inline bool small_has_clique(const std::array<std::uint8_t, 8>& rows, unsigned cand, int size) {
  if (size <= 0) return true;
  if (std::popcount(cand) < size) return false;
  if (size == 1) return true;
  while (std::popcount(cand) >= size) {
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    const unsigned next = cand & rows[v];
    if (size == 2) {
      if (next) return true;
    } else if (small_has_clique(rows, next, size - 1)) {
      return true;
    }
  }
  return false;
}

/// All K_{r+1}-free labelled graphs on k <= 8 vertices.
inline std::vector<SmallGraph> free_graphs_small(int k, int r) {
  std::vector<SmallGraph> level(1);
  for (int v = 0; v < k; ++v) {
    std::vector<SmallGraph> next;
    const int offset = pair_count(v);
    for (const SmallGraph& g : level) {
      for (unsigned col = 0; col < (1U << v); ++col) {
        if (small_has_clique(g.rows, col, r)) continue;
        SmallGraph h = g;
        h.mask |= static_cast<std::uint64_t>(col) << offset;
        h.rows[v] = static_cast<std::uint8_t>(col);
        for (unsigned rest = col; rest; rest &= rest - 1)
          h.rows[std::countr_zero(rest)] |= static_cast<std::uint8_t>(1U << v);
        next.push_back(h);
      }
    }
    level = std::move(next);
  }
  return level;
}

inline std::uint64_t total_graphs(int n) { return std::uint64_t{1} << pair_count(n); }

// Per-free-graph classification shared by labelled and unlabelled modes.
inline void classify_free_graph(const Graph& g, int r, bool deep, const BoundTable* bounds,
                                std::uint64_t weight, CensusAggregate& agg) {
  agg.free += weight;
  const bool partite = is_r_partite(g, r);
  if (partite) agg.r_partite += weight;
  if (!deep) return;
  const int d = partite ? 0 : SubsetDistanceSolver(g, r).distance();
  agg.histogram[d] += weight;
  if (d == 0) return;
  bool bad = false;
  if (bounds->check(g.edge_count(), d, 0) == Verdict::kViolated) {
    agg.supersat_violations += weight;
    bad = true;
  }
  if (!check_m_positive_detailed(g, r).holds) {
    agg.m_zero_violations += weight;
    bad = true;
  }
  if (bad) agg.violations.push_back(emit_graph6(g));
}

inline void append_u32(std::string& out, std::uint32_t x) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}
inline void append_u64(std::string& out, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

class ByteReader {
 public:
  explicit ByteReader(std::string_view data) : data_(data) {}
  std::uint32_t u32() { return static_cast<std::uint32_t>(take(4)); }
  std::uint64_t u64() { return take(8); }
  std::string bytes(std::size_t len) {
    need(len);
    std::string s(data_.substr(pos_, len));
    pos_ += len;
    return s;
  }
  std::size_t position() const { return pos_; }

 private:
  void need(std::size_t len) const {
    if (pos_ + len > data_.size()) throw CheckpointError("checkpoint truncated");
  }
  std::uint64_t take(int width) {
    need(static_cast<std::size_t>(width));
    std::uint64_t x = 0;
    for (int i = 0; i < width; ++i)
      x |= static_cast<std::uint64_t>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
    pos_ += static_cast<std::size_t>(width);
    return x;
  }
  std::string_view data_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Census checkpoint file. All integers little-endian:
///
///   magic        8 bytes  "KFCKPT01"
///   version      u32      1
///   n, r         u32, u32
///   flags        u32      bit 0: deep
///   shard_count  u32
///   done_count   u32
///   done_count times:
///     shard      u32
///     begin, end u64, u64      mask range
///     total, free, r_partite, supersat_violations, m_zero_violations  u64 x5
///     hist_len   u32, then hist_len x (distance u32, count u64)
///     viol_len   u32, then viol_len x (length u32, graph6 bytes)
///   hash         u64      FNV-1a 64 of every preceding byte
struct Checkpoint {
  static constexpr char kMagic[8] = {'K', 'F', 'C', 'K', 'P', 'T', '0', '1'};
  static constexpr std::uint32_t kVersion = 1;

  int n = 0;
  int r = 0;
  bool deep = false;
  int shard_count = 0;
  std::map<int, std::pair<ShardRange, CensusAggregate>> done;

  std::string serialize() const {
    std::string out(kMagic, 8);
    detail::append_u32(out, kVersion);
    detail::append_u32(out, static_cast<std::uint32_t>(n));
    detail::append_u32(out, static_cast<std::uint32_t>(r));
    detail::append_u32(out, deep ? 1U : 0U);
    detail::append_u32(out, static_cast<std::uint32_t>(shard_count));
    detail::append_u32(out, static_cast<std::uint32_t>(done.size()));
    for (const auto& [shard, entry] : done) {
      const auto& [range, agg] = entry;
      detail::append_u32(out, static_cast<std::uint32_t>(shard));
      detail::append_u64(out, range.begin);
      detail::append_u64(out, range.end);
      for (std::uint64_t x : {agg.total, agg.free, agg.r_partite, agg.supersat_violations, agg.m_zero_violations})
        detail::append_u64(out, x);
      detail::append_u32(out, static_cast<std::uint32_t>(agg.histogram.size()));
      for (auto [d, c] : agg.histogram) {
        detail::append_u32(out, static_cast<std::uint32_t>(d));
        detail::append_u64(out, c);
      }
      detail::append_u32(out, static_cast<std::uint32_t>(agg.violations.size()));
      for (const auto& s : agg.violations) {
        detail::append_u32(out, static_cast<std::uint32_t>(s.size()));
        out += s;
      }
    }
    detail::append_u64(out, detail::fnv1a64(out));
    return out;
  }

  static Checkpoint deserialize(std::string_view data) {
    if (data.size() < 8 + 8 || std::memcmp(data.data(), kMagic, 8) != 0)
      throw CheckpointError("not a census checkpoint (bad magic)");
    const std::string_view body = data.substr(0, data.size() - 8);
    detail::ByteReader tail(data.substr(data.size() - 8));
    if (tail.u64() != detail::fnv1a64(body)) throw CheckpointError("checkpoint hash mismatch");
    detail::ByteReader in(body.substr(8));
    Checkpoint c;
    if (in.u32() != kVersion) throw CheckpointError("unsupported checkpoint version");
    c.n = static_cast<int>(in.u32());
    c.r = static_cast<int>(in.u32());
    c.deep = (in.u32() & 1U) != 0;
    c.shard_count = static_cast<int>(in.u32());
    const std::uint32_t count = in.u32();
    for (std::uint32_t k = 0; k < count; ++k) {
      const int shard = static_cast<int>(in.u32());
      ShardRange range{in.u64(), in.u64()};
      CensusAggregate agg;
      agg.total = in.u64();
      agg.free = in.u64();
      agg.r_partite = in.u64();
      agg.supersat_violations = in.u64();
      agg.m_zero_violations = in.u64();
      const std::uint32_t hist = in.u32();
      for (std::uint32_t h = 0; h < hist; ++h) {
        const int d = static_cast<int>(in.u32());
        agg.histogram[d] = in.u64();
      }
      const std::uint32_t viol = in.u32();
      for (std::uint32_t v = 0; v < viol; ++v) agg.violations.push_back(in.bytes(in.u32()));
      if (shard < 0 || shard >= c.shard_count) throw CheckpointError("checkpoint shard index out of range");
      c.done[shard] = {range, std::move(agg)};
    }
    if (in.position() != body.size() - 8) throw CheckpointError("trailing bytes in checkpoint");
    return c;
  }

  void save(const std::string& path) const {
    const std::string tmp = path + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw CheckpointError("cannot write checkpoint " + tmp);
      const std::string bytes = serialize();
      out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
      if (!out) throw CheckpointError("short write to checkpoint " + tmp);
    }
    std::filesystem::rename(tmp, path);
  }

  static std::optional<Checkpoint> load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return deserialize(bytes);
  }
};

/// Canonical masks of the isomorphism classes of K_{r+1}-free graphs on n
/// vertices (every graph when r >= n), sorted. Grown one vertex at a time:
/// each class on k+1 vertices deletes a vertex to a class on k vertices.
inline std::vector<std::uint64_t> free_graph_classes(int n, int r, int jobs = default_jobs()) {
  if (n < 1 || n > kMaxUnlabeledCensusOrder)
    throw LimitError("unlabelled enumeration supports 1 <= n <= 10");
  std::vector<std::uint64_t> reps = {0};  // the single graph on one vertex
  for (int k = 1; k < n; ++k) {
    const int offset = pair_count(k);
    std::vector<std::vector<std::uint64_t>> found(static_cast<std::size_t>(std::max(1, jobs)));
    parallel_for(reps.size(), jobs, [&](int w, std::uint64_t i) {
      const Graph g = Graph::from_mask(k, reps[i]);
      for (std::uint64_t col = 0; col < (std::uint64_t{1} << k); ++col) {
        if (has_clique_within(g, VertexSet(col), r)) continue;
        const Graph h = Graph::from_mask(k + 1, reps[i] | (col << offset));
        found[static_cast<std::size_t>(w)].push_back(canonical_graph(h).to_mask());
      }
    });
    std::vector<std::uint64_t> next;
    for (auto& f : found) next.insert(next.end(), f.begin(), f.end());
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    reps = std::move(next);
  }
  return reps;
}

namespace detail {

inline CensusRecord run_unlabeled_census(int n, int r, const CensusOptions& opt) {
  const auto reps = free_graph_classes(n, r, opt.jobs);
  const std::uint64_t n_factorial = static_cast<std::uint64_t>(factorial(n));
  const BoundTable bounds(n, r);
  std::vector<CensusAggregate> parts(static_cast<std::size_t>(std::max(1, opt.jobs)));
  parallel_for(reps.size(), opt.jobs, [&](int w, std::uint64_t i) {
    const Graph g = Graph::from_mask(n, reps[i]);
    const std::uint64_t weight = n_factorial / canonical_labeling(g).automorphisms;
    auto& agg = parts[static_cast<std::size_t>(w)];
    const std::uint64_t partite_before = agg.r_partite;
    classify_free_graph(g, r, opt.deep, &bounds, weight, agg);
    agg.free_unlabeled += 1;
    if (agg.r_partite != partite_before) agg.r_partite_unlabeled += 1;
  });
  CensusRecord rec;
  rec.n = n;
  rec.r = r;
  rec.unlabeled = true;
  rec.deep = opt.deep;
  for (const auto& p : parts) rec.totals.merge(p);
  rec.totals.total = total_graphs(n);
  rec.shards = {ShardRange{0, total_graphs(n)}};
  rec.shards_completed = 1;
  rec.complete = true;
  return rec;
}

}  // namespace detail

/// Counts the K_{r+1}-free and r-partite graphs on n vertices.
inline CensusRecord run_census(int n, int r, const CensusOptions& opt = {}) {
  if (r < 1) throw PreconditionError("census needs r >= 1");
  const auto started = std::chrono::steady_clock::now();
  auto finish = [&](CensusRecord rec) {
    rec.turan_edges = turan_edges(n, std::min(r, n));
    rec.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return rec;
  };
  if (opt.unlabeled) return finish(detail::run_unlabeled_census(n, r, opt));
  if (n < 1 || n > kMaxLabeledCensusOrder)
    throw LimitError("labelled census supports 1 <= n <= 8; use unlabelled mode for n = 9, 10");

  const int top_width = n - 1;
  const std::uint64_t top_values = std::uint64_t{1} << top_width;
  const int offset = pair_count(n - 1);
  const std::uint64_t shard_count = std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(1, opt.shards)), 1, top_values);
  const RangeSplit split{top_values, shard_count};

  Checkpoint ckpt;
  ckpt.n = n;
  ckpt.r = r;
  ckpt.deep = opt.deep;
  ckpt.shard_count = static_cast<int>(shard_count);
  if (!opt.checkpoint_path.empty()) {
    if (auto loaded = Checkpoint::load(opt.checkpoint_path)) {
      if (loaded->n != n || loaded->r != r || loaded->deep != opt.deep ||
          loaded->shard_count != static_cast<int>(shard_count))
        throw CheckpointError("checkpoint was written for a different census configuration");
      ckpt = std::move(*loaded);
    }
  }

  std::vector<std::uint64_t> pending;
  for (std::uint64_t s = 0; s < shard_count; ++s)
    if (!ckpt.done.count(static_cast<int>(s))) pending.push_back(s);
  if (opt.stop_after_shards && static_cast<std::size_t>(*opt.stop_after_shards) < pending.size())
    pending.resize(static_cast<std::size_t>(std::max(0, *opt.stop_after_shards)));

  const auto base = detail::free_graphs_small(n - 1, r);
  const BoundTable bounds(n, r);
  std::mutex ckpt_mutex;

  parallel_for(pending.size(), opt.jobs, [&](int, std::uint64_t i) {
    const std::uint64_t shard = pending[i];
    const std::uint64_t lo = split.begin(shard), hi = split.end(shard);
    CensusAggregate agg;
    agg.total = (hi - lo) << offset;
    for (std::uint64_t col = lo; col < hi; ++col) {
      for (const auto& g : base) {
        if (detail::small_has_clique(g.rows, static_cast<unsigned>(col), r)) continue;
        const Graph full = Graph::from_mask(n, g.mask | (col << offset));
        detail::classify_free_graph(full, r, opt.deep, &bounds, 1, agg);
      }
    }
    std::sort(agg.violations.begin(), agg.violations.end());
    std::lock_guard lock(ckpt_mutex);
    ckpt.done[static_cast<int>(shard)] = {ShardRange{lo << offset, hi << offset}, std::move(agg)};
    if (!opt.checkpoint_path.empty()) ckpt.save(opt.checkpoint_path);
  });

  CensusRecord rec;
  rec.n = n;
  rec.r = r;
  rec.deep = opt.deep;
  for (const auto& [shard, entry] : ckpt.done) {
    rec.shards.push_back(entry.first);
    rec.totals.merge(entry.second);
  }
  rec.shards_completed = static_cast<int>(ckpt.done.size());
  rec.complete = rec.shards_completed == static_cast<int>(shard_count);
  return finish(std::move(rec));
}

// ---------------------------------------------------------------------------
// Exhaustive verification drivers over all labelled graphs on n vertices.

inline constexpr int kMaxExhaustiveOrder = 8;

namespace detail {

/// visit(state, graph) for every labelled graph on n vertices; one state per
/// worker, returned for merging.
template <class State, class Visit>
std::vector<State> scan_all_graphs(int n, int jobs, Visit&& visit) {
  if (n < 1 || n > kMaxExhaustiveOrder) throw LimitError("exhaustive scans support 1 <= n <= 8");
  jobs = std::max(1, jobs);
  const std::uint64_t total = total_graphs(n);
  const std::uint64_t chunks = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(jobs) * 64);
  const RangeSplit split{total, chunks};
  std::vector<State> states(static_cast<std::size_t>(jobs));
  parallel_for(chunks, jobs, [&](int w, std::uint64_t c) {
    for (std::uint64_t mask = split.begin(c); mask < split.end(c); ++mask)
      visit(states[static_cast<std::size_t>(w)], Graph::from_mask(n, mask));
  });
  return states;
}

inline void sort_unique(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace detail

struct SupersatSweepReport {
  int n = 0, r = 0;
  std::uint64_t graphs = 0;
  std::uint64_t applicable = 0;  ///< distance >= 1
  std::uint64_t holds = 0, boundary = 0, vacuous = 0;
  std::vector<std::string> violations;
  double runtime_seconds = 0;
};

/// Checks K_{r+1}(G) >= n^{r-1}/c(r) (e + t - (1-1/r) n^2/2) with t the exact
/// distance, for every labelled graph on n vertices (free or not). The bound
/// grows with t, so t = distance is the strongest instance.
inline SupersatSweepReport verify_exhaustive_supersat(int n, int r, int jobs = default_jobs()) {
  const auto started = std::chrono::steady_clock::now();
  const BoundTable bounds(n, r);
  auto states = detail::scan_all_graphs<SupersatSweepReport>(n, jobs, [&](SupersatSweepReport& s, const Graph& g) {
    ++s.graphs;
    const int d = distance_value(g, r);
    if (d == 0) return;
    ++s.applicable;
    switch (bounds.check(g.edge_count(), d, count_cliques(g, r + 1))) {
      case Verdict::kHolds: ++s.holds; break;
      case Verdict::kHoldsBoundary: ++s.boundary; break;
      case Verdict::kHoldsVacuous: ++s.vacuous; break;
      case Verdict::kViolated: s.violations.push_back(emit_graph6(g)); break;
      case Verdict::kInapplicable: break;
    }
  });
  SupersatSweepReport rep;
  rep.n = n;
  rep.r = r;
  for (auto& s : states) {
    rep.graphs += s.graphs;
    rep.applicable += s.applicable;
    rep.holds += s.holds;
    rep.boundary += s.boundary;
    rep.vacuous += s.vacuous;
    rep.violations.insert(rep.violations.end(), s.violations.begin(), s.violations.end());
  }
  detail::sort_unique(rep.violations);
  rep.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return rep;
}

struct LemmaMReport {
  int n = 0, r = 0;
  std::uint64_t class_size = 0;  ///< K_{r+1}-free, not r-partite
  std::uint64_t partitions_checked = 0;
  std::vector<std::string> violations;
};

/// m >= 1 for every optimal partition of every K_{r+1}-free, non-r-partite
/// labelled graph on n vertices.
inline LemmaMReport verify_lemma_m_positive(int n, int r, int jobs = default_jobs()) {
  auto states = detail::scan_all_graphs<LemmaMReport>(n, jobs, [&](LemmaMReport& s, const Graph& g) {
    if (!is_clique_free(g, r + 1) || is_r_partite(g, r)) return;
    ++s.class_size;
    const auto res = check_m_positive_detailed(g, r);
    s.partitions_checked += static_cast<std::uint64_t>(res.partitions_checked);
    if (!res.holds) s.violations.push_back(emit_graph6(g));
  });
  LemmaMReport rep;
  rep.n = n;
  rep.r = r;
  for (auto& s : states) {
    rep.class_size += s.class_size;
    rep.partitions_checked += s.partitions_checked;
    rep.violations.insert(rep.violations.end(), s.violations.begin(), s.violations.end());
  }
  detail::sort_unique(rep.violations);
  return rep;
}

struct PhiSweepReport {
  int n = 0, r = 0;
  int max_potential = 16;
  std::uint64_t class_size = 0;
  std::uint64_t exhaustive_graphs = 0;
  std::uint64_t skipped = 0;  ///< potential above the limit
  std::uint64_t images = 0;
  int largest_potential = 0;
  std::vector<std::string> free_violations;         ///< some image has a K_{r+1}
  std::vector<std::string> cardinality_violations;  ///< distinct images != 2^potential
};

/// Enumerates every Phi image of every K_{r+1}-free, non-r-partite labelled
/// graph on n vertices whose potential edge count is at most max_potential.
inline PhiSweepReport verify_phi_images(int n, int r, int max_potential = 16, int jobs = default_jobs()) {
  auto states = detail::scan_all_graphs<PhiSweepReport>(n, jobs, [&](PhiSweepReport& s, const Graph& g) {
    if (!is_clique_free(g, r + 1) || is_r_partite(g, r)) return;
    ++s.class_size;
    const auto rep = phi_images(g, r, 0, 0, max_potential);
    s.largest_potential = std::max(s.largest_potential, rep.potential);
    if (!rep.exhaustive) {
      ++s.skipped;
      return;
    }
    ++s.exhaustive_graphs;
    s.images += rep.images_checked;
    if (!rep.all_free) s.free_violations.push_back(emit_graph6(g));
    if (rep.distinct_images != (std::uint64_t{1} << rep.potential)) s.cardinality_violations.push_back(emit_graph6(g));
  });
  PhiSweepReport rep;
  rep.n = n;
  rep.r = r;
  rep.max_potential = max_potential;
  for (auto& s : states) {
    rep.class_size += s.class_size;
    rep.exhaustive_graphs += s.exhaustive_graphs;
    rep.skipped += s.skipped;
    rep.images += s.images;
    rep.largest_potential = std::max(rep.largest_potential, s.largest_potential);
    rep.free_violations.insert(rep.free_violations.end(), s.free_violations.begin(), s.free_violations.end());
    rep.cardinality_violations.insert(rep.cardinality_violations.end(), s.cardinality_violations.begin(),
                                      s.cardinality_violations.end());
  }
  detail::sort_unique(rep.free_violations);
  detail::sort_unique(rep.cardinality_violations);
  return rep;
}

struct FarnessSweepReport {
  int n = 0, r = 0;
  std::uint64_t far_graphs = 0;  ///< distance >= 1
  std::uint64_t vertex_checks = 0;
  std::vector<std::string> violations;
};

/// Neighbourhood farness inheritance with t = distance, for every labelled
/// graph on n vertices. The inequality weakens as t decreases, so this covers
/// every t-far instance.
inline FarnessSweepReport verify_neighborhood_farness(int n, int r, int jobs = default_jobs()) {
  if (r < 2) throw PreconditionError("neighbourhood farness needs r >= 2");
  auto states = detail::scan_all_graphs<FarnessSweepReport>(n, jobs, [&](FarnessSweepReport& s, const Graph& g) {
    const int t = distance_value(g, r);
    if (t == 0) return;
    ++s.far_graphs;
    const VertexSet all = g.vertices();
    for (int v = 0; v < g.order(); ++v) {
      ++s.vertex_checks;
      const VertexSet b = g.neighbors(v);
      const int needed = t - g.edges_within(all - b);
      if (needed > 0 && distance_value(g.induced(b), r - 1) < needed) {
        s.violations.push_back(emit_graph6(g));
        return;
      }
    }
  });
  FarnessSweepReport rep;
  rep.n = n;
  rep.r = r;
  for (auto& s : states) {
    rep.far_graphs += s.far_graphs;
    rep.vertex_checks += s.vertex_checks;
    rep.violations.insert(rep.violations.end(), s.violations.begin(), s.violations.end());
  }
  detail::sort_unique(rep.violations);
  return rep;
}

struct SharpnessRow {
  int r = 0, k = 0, n = 0, t = 0;
  int distance = 0;
  CliqueCount cliques = 0;
  CliqueCount expected_cliques = 0;  ///< t * k^{r-1}
  Rational bound;
  Rational ratio;  ///< cliques / bound
  bool in_envelope = false;  ///< 1 <= ratio <= c(r)
};

/// T_r(rk) plus a t-matching in one part, for every k <= k_max with rk <= 12
/// and 1 <= t <= k/2.
inline std::vector<SharpnessRow> sharpness_sweep(int r, int k_max) {
  if (r < 2 || r > 3) throw PreconditionError("sharpness sweep supports r in {2, 3}");
  const Rational c = c_const(r);
  std::vector<SharpnessRow> rows;
  for (int k = 1; k <= k_max && r * k <= 12; ++k) {
    for (int t = 1; 2 * t <= k; ++t) {
      SharpnessRow row;
      row.r = r;
      row.k = k;
      row.n = r * k;
      row.t = t;
      const Graph g = turan_plus_matching(row.n, r, t);
      row.distance = SubsetDistanceSolver(g, r).distance();
      row.cliques = count_cliques(g, r + 1);
      CliqueCount expected = static_cast<CliqueCount>(t);
      for (int i = 0; i < r - 1; ++i) expected *= static_cast<CliqueCount>(k);
      row.expected_cliques = expected;
      row.bound = supersat_lower_bound(row.n, r, g.edge_count(), row.distance).value;
      row.ratio = row.bound > 0 ? Rational(to_bigint(row.cliques)) / row.bound : Rational(0);
      row.in_envelope = row.bound > 0 && row.ratio >= 1 && row.ratio <= c;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace kfree
