#pragma once

// JSON and CSV renderings of every result type, plus threshold config files.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "kfree/census.hpp"
#include "kfree/partition.hpp"
#include "kfree/structure.hpp"
#include "kfree/supersat.hpp"

namespace kfree {

using json = nlohmann::ordered_json;

inline json vertex_list(VertexSet s) {
  json out = json::array();
  for (int v : s) out.push_back(v);
  return out;
}

inline json to_json(const RPartition& p) {
  json parts = json::array();
  for (VertexSet s : p.parts()) parts.push_back(vertex_list(s));
  return {{"r", p.parts_count()}, {"interior", p.interior()}, {"assignment", p.assignment()}, {"parts", parts}};
}

inline json to_json(const DistanceResult& d) { return {{"distance", d.distance}, {"witness", to_json(d.witness)}}; }

// --- supersaturation -------------------------------------------------------

inline constexpr const char* kSupersatCsvHeader = "n,r,e,t,cliques,bound_num,bound_den,margin_sign,verdict";

inline std::string to_csv_row(const SupersatReport& s) {
  std::ostringstream os;
  os << s.n << ',' << s.r << ',' << s.e << ',' << s.t << ',' << to_string(s.cliques) << ','
     << numerator_of(s.bound).str() << ',' << denominator_of(s.bound).str() << ',' << s.margin_sign() << ','
     << verdict_name(s.verdict);
  return os.str();
}

inline json to_json(const SupersatReport& s) {
  return {{"n", s.n},
          {"r", s.r},
          {"e", s.e},
          {"t", s.t},
          {"cliques", to_string(s.cliques)},
          {"bound_num", numerator_of(s.bound).str()},
          {"bound_den", denominator_of(s.bound).str()},
          {"margin_sign", s.margin_sign()},
          {"verdict", verdict_name(s.verdict)}};
}

// --- structure -------------------------------------------------------------

inline json to_json(const StructureThresholds& th) {
  return {{"alpha", to_string(th.alpha)},
          {"size_fraction", to_string(th.size_fraction)},
          {"sparse_fraction", to_string(th.sparse_fraction)},
          {"balance_fraction", to_string(th.balance_fraction)},
          {"closeness_exponent", to_string(th.closeness_exponent)}};
}

/// Config object: optional "preset" ("asymptotic", the default, or "relaxed"),
/// then field overrides as "p/q" strings, decimal strings or numbers.
inline StructureThresholds thresholds_from_json(const json& j, int r) {
  StructureThresholds th = StructureThresholds::asymptotic(r);
  if (j.contains("preset")) {
    const std::string preset = j.at("preset").get<std::string>();
    if (preset == "relaxed") {
      th = StructureThresholds::relaxed();
    } else if (preset != "asymptotic") {
      throw PreconditionError("unknown threshold preset '" + preset + "'");
    }
  }
  auto field = [&](const char* key, Rational& out) {
    if (!j.contains(key)) return;
    const auto& v = j.at(key);
    if (v.is_string()) {
      out = parse_rational(v.get<std::string>());
    } else if (v.is_number_integer()) {
      out = Rational(v.get<std::int64_t>());
    } else if (v.is_number()) {
      // Shortest round-trip text, so 0.1 reads as 1/10.
      char buf[64];
      const auto res = std::to_chars(buf, buf + sizeof buf, v.get<double>());
      out = parse_rational(std::string(buf, res.ptr));
    } else {
      throw PreconditionError(std::string("threshold field '") + key + "' must be a number or string");
    }
  };
  field("alpha", th.alpha);
  field("size_fraction", th.size_fraction);
  field("sparse_fraction", th.sparse_fraction);
  field("balance_fraction", th.balance_fraction);
  field("closeness_exponent", th.closeness_exponent);
  th.validate();
  return th;
}

inline StructureThresholds load_thresholds(const std::string& path, int r) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open threshold file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw PreconditionError("threshold file " + path + ": " + e.what());
  }
  return thresholds_from_json(j, r);
}

inline json to_json(const DensityResult& d) {
  json out = {{"status", density_status_name(d.status)}, {"work", d.work}};
  if (d.witness) {
    const auto& w = *d.witness;
    out["witness"] = {{"partition", to_json(w.partition)},
                      {"part_a", w.part_a},
                      {"part_b", w.part_b},
                      {"a", vertex_list(w.a)},
                      {"b", vertex_list(w.b)},
                      {"edges", w.edges}};
  }
  return out;
}

inline json to_json(const SparseResult& s) {
  json out = {{"holds", s.holds}};
  if (s.witness)
    out["witness"] = {{"partition", to_json(s.witness->partition)},
                      {"part", s.witness->part},
                      {"vertex", s.witness->vertex},
                      {"internal_degree", s.witness->internal_degree}};
  return out;
}

inline json to_json(const BalanceResult& b) {
  json out = {{"holds", b.holds}};
  if (b.witness)
    out["witness"] = {
        {"partition", to_json(b.witness->partition)}, {"part", b.witness->part}, {"size", b.witness->size}};
  return out;
}

inline json to_json(const QFlags& f) {
  return {{"clique_free", f.clique_free},
          {"r_partite", f.r_partite},
          {"distance", f.distance},
          {"close", f.close},
          {"uniformly_dense", density_status_name(f.uniformly_dense)},
          {"internally_sparse", f.internally_sparse},
          {"balanced", f.balanced},
          {"in_q", f.in_q()},
          {"undecided", f.undecided()}};
}

inline json to_json(const MData& md) {
  json families = json::array();
  for (const auto& fam : md.families) {
    json sets = json::array();
    for (VertexSet s : fam) sets.push_back(vertex_list(s));
    families.push_back(sets);
  }
  return {{"m", md.m}, {"j", md.j}, {"x", vertex_list(md.x)}, {"families", families}};
}

inline json to_json(const PhiImageReport& p) {
  json out = {{"partition", to_json(p.partition)},
              {"mdata", to_json(p.mdata)},
              {"potential", p.potential},
              {"exhaustive", p.exhaustive},
              {"images_checked", p.images_checked},
              {"distinct_images", p.distinct_images},
              {"all_free", p.all_free}};
  if (p.offending_image) out["offending_image"] = emit_graph6(*p.offending_image);
  return out;
}

// --- census ----------------------------------------------------------------

/// Deterministic part of a census record: identical for any shard count.
inline json census_payload(const CensusRecord& c) {
  json hist = json::object();
  for (auto [d, k] : c.totals.histogram) hist[std::to_string(d)] = k;
  json out = {{"n", c.n},
              {"r", c.r},
              {"mode", c.unlabeled ? "unlabeled" : "labeled"},
              {"deep", c.deep},
              {"complete", c.complete},
              {"total_graphs", c.totals.total},
              {"free_count", c.totals.free},
              {"r_partite_count", c.totals.r_partite},
              {"turan_edges", c.turan_edges},
              {"distance_histogram", hist},
              {"supersat_violations", c.totals.supersat_violations},
              {"m_zero_violations", c.totals.m_zero_violations},
              {"violations", c.totals.violations}};
  if (c.unlabeled) {
    out["free_unlabeled"] = c.totals.free_unlabeled;
    out["r_partite_unlabeled"] = c.totals.r_partite_unlabeled;
  }
  return out;
}

inline json to_json(const CensusRecord& c) {
  json out = census_payload(c);
  out["ratio"] = c.ratio();
  out["log2_free"] = c.log2_free();
  out["log2_free_minus_turan"] = c.log2_free() - static_cast<double>(c.turan_edges);
  json shards = json::array();
  for (const auto& s : c.shards) shards.push_back({{"begin", s.begin}, {"end", s.end}});
  out["shards"] = shards;
  out["shards_completed"] = c.shards_completed;
  out["runtime_seconds"] = c.runtime_seconds;
  return out;
}

inline constexpr const char* kCensusCsvHeader =
    "n,r,mode,total,free,r_partite,ratio,log2_free,turan_edges,log2_free_minus_turan,"
    "supersat_violations,m_zero_violations";

inline std::string to_csv_row(const CensusRecord& c) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%d,%d,%s,%llu,%llu,%llu,%.10f,%.6f,%lld,%.6f,%llu,%llu", c.n, c.r,
                c.unlabeled ? "unlabeled" : "labeled", static_cast<unsigned long long>(c.totals.total),
                static_cast<unsigned long long>(c.totals.free), static_cast<unsigned long long>(c.totals.r_partite),
                c.ratio(), c.log2_free(), static_cast<long long>(c.turan_edges),
                c.log2_free() - static_cast<double>(c.turan_edges),
                static_cast<unsigned long long>(c.totals.supersat_violations),
                static_cast<unsigned long long>(c.totals.m_zero_violations));
  return buf;
}

inline json to_json(const SupersatSweepReport& s) {
  return {{"n", s.n},
          {"r", s.r},
          {"graphs", s.graphs},
          {"applicable", s.applicable},
          {"holds", s.holds},
          {"holds_boundary", s.boundary},
          {"holds_vacuous", s.vacuous},
          {"violations", s.violations.size()},
          {"runtime_seconds", s.runtime_seconds}};
}

inline json to_json(const LemmaMReport& s) {
  return {{"n", s.n},
          {"r", s.r},
          {"class_size", s.class_size},
          {"partitions_checked", s.partitions_checked},
          {"violations", s.violations.size()}};
}

inline json to_json(const PhiSweepReport& s) {
  return {{"n", s.n},
          {"r", s.r},
          {"max_potential", s.max_potential},
          {"class_size", s.class_size},
          {"exhaustive_graphs", s.exhaustive_graphs},
          {"skipped", s.skipped},
          {"images", s.images},
          {"largest_potential", s.largest_potential},
          {"free_violations", s.free_violations.size()},
          {"cardinality_violations", s.cardinality_violations.size()}};
}

inline constexpr const char* kSharpnessCsvHeader =
    "r,k,n,t,distance,cliques,expected_cliques,bound_num,bound_den,ratio,in_envelope";

inline std::string to_csv_row(const SharpnessRow& s) {
  std::ostringstream os;
  os.precision(12);
  os << s.r << ',' << s.k << ',' << s.n << ',' << s.t << ',' << s.distance << ',' << to_string(s.cliques) << ','
     << to_string(s.expected_cliques) << ',' << numerator_of(s.bound).str() << ',' << denominator_of(s.bound).str()
     << ',' << static_cast<double>(s.ratio) << ',' << (s.in_envelope ? "true" : "false");
  return os.str();
}

inline json to_json(const SharpnessRow& s) {
  return {{"r", s.r},
          {"k", s.k},
          {"n", s.n},
          {"t", s.t},
          {"distance", s.distance},
          {"cliques", to_string(s.cliques)},
          {"expected_cliques", to_string(s.expected_cliques)},
          {"bound", to_string(s.bound)},
          {"ratio", to_string(s.ratio)},
          {"ratio_value", static_cast<double>(s.ratio)},
          {"in_envelope", s.in_envelope}};
}

}  // namespace kfree
