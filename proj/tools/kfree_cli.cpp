// kfree: command-line front end for the verification library.
//
// Exit codes: 0 success, 1 verification violation, 2 usage or input error,
// 3 resource-limit refusal, 4 internal error.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kfree/canonical.hpp"
#include "kfree/census.hpp"
#include "kfree/cliques.hpp"
#include "kfree/generators.hpp"
#include "kfree/graph6.hpp"
#include "kfree/partition.hpp"
#include "kfree/report.hpp"
#include "kfree/structure.hpp"
#include "kfree/supersat.hpp"

namespace {

using namespace kfree;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;
constexpr int kExitInternal = 4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string graph6;
  std::string input;
  std::string check;
  std::string format = "json";
  std::string out;
  int jobs = 0;
  std::optional<std::uint64_t> seed;
  int n = 0;
  int r = 0;
};

int env_jobs() {
  if (const char* s = std::getenv("KFREE_JOBS")) {
    try {
      const int j = std::stoi(s);
      if (j >= 1) return j;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("KFREE_JOBS must be a positive integer, got '") + s + "'");
  }
  return default_jobs();
}

int jobs_of(const Common& c) { return c.jobs > 0 ? c.jobs : env_jobs(); }

bool has_graph_input(const Common& c) { return !c.graph6.empty() || !c.input.empty(); }

std::vector<Graph> read_file_graphs(const std::string& path) {
  if (path == "-") return read_graph6_stream(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return read_graph6_stream(in);
}

std::vector<Graph> load_graphs(const Common& c) {
  if (c.graph6 == "-") return read_graph6_stream(std::cin);
  if (!c.graph6.empty()) return {parse_graph6(c.graph6)};
  if (!c.input.empty()) return read_file_graphs(c.input);
  throw UsageError("no graph given; use --graph6 or --input");
}

void require_r(const Common& c, int lo = 1) {
  if (c.r < lo) throw UsageError("-r must be at least " + std::to_string(lo));
}

void require_n(const Common& c) {
  if (c.n < 1) throw UsageError("-n must be at least 1");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    std::cout.flush();
    return;
  }
  std::ofstream f(c.out, std::ios::trunc);
  if (!f) throw UsageError("cannot write " + c.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

/// Single object for one graph, array otherwise.
json collapse(json items) { return items.size() == 1 ? items[0] : items; }

void write_sidecar(const std::string& path, const std::vector<std::string>& entries) {
  if (path.empty()) return;
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw UsageError("cannot write " + path);
  for (const auto& s : entries) f << s << '\n';
}

bool is_csv(const Common& c) { return c.format == "csv"; }

// --- replaying violation sidecars ------------------------------------------

struct Replay {
  bool reproduced = false;
  json detail;
};

int run_check(const Common& c, const std::function<Replay(const Graph&)>& replay) {
  const auto graphs = read_file_graphs(c.check);
  json entries = json::array();
  int reproduced = 0;
  for (const auto& g : graphs) {
    Replay rep = replay(g);
    reproduced += rep.reproduced ? 1 : 0;
    entries.push_back({{"graph6", emit_graph6(g)}, {"reproduced", rep.reproduced}, {"detail", rep.detail}});
  }
  std::cerr << "checked " << graphs.size() << " entries, " << reproduced << " reproduced\n";
  if (is_csv(c)) {
    std::string text = "graph6,reproduced\n";
    for (const auto& e : entries)
      text += e["graph6"].get<std::string>() + "," + (e["reproduced"].get<bool>() ? "true" : "false") + "\n";
    emit(c, text);
  } else {
    emit(c, dump({{"checked", graphs.size()}, {"reproduced", reproduced}, {"entries", entries}}));
  }
  return reproduced > 0 ? kExitViolation : kExitOk;
}

Replay replay_supersat(const Graph& g, int r) {
  const auto rep = verify_supersaturation(g, r);
  return {rep.verdict == Verdict::kViolated, to_json(rep)};
}

Replay replay_lemma_m(const Graph& g, int r) {
  if (!is_clique_free(g, r + 1) || is_r_partite(g, r)) return {false, {{"in_class", false}}};
  const auto res = check_m_positive_detailed(g, r);
  json d = {{"in_class", true}, {"partitions_checked", res.partitions_checked}, {"m_positive", res.holds}};
  if (res.counterexample) d["counterexample"] = to_json(*res.counterexample);
  return {!res.holds, d};
}

Replay replay_phi(const Graph& g, int r, int limit) {
  if (!is_clique_free(g, r + 1) || is_r_partite(g, r)) return {false, {{"in_class", false}}};
  const auto rep = phi_images(g, r, 0, 0, limit);
  const bool bad_count = rep.exhaustive && rep.distinct_images != (std::uint64_t{1} << rep.potential);
  return {!rep.all_free || bad_count, to_json(rep)};
}

// --- subcommands -----------------------------------------------------------

int cmd_census(const Common& c, CensusOptions opt, const std::string& violations_path) {
  if (!c.check.empty()) {
    require_r(c);
    return run_check(c, [&](const Graph& g) {
      Replay a = replay_supersat(g, c.r);
      Replay b = replay_lemma_m(g, c.r);
      return Replay{a.reproduced || b.reproduced, {{"supersat", a.detail}, {"lemma_m", b.detail}}};
    });
  }
  require_n(c);
  require_r(c);
  opt.jobs = jobs_of(c);
  if (!opt.checkpoint_path.empty() || std::getenv("KFREE_CHECKPOINT_DIR")) {
    const char* dir = std::getenv("KFREE_CHECKPOINT_DIR");
    std::filesystem::path p = opt.checkpoint_path.empty()
                                  ? std::filesystem::path("census-n" + std::to_string(c.n) + "-r" +
                                                          std::to_string(c.r) + (opt.deep ? "-deep" : "") + ".ckpt")
                                  : std::filesystem::path(opt.checkpoint_path);
    if (dir && p.is_relative()) p = std::filesystem::path(dir) / p;
    opt.checkpoint_path = p.string();
  }
  const CensusRecord rec = run_census(c.n, c.r, opt);
  write_sidecar(violations_path, rec.totals.violations);
  std::cerr << "census n=" << c.n << " r=" << c.r << ": free " << rec.totals.free << ", r-partite "
            << rec.totals.r_partite << ", shards " << rec.shards_completed << "/"
            << (rec.unlabeled ? 1 : static_cast<int>(std::min<std::uint64_t>(
                                        static_cast<std::uint64_t>(std::max(1, opt.shards)),
                                        std::uint64_t{1} << (c.n - 1))))
            << ", " << rec.runtime_seconds << " s\n";
  if (is_csv(c))
    emit(c, std::string(kCensusCsvHeader) + "\n" + to_csv_row(rec) + "\n");
  else
    emit(c, dump(to_json(rec)));
  return rec.totals.supersat_violations + rec.totals.m_zero_violations > 0 ? kExitViolation : kExitOk;
}

int cmd_supersat(const Common& c, std::optional<int> t, const std::string& violations_path) {
  require_r(c);
  if (!c.check.empty()) return run_check(c, [&](const Graph& g) { return replay_supersat(g, c.r); });
  if (has_graph_input(c)) {
    if (c.n != 0) throw UsageError("-n cannot be combined with a graph input");
    std::vector<SupersatReport> reports;
    std::vector<std::string> bad;
    for (const auto& g : load_graphs(c)) {
      reports.push_back(verify_supersaturation(g, c.r, t));
      if (reports.back().verdict == Verdict::kViolated) bad.push_back(emit_graph6(g));
    }
    write_sidecar(violations_path, bad);
    if (is_csv(c)) {
      std::string text = std::string(kSupersatCsvHeader) + "\n";
      for (const auto& rep : reports) text += to_csv_row(rep) + "\n";
      emit(c, text);
    } else {
      json items = json::array();
      for (const auto& rep : reports) items.push_back(to_json(rep));
      emit(c, dump(collapse(items)));
    }
    std::cerr << "violations: " << bad.size() << "\n";
    return bad.empty() ? kExitOk : kExitViolation;
  }
  require_n(c);
  if (t) throw UsageError("-t applies to a single graph; the exhaustive sweep uses each graph's distance");
  const auto rep = verify_exhaustive_supersat(c.n, c.r, jobs_of(c));
  write_sidecar(violations_path, rep.violations);
  if (is_csv(c)) {
    std::ostringstream os;
    os << "n,r,graphs,applicable,holds,holds_boundary,holds_vacuous,violations\n"
       << rep.n << ',' << rep.r << ',' << rep.graphs << ',' << rep.applicable << ',' << rep.holds << ','
       << rep.boundary << ',' << rep.vacuous << ',' << rep.violations.size() << '\n';
    emit(c, os.str());
  } else {
    emit(c, dump(to_json(rep)));
  }
  std::cerr << "violations: " << rep.violations.size() << "\n";
  return rep.violations.empty() ? kExitOk : kExitViolation;
}

int cmd_distance(const Common& c, const std::string& method) {
  require_r(c);
  DistanceOptions opt;
  if (method == "dp")
    opt.method = DistanceMethod::kSubsetDp;
  else if (method == "bnb")
    opt.method = DistanceMethod::kBranchAndBound;
  json items = json::array();
  std::string csv = "graph6,n,r,distance,assignment\n";
  for (const auto& g : load_graphs(c)) {
    const auto d = distance_to_r_partite(g, c.r, opt);
    json j = to_json(d);
    items.push_back(j);
    std::string assignment;
    for (int p : d.witness.assignment()) assignment += std::to_string(p);
    csv += emit_graph6(g) + "," + std::to_string(g.order()) + "," + std::to_string(c.r) + "," +
           std::to_string(d.distance) + "," + assignment + "\n";
  }
  emit(c, is_csv(c) ? csv : dump(collapse(items)));
  return kExitOk;
}

int cmd_cliques(const Common& c, int m, bool per_vertex) {
  if (m == 0) {
    if (c.r < 1) throw UsageError("give -m, or -r to count K_{r+1}");
    m = c.r + 1;
  }
  if (m < 1) throw UsageError("-m must be at least 1");
  json items = json::array();
  std::string csv = "graph6,n,m,count,free\n";
  for (const auto& g : load_graphs(c)) {
    const CliqueCount k = count_cliques(g, m);
    json j = {{"graph6", emit_graph6(g)}, {"n", g.order()}, {"m", m}, {"count", to_string(k)}, {"free", k == 0}};
    if (per_vertex) {
      json pv = json::array();
      for (int v = 0; v < g.order(); ++v) pv.push_back(to_string(count_cliques_at(g, v, m)));
      j["per_vertex"] = pv;
    }
    items.push_back(j);
    csv += emit_graph6(g) + "," + std::to_string(g.order()) + "," + std::to_string(m) + "," + to_string(k) + "," +
           (k == 0 ? "true" : "false") + "\n";
  }
  emit(c, is_csv(c) ? csv : dump(collapse(items)));
  return kExitOk;
}

StructureThresholds resolve_thresholds(const std::string& choice, int r) {
  if (choice.empty() || choice == "asymptotic") return StructureThresholds::asymptotic(r);
  if (choice == "relaxed") return StructureThresholds::relaxed();
  return load_thresholds(choice, r);
}

int cmd_props(const Common& c, const std::string& thresholds, std::uint64_t budget, std::uint64_t samples) {
  require_r(c);
  const StructureThresholds th = resolve_thresholds(thresholds, c.r);
  DensityOptions dopt;
  dopt.budget = budget;
  dopt.samples = samples;
  dopt.allow_sampling = c.seed.has_value();
  dopt.seed = c.seed.value_or(0);
  json items = json::array();
  std::string csv =
      "graph6,n,r,e,clique_free,distance,close,uniformly_dense,internally_sparse,balanced,in_q,m\n";
  for (const auto& g : load_graphs(c)) {
    QFlags f;
    f.clique_free = is_clique_free(g, c.r + 1);
    f.distance = distance_value(g, c.r);
    f.r_partite = f.distance == 0;
    f.close = is_close(g.order(), f.distance, th.closeness_exponent);
    DensityResult density;
    try {
      density = is_uniformly_dense(g, c.r, th, dopt);
    } catch (const LimitError& e) {
      throw LimitError(std::string(e.what()) + "; pass --seed to sample or raise --density-budget");
    }
    f.uniformly_dense = density.status;
    const SparseResult sparse = is_internally_sparse(g, c.r, th);
    const BalanceResult balance = is_balanced(g, c.r, th);
    f.internally_sparse = sparse.holds;
    f.balanced = balance.holds;
    json j = {{"graph6", emit_graph6(g)},
              {"n", g.order()},
              {"r", c.r},
              {"e", g.edge_count()},
              {"thresholds", to_json(th)},
              {"q", to_json(f)},
              {"uniform_density", to_json(density)},
              {"internal_sparsity", to_json(sparse)},
              {"balance", to_json(balance)}};
    std::string m_field;
    if (f.clique_free && !f.r_partite) {
      const auto witness = SubsetDistanceSolver(g, c.r).witness();
      const MData md = compute_m_data(g, witness);
      const auto mp = check_m_positive_detailed(g, c.r);
      j["m_data"] = to_json(md);
      j["m_positive_all_optimal"] = mp.holds;
      m_field = std::to_string(md.m);
    }
    items.push_back(j);
    csv += emit_graph6(g) + "," + std::to_string(g.order()) + "," + std::to_string(c.r) + "," +
           std::to_string(g.edge_count()) + "," + (f.clique_free ? "true" : "false") + "," +
           std::to_string(f.distance) + "," + (f.close ? "true" : "false") + "," +
           density_status_name(f.uniformly_dense) + "," + (f.internally_sparse ? "true" : "false") + "," +
           (f.balanced ? "true" : "false") + "," + (f.in_q() ? "true" : "false") + "," + m_field + "\n";
  }
  emit(c, is_csv(c) ? csv : dump(collapse(items)));
  return kExitOk;
}

int cmd_phi(const Common& c, std::uint64_t samples, int limit, const std::string& violations_path) {
  require_r(c);
  if (!c.check.empty()) return run_check(c, [&](const Graph& g) { return replay_phi(g, c.r, limit); });
  if (!has_graph_input(c)) {
    require_n(c);
    const auto rep = verify_phi_images(c.n, c.r, limit, jobs_of(c));
    std::vector<std::string> bad = rep.free_violations;
    bad.insert(bad.end(), rep.cardinality_violations.begin(), rep.cardinality_violations.end());
    std::sort(bad.begin(), bad.end());
    bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
    write_sidecar(violations_path, bad);
    std::cerr << "violations: " << bad.size() << "\n";
    if (is_csv(c)) {
      std::ostringstream os;
      os << "n,r,max_potential,class_size,exhaustive_graphs,skipped,images,largest_potential,"
            "free_violations,cardinality_violations\n"
         << rep.n << ',' << rep.r << ',' << rep.max_potential << ',' << rep.class_size << ','
         << rep.exhaustive_graphs << ',' << rep.skipped << ',' << rep.images << ',' << rep.largest_potential << ','
         << rep.free_violations.size() << ',' << rep.cardinality_violations.size() << '\n';
      emit(c, os.str());
    } else {
      emit(c, dump(to_json(rep)));
    }
    return bad.empty() ? kExitOk : kExitViolation;
  }
  if (c.n != 0) throw UsageError("-n cannot be combined with a graph input");
  json items = json::array();
  std::string csv = "graph6,potential,exhaustive,images_checked,distinct_images,all_free\n";
  bool bad = false;
  for (const auto& g : load_graphs(c)) {
    const auto rep = phi_images(g, c.r, c.seed ? samples : 0, c.seed.value_or(0), limit);
    if (!rep.exhaustive && !c.seed)
      throw UsageError("potential edge count " + std::to_string(rep.potential) +
                       " exceeds the exhaustive limit; sampling needs --seed");
    const bool bad_count = rep.exhaustive && rep.distinct_images != (std::uint64_t{1} << rep.potential);
    bad = bad || !rep.all_free || bad_count;
    json j = to_json(rep);
    j["graph6"] = emit_graph6(g);
    items.push_back(j);
    csv += emit_graph6(g) + "," + std::to_string(rep.potential) + "," + (rep.exhaustive ? "true" : "false") + "," +
           std::to_string(rep.images_checked) + "," + std::to_string(rep.distinct_images) + "," +
           (rep.all_free ? "true" : "false") + "\n";
  }
  emit(c, is_csv(c) ? csv : dump(collapse(items)));
  return bad ? kExitViolation : kExitOk;
}

int cmd_sharpness(const Common& c, int k_max) {
  std::vector<int> rs;
  if (c.r == 0) {
    rs = {2, 3};
  } else {
    rs = {c.r};
  }
  std::vector<SharpnessRow> rows;
  for (int r : rs) {
    auto part = sharpness_sweep(r, k_max);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  bool bad = false;
  std::string csv = std::string(kSharpnessCsvHeader) + "\n";
  json items = json::array();
  for (const auto& row : rows) {
    bad = bad || row.distance != row.t || row.cliques != row.expected_cliques || !row.in_envelope;
    csv += to_csv_row(row) + "\n";
    items.push_back(to_json(row));
  }
  emit(c, is_csv(c) ? csv : dump(items));
  return bad ? kExitViolation : kExitOk;
}

int cmd_lemma_m(const Common& c, const std::string& violations_path) {
  require_r(c);
  if (!c.check.empty()) return run_check(c, [&](const Graph& g) { return replay_lemma_m(g, c.r); });
  if (has_graph_input(c)) {
    if (c.n != 0) throw UsageError("-n cannot be combined with a graph input");
    json items = json::array();
    std::vector<std::string> bad;
    std::string csv = "graph6,in_class,partitions_checked,m_positive\n";
    for (const auto& g : load_graphs(c)) {
      Replay rep = replay_lemma_m(g, c.r);
      if (rep.reproduced) bad.push_back(emit_graph6(g));
      json j = rep.detail;
      j["graph6"] = emit_graph6(g);
      const bool in_class = j["in_class"].get<bool>();
      if (in_class) {
        const MData md = compute_m_data(g, SubsetDistanceSolver(g, c.r).witness());
        j["m_data"] = to_json(md);
      }
      csv += emit_graph6(g) + "," + (in_class ? "true" : "false") + "," +
             (in_class ? std::to_string(j["partitions_checked"].get<int>()) : "") + "," +
             (in_class ? (j["m_positive"].get<bool>() ? "true" : "false") : "") + "\n";
      items.push_back(j);
    }
    write_sidecar(violations_path, bad);
    emit(c, is_csv(c) ? csv : dump(collapse(items)));
    return bad.empty() ? kExitOk : kExitViolation;
  }
  require_n(c);
  const auto rep = verify_lemma_m_positive(c.n, c.r, jobs_of(c));
  write_sidecar(violations_path, rep.violations);
  if (rep.class_size == 0) std::cerr << "class is empty: no K_{r+1}-free graph on n vertices is non-r-partite\n";
  std::cerr << "violations: " << rep.violations.size() << "\n";
  if (is_csv(c)) {
    std::ostringstream os;
    os << "n,r,class_size,partitions_checked,violations\n"
       << rep.n << ',' << rep.r << ',' << rep.class_size << ',' << rep.partitions_checked << ','
       << rep.violations.size() << '\n';
    emit(c, os.str());
  } else {
    json j = to_json(rep);
    j["empty_class"] = rep.class_size == 0;
    emit(c, dump(j));
  }
  return rep.violations.empty() ? kExitOk : kExitViolation;
}

int cmd_generate(const Common& c, const std::string& family, int t, double p, bool canonical) {
  Graph g;
  if (family == "turan") {
    require_n(c);
    require_r(c);
    g = turan_graph(c.n, c.r);
  } else if (family == "turan-matching") {
    require_n(c);
    require_r(c);
    g = turan_plus_matching(c.n, c.r, t);
  } else if (family == "random") {
    require_n(c);
    if (!c.seed) throw UsageError("random graphs need --seed");
    if (!(p >= 0 && p <= 1)) throw UsageError("-p must lie in [0, 1]");
    g = random_graph(c.n, p, *c.seed);
  } else if (family == "complete") {
    require_n(c);
    g = complete_graph(c.n);
  } else if (family == "cycle") {
    require_n(c);
    g = cycle_graph(c.n);
  } else if (family == "path") {
    require_n(c);
    g = path_graph(c.n);
  } else if (family == "star") {
    require_n(c);
    g = star_graph(c.n - 1);
  } else if (family == "petersen") {
    g = petersen_graph();
  } else if (family == "empty") {
    require_n(c);
    g = Graph(c.n);
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  if (canonical) g = canonical_graph(g);
  emit(c, emit_graph6(g) + "\n");
  return kExitOk;
}

// --- option wiring ---------------------------------------------------------

void add_graph_input(CLI::App* app, Common& c) {
  auto* g6 = app->add_option("--graph6", c.graph6, "graph6 string, or - to read graph6 lines from stdin");
  auto* in = app->add_option("--input", c.input, "file of graph6 lines (- for stdin)");
  g6->excludes(in);
}

void add_output(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--out", c.out, "write results to this file instead of stdout");
}

void add_check(CLI::App* app, Common& c) {
  app->add_option("--check", c.check, "replay a violation sidecar (graph6 lines) and re-verify each entry");
}

int run(int argc, char** argv) {
  CLI::App app{"Exact verification tools for K_{r+1}-free graphs and supersaturation bounds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "kfree 1.0.0");
  Common c;

  auto jobs_opt = [&](CLI::App* s) {
    s->add_option("--jobs", c.jobs, "worker threads (default: KFREE_JOBS or hardware concurrency)")
        ->check(CLI::PositiveNumber);
  };
  auto seed_opt = [&](CLI::App* s) { s->add_option("--seed", c.seed, "seed for randomized modes"); };
  auto n_opt = [&](CLI::App* s) { s->add_option("-n", c.n, "number of vertices"); };
  auto r_opt = [&](CLI::App* s) { s->add_option("-r", c.r, "forbidden clique is K_{r+1}"); };

  // census
  auto* census = app.add_subcommand("census", "count K_{r+1}-free and r-partite graphs on n vertices");
  CensusOptions census_opt;
  std::string census_violations;
  std::optional<int> stop_after;
  n_opt(census);
  r_opt(census);
  jobs_opt(census);
  add_output(census, c);
  add_check(census, c);
  census->add_option("--shards", census_opt.shards, "number of shards")->check(CLI::PositiveNumber);
  census->add_option("--checkpoint", census_opt.checkpoint_path,
                     "checkpoint file (relative paths resolve under KFREE_CHECKPOINT_DIR)");
  census->add_flag("--deep", census_opt.deep, "exact distance histogram plus supersaturation and m checks");
  census->add_flag("--unlabeled", census_opt.unlabeled, "enumerate canonical representatives (n <= 10)");
  census->add_option("--violations", census_violations, "write offending graphs as graph6 lines");
  census->add_option("--stop-after-shards", stop_after, "stop after this many shards (resume later)");

  // supersat-verify
  auto* supersat = app.add_subcommand("supersat-verify", "check the supersaturation bound");
  std::optional<int> t_value;
  std::string supersat_violations;
  n_opt(supersat);
  r_opt(supersat);
  jobs_opt(supersat);
  add_graph_input(supersat, c);
  add_output(supersat, c);
  add_check(supersat, c);
  supersat->add_option("-t", t_value, "distance to use (default: exact distance)");
  supersat->add_option("--violations", supersat_violations, "write offending graphs as graph6 lines");

  // distance
  auto* distance = app.add_subcommand("distance", "exact distance to r-partite with an optimal partition");
  std::string method = "auto";
  r_opt(distance);
  add_graph_input(distance, c);
  add_output(distance, c);
  distance->add_option("--method", method, "solver")->check(CLI::IsMember({"auto", "dp", "bnb"}));

  // cliques
  auto* cliques = app.add_subcommand("cliques", "count m-cliques");
  int m_value = 0;
  bool per_vertex = false;
  r_opt(cliques);
  add_graph_input(cliques, c);
  add_output(cliques, c);
  cliques->add_option("-m", m_value, "clique order (default r+1)");
  cliques->add_flag("--per-vertex", per_vertex, "also report the count at every vertex");

  // props
  auto* props = app.add_subcommand("props", "structural predicates on every optimal partition");
  std::string thresholds;
  std::uint64_t budget = DensityOptions{}.budget;
  std::uint64_t density_samples = DensityOptions{}.samples;
  r_opt(props);
  seed_opt(props);
  add_graph_input(props, c);
  add_output(props, c);
  props->add_option("--thresholds", thresholds, "preset (asymptotic, relaxed) or JSON file");
  props->add_option("--density-budget", budget, "exhaustive uniform-density work budget");
  props->add_option("--samples", density_samples, "uniform-density samples when over budget (needs --seed)");

  // phi
  auto* phi = app.add_subcommand("phi", "enumerate or sample Phi images and test them for K_{r+1}");
  std::uint64_t phi_samples = 1000;
  int phi_limit = 16;
  std::string phi_violations;
  n_opt(phi);
  r_opt(phi);
  jobs_opt(phi);
  seed_opt(phi);
  add_graph_input(phi, c);
  add_output(phi, c);
  add_check(phi, c);
  phi->add_option("--samples", phi_samples, "random images when over the exhaustive limit (needs --seed)");
  phi->add_option("--exhaustive-limit", phi_limit, "enumerate all images up to this potential edge count")
      ->check(CLI::Range(0, 30));
  phi->add_option("--violations", phi_violations, "write offending graphs as graph6 lines (exhaustive mode)");

  // sharpness
  auto* sharpness = app.add_subcommand("sharpness", "Turan graph plus matching against the bound");
  int k_max = 6;
  r_opt(sharpness);
  add_output(sharpness, c);
  sharpness->add_option("--k-max", k_max, "largest part size k (n = rk <= 12)")->check(CLI::PositiveNumber);

  // lemma-m
  auto* lemma = app.add_subcommand("lemma-m", "check m >= 1 on every optimal partition");
  std::string lemma_violations;
  n_opt(lemma);
  r_opt(lemma);
  jobs_opt(lemma);
  add_graph_input(lemma, c);
  add_output(lemma, c);
  add_check(lemma, c);
  lemma->add_option("--violations", lemma_violations, "write offending graphs as graph6 lines");

  // generate
  auto* generate = app.add_subcommand("generate", "emit a generated graph as graph6");
  std::string family;
  int gen_t = 0;
  double gen_p = 0.5;
  bool gen_canonical = false;
  generate->add_option("family", family, "turan, turan-matching, random, complete, cycle, path, star, petersen, empty")
      ->required();
  n_opt(generate);
  r_opt(generate);
  seed_opt(generate);
  add_output(generate, c);
  generate->add_option("-t", gen_t, "matching size for turan-matching");
  generate->add_option("-p", gen_p, "edge probability for random");
  generate->add_flag("--canonical", gen_canonical, "relabel to the canonical form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (stop_after) census_opt.stop_after_shards = *stop_after;
  if (census->parsed()) return cmd_census(c, census_opt, census_violations);
  if (supersat->parsed()) return cmd_supersat(c, t_value, supersat_violations);
  if (distance->parsed()) return cmd_distance(c, method);
  if (cliques->parsed()) return cmd_cliques(c, m_value, per_vertex);
  if (props->parsed()) return cmd_props(c, thresholds, budget, density_samples);
  if (phi->parsed()) return cmd_phi(c, phi_samples, phi_limit, phi_violations);
  if (sharpness->parsed()) return cmd_sharpness(c, k_max);
  if (lemma->parsed()) return cmd_lemma_m(c, lemma_violations);
  if (generate->parsed()) return cmd_generate(c, family, gen_t, gen_p, gen_canonical);
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const LimitError& e) {
    std::cerr << "kfree: limit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const ParseError& e) {
    std::cerr << "kfree: input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CheckpointError& e) {
    std::cerr << "kfree: checkpoint: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "kfree: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "kfree: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "kfree: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
