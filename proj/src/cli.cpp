#include "hallmatch/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>

#include "hallmatch/binding.hpp"
#include "hallmatch/constructive.hpp"
#include "hallmatch/corpus.hpp"
#include "hallmatch/estimators.hpp"
#include "hallmatch/generators.hpp"
#include "hallmatch/io.hpp"
#include "hallmatch/matching.hpp"
#include "hallmatch/rng.hpp"
#include "hallmatch/stream.hpp"

namespace hallmatch::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes to --out when given, otherwise to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::ios_base::failure("cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

VertexSet parse_vertex_list(const std::string& text, const Graph& g) {
  if (text == "all") return VertexSet::range(g.num_vertices());
  std::vector<Vertex> ids;
  std::stringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("bad vertex id '" + tok + "' in --x");
    }
    const auto id = std::stoull(tok);
    if (id >= g.num_vertices()) throw UsageError("vertex " + tok + " not in graph");
    ids.push_back(static_cast<Vertex>(id));
  }
  if (ids.empty()) throw UsageError("--x must name at least one vertex");
  return VertexSet(std::move(ids));
}

std::string join_edges(const Matching& m) {
  std::string out;
  for (const Edge& e : m.edges) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return out;
}

json ids_json(const VertexSet& s) { return json(s.members()); }

std::string metadata_value(const Metadata& meta, const std::string& key, const std::string& fallback) {
  for (const auto& [k, v] : meta) {
    if (k == key) return v;
  }
  return fallback;
}

// ---- gen -------------------------------------------------------------------

struct GenOptions {
  std::string family;
  std::size_t n = 10;
  std::size_t rows = 0;
  std::size_t cols = 0;
  double p = 0.5;
  std::size_t alpha = 2;
  std::size_t edges_per_forest = 0;
  std::uint64_t seed = 0;
  bool as_stream = false;
  std::uint64_t order_seed = 0;
  bool shuffle = false;
  std::string out;
};

GeneratedGraph generate(const std::string& family_text, std::size_t n, std::size_t rows, std::size_t cols,
                        double p, std::size_t alpha, std::size_t edges_per_forest, std::uint64_t seed) {
  const auto family = parse_family(family_text);
  if (!family) throw UsageError("unknown family '" + family_text + "'");
  switch (*family) {
    case Family::Star: return star(n);
    case Family::Path: return path(n);
    case Family::Cycle: return cycle(n);
    case Family::Grid: return grid(rows ? rows : n, cols ? cols : n);
    case Family::Triangulation: return planar_triangulation(n, seed);
    case Family::PlanarSubgraph: return planar_subgraph(n, p, seed);
    case Family::ForestUnion: return forest_union(n, alpha, edges_per_forest ? edges_per_forest : n, seed);
    case Family::RandomSmall: return random_small(n, p, seed);
    case Family::Net: return net_graph();
  }
  throw UsageError("unknown family");
}

std::vector<Vertex> arrival_order(std::size_t n, bool shuffle, std::uint64_t seed) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  if (shuffle) Rng(seed).shuffle(order);
  return order;
}

int run_gen(const GenOptions& o, std::ostream& fallback) {
  const GeneratedGraph gen =
      generate(o.family, o.n, o.rows, o.cols, o.p, o.alpha, o.edges_per_forest, o.seed);
  Sink sink(o.out, fallback);
  if (o.as_stream) {
    for (const auto& [key, value] : certificate_metadata(gen)) *sink << "# " << key << ": " << value << '\n';
    const auto order = arrival_order(gen.graph.num_vertices(), o.shuffle, o.order_seed);
    write_stream(*sink, stream_from_graph(gen.graph, order));
  } else {
    write_edge_list(*sink, gen.graph, certificate_metadata(gen));
  }
  return kExitOk;
}

// ---- analyze ---------------------------------------------------------------

struct AnalyzeOptions {
  std::vector<std::string> files;
  std::string family;
  std::size_t n = 10;
  double p = 0.5;
  std::size_t alpha = 2;
  std::uint64_t seed = 0;
  std::size_t t = 2;
  std::string format = "csv";
  std::string out;
};

constexpr const char* kAnalyzeHeader = "family,seed,n,m,nu,ls,s2,h2,t,kt,ls_ratio,sh2_ratio,kt_ratio";

struct AnalyzeRow {
  std::string family;
  std::string seed;
  EstimatorReport rep;
};

int run_analyze(const AnalyzeOptions& o, std::ostream& fallback) {
  if (o.t < 2) throw UsageError("--t must be >= 2");
  std::vector<AnalyzeRow> rows;
  for (const auto& file : o.files) {
    const EdgeListFile parsed = read_edge_list_file(file);
    rows.push_back({metadata_value(parsed.metadata, "family", "file"),
                    metadata_value(parsed.metadata, "seed", ""), report(parsed.graph, {.t = o.t})});
  }
  if (!o.family.empty()) {
    const GeneratedGraph gen = generate(o.family, o.n, 0, 0, o.p, o.alpha, 0, o.seed);
    rows.push_back({std::string(family_name(gen.family)), std::to_string(gen.seed),
                    report(gen.graph, {.t = o.t, .arboricity = gen.certificate.arboricity_upper})});
  }
  if (rows.empty()) throw UsageError("analyze needs graph files or --family");

  Sink sink(o.out, fallback);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"family", r.family},        {"seed", r.seed},
                     {"n", r.rep.n},              {"m", r.rep.m},
                     {"nu", r.rep.nu},            {"ls", r.rep.ls},
                     {"s2", r.rep.s2},            {"h2", r.rep.h2},
                     {"t", r.rep.t},              {"kt", r.rep.kt},
                     {"ls_ratio", format_ratio(r.rep.ls_ratio())},
                     {"sh2_ratio", format_ratio(r.rep.sh2_ratio())},
                     {"kt_ratio", format_ratio(r.rep.kt_ratio())}});
    }
    *sink << arr.dump(2) << '\n';
  } else {
    *sink << kAnalyzeHeader << '\n';
    for (const auto& r : rows) {
      *sink << r.family << ',' << r.seed << ',' << r.rep.n << ',' << r.rep.m << ',' << r.rep.nu << ','
            << r.rep.ls << ',' << r.rep.s2 << ',' << r.rep.h2 << ',' << r.rep.t << ',' << r.rep.kt << ','
            << format_ratio(r.rep.ls_ratio()) << ',' << format_ratio(r.rep.sh2_ratio()) << ','
            << format_ratio(r.rep.kt_ratio()) << '\n';
    }
  }
  return kExitOk;
}

// ---- bind ------------------------------------------------------------------

struct BindOptions {
  std::string file;
  std::string x = "all";
  bool probe = false;
  std::string format = "text";
  std::string out;
};

int run_bind(const BindOptions& o, std::ostream& fallback) {
  const Graph g = read_edge_list_file(o.file).graph;
  const VertexSet x = parse_vertex_list(o.x, g);
  if (x.size() > kBindingMaxSetSize) {
    throw UsageError("|X| = " + std::to_string(x.size()) + " exceeds the enumeration limit of " +
                     std::to_string(kBindingMaxSetSize));
  }
  const BindingResult b = binding_number_of_set(g, x);

  // Experimental: does nu >= c/(c+1)|X| hold for this c, integral 1/c or not?
  json probe;
  if (o.probe && b.value && b.value->num() > 0 && *b.value <= Rational(1, 2)) {
    const std::size_t nu = max_matching(g).size();
    const auto p = static_cast<std::size_t>(b.value->num());
    const auto q = static_cast<std::size_t>(b.value->den());
    probe = {{"nu", nu},
             {"bound", to_compact_string(Rational(static_cast<std::int64_t>(p * x.size()),
                                                  static_cast<std::int64_t>(p + q)))},
             {"reciprocal_integer", p == 1},
             {"holds", nu * (p + q) >= p * x.size()}};
  }

  Sink sink(o.out, fallback);
  if (o.format == "json") {
    json doc = {{"x", ids_json(x)},
                {"value", b.value ? to_string(*b.value) : "unbounded"},
                {"argmin", ids_json(b.argmin)}};
    if (!probe.is_null()) doc["probe"] = probe;
    *sink << doc.dump(2) << '\n';
    return kExitOk;
  }
  if (b.unbounded()) {
    *sink << "bind: unbounded\n";
  } else {
    *sink << "bind: " << to_string(*b.value) << '\n';
    *sink << "argmin: " << to_string(b.argmin) << '\n';
  }
  if (o.probe) {
    if (probe.is_null()) {
      *sink << "probe: skipped (needs 0 < bind(X) <= 1/2)\n";
    } else {
      *sink << "probe: nu=" << probe["nu"].get<std::size_t>()
            << " bound=" << probe["bound"].get<std::string>()
            << " holds=" << (probe["holds"].get<bool>() ? "yes" : "no") << " (experimental)\n";
    }
  }
  return kExitOk;
}

// ---- extract ---------------------------------------------------------------

struct ExtractOptions {
  std::string file;
  std::string x = "all";
  std::size_t k = 2;
  std::string format = "text";
  std::string out;
};

int run_extract(const ExtractOptions& o, std::ostream& fallback) {
  if (o.k < 2) {
    throw UsageError("--k must be >= 2 (an odd cycle has binding number 1 but no matching of size n/2)");
  }
  const Graph g = read_edge_list_file(o.file).graph;
  const VertexSet x = parse_vertex_list(o.x, g);
  Sink sink(o.out, fallback);
  try {
    const Extraction ex = extract(g, x, o.k);
    if (o.format == "json") {
      json comps = json::array();
      for (std::size_t c = 0; c < ex.classes.size(); ++c) {
        const auto& cls = ex.classes[c];
        comps.push_back({{"kind", cls.kind == ComponentKind::TreeDag ? "tree" : "unicyclic"},
                         {"nodes", ids_json(ex.digraph.components[c].nodes)},
                         {"x_members", ex.digraph.components[c].x_members.size()},
                         {"cycle", cls.cycle_nodes},
                         {"parallel_pair", cls.is_parallel_pair},
                         {"matched", ex.component_sizes[c]}});
      }
      json edges = json::array();
      for (const Edge& e : ex.matching.edges) edges.push_back({e.u, e.v});
      *sink << json{{"matching", edges}, {"size", ex.matching.size()}, {"bound", ex.bound}, {"components", comps}}
                   .dump(2)
            << '\n';
      return kExitOk;
    }
    *sink << "matching: " << join_edges(ex.matching) << '\n';
    *sink << "size: " << ex.matching.size() << '\n';
    *sink << "bound: " << ex.bound << '\n';
    *sink << "components: " << ex.classes.size() << '\n';
    for (std::size_t c = 0; c < ex.classes.size(); ++c) {
      const auto& cls = ex.classes[c];
      const auto& comp = ex.digraph.components[c];
      *sink << "  " << c << ": " << (cls.kind == ComponentKind::TreeDag ? "tree" : "unicyclic")
            << " nodes=" << comp.nodes.size() << " x=" << comp.x_members.size();
      if (cls.kind == ComponentKind::Unicyclic) {
        *sink << " cycle=" << cls.cycle_nodes.size() << (cls.is_parallel_pair ? " parallel-pair" : "");
      }
      *sink << " matched=" << ex.component_sizes[c] << '\n';
    }
    return kExitOk;
  } catch (const ViolatorError& e) {
    if (o.format == "json") {
      *sink << json{{"violator", ids_json(e.violator().set)}, {"k", o.k}}.dump(2) << '\n';
    } else {
      *sink << "violator: " << to_string(e.violator().set) << '\n';
    }
    return kExitViolation;
  }
}

// ---- stream-count ----------------------------------------------------------

struct StreamOptions {
  std::string file;
  std::string graph_file;
  bool shuffle = false;
  std::uint64_t order_seed = 0;
  std::string format = "text";
  std::string out;
};

int run_stream_count(const StreamOptions& o, std::ostream& fallback) {
  VertexArrivalStream stream;
  if (!o.graph_file.empty()) {
    const Graph g = read_edge_list_file(o.graph_file).graph;
    const auto order = arrival_order(g.num_vertices(), o.shuffle, o.order_seed);
    stream = stream_from_graph(g, order);
  } else if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw std::ios_base::failure("cannot open " + o.file);
    stream = read_stream(in);
  } else {
    throw UsageError("stream-count needs a stream file or --graph");
  }
  const StreamCount count = one_pass_ls_count(stream);
  const std::size_t n = stream.num_vertices;
  Sink sink(o.out, fallback);
  if (o.format == "json") {
    *sink << json{{"ls", count.ls}, {"n", n}, {"peak_words", count.peak_words},
                  {"words_per_vertex_bound", kStreamSpaceConstant}}
                 .dump(2)
          << '\n';
  } else {
    *sink << "ls: " << count.ls << '\n';
    *sink << "n: " << n << '\n';
    *sink << "peak_words: " << count.peak_words << " (bound " << kStreamSpaceConstant << "n = "
          << kStreamSpaceConstant * n << ")\n";
  }
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct CorpusFlags {
  std::string families = "all";
  std::size_t seeds = 50;
  std::uint64_t seed = 0;
  std::size_t n = 120;
  std::string format = "csv";
  std::string out;
};

struct FamilyTally {
  std::string family;
  std::size_t graphs = 0;
  std::size_t checks = 0;
  std::vector<std::string> violations;
};

bool wants(const std::string& families, const std::string& name) {
  if (families == "all") return true;
  std::stringstream in(families);
  for (std::string tok; std::getline(in, tok, ',');) {
    if (tok == name) return true;
  }
  return false;
}

void check_family_list(const std::string& families, std::initializer_list<const char*> known) {
  if (families == "all") return;
  std::stringstream in(families);
  for (std::string tok; std::getline(in, tok, ',');) {
    if (std::none_of(known.begin(), known.end(), [&](const char* k) { return tok == k; })) {
      throw UsageError("unknown family group '" + tok + "'");
    }
  }
}

std::string describe(const GeneratedGraph& gen) {
  return std::string(family_name(gen.family)) + "(n=" + std::to_string(gen.graph.num_vertices()) +
         ",seed=" + std::to_string(gen.seed) + ")";
}

// Estimator bounds plus one-pass stream agreement.
void verify_estimators(const GeneratedGraph& gen, FamilyTally& tally) {
  ++tally.graphs;
  const EstimatorReport rep = report(gen.graph, {.t = 2, .arboricity = gen.certificate.arboricity_upper});
  for (const auto& v : check_bounds(gen, rep)) {
    tally.violations.push_back(describe(gen) + ": " + v.bound + " [" + v.detail + "]");
  }
  ++tally.checks;
  const auto order = arrival_order(gen.graph.num_vertices(), true, mix_seed(gen.seed, 11));
  const StreamCount count = one_pass_ls_count(stream_from_graph(gen.graph, order));
  if (count.ls != rep.ls || count.peak_words > kStreamSpaceConstant * gen.graph.num_vertices()) {
    tally.violations.push_back(describe(gen) + ": stream count disagrees with |L|");
  }
  ++tally.checks;
}

// Oracle agreement, assignment/violator dichotomy and extraction bound.
void verify_small(const GeneratedGraph& gen, FamilyTally& tally) {
  ++tally.graphs;
  const Graph& g = gen.graph;
  const std::size_t nu = max_matching(g).size();
  if (g.num_edges() <= kBruteForceMaxEdges) {
    ++tally.checks;
    if (brute_force_matching(g).size() != nu) tally.violations.push_back(describe(gen) + ": blossom != brute force");
  }
  if (g.num_vertices() == 0) return;

  Rng rng(mix_seed(gen.seed, 13));
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Vertex> pick;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (rng.bernoulli(0.5)) pick.push_back(v);
    }
    if (pick.empty()) pick.push_back(static_cast<Vertex>(rng.below(g.num_vertices())));
    const VertexSet x(std::move(pick));
    const BindingResult b = binding_number_of_set(g, x);
    for (std::size_t k = 1; k <= 4; ++k) {
      ++tally.checks;
      const auto w = witness_assignment(g, x, k);
      const bool assigned = std::holds_alternative<Assignment>(w);
      if (assigned != b.at_least(Rational(1, static_cast<std::int64_t>(k)))) {
        tally.violations.push_back(describe(gen) + ": dichotomy fails for X=" + to_string(x) +
                                   " k=" + std::to_string(k));
        continue;
      }
      try {
        if (!assigned) {
          check_violator(g, std::get<Violator>(w), k);
        } else if (k >= 2) {
          const Matching m = extract_matching(g, x, k);
          if (m.size() * (k + 1) < x.size() || m.size() > nu) {
            tally.violations.push_back(describe(gen) + ": extraction bound fails for X=" + to_string(x));
          }
        }
      } catch (const std::logic_error& e) {
        tally.violations.push_back(describe(gen) + ": " + e.what());
      }
    }
  }
}

void emit_tallies(const std::vector<FamilyTally>& tallies, const std::string& format, std::ostream& out) {
  std::size_t total_graphs = 0;
  std::size_t total_checks = 0;
  std::size_t total_violations = 0;
  for (const auto& t : tallies) {
    total_graphs += t.graphs;
    total_checks += t.checks;
    total_violations += t.violations.size();
  }
  if (format == "json") {
    json fams = json::array();
    for (const auto& t : tallies) {
      fams.push_back({{"family", t.family}, {"graphs", t.graphs}, {"checks", t.checks},
                      {"violations", t.violations}});
    }
    out << json{{"families", fams}, {"graphs", total_graphs}, {"checks", total_checks},
                {"violations", total_violations}}
               .dump(2)
        << '\n';
    return;
  }
  out << "family,graphs,checks,violations\n";
  for (const auto& t : tallies) {
    out << t.family << ',' << t.graphs << ',' << t.checks << ',' << t.violations.size() << '\n';
  }
  for (const auto& t : tallies) {
    for (const auto& v : t.violations) out << "# violation: " << v << '\n';
  }
  out << "# " << total_violations << " violations\n";
}

int run_verify(const CorpusFlags& o, std::ostream& fallback) {
  check_family_list(o.families, {"planar", "forest", "small", "fixtures"});
  const CorpusOptions corpus{.seeds = o.seeds, .base_seed = o.seed, .max_n = o.n};
  std::vector<FamilyTally> tallies;

  if (wants(o.families, "planar")) {
    FamilyTally t{.family = "planar"};
    for (const auto& gen : planar_corpus(corpus)) verify_estimators(gen, t);
    tallies.push_back(std::move(t));
  }
  if (wants(o.families, "forest")) {
    static constexpr std::size_t kAlphas[] = {1, 2, 3, 4};
    FamilyTally t{.family = "forest"};
    for (const auto& gen : forest_corpus(corpus, kAlphas)) verify_estimators(gen, t);
    tallies.push_back(std::move(t));
  }
  if (wants(o.families, "small")) {
    FamilyTally t{.family = "small"};
    for (const auto& gen : small_corpus(corpus)) verify_small(gen, t);
    tallies.push_back(std::move(t));
  }
  if (wants(o.families, "fixtures")) {
    FamilyTally t{.family = "fixtures"};
    for (const auto& gen : fixture_corpus()) {
      verify_estimators(gen, t);
      if (gen.graph.num_edges() <= kBruteForceMaxEdges && gen.graph.num_vertices() <= kBindingMaxSetSize) {
        verify_small(gen, t);
        --t.graphs;
      }
    }
    tallies.push_back(std::move(t));
  }

  Sink sink(o.out, fallback);
  emit_tallies(tallies, o.format, *sink);
  for (const auto& t : tallies) {
    if (!t.violations.empty()) return kExitViolation;
  }
  return kExitOk;
}

// ---- experiment ------------------------------------------------------------

struct RatioStats {
  std::string family;
  std::size_t graphs = 0;
  std::size_t skipped = 0;  // nu = 0
  std::optional<Rational> ls_min, ls_max, sh_min, sh_max;
  double ls_sum = 0;
  double sh_sum = 0;
  std::size_t observation_failures = 0;

  void add(const GeneratedGraph& gen) {
    ++graphs;
    const EstimatorReport rep =
        report(gen.graph, {.t = 2, .arboricity = gen.certificate.arboricity_upper});
    for (const auto& obs : experimental_checks(gen, rep)) observation_failures += obs.holds ? 0 : 1;
    if (rep.nu == 0) {
      ++skipped;
      return;
    }
    const Rational ls = *rep.ls_ratio();
    const Rational sh = *rep.sh2_ratio();
    ls_min = ls_min ? std::min(*ls_min, ls) : ls;
    ls_max = ls_max ? std::max(*ls_max, ls) : ls;
    sh_min = sh_min ? std::min(*sh_min, sh) : sh;
    sh_max = sh_max ? std::max(*sh_max, sh) : sh;
    ls_sum += ls.to_double();
    sh_sum += sh.to_double();
  }

  [[nodiscard]] std::string mean(double sum) const {
    const std::size_t used = graphs - skipped;
    if (used == 0) return "n/a";
    std::ostringstream s;
    s << std::fixed << std::setprecision(6) << sum / static_cast<double>(used);
    return s.str();
  }
};

int run_experiment(const CorpusFlags& o, std::ostream& fallback) {
  check_family_list(o.families, {"planar", "forest", "small"});
  const CorpusOptions corpus{.seeds = o.seeds, .base_seed = o.seed, .max_n = o.n};
  std::vector<RatioStats> rows;

  if (wants(o.families, "planar")) {
    RatioStats tri{.family = "tri"};
    RatioStats sub{.family = "tri-sub"};
    for (const auto& gen : planar_corpus(corpus)) {
      (gen.family == Family::Triangulation ? tri : sub).add(gen);
    }
    rows.push_back(std::move(tri));
    rows.push_back(std::move(sub));
  }
  if (wants(o.families, "forest")) {
    for (std::size_t alpha = 1; alpha <= 4; ++alpha) {
      const std::size_t alphas[] = {alpha};
      RatioStats stats{.family = "forest-union(a=" + std::to_string(alpha) + ")"};
      for (const auto& gen : forest_corpus(corpus, alphas)) stats.add(gen);
      rows.push_back(std::move(stats));
    }
  }
  if (wants(o.families, "small")) {
    RatioStats stats{.family = "random-small"};
    for (const auto& gen : small_corpus(corpus)) stats.add(gen);
    rows.push_back(std::move(stats));
  }

  Sink sink(o.out, fallback);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"family", r.family},
                     {"graphs", r.graphs},
                     {"skipped_nu0", r.skipped},
                     {"ls_min", format_ratio(r.ls_min)},
                     {"ls_mean", r.mean(r.ls_sum)},
                     {"ls_max", format_ratio(r.ls_max)},
                     {"sh2_min", format_ratio(r.sh_min)},
                     {"sh2_mean", r.mean(r.sh_sum)},
                     {"sh2_max", format_ratio(r.sh_max)},
                     {"observation_failures", r.observation_failures}});
    }
    *sink << arr.dump(2) << '\n';
  } else {
    *sink << "family,graphs,skipped_nu0,ls_min,ls_mean,ls_max,sh2_min,sh2_mean,sh2_max,observation_failures\n";
    for (const auto& r : rows) {
      *sink << r.family << ',' << r.graphs << ',' << r.skipped << ',' << format_ratio(r.ls_min) << ','
            << r.mean(r.ls_sum) << ',' << format_ratio(r.ls_max) << ',' << format_ratio(r.sh_min) << ','
            << r.mean(r.sh_sum) << ',' << format_ratio(r.sh_max) << ',' << r.observation_failures << '\n';
    }
  }
  return kExitOk;
}

void add_format(CLI::App* cmd, std::string& format, std::initializer_list<std::string> choices) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(std::vector<std::string>(choices)));
}

void add_corpus_flags(CLI::App* cmd, CorpusFlags& o) {
  cmd->add_option("--families", o.families, "Comma-separated family groups or 'all'");
  cmd->add_option("--seeds", o.seeds, "Number of seeds per family group");
  cmd->add_option("--seed", o.seed, "Base seed");
  cmd->add_option("--n", o.n, "Maximum graph order")->check(CLI::Range(4, 100000));
  add_format(cmd, o.format, {"csv", "json"});
  cmd->add_option("--out", o.out, "Write output to FILE");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binding numbers, Hall-type matching extraction and matching-size estimators", "hallmatch"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph in edge-list (or stream) format");
  gen_cmd->add_option("--family", gen.family, "star|path|cycle|grid|tri|tri-sub|forest-union|random-small|net")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Size parameter (leaves for star, side for grid)");
  gen_cmd->add_option("--rows", gen.rows, "Grid rows (defaults to --n)");
  gen_cmd->add_option("--cols", gen.cols, "Grid columns (defaults to --n)");
  gen_cmd->add_option("--p", gen.p, "Edge probability (tri-sub, random-small)");
  gen_cmd->add_option("--alpha", gen.alpha, "Number of forests (forest-union)");
  gen_cmd->add_option("--edges-per-forest", gen.edges_per_forest, "Edges per forest (default n-1)");
  gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_flag("--stream", gen.as_stream, "Emit a vertex-arrival stream instead of an edge list");
  gen_cmd->add_option("--order-seed", gen.order_seed, "Shuffle the arrival order with this seed")
      ->each([&gen](const std::string&) { gen.shuffle = true; });
  gen_cmd->add_option("--out", gen.out, "Write output to FILE");

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Print nu and estimator values, one CSV row per graph");
  analyze_cmd->add_option("files", analyze.files, "Edge-list files");
  analyze_cmd->add_option("--family", analyze.family, "Generate a graph instead of reading one");
  analyze_cmd->add_option("--n", analyze.n, "Size for --family");
  analyze_cmd->add_option("--p", analyze.p, "Edge probability for --family");
  analyze_cmd->add_option("--alpha", analyze.alpha, "Forests for --family forest-union");
  analyze_cmd->add_option("--seed", analyze.seed, "Seed for --family");
  analyze_cmd->add_option("--t", analyze.t, "Threshold for the K_t column (>= 2)");
  add_format(analyze_cmd, analyze.format, {"csv", "json"});
  analyze_cmd->add_option("--out", analyze.out, "Write output to FILE");

  BindOptions bind;
  auto* bind_cmd = app.add_subcommand("bind", "Exact binding number of a vertex set");
  bind_cmd->add_option("file", bind.file, "Edge-list file")->required();
  bind_cmd->add_option("--x", bind.x, "Comma-separated vertex ids or 'all'");
  bind_cmd->add_flag("--probe", bind.probe, "Experimental: test nu >= c/(c+1)|X| for c = bind(X) <= 1/2");
  add_format(bind_cmd, bind.format, {"text", "json"});
  bind_cmd->add_option("--out", bind.out, "Write output to FILE");

  ExtractOptions ext;
  auto* extract_cmd = app.add_subcommand("extract", "Extract a matching of size >= |X|/(k+1)");
  extract_cmd->add_option("file", ext.file, "Edge-list file")->required();
  extract_cmd->add_option("--x", ext.x, "Comma-separated vertex ids or 'all'");
  extract_cmd->add_option("--k", ext.k, "Load bound k >= 2");
  add_format(extract_cmd, ext.format, {"text", "json"});
  extract_cmd->add_option("--out", ext.out, "Write output to FILE");

  StreamOptions stream;
  auto* stream_cmd = app.add_subcommand("stream-count", "One-pass |L(G)| count over a vertex-arrival stream");
  stream_cmd->add_option("file", stream.file, "Stream file ('v: w1 w2 ...' per line)");
  stream_cmd->add_option("--graph", stream.graph_file, "Build the stream from an edge-list file");
  stream_cmd->add_option("--order-seed", stream.order_seed, "Shuffle the arrival order (with --graph)")
      ->each([&stream](const std::string&) { stream.shuffle = true; });
  add_format(stream_cmd, stream.format, {"text", "json"});
  stream_cmd->add_option("--out", stream.out, "Write output to FILE");

  CorpusFlags verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check every bound over a seeded corpus");
  add_corpus_flags(verify_cmd, verify);

  CorpusFlags experiment;
  auto* experiment_cmd = app.add_subcommand("experiment", "Per-family estimator ratio distribution");
  add_corpus_flags(experiment_cmd, experiment);

  std::vector<const char*> argv{"hallmatch"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err << e.what() << '\n';
      return kExitUsage;
    }

    if (gen_cmd->parsed()) return run_gen(gen, out);
    if (analyze_cmd->parsed()) return run_analyze(analyze, out);
    if (bind_cmd->parsed()) return run_bind(bind, out);
    if (extract_cmd->parsed()) return run_extract(ext, out);
    if (stream_cmd->parsed()) return run_stream_count(stream, out);
    if (verify_cmd->parsed()) return run_verify(verify, out);
    if (experiment_cmd->parsed()) return run_experiment(experiment, out);
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const InconsistentStream& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace hallmatch::cli
