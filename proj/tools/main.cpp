#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "cograph/bijection.hpp"
#include "cograph/constants.hpp"
#include "cograph/experiments.hpp"
#include "cograph/graphon.hpp"
#include "cograph/laws.hpp"
#include "cograph/samplers.hpp"
#include "cograph/series.hpp"
#include "cograph/version.hpp"

using namespace cograph;
using nlohmann::json;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Output sink: a file when --output is given, standard output otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open output file " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::uint64_t default_seed() {
  if (const char* s = std::getenv("COGRAPH_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw UsageError("COGRAPH_SEED must be a non-negative integer");
    }
  }
  return 1;
}

json meta(const std::string& command, json seed, json config) {
  return {{"command", command}, {"seed", seed}, {"version", kVersion}, {"config", std::move(config)}};
}

Progress stderr_progress(const std::string& label, bool quiet) {
  if (quiet) return {};
  auto last = std::make_shared<std::chrono::steady_clock::time_point>(std::chrono::steady_clock::now());
  return [label, last](std::uint64_t done, std::uint64_t total) {
    const auto now = std::chrono::steady_clock::now();
    if (done == total || now - *last > std::chrono::seconds(2)) {
      *last = now;
      std::cerr << label << ": " << done << "/" << total << "\n";
    }
  };
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// JSON ({"n":..,"edges":[[u,v],..]}) or edge list ("n=<int>" then "u v" lines).
LabeledGraph read_graph(const std::string& path) {
  const auto text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return graph_from_json(json::parse(text));
  return graph_from_edge_list(text);
}

Rational parse_probability(const std::string& text) {
  Rational p;
  try {
    p = parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError("cannot parse probability '" + text + "'");
  }
  if (!(p > 0 && p < 1)) throw UsageError("p must lie in the open interval (0, 1)");
  return p;
}

// ---- count ------------------------------------------------------------------

struct CountOptions {
  std::string kind;
  std::size_t max = 0;
  std::string format = "csv";
  std::string output;
};

int cmd_count(const CountOptions& o) {
  if (o.max == 0) throw UsageError("--max must be at least 1");
  const auto table = o.kind == "labelled" ? labelled_counts(o.max) : unlabelled_counts(o.max);
  Sink sink(o.output);
  const json cfg{{"kind", o.kind}, {"max", o.max}, {"format", o.format}};
  if (o.format == "json") {
    json rows = json::array();
    for (std::size_t n = 1; n <= o.max; ++n) {
      const Integer graphs =
          o.kind == "labelled" ? labelled_cograph_count(table, n) : unlabelled_cograph_count(table, n);
      rows.push_back({{"n", n}, {"coefficient", to_string(table[n])}, {"count", table.count(n).str()},
                      {"cographs", graphs.str()}});
    }
    sink.out() << json{{"meta", meta("count", nullptr, cfg)}, {"counts", rows}}.dump(2) << "\n";
  } else {
    sink.out() << "# " << meta("count", nullptr, cfg).dump() << "\n" << to_csv(table);
  }
  return 0;
}

// ---- constants --------------------------------------------------------------

struct ConstantsOptions {
  std::string tol = "1e-12";
  std::size_t order = 64;
  std::string output;
};

Real parse_tolerance(const std::string& s) {
  Real t;
  try {
    t = Real(s);
  } catch (const std::exception&) {
    throw UsageError("cannot parse tolerance '" + s + "'");
  }
  if (!(t > 0) || t >= 1) throw UsageError("--tol must lie in (0, 1)");
  return t;
}

int cmd_constants(const ConstantsOptions& o) {
  const Real tol = parse_tolerance(o.tol);
  const auto ctx = PolyaContext::compute(tol, o.order);
  const auto& r = ctx.report();
  const auto law = xi_zeta_law(ctx);
  const auto eta = eta_law();
  json checks{{"rho_in_unit_interval", r.rho > 0 && r.rho < 1},
              {"residual_below_tol", r.residual_Ey < tol},
              {"mean_xi", static_cast<double>(law.mean_blue())},
              {"mean_xi_is_one", boost::multiprecision::abs(law.mean_blue() - 1) < Real("1e-8")},
              {"xi_support_gcd", law.blue_support_gcd()},
              {"var_eta", static_cast<double>(eta.var_blue())}};
  const bool ok = checks["rho_in_unit_interval"].get<bool>() && checks["residual_below_tol"].get<bool>() &&
                  checks["mean_xi_is_one"].get<bool>() && law.blue_support_gcd() == 1;
  json out{{"meta", meta("constants", nullptr, {{"tol", o.tol}, {"order", o.order}})},
           {"constants", to_json(r)},
           {"checks", checks},
           {"passed", ok}};
  Sink sink(o.output);
  sink.out() << out.dump(2) << "\n";
  return ok ? 0 : kExitFailed;
}

// ---- sample -----------------------------------------------------------------

struct SampleOptions {
  std::string model;
  std::size_t n = 0;
  std::size_t k = 0;
  std::string p = "1/2";
  std::uint64_t count = 1;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::optional<double> window;
  unsigned threads = 1;
  std::string output;
  bool quiet = false;
};

int cmd_sample(const SampleOptions& o) {
  const std::uint64_t seed = o.seed.value_or(default_seed());
  if (o.model == "limit") {
    if (o.k == 0) throw UsageError("sample limit needs -k >= 1");
  } else {
    if (o.n == 0) throw UsageError("sample " + o.model + " needs -n >= 1");
    if (o.model == "unlabelled" && o.n < 3) throw UsageError("unlabelled cographs need n >= 3");
  }
  if (o.window && (*o.window < 0 || *o.window >= 1)) throw UsageError("--window must lie in [0, 1)");
  const Rational p = parse_probability(o.p);
  const double pd = static_cast<double>(to_real(p));

  std::shared_ptr<const ModelContext> ctx;
  if (o.model == "unlabelled") ctx = ModelContext::create();

  json cfg{{"model", o.model}, {"count", o.count}, {"format", o.format}};
  if (o.model == "limit") {
    cfg["k"] = o.k;
    cfg["p"] = to_string(p);
  } else {
    cfg["n"] = o.n;
    cfg["size_window"] = o.window ? json(*o.window) : json(nullptr);
  }
  Sink sink(o.output);
  sink.out() << json{{"meta", meta("sample", seed, cfg)}}.dump() << "\n";

  SampleBudget budget;
  budget.size_window = o.window;
  const std::function<json(std::uint64_t)> one = [&](std::uint64_t i) {
    Rng rng(seed, i);
    json rec{{"index", i}};
    LabeledGraph g;
    if (o.model == "limit") {
      g = sample_Hkp(o.k, pd, rng);
    } else {
      const auto s = o.model == "labelled" ? sample_labelled_cograph(o.n, rng, budget)
                                           : sample_unlabelled_cograph(o.n, ctx->boltzmann(), rng, budget);
      g = s.graph;
      rec["cotree"] = serialize_cotree(s.cotree);
      rec["attempts"] = s.attempts;
    }
    if (!is_cograph(g)) throw std::logic_error("sampler produced a graph with an induced P4");
    rec["graph"] = graph_to_json(g);
    return rec;
  };
  const auto records = parallel_reps<json>(o.count, o.threads, one, stderr_progress("sample", o.quiet));
  for (const auto& rec : records) {
    if (o.format == "edges") {
      sink.out() << "# sample " << rec["index"] << "\n"
                 << graph_to_edge_list(graph_from_json(rec["graph"]));
    } else {
      sink.out() << rec.dump() << "\n";
    }
  }
  return 0;
}

// ---- density ----------------------------------------------------------------

struct DensityOptions {
  std::string graph;
  std::string pattern;
  std::uint32_t k = 0;
  std::uint64_t reps = 0;
  std::optional<std::uint64_t> seed;
  std::string p = "1/2";
  std::string matrix_format = "csv";
  std::string order = "input";
  bool isomorphism = false;
  std::string output;
};

int cmd_density_tind(const DensityOptions& o) {
  if (o.k == 0 || o.k > kMaxPatternVertices) throw UsageError("-k must lie in [1, 11]");
  const std::uint64_t seed = o.seed.value_or(default_seed());
  const auto g = read_graph(o.graph);
  PatternMask mask = 0;
  try {
    mask = pattern_from_key(o.k, o.pattern);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const auto h = graph_of_pattern(o.k, mask);
  if (g.n() < o.k) throw UsageError("graph has fewer vertices than the pattern");
  DensityEstimate d;
  if (o.reps == 0) {
    if (o.k > 5) throw UsageError("exact densities need k <= 5; pass --reps for Monte Carlo");
    d = t_ind_exact(h, g);
  } else {
    Rng rng(seed, 0);
    d = t_ind_mc(h, g, o.reps, rng);
  }
  json cfg{{"graph", o.graph}, {"pattern", o.pattern}, {"k", o.k}, {"reps", o.reps}};
  json out{{"meta", meta("density tind", seed, cfg)},
           {"value", d.value},
           {"std_error", d.std_error},
           {"method", d.method == DensityEstimate::Method::exact ? "exact" : "montecarlo"},
           {"samples", d.reps}};
  Sink sink(o.output);
  sink.out() << out.dump(2) << "\n";
  return 0;
}

int cmd_density_limit(const DensityOptions& o) {
  if (o.k < 2 || o.k > 6) throw UsageError("-k must lie in [2, 6]");
  const Rational p = parse_probability(o.p);
  auto table = q_exact(o.k, p);
  json out = fingerprint_to_json(o.k, p, table);
  if (o.isomorphism) {
    json iso = json::object();
    for (const auto& [m, q] : quotient_by_isomorphism(o.k, table)) iso[pattern_key(o.k, m)] = to_string(q);
    out["isomorphism_classes"] = iso;
  }
  out["meta"] = meta("density limit", nullptr, {{"k", o.k}, {"p", to_string(p)}});
  Sink sink(o.output);
  sink.out() << out.dump(2) << "\n";
  return 0;
}

int cmd_density_matrix(const DensityOptions& o) {
  const auto g = read_graph(o.graph);
  const auto w = step_graphon_matrix(g, o.order == "degree" ? VertexOrder::degree : VertexOrder::input);
  Sink sink(o.output);
  if (o.matrix_format == "pgm") {
    sink.out() << to_pgm(w);
  } else {
    sink.out() << "# " << meta("density matrix", nullptr, {{"graph", o.graph}, {"order", o.order}}).dump() << "\n"
               << to_csv(w);
  }
  return 0;
}

// ---- experiment -------------------------------------------------------------

struct ExperimentOptions {
  std::string name;
  std::string model = "labelled";
  std::size_t n = 1000;
  std::size_t k = 2;
  std::uint64_t reps = 1000;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  std::optional<double> window;
  bool calibrate = false;
  std::string format = "json";
  std::vector<std::size_t> n_list;
  std::uint64_t patterns = 100;
  std::string output;
  std::string histogram;
  bool quiet = false;
};

int cmd_experiment(const ExperimentOptions& o) {
  const auto names = experiment_names();
  if (std::find(names.begin(), names.end(), o.name) == names.end()) {
    std::string list;
    for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
    throw UsageError("unknown experiment '" + o.name + "'; available: " + list);
  }
  if (o.window && (*o.window < 0 || *o.window >= 1)) throw UsageError("--window must lie in [0, 1)");
  ExperimentConfig c;
  c.name = o.name;
  try {
    c.model = parse_model(o.model);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  c.n = o.n;
  c.k = o.k;
  c.reps = o.reps;
  c.seed = o.seed.value_or(default_seed());
  c.threads = o.threads;
  c.size_window = o.window;
  c.calibration = o.calibrate;
  c.patterns_per_graph = o.patterns;
  if (!o.n_list.empty()) c.n_list = o.n_list;
  if (c.model == Model::unlabelled && c.n < 3 && o.name != "llt") throw UsageError("unlabelled model needs n >= 3");

  const auto ctx = ModelContext::create();
  const auto report = run_experiment(c, *ctx, stderr_progress(o.name, o.quiet));
  Sink sink(o.output);
  if (o.format == "csv") {
    sink.out() << "# " << meta("experiment", c.seed, to_json(c)).dump() << "\n" << csv_header() << to_csv_row(report);
  } else {
    sink.out() << to_json(report).dump(2) << "\n";
  }
  if (!o.histogram.empty()) {
    Sink h(o.histogram);
    h.out() << "# " << meta("experiment", c.seed, to_json(c)).dump() << "\n" << histogram_csv(report);
  }
  if (!o.quiet)
    std::cerr << o.name << ": " << report.statistic_name << " = " << report.statistic
              << (report.passed ? " (pass)" : " (fail)") << (report.asserted ? "" : " [calibration]") << "\n";
  return (!report.asserted || report.passed) ? 0 : kExitFailed;
}

// ---- oracle -----------------------------------------------------------------

struct OracleOptions {
  std::string output;
};

bool has_induced_p4(const LabeledGraph& g) {
  const std::uint32_t n = g.n();
  for (std::uint32_t a = 1; a <= n; ++a)
    for (std::uint32_t b = 1; b <= n; ++b)
      for (std::uint32_t c = 1; c <= n; ++c)
        for (std::uint32_t d = 1; d <= n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) && !g.has_edge(a, c) && !g.has_edge(a, d) &&
              !g.has_edge(b, d))
            return true;
        }
  return false;
}

int cmd_oracle(const OracleOptions& o) {
  json checks = json::array();
  bool all = true;
  const auto record = [&](const std::string& name, bool ok, json detail = {}) {
    checks.push_back({{"check", name}, {"passed", ok}, {"detail", std::move(detail)}});
    all = all && ok;
    std::cerr << (ok ? "PASS " : "FAIL ") << name << "\n";
  };

  {
    const auto t = labelled_counts(7);
    bool ok = true;
    json d = json::array();
    for (std::size_t n = 1; n <= 7; ++n) {
      const auto e = enumerate_labelled_trees(n).size();
      ok = ok && Integer(e) == t.count(n);
      d.push_back({{"n", n}, {"recurrence", t.count(n).str()}, {"enumeration", e}});
    }
    record("labelled counts vs enumeration (n <= 7)", ok, d);
  }
  {
    const auto a = unlabelled_counts(10);
    bool ok = true;
    json d = json::array();
    for (std::size_t n = 1; n <= 10; ++n) {
      const auto e = enumerate_unlabelled_trees(n).size();
      ok = ok && Integer(e) == a.count(n);
      d.push_back({{"n", n}, {"recurrence", a.count(n).str()}, {"enumeration", e}});
    }
    record("unlabelled counts vs canonical enumeration (n <= 10)", ok, d);
  }
  {
    // Recognition against exhaustive P4 search on all graphs up to 5 vertices.
    bool ok = true;
    std::size_t graphs = 0;
    const auto t = labelled_counts(5);
    for (std::uint32_t n = 1; n <= 5; ++n) {
      const std::uint32_t pairs = n * (n - 1) / 2;
      std::size_t cographs = 0;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) {
        const auto g = graph_of_pattern(n, m);
        const bool c = is_cograph(g);
        ok = ok && c == !has_induced_p4(g);
        cographs += c;
        ++graphs;
      }
      ok = ok && labelled_cograph_count(t, n) == cographs;
    }
    record("cograph recognition and census vs P4 search (n <= 5)", ok, {{"graphs", graphs}});
  }
  {
    bool ok = true;
    std::size_t trees = 0;
    for (std::size_t n = 2; n <= 6; ++n)
      for (const auto& s : enumerate_labelled_trees(n))
        for (auto sign : {Sign::plus, Sign::minus}) {
          auto t = parse_cotree(s).tree;
          assign_alternating_signs(t, sign);
          const auto g = cotree_to_cograph(t);
          ok = ok && serialize_cotree(cograph_to_cotree(g)) == serialize_cotree(t) && g == gen_cotree_to_graph(t);
          ++trees;
        }
    record("cotree/cograph round trip (n <= 6)", ok, {{"cotrees", trees}});
  }
  {
    bool ok = true;
    for (std::uint32_t k = 2; k <= 5; ++k) {
      const Rational p(2, 7);
      const auto q = q_exact(k, p);
      const auto qc = q_exact(k, 1 - p);
      const PatternMask full = (PatternMask{1} << (k * (k - 1) / 2)) - 1;
      Rational total = 0;
      for (const auto& [m, v] : q) {
        total += v;
        const auto it = qc.find(~m & full);
        ok = ok && it != qc.end() && it->second == v && !has_induced_p4(graph_of_pattern(k, m));
      }
      ok = ok && total == 1;
    }
    record("limit law: normalization, complement symmetry, P4-free support (k <= 5)", ok);
  }
  {
    std::map<std::string, int> seen;
    for (const auto& t : enumerate_proper_k_trees(5)) ++seen[plane_string(t)];
    record("proper 5-trees: count 2^4 * 7!!", seen.size() == proper_tree_count(5) && seen.size() == 1680);
  }

  json out{{"meta", meta("oracle", nullptr, json::object())}, {"checks", checks}, {"passed", all}};
  Sink sink(o.output);
  sink.out() << out.dump(2) << "\n";
  return all ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random cographs: enumeration, samplers, limit laws and experiments", "cograph"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CountOptions count;
  auto* c = app.add_subcommand("count", "Coefficient tables of the tree series");
  c->add_option("kind", count.kind, "labelled | unlabelled")->required()->check(CLI::IsMember({"labelled", "unlabelled"}));
  c->add_option("--max", count.max, "Largest size (>= 1)")->required();
  c->add_option("--format", count.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  c->add_option("-o,--output", count.output, "Output file");

  ConstantsOptions constants;
  auto* k = app.add_subcommand("constants", "Singularity and offspring-law constants of the unlabelled model");
  k->add_option("--tol", constants.tol, "Bisection tolerance (default 1e-12)");
  k->add_option("--order", constants.order, "Truncation order of the exact series (default 64)")
      ->check(CLI::Range(8, 2000));
  k->add_option("-o,--output", constants.output, "Output file");

  SampleOptions sample;
  auto* s = app.add_subcommand("sample", "Draw random cographs or limit graphs H_k^p");
  s->add_option("model", sample.model, "labelled | unlabelled | limit")
      ->required()
      ->check(CLI::IsMember({"labelled", "unlabelled", "limit"}));
  s->add_option("-n", sample.n, "Number of vertices");
  s->add_option("-k", sample.k, "Number of vertices of H_k^p");
  s->add_option("-p", sample.p, "Plus-sign probability of H_k^p, in (0,1) (default 1/2)");
  s->add_option("--count", sample.count, "Number of samples (default 1)");
  s->add_option("--seed", sample.seed, "Seed (default: $COGRAPH_SEED, else 1)");
  s->add_option("--format", sample.format, "json | edges")->check(CLI::IsMember({"json", "edges"}));
  s->add_option("--window", sample.window, "Accept unlabelled sizes within this relative window");
  s->add_option("--threads", sample.threads, "Worker threads")->check(CLI::Range(1U, 256U));
  s->add_option("-o,--output", sample.output, "Output file");
  s->add_flag("-q,--quiet", sample.quiet, "No progress on stderr");

  DensityOptions density;
  auto* d = app.add_subcommand("density", "Induced densities, limit pattern laws and step graphons");
  d->require_subcommand(1);
  auto* dt = d->add_subcommand("tind", "Induced density of a pattern in a graph");
  dt->add_option("--graph", density.graph, "Graph file (JSON or edge list)")->required();
  dt->add_option("--pattern", density.pattern, "Pattern edges on [k], e.g. 1-2,2-3")->required();
  dt->add_option("-k", density.k, "Pattern size")->required();
  dt->add_option("--reps", density.reps, "Monte Carlo samples (0 = exact)");
  dt->add_option("--seed", density.seed, "Seed (default: $COGRAPH_SEED, else 1)");
  dt->add_option("-o,--output", density.output, "Output file");
  auto* dl = d->add_subcommand("limit", "Exact law of H_k^p");
  dl->add_option("-k", density.k, "Pattern size (2..6)")->required();
  dl->add_option("-p", density.p, "Plus-sign probability in (0,1), e.g. 1/2");
  dl->add_flag("--isomorphism", density.isomorphism, "Add the isomorphism-class quotient");
  dl->add_option("-o,--output", density.output, "Output file");
  auto* dm = d->add_subcommand("matrix", "Adjacency step function of a graph");
  dm->add_option("--graph", density.graph, "Graph file (JSON or edge list)")->required();
  dm->add_option("--format", density.matrix_format, "csv | pgm")->check(CLI::IsMember({"csv", "pgm"}));
  dm->add_option("--order", density.order, "input | degree")->check(CLI::IsMember({"input", "degree"}));
  dm->add_option("-o,--output", density.output, "Output file");

  ExperimentOptions exp;
  auto* e = app.add_subcommand("experiment", "Statistical experiments: shape, parity, distance, llt, density");
  e->add_option("name", exp.name, "Experiment name")->required();
  e->add_option("--model", exp.model, "labelled | unlabelled");
  e->add_option("-n", exp.n, "Tree size (leaves / vertices)");
  e->add_option("-k", exp.k, "Number of chosen leaves or pattern size");
  e->add_option("--reps", exp.reps, "Replicates");
  e->add_option("--seed", exp.seed, "Seed (default: $COGRAPH_SEED, else 1)");
  e->add_option("--threads", exp.threads, "Worker threads")->check(CLI::Range(1U, 256U));
  e->add_option("--window", exp.window, "Relative size window for the unlabelled model");
  e->add_flag("--calibrate", exp.calibrate, "Report without asserting");
  e->add_option("--format", exp.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  e->add_option("--n-list", exp.n_list, "Sizes for llt (default 20,50,80)")->delimiter(',');
  e->add_option("--patterns", exp.patterns, "Patterns per graph for density (default 100)");
  e->add_option("-o,--output", exp.output, "Report file");
  e->add_option("--histogram", exp.histogram, "Histogram CSV file");
  e->add_flag("-q,--quiet", exp.quiet, "No progress on stderr");

  OracleOptions oracle;
  auto* o = app.add_subcommand("oracle", "Brute-force cross-checks of the exact components");
  o->add_option("-o,--output", oracle.output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForVersion& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (*c) return cmd_count(count);
    if (*k) return cmd_constants(constants);
    if (*s) return cmd_sample(sample);
    if (*dt) return cmd_density_tind(density);
    if (*dl) return cmd_density_limit(density);
    if (*dm) return cmd_density_matrix(density);
    if (*e) return cmd_experiment(exp);
    if (*o) return cmd_oracle(oracle);
  } catch (const UsageError& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
