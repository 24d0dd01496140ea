#include "cograph/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cograph/bijection.hpp"
#include "cograph/graphon.hpp"
#include "cograph/kernels.hpp"
#include "cograph/laws.hpp"
#include "cograph/skeleton.hpp"
#include "cograph/stats.hpp"
#include "cograph/version.hpp"

namespace cograph {

std::string model_name(Model m) { return m == Model::labelled ? "labelled" : "unlabelled"; }

Model parse_model(const std::string& s) {
  if (s == "labelled" || s == "labeled") return Model::labelled;
  if (s == "unlabelled" || s == "unlabeled") return Model::unlabelled;
  throw std::invalid_argument("unknown model: " + s);
}

std::shared_ptr<const ModelContext> ModelContext::create(std::size_t order) {
  auto ctx = std::make_shared<ModelContext>();
  ctx->polya_ = PolyaContext::compute(Real("1e-12"), order);
  ctx->boltzmann_ = std::make_unique<BoltzmannSampler>(ctx->polya_, ctx->polya_.report().rho);
  return ctx;
}

Tree sample_model_tree(Model model, std::size_t n, const ModelContext& ctx, Rng& rng, const SampleBudget& budget,
                       std::uint64_t* attempts) {
  if (model == Model::labelled) return sample_conditioned_eta_tree(n, rng, budget, attempts);
  Tree t = sample_conditioned_polya_tree(n, ctx.boltzmann(), rng, budget, attempts);
  for (NodeId v = 0; v < t.size(); ++v) {
    if (t.node(v).child_count < 2) continue;
    auto kids = t.child_list(v);
    rng.shuffle(kids);
    t.set_child_order(v, kids);
  }
  return t;
}

double distance_scale(Model model, std::size_t m, const ModelContext& ctx) {
  const double sm = std::sqrt(static_cast<double>(m));
  if (model == Model::labelled) {
    const auto& eta = eta_sampler();
    return std::sqrt(eta.p0()) * std::sqrt(eta.variance()) / sm;
  }
  const auto& c = ctx.constants();
  return static_cast<double>(c.var_xi) / (static_cast<double>(c.sigma) * sm);
}

nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json j{{"name", c.name},         {"model", model_name(c.model)}, {"n", c.n},
                   {"k", c.k},               {"reps", c.reps},               {"seed", c.seed},
                   {"calibration", c.calibration}, {"alpha", c.alpha},       {"ks_threshold", c.ks_threshold},
                   {"tv_threshold", c.tv_threshold}, {"llt_threshold", c.llt_threshold},
                   {"n_list", c.n_list},     {"patterns_per_graph", c.patterns_per_graph}};
  j["size_window"] = c.size_window ? nlohmann::json(*c.size_window) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const ExperimentReport& r) {
  nlohmann::json j;
  j["test"] = r.name;
  j["version"] = kVersion;
  j["seed"] = r.config.seed;
  j["config"] = to_json(r.config);
  j["sample_size"] = r.sample_size;
  j["statistic_name"] = r.statistic_name;
  j["statistic"] = r.statistic;
  j["p_value"] = r.p_value ? nlohmann::json(*r.p_value) : nlohmann::json(nullptr);
  j["threshold"] = r.threshold;
  j["passed"] = r.passed;
  j["asserted"] = r.asserted;
  j["details"] = r.details;
  return j;
}

std::string csv_header() { return "test,model,n,k,seed,sample_size,statistic_name,statistic,p_value,threshold,passed,asserted\n"; }

std::string to_csv_row(const ExperimentReport& r) {
  std::ostringstream os;
  os.precision(10);
  os << r.name << ',' << model_name(r.config.model) << ',' << r.config.n << ',' << r.config.k << ',' << r.config.seed
     << ',' << r.sample_size << ',' << r.statistic_name << ',' << r.statistic << ',';
  if (r.p_value) os << *r.p_value;
  os << ',' << r.threshold << ',' << (r.passed ? "true" : "false") << ',' << (r.asserted ? "true" : "false") << '\n';
  return os.str();
}

std::string histogram_csv(const ExperimentReport& r) {
  std::string out;
  for (const auto& row : r.histogram) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out.push_back(',');
      out += row[i];
    }
    out.push_back('\n');
  }
  return out;
}

std::vector<std::string> experiment_names() { return {"shape", "parity", "distance", "llt", "density"}; }

namespace {

struct SkeletonDraw {
  bool proper = false;
  std::string shape_key;
  std::uint32_t parity_index = 0;
  std::uint32_t height_index = 0;
  double scaled_sum = 0;
  std::size_t leaves = 0;
  std::uint64_t attempts = 0;
};

SkeletonDraw draw_skeleton(const ExperimentConfig& c, const ModelContext& ctx, std::uint64_t rep) {
  Rng rng(c.seed, rep);
  SampleBudget budget;
  budget.size_window = c.size_window;
  SkeletonDraw d;
  Tree t = sample_model_tree(c.model, c.n, ctx, rng, budget, &d.attempts);
  const auto leaves = t.leaves();
  d.leaves = leaves.size();
  if (leaves.size() < c.k) return d;
  std::vector<NodeId> chosen;
  for (auto i : rng.sample_distinct(leaves.size(), c.k)) chosen.push_back(leaves[i]);
  const SkeletonSummary s = spanned_skeleton(t, chosen);
  d.proper = s.proper;
  if (!s.proper) return d;
  d.shape_key = plane_string(s.shape);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < s.distances.size(); ++i) {
    d.parity_index |= static_cast<std::uint32_t>(s.parities[i]) << i;
    d.height_index |= static_cast<std::uint32_t>(s.height_parities[i]) << i;
    total += s.distances[i];
  }
  d.scaled_sum = static_cast<double>(total) * distance_scale(c.model, d.leaves, ctx);
  return d;
}

std::vector<SkeletonDraw> draw_all(const ExperimentConfig& c, const ModelContext& ctx, const Progress& progress) {
  if (c.k < 1) throw std::invalid_argument("k must be positive");
  if (c.reps == 0) throw std::invalid_argument("reps must be positive");
  return parallel_reps<SkeletonDraw>(
      c.reps, c.threads, [&](std::uint64_t rep) { return draw_skeleton(c, ctx, rep); }, progress);
}

ExperimentReport base_report(const std::string& name, const ExperimentConfig& c) {
  ExperimentReport r;
  r.name = name;
  r.config = c;
  r.config.name = name;
  r.asserted = !c.calibration;
  return r;
}

void record_common(ExperimentReport& r, const std::vector<SkeletonDraw>& draws) {
  std::uint64_t proper = 0, attempts = 0;
  double mean_leaves = 0;
  for (const auto& d : draws) {
    proper += d.proper;
    attempts += d.attempts;
    mean_leaves += static_cast<double>(d.leaves);
  }
  r.sample_size = proper;
  r.details["trees"] = draws.size();
  r.details["non_proper_fraction"] = 1.0 - static_cast<double>(proper) / static_cast<double>(draws.size());
  r.details["mean_attempts"] = static_cast<double>(attempts) / static_cast<double>(draws.size());
  r.details["mean_leaves"] = mean_leaves / static_cast<double>(draws.size());
  r.details["size_window"] = r.config.size_window ? nlohmann::json(*r.config.size_window) : nlohmann::json(nullptr);
  if (proper < 10) throw std::runtime_error("insufficient accepted samples for " + r.name);
}

std::string bits(std::uint32_t v, std::size_t width) {
  std::string s;
  for (std::size_t i = 0; i < width; ++i) s.push_back(((v >> i) & 1U) ? '1' : '0');
  return s;
}

}  // namespace

ExperimentReport experiment_shape(const ExperimentConfig& c, const ModelContext& ctx, const Progress& progress) {
  if (c.k > 7) throw std::invalid_argument("shape test supports k <= 7");
  auto r = base_report("shape", c);
  const auto draws = draw_all(c, ctx, progress);
  record_common(r, draws);
  std::vector<std::string> keys;
  for (const auto& t : enumerate_proper_k_trees(c.k)) keys.push_back(plane_string(t));
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < keys.size(); ++i) index[keys[i]] = i;
  std::vector<std::uint64_t> counts(keys.size(), 0);
  for (const auto& d : draws)
    if (d.proper) ++counts.at(index.at(d.shape_key));
  r.statistic_name = "chi_squared";
  r.threshold = c.alpha;
  if (counts.size() < 2) {
    r.statistic = 0;
    r.p_value = 1.0;
  } else {
    const auto chi = chi_squared_uniform(counts);
    r.statistic = chi.statistic;
    r.p_value = chi.p_value;
    r.details["df"] = chi.df;
  }
  r.details["cells"] = counts.size();
  r.passed = *r.p_value > c.alpha;
  r.histogram.push_back({"shape", "count", "expected"});
  const double expected = static_cast<double>(r.sample_size) / static_cast<double>(counts.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    r.histogram.push_back({"\"" + keys[i] + "\"", std::to_string(counts[i]), std::to_string(expected)});
  return r;
}

ExperimentReport experiment_parity(const ExperimentConfig& c, const ModelContext& ctx, const Progress& progress) {
  if (c.k > 8) throw std::invalid_argument("parity test supports k <= 8");
  auto r = base_report("parity", c);
  const auto draws = draw_all(c, ctx, progress);
  record_common(r, draws);
  const std::size_t width = 2 * c.k - 1;
  std::vector<std::uint64_t> counts(std::size_t{1} << width, 0), heights(std::size_t{1} << width, 0);
  for (const auto& d : draws)
    if (d.proper) {
      ++counts[d.parity_index];
      ++heights[d.height_index];
    }
  const auto chi = chi_squared_uniform(counts);
  const auto chi_h = chi_squared_uniform(heights);
  r.statistic_name = "chi_squared";
  r.statistic = chi.statistic;
  r.p_value = chi.p_value;
  r.threshold = c.alpha;
  r.passed = chi.p_value > c.alpha;
  r.details["df"] = chi.df;
  r.details["height_parity"] = {{"statistic", chi_h.statistic}, {"p_value", chi_h.p_value}};
  r.histogram.push_back({"parities", "path_length_count", "height_count", "expected"});
  const double expected = static_cast<double>(r.sample_size) / static_cast<double>(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    r.histogram.push_back({bits(static_cast<std::uint32_t>(i), width), std::to_string(counts[i]),
                           std::to_string(heights[i]), std::to_string(expected)});
  return r;
}

ExperimentReport experiment_distance(const ExperimentConfig& c, const ModelContext& ctx, const Progress& progress) {
  auto r = base_report("distance", c);
  const auto draws = draw_all(c, ctx, progress);
  record_common(r, draws);
  std::vector<double> xs;
  for (const auto& d : draws)
    if (d.proper) xs.push_back(d.scaled_sum);
  const double dof = 2.0 * static_cast<double>(c.k);
  const double ks = ks_statistic(xs, [dof](double t) { return chi_cdf(t, dof); });
  r.statistic_name = "ks_distance";
  r.statistic = ks;
  r.p_value = ks_p_value(ks, xs.size());
  r.threshold = c.ks_threshold;
  r.passed = ks < c.ks_threshold;
  r.details["scale_at_n"] = distance_scale(c.model, c.n, ctx);
  r.details["reference"] = "chi distribution with " + std::to_string(2 * c.k) + " degrees of freedom";
  const auto ms = mean_and_stderr(xs);
  r.details["mean"] = ms.mean;
  r.details["mean_stderr"] = ms.std_error;
  r.details["reference_mean"] = std::sqrt(2.0) * std::exp(std::lgamma((dof + 1) / 2) - std::lgamma(dof / 2));
  r.histogram.push_back({"bin_low", "bin_high", "count", "expected"});
  const double width = 0.125;
  for (int b = 0; b < 48; ++b) {
    const double lo = b * width, hi = lo + width;
    std::uint64_t cnt = 0;
    for (double x : xs) cnt += x >= lo && x < hi;
    const double e = (chi_cdf(hi, dof) - chi_cdf(lo, dof)) * static_cast<double>(xs.size());
    r.histogram.push_back({std::to_string(lo), std::to_string(hi), std::to_string(cnt), std::to_string(e)});
  }
  return r;
}

std::vector<double> leafcount_sum_distribution(const ConstantsReport& c, std::size_t n, std::size_t order) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  const auto base = boltzmann_leaf_distribution(c, order);
  std::vector<double> result(order + 1, 0.0), power = base, tmp(order + 1);
  result[0] = 1.0;
  for (std::size_t e = n;;) {
    if (e & 1U) {
      kernels::convolve(result, power, tmp);
      result.swap(tmp);
    }
    e >>= 1U;
    if (!e) break;
    kernels::convolve(power, power, tmp);
    power.swap(tmp);
  }
  return result;
}

ExperimentReport experiment_stable_llt(const ExperimentConfig& c, const ModelContext& ctx, const Progress& progress) {
  auto r = base_report("llt", c);
  if (c.n_list.empty()) throw std::invalid_argument("llt needs a list of n values");
  const auto& k = ctx.constants();
  const double sigma2 = static_cast<double>(k.sigma * k.sigma);
  nlohmann::json per_n = nlohmann::json::array();
  std::vector<double> maxima;
  double at_target = -1;
  r.histogram.push_back({"n", "r", "x", "scaled_probability", "limit_density"});
  std::uint64_t done = 0;
  for (std::size_t n : c.n_list) {
    const double n2 = static_cast<double>(n) * static_cast<double>(n);
    // Grid r <= 6 n^2 / sigma^2, i.e. rescaled x <= 6.
    const auto order = static_cast<std::size_t>(std::ceil(6 * n2 / sigma2));
    const auto dist = leafcount_sum_distribution(k, n, order);
    const double mode_r = n2 / (3 * sigma2);
    double worst = 0, worst_x = 0, near_mode = 0;
    for (std::size_t rr = 1; rr <= order; ++rr) {
      const double x = sigma2 * static_cast<double>(rr) / n2;
      const double lhs = n2 * dist[rr];
      const double rhs = sigma2 * stable_density(x);
      const double diff = std::abs(lhs - rhs);
      if (diff > worst) {
        worst = diff;
        worst_x = x;
      }
      if (static_cast<double>(rr) >= 0.8 * mode_r && static_cast<double>(rr) <= 1.25 * mode_r)
        near_mode = std::max(near_mode, diff);
      if (rr % std::max<std::size_t>(1, order / 200) == 0)
        r.histogram.push_back({std::to_string(n), std::to_string(rr), std::to_string(x), std::to_string(lhs),
                               std::to_string(rhs)});
    }
    maxima.push_back(worst);
    if (n == c.n) at_target = worst;
    per_n.push_back({{"n", n},
                     {"grid_max_r", order},
                     {"max_discrepancy", worst},
                     {"argmax_x", worst_x},
                     {"near_mode_discrepancy", near_mode}});
    if (progress) progress(++done, c.n_list.size());
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < maxima.size(); ++i) decreasing = decreasing && maxima[i] < maxima[i - 1];
  if (at_target < 0) at_target = maxima.back();
  r.statistic_name = "max_discrepancy";
  r.statistic = at_target;
  r.threshold = c.llt_threshold;
  r.sample_size = c.n_list.size();
  r.details["per_n"] = per_n;
  r.details["decreasing"] = decreasing;
  r.details["method"] = "exact convolution of the leaf-count law";
  r.details["kernel"] = kernels::isa_name(kernels::active_isa());
  r.passed = at_target < c.llt_threshold && decreasing;
  return r;
}

namespace {

struct GraphDraw {
  std::map<PatternMask, std::uint64_t> patterns;
  double edge_density = 0;
  bool cograph = true;
  std::uint64_t attempts = 0;
};

}  // namespace

ExperimentReport experiment_density(const ExperimentConfig& c, const ModelContext& ctx, const Progress& progress) {
  if (c.k < 2 || c.k > 6) throw std::invalid_argument("density experiment supports 2 <= k <= 6");
  if (c.reps == 0) throw std::invalid_argument("reps must be positive");
  auto r = base_report("density", c);
  const auto k = static_cast<std::uint32_t>(c.k);
  const auto draws = parallel_reps<GraphDraw>(
      c.reps, c.threads,
      [&](std::uint64_t rep) {
        Rng rng(c.seed, rep);
        SampleBudget budget;
        budget.size_window = c.size_window;
        GraphDraw d;
        const CographSample s = c.model == Model::labelled
                                    ? sample_labelled_cograph(c.n, rng, budget)
                                    : sample_unlabelled_cograph(c.n, ctx.boltzmann(), rng, budget);
        d.attempts = s.attempts;
        const double nn = static_cast<double>(s.graph.n());
        d.edge_density = static_cast<double>(s.graph.edge_count()) / (nn * (nn - 1) / 2);
        d.cograph = is_cograph(s.graph);
        for (std::uint64_t i = 0; i < c.patterns_per_graph; ++i) ++d.patterns[sample_pattern(s.graph, k, rng)];
        return d;
      },
      progress);

  std::map<PatternMask, std::uint64_t> pooled;
  std::vector<double> edge;
  std::uint64_t failures = 0, total = 0, p4 = 0;
  const PatternMask complete = (PatternMask{1} << (k * (k - 1) / 2)) - 1;
  for (const auto& d : draws) {
    edge.push_back(d.edge_density);
    failures += !d.cograph;
    for (const auto& [m, cnt] : d.patterns) {
      pooled[m] += cnt;
      total += cnt;
      if (k >= 4 && !is_cograph(graph_of_pattern(k, m))) p4 += cnt;
    }
  }
  const auto exact = q_exact(k, Rational(1, 2));
  const double tv = total_variation(pooled, exact);
  const auto ms = mean_and_stderr(edge);
  const double complete_freq = static_cast<double>(pooled[complete]) / static_cast<double>(total);
  r.statistic_name = "total_variation";
  r.statistic = tv;
  r.threshold = c.tv_threshold;
  r.sample_size = total;
  r.details["graphs"] = draws.size();
  r.details["edge_density_mean"] = ms.mean;
  r.details["edge_density_stderr"] = ms.std_error;
  r.details["complete_pattern_density"] = complete_freq;
  r.details["complete_pattern_limit"] = static_cast<double>(to_real(exact.count(complete) ? exact.at(complete) : Rational(0)));
  r.details["non_cographs"] = failures;
  r.details["patterns_with_induced_p4"] = p4;
  r.details["tv_isomorphism_classes"] = [&] {
    std::map<PatternMask, double> a, b;
    for (const auto& [m, cnt] : pooled) a[m] = static_cast<double>(cnt) / static_cast<double>(total);
    for (const auto& [m, q] : exact) b[m] = static_cast<double>(to_real(q));
    return total_variation(quotient_by_isomorphism(k, a), quotient_by_isomorphism(k, b));
  }();
  r.passed = tv < c.tv_threshold && failures == 0 && p4 == 0;
  r.histogram.push_back({"pattern", "count", "empirical", "limit"});
  std::map<PatternMask, int> keys;
  for (const auto& [m, cnt] : pooled) keys[m] = 1;
  for (const auto& [m, q] : exact) keys[m] = 1;
  for (const auto& [m, unused] : keys) {
    (void)unused;
    const std::uint64_t cnt = pooled.count(m) ? pooled.at(m) : 0;
    const double lim = exact.count(m) ? static_cast<double>(to_real(exact.at(m))) : 0.0;
    r.histogram.push_back({"\"" + pattern_key(k, m) + "\"", std::to_string(cnt),
                           std::to_string(static_cast<double>(cnt) / static_cast<double>(total)), std::to_string(lim)});
  }
  return r;
}

ExperimentReport run_experiment(const ExperimentConfig& c, const ModelContext& ctx, const Progress& progress) {
  if (c.name == "shape") return experiment_shape(c, ctx, progress);
  if (c.name == "parity") return experiment_parity(c, ctx, progress);
  if (c.name == "distance") return experiment_distance(c, ctx, progress);
  if (c.name == "llt") return experiment_stable_llt(c, ctx, progress);
  if (c.name == "density") return experiment_density(c, ctx, progress);
  std::string names;
  for (const auto& n : experiment_names()) names += (names.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown experiment '" + c.name + "'; available: " + names);
}

}  // namespace cograph
