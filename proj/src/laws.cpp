#include "cograph/laws.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cograph/kernels.hpp"

namespace cograph {

using boost::multiprecision::exp;
using boost::multiprecision::log;

OffspringLaw::OffspringLaw(std::vector<Outcome> outcomes, Real tail_bound, bool bivariate)
    : outcomes_(std::move(outcomes)), tail_bound_(std::move(tail_bound)), bivariate_(bivariate) {
  for (const auto& o : outcomes_) {
    if (o.prob < 0) throw std::invalid_argument("negative probability in offspring law");
    max_blue_ = std::max(max_blue_, o.blue);
    max_green_ = std::max(max_green_, o.green);
  }
}

Real OffspringLaw::prob(std::uint32_t blue, std::uint32_t green) const {
  for (const auto& o : outcomes_)
    if (o.blue == blue && o.green == green) return o.prob;
  return 0;
}

Real OffspringLaw::mass() const {
  Real s = 0;
  for (const auto& o : outcomes_) s += o.prob;
  return s;
}

Real OffspringLaw::mean_blue() const {
  Real s = 0;
  for (const auto& o : outcomes_) s += o.prob * o.blue;
  return s;
}

Real OffspringLaw::var_blue() const {
  Real s = 0;
  for (const auto& o : outcomes_) s += o.prob * o.blue * o.blue;
  const Real m = mean_blue();
  return s - m * m;
}

Real OffspringLaw::mean_green() const {
  Real s = 0;
  for (const auto& o : outcomes_) s += o.prob * o.green;
  return s;
}

Real OffspringLaw::mean_blue_green() const {
  Real s = 0;
  for (const auto& o : outcomes_) s += o.prob * o.blue * o.green;
  return s;
}

std::vector<Real> OffspringLaw::blue_marginal() const {
  std::vector<Real> m(max_blue_ + 1, Real(0));
  for (const auto& o : outcomes_) m[o.blue] += o.prob;
  return m;
}

std::uint64_t OffspringLaw::blue_support_gcd() const {
  std::uint64_t g = 0;
  const auto m = blue_marginal();
  for (std::size_t k = 1; k < m.size(); ++k)
    if (m[k] > 0) g = std::gcd(g, static_cast<std::uint64_t>(k));
  return g;
}

Real OffspringLaw::blue_tail_ratio(std::size_t window) const {
  const auto m = blue_marginal();
  std::vector<std::size_t> pos;
  for (std::size_t k = 0; k < m.size(); ++k)
    if (m[k] > 0) pos.push_back(k);
  if (pos.size() < 2) return 0;
  Real worst = 0;
  const std::size_t start = pos.size() > window + 1 ? pos.size() - window - 1 : 0;
  for (std::size_t i = start; i + 1 < pos.size(); ++i) {
    if (pos[i] == 0) continue;
    const Real r = m[pos[i + 1]] / m[pos[i]];
    if (r > worst) worst = r;
  }
  return worst;
}

OffspringLaw eta_law(const Real& tail) {
  const Real l2 = log(Real(2));
  std::vector<Outcome> out;
  out.push_back({0, 0, 2 - 1 / l2});
  // sum_{k>=2} l2^{k-1}/k! = (1 - l2)/l2
  const Real total = (1 - l2) / l2;
  Real partial = 0;
  Real term = l2 / 2;  // k = 2
  for (std::uint32_t k = 2;; ++k) {
    out.push_back({k, 0, term});
    partial += term;
    if (total - partial < tail) break;
    term *= l2 / (k + 1);
  }
  return OffspringLaw(std::move(out), total - partial, false);
}

OffspringLaw xi_zeta_law(const PolyaContext& ctx, const Real& tail) {
  const auto& c = ctx.report();
  const Real& rho = c.rho;
  const Real& a = c.A_rho;
  const SeriesTable ghat = polya_tail_exp(ctx.a_table());
  const Real s_total = exp(ctx.tail_sum(rho));  // G(1) = sum_b g_b

  // Green weights g_b = ghat_b rho^b; cut where the remaining mass, scaled by
  // the blue marginal factor e^A / A, is below tail/2.
  const Real green_scale = exp(a) / a;
  std::vector<Real> g;
  Real gsum = 0, rho_b = 1, green_tail = 0;
  bool green_done = false;
  for (std::size_t b = 0; b <= ghat.order(); ++b, rho_b *= rho) {
    g.push_back(to_real(ghat[b]) * rho_b);
    gsum += g.back();
    green_tail = green_scale * (s_total - gsum);
    if (b >= 2 && green_tail < tail / 2) {
      green_done = true;
      break;
    }
  }
  if (!green_done) throw std::runtime_error("A-table order too low for the requested tail");
  if (green_tail < 0) green_tail = 0;

  // Blue weights A^a/a! (times 1/A below); remaining mass after amax is
  // bounded by the next term times a geometric factor.
  std::vector<Real> w{Real(1)};
  Real blue_tail = 0;
  for (std::uint32_t k = 1;; ++k) {
    w.push_back(w.back() * a / k);
    const Real next = w.back() * a / (k + 1);
    blue_tail = next / a * s_total / (1 - a / (k + 2));
    if (k >= 2 && blue_tail < tail / 2) break;
  }

  std::vector<Outcome> out;
  for (std::uint32_t ai = 0; ai < w.size(); ++ai)
    for (std::uint32_t b = 0; b < g.size(); ++b) {
      Real p = w[ai] * g[b];
      if (ai == 0 && b == 0) p += rho - 1;
      if (ai == 1 && b == 0) p -= a;
      p /= a;
      if (ai == 1 && b == 0) p = 0;  // exact cancellation
      if (p < 0) p = 0;
      if (p > 0) out.push_back({ai, b, p});
    }
  return OffspringLaw(std::move(out), blue_tail + green_tail, true);
}

namespace {

template <typename Weight>
OffspringLaw reweight(const OffspringLaw& law, Weight weight, const Real& normalizer, const char* name) {
  if (!(normalizer > 0)) throw std::domain_error(std::string("zero normalizer for ") + name);
  std::vector<Outcome> out;
  for (const auto& o : law.outcomes()) {
    const Real p = o.prob * weight(o) / normalizer;
    if (p > 0) out.push_back({o.blue, o.green, p});
  }
  return OffspringLaw(std::move(out), law.tail_bound(), law.bivariate());
}

}  // namespace

OffspringLaw size_biased(const OffspringLaw& law) {
  // E[xi] = 1 for a critical law, so no renormalisation.
  if (!(law.mean_blue() > 0)) throw std::domain_error("zero normalizer for eta-bullet");
  return reweight(law, [](const Outcome& o) { return Real(o.blue); }, Real(1), "eta-bullet");
}

OffspringLaw pair_biased(const OffspringLaw& law) {
  return reweight(law, [](const Outcome& o) { return Real(o.blue) * (Real(o.blue) - 1); }, law.var_blue(),
                  "eta-star");
}

OffspringLaw green_biased(const OffspringLaw& law) {
  return reweight(law, [](const Outcome& o) { return Real(o.green); }, law.mean_green(), "eta-circ");
}

BiasedLaws biased_laws(const OffspringLaw& law) {
  return {size_biased(law), pair_biased(law), green_biased(law)};
}

std::vector<Real> leafcount_series(std::size_t order, const OffspringLaw& law) {
  if (law.mean_blue() > Real(1) + Real("1e-9")) throw std::domain_error("supercritical offspring law");
  const std::uint32_t amax = law.max_blue();
  const Real p00 = law.p00();
  const Real p10 = law.prob(1, 0);
  if (!(p10 < 1)) throw std::domain_error("degenerate offspring law");

  // by_blue[a] lists (green, prob) for outcomes with a blue children.
  std::vector<std::vector<std::pair<std::uint32_t, Real>>> by_blue(amax + 1);
  for (const auto& o : law.outcomes())
    if (!(o.blue == 1 && o.green == 0)) by_blue[o.blue].emplace_back(o.green, o.prob);

  // pw[a][m] = [z^m] Z^a; pw[0] = 1, pw[1] = Z.
  std::vector<std::vector<Real>> pw(std::max<std::uint32_t>(amax, 1) + 1, std::vector<Real>(order + 1, Real(0)));
  pw[0][0] = 1;
  std::vector<Real>& zs = pw[1];

  Real total = 0;
  for (std::size_t n = 1; n <= order; ++n) {
    Real acc = n == 1 ? p00 : Real(0);
    for (std::uint32_t a = 0; a <= amax; ++a)
      for (const auto& [b, p] : by_blue[a]) {
        if (b > n) continue;
        if (a == 0) {
          if (b == n) acc += p;
        } else {
          acc += p * pw[a][n - b];
        }
      }
    // The (0,0) outcome contributes p00 [n=0], cancelled by -p00.
    zs[n] = acc / (1 - p10);
    total += zs[n];
    if (total > Real(1) + Real("1e-9")) throw std::domain_error("leaf-count series diverges");
    for (std::uint32_t a = 2; a <= amax; ++a) {
      const std::size_t m = n + a - 1;
      if (m > order) break;
      Real s = 0;
      for (std::size_t j = 1; j + (a - 1) <= m; ++j) s += zs[j] * pw[a - 1][m - j];
      pw[a][m] = s;
    }
  }
  return zs;
}

std::vector<double> boltzmann_leaf_distribution(const ConstantsReport& c, std::size_t order) {
  const double rho = static_cast<double>(c.rho);
  const double a = static_cast<double>(c.A_rho);
  const double log_rho = std::log(rho);
  std::vector<double> z(order + 1, 0.0), u(order + 1, 0.0), w(order + 1, 0.0), l(order + 1, 0.0);
  u[0] = 1.0;
  for (std::size_t n = 1; n <= order; ++n) {
    double ln = 0;
    for (std::size_t i = 2; i <= n; ++i)
      if (n % i == 0) {
        const std::size_t m = n / i;
        ln += a * z[m] * std::exp(static_cast<double>((i - 1) * m) * log_rho) / static_cast<double>(i);
      }
    l[n] = ln;
    // rest = (1/n) [ sum_{k=1}^{n-1} k (A z_k + l_k) u_{n-k} + n l_n ]
    const double conv = n > 1 ? kernels::dot_reversed(w.data() + 1, u.data() + 1, n - 1) : 0.0;
    const double rest = (conv + static_cast<double>(n) * ln) / static_cast<double>(n);
    z[n] = ((n == 1 ? rho : 0.0) + rest) / a;
    u[n] = a * z[n] + rest;
    w[n] = static_cast<double>(n) * (a * z[n] + ln);
  }
  return z;
}

nlohmann::json to_json(const OffspringLaw& law) {
  nlohmann::json j;
  j["bivariate"] = law.bivariate();
  j["tail_bound"] = static_cast<double>(law.tail_bound());
  auto arr = nlohmann::json::array();
  for (const auto& o : law.outcomes()) {
    if (law.bivariate()) arr.push_back({{"xi", o.blue}, {"zeta", o.green}, {"p", static_cast<double>(o.prob)}});
    else arr.push_back({{"k", o.blue}, {"p", static_cast<double>(o.prob)}});
  }
  j["pmf"] = std::move(arr);
  j["mean_blue"] = static_cast<double>(law.mean_blue());
  j["var_blue"] = static_cast<double>(law.var_blue());
  j["mean_green"] = static_cast<double>(law.mean_green());
  return j;
}

}  // namespace cograph
