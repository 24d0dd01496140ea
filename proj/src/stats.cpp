#include "cograph/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace cograph {

ChiSquared chi_squared(const std::vector<std::uint64_t>& counts, const std::vector<double>& probs) {
  if (counts.size() != probs.size() || counts.size() < 2) throw std::invalid_argument("chi-squared needs >= 2 matching cells");
  double n = 0;
  for (auto c : counts) n += static_cast<double>(c);
  if (n == 0) throw std::invalid_argument("chi-squared on an empty sample");
  ChiSquared r;
  std::size_t cells = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double e = n * probs[i];
    if (e <= 0) {
      if (counts[i] > 0) return {INFINITY, static_cast<double>(counts.size() - 1), 0.0};
      continue;
    }
    const double d = static_cast<double>(counts[i]) - e;
    r.statistic += d * d / e;
    ++cells;
  }
  r.df = static_cast<double>(cells - 1);
  r.p_value = boost::math::gamma_q(r.df / 2, r.statistic / 2);
  return r;
}

ChiSquared chi_squared_uniform(const std::vector<std::uint64_t>& counts) {
  return chi_squared(counts, std::vector<double>(counts.size(), 1.0 / static_cast<double>(counts.size())));
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("KS on an empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_p_value(double d, std::size_t n) {
  const double sn = std::sqrt(static_cast<double>(n));
  const double lambda = (sn + 0.12 + 0.11 / sn) * d;
  if (lambda < 0.2) return 1.0;
  double sum = 0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += (j % 2 ? 1.0 : -1.0) * term;
    if (term < 1e-16) break;
  }
  return std::clamp(2 * sum, 0.0, 1.0);
}

double chi_cdf(double t, double dof) {
  if (t <= 0) return 0;
  return boost::math::gamma_p(dof / 2, t * t / 2);
}

MeanStd mean_and_stderr(const std::vector<double>& xs) {
  MeanStd r;
  if (xs.empty()) return r;
  for (double x : xs) r.mean += x;
  r.mean /= static_cast<double>(xs.size());
  if (xs.size() < 2) return r;
  double ss = 0;
  for (double x : xs) ss += (x - r.mean) * (x - r.mean);
  r.std_error = std::sqrt(ss / static_cast<double>(xs.size() - 1) / static_cast<double>(xs.size()));
  return r;
}

}  // namespace cograph
