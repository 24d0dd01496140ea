#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace cograph {

struct ChiSquared {
  double statistic = 0;
  double df = 0;
  double p_value = 1;
};

// Goodness of fit of `counts` against cell probabilities `probs` (summing to 1).
ChiSquared chi_squared(const std::vector<std::uint64_t>& counts, const std::vector<double>& probs);
ChiSquared chi_squared_uniform(const std::vector<std::uint64_t>& counts);

// sup_x |F_n(x) - F(x)| for the empirical CDF of `samples`.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);
// Asymptotic Kolmogorov tail P(D_n >= d).
double ks_p_value(double d, std::size_t n);

// CDF of the chi distribution with `dof` degrees of freedom.
double chi_cdf(double t, double dof);

struct MeanStd {
  double mean = 0;
  double std_error = 0;
};
MeanStd mean_and_stderr(const std::vector<double>& xs);

}  // namespace cograph
