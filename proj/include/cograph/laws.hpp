#pragma once

// Offspring laws of the branching processes behind random cotrees.
//
// The labelled model uses a univariate critical law eta on {0, 2, 3, ...}.
// The unlabelled model uses a two-type (blue/green) law (xi, zeta) where
// green vertices are infertile leaves; a univariate law is stored with
// zeta = 0.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "cograph/constants.hpp"
#include "cograph/numeric.hpp"
#include "cograph/series.hpp"

namespace cograph {

struct Outcome {
  std::uint32_t blue = 0;
  std::uint32_t green = 0;
  Real prob;
};

class OffspringLaw {
 public:
  OffspringLaw() = default;
  OffspringLaw(std::vector<Outcome> outcomes, Real tail_bound, bool bivariate);

  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  // Upper bound on the probability mass dropped by truncation.
  const Real& tail_bound() const { return tail_bound_; }
  bool bivariate() const { return bivariate_; }
  std::uint32_t max_blue() const { return max_blue_; }
  std::uint32_t max_green() const { return max_green_; }

  Real prob(std::uint32_t blue, std::uint32_t green = 0) const;
  Real mass() const;
  Real mean_blue() const;
  Real var_blue() const;
  Real mean_green() const;
  Real mean_blue_green() const;  // E[xi zeta]
  Real p00() const { return prob(0, 0); }
  // Marginal pmf of the blue count.
  std::vector<Real> blue_marginal() const;
  // gcd of {k : P(xi = k) > 0}, ignoring k = 0.
  std::uint64_t blue_support_gcd() const;
  // Largest ratio P(xi = k+1)/P(xi = k) over the last `window` positive
  // entries of the blue marginal; < 1 signals geometric decay.
  Real blue_tail_ratio(std::size_t window = 5) const;

 private:
  std::vector<Outcome> outcomes_;
  Real tail_bound_;
  bool bivariate_ = false;
  std::uint32_t max_blue_ = 0;
  std::uint32_t max_green_ = 0;
};

// P(0) = 2 - 1/log 2, P(1) = 0, P(k) = (log 2)^{k-1}/k! for k >= 2,
// truncated once the remaining mass drops below `tail`.
OffspringLaw eta_law(const Real& tail = Real("1e-15"));

// (xi, zeta) for the unlabelled model at x = rho, truncated at total tail
// mass below `tail`. `ctx` supplies rho, A(rho) and the A-table.
OffspringLaw xi_zeta_law(const PolyaContext& ctx, const Real& tail = Real("1e-12"));

// eta-bullet: weight a; eta-star: weight a(a-1)/Var xi; eta-circ: weight b/E zeta.
// Each throws std::domain_error when its normalizer vanishes.
OffspringLaw size_biased(const OffspringLaw& law);
OffspringLaw pair_biased(const OffspringLaw& law);
OffspringLaw green_biased(const OffspringLaw& law);

struct BiasedLaws {
  OffspringLaw bullet;
  OffspringLaw star;
  OffspringLaw circ;
};
BiasedLaws biased_laws(const OffspringLaw& law);

// Distribution of the number of leaves (blue leaves plus green vertices) of
// the unconditioned two-type tree: entry n is P(leaves = n), n = 0..order.
// Solves Z = p00 (z - 1) + f(Z, z), f(s, z) = E[s^xi z^zeta], coefficient by
// coefficient. Throws std::domain_error for a supercritical law.
std::vector<Real> leafcount_series(std::size_t order, const OffspringLaw& law);

// The same distribution for the unlabelled model, computed in double
// precision from Z(z) = A(rho z)/A(rho) through an O(order^2) recurrence.
// Used for long convolutions.
std::vector<double> boltzmann_leaf_distribution(const ConstantsReport& c, std::size_t order);

nlohmann::json to_json(const OffspringLaw& law);

}  // namespace cograph
