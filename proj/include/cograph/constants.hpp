#pragma once

// Singularity analysis of the unlabelled tree series A(z). With
//   E(z, y) = z + exp(y) exp(sum_{i>=2} A(z^i)/i) - 1 - y
// A(z) is the smaller root of y = E(z, y); its radius of convergence rho is
// the point where that root becomes a double root, E_y(rho, A(rho)) = 1.

#include <cstddef>

#include <json.hpp>

#include "cograph/numeric.hpp"
#include "cograph/series.hpp"

namespace cograph {

struct ConstantsReport {
  std::size_t order = 0;     // truncation order of the exact A-table
  Real rho;                  // radius of convergence of A
  Real rho_upper;            // upper end of the final bisection bracket
  Real A_rho;                // A(rho)
  Real E_z;                  // partial derivative E_z at (rho, A(rho))
  Real E_yy;                 // E_yy at (rho, A(rho))
  Real c_A;                  // [z^n] A ~ c_A n^{-3/2} rho^{-n}
  Real var_xi;               // variance of the blue offspring count
  Real mean_zeta;            // mean green offspring count
  Real p00;                  // P((xi, zeta) = (0, 0))
  Real sigma;                // sqrt(Var xi / (p00 + E zeta))
  Real c_Z;                  // [z^n] Z ~ c_Z n^{-3/2}
  Real residual_Ey;          // |E_y(rho, A(rho)) - 1|
  Real residual_fixed_point; // |E(rho, A(rho)) - A(rho)|
  Real truncation_bound;     // bound on the neglected series tail in sum_{i>=2} A(rho^i)/i
  Real tolerance;
};

class PolyaContext {
 public:
  // Locates rho by bisection on the largest z for which y = E(z, y) still
  // has a real root (the root is double there), then derives the remaining
  // constants. Throws std::runtime_error when the initial bracket
  // fails (order too low) or `tol` cannot be met.
  static PolyaContext compute(const Real& tol = Real("1e-12"), std::size_t order = 64);

  const ConstantsReport& report() const { return report_; }
  const SeriesTable& a_table() const { return a_table_; }

  // A(x) for 0 < x <= rho (the smaller root of y = E(x, y)).
  Real value(const Real& x) const;
  // sum_{i>=2} A(x^i)/i and its x-derivative, for 0 <= x <= rho.
  Real tail_sum(const Real& x) const;
  Real tail_sum_derivative(const Real& x) const;

 private:
  SeriesTable a_table_;
  ConstantsReport report_;
};

ConstantsReport find_constants(const Real& tol, std::size_t order = 64);

nlohmann::json to_json(const ConstantsReport& report);

}  // namespace cograph
