#include "cograph/constants.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

namespace cograph {

namespace {

using boost::multiprecision::exp;
using boost::multiprecision::log;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;
using boost::multiprecision::abs;

const Real kNegligible("1e-40");

// G(y) = E(z, y) - y with S = exp(sum_{i>=2} A(z^i)/i).
Real excess(const Real& z, const Real& s, const Real& y) { return z + exp(y) * s - 1 - 2 * y; }

// Smaller root of G on [0, y0], y0 = log(2/S) the minimiser of G. Returns
// y0 when G(y0) > 0 (no root; only reached through rounding at rho).
Real smaller_root(const Real& z, const Real& s) {
  const Real y0 = log(Real(2) / s);
  if (excess(z, s, y0) > 0) return y0;
  Real lo = 0, hi = y0;
  for (int it = 0; it < 200 && hi - lo > 0; ++it) {
    const Real mid = (lo + hi) / 2;
    if (mid == lo || mid == hi) break;
    if (excess(z, s, mid) > 0) lo = mid;
    else hi = mid;
  }
  return hi;
}

}  // namespace

Real PolyaContext::tail_sum(const Real& x) const {
  Real acc = 0;
  Real xi = x * x;
  for (unsigned i = 2; xi > kNegligible; ++i, xi *= x) acc += a_table_.evaluate(xi) / i;
  return acc;
}

Real PolyaContext::tail_sum_derivative(const Real& x) const {
  Real acc = 0;
  Real xi = x * x;   // x^i
  Real xi1 = x;      // x^{i-1}
  for (unsigned i = 2; xi > kNegligible; ++i, xi *= x, xi1 *= x) acc += a_table_.derivative(xi) * xi1;
  return acc;
}

Real PolyaContext::value(const Real& x) const {
  if (x <= 0) return 0;
  if (x > report_.rho_upper) throw std::domain_error("A(x) evaluated beyond its radius of convergence");
  return smaller_root(x, exp(tail_sum(x)));
}

PolyaContext PolyaContext::compute(const Real& tol, std::size_t order) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  if (order < 8) throw std::invalid_argument("truncation order too low");
  PolyaContext ctx;
  ctx.a_table_ = unlabelled_counts(order);

  // A(z) exists as a real root iff z + 1 <= 2 log(2/S(z)).
  auto has_root = [&](const Real& z) {
    const Real s = exp(ctx.tail_sum(z));
    return z + 1 <= 2 * log(Real(2) / s);
  };
  Real lo("0.05"), hi("0.6");
  if (!has_root(lo) || has_root(hi))
    throw std::runtime_error("bisection bracket failure: increase the truncation order");
  for (int it = 0; it < 400; ++it) {
    const Real mid = (lo + hi) / 2;
    if (mid == lo || mid == hi) break;
    if (has_root(mid)) lo = mid;
    else hi = mid;
  }

  ConstantsReport& r = ctx.report_;
  r.order = order;
  r.tolerance = tol;
  r.rho = lo;
  r.rho_upper = hi;
  const Real s = exp(ctx.tail_sum(r.rho));
  r.A_rho = smaller_root(r.rho, s);
  const Real ea = exp(r.A_rho) * s;
  r.residual_Ey = abs(ea - 1 - 1);
  r.residual_fixed_point = abs(excess(r.rho, s, r.A_rho));
  r.E_yy = ea;
  r.E_z = 1 + ea * ctx.tail_sum_derivative(r.rho);
  const Real pi = boost::math::constants::pi<Real>();
  r.c_A = sqrt(r.rho * r.E_z / (2 * pi * r.E_yy));

  Real green_sum = 0;  // sum_{i>=2} rho^i A'(rho^i)
  {
    Real xi = r.rho * r.rho;
    for (unsigned i = 2; xi > kNegligible; ++i, xi *= r.rho) green_sum += xi * ctx.a_table_.derivative(xi);
  }
  r.var_xi = 2 * r.A_rho;
  r.mean_zeta = 2 * green_sum / r.A_rho;
  r.p00 = r.rho / r.A_rho;
  r.sigma = sqrt(r.var_xi / (r.p00 + r.mean_zeta));
  r.c_Z = 1 / (r.sigma * sqrt(2 * pi));

  // a_n x^n <= A(rho) (x/rho)^n, so the neglected part of A(x^i) past the
  // table order is at most A(rho) q^{N+1}/(1-q) with q = x^{i-1} <= rho.
  Real bound = 0;
  {
    const Real x = r.rho_upper;
    Real q = x;
    Real xi = x * x;
    for (unsigned i = 2; xi > kNegligible; ++i, q *= x, xi *= x)
      bound += r.A_rho * pow(q, static_cast<int>(order + 1)) / (1 - q) / i;
    bound += 2 * xi / (1 - x);
  }
  r.truncation_bound = bound;

  if (!(r.rho > 0 && r.rho < 1)) throw std::runtime_error("rho outside (0,1)");
  if (r.residual_Ey >= tol || r.residual_fixed_point >= tol)
    throw std::runtime_error("requested tolerance not reachable at this precision");
  return ctx;
}

ConstantsReport find_constants(const Real& tol, std::size_t order) {
  return PolyaContext::compute(tol, order).report();
}

nlohmann::json to_json(const ConstantsReport& r) {
  auto str = [](const Real& x) { return x.str(30, std::ios_base::scientific); };
  auto entry = [&](const Real& x) {
    return nlohmann::json{{"value", static_cast<double>(x)}, {"digits", str(x)}};
  };
  nlohmann::json j;
  j["order"] = r.order;
  j["tolerance"] = static_cast<double>(r.tolerance);
  j["rho"] = entry(r.rho);
  j["rho"]["bracket_width"] = static_cast<double>(r.rho_upper - r.rho);
  j["A_rho"] = entry(r.A_rho);
  j["c_A"] = entry(r.c_A);
  j["sigma"] = entry(r.sigma);
  j["var_xi"] = entry(r.var_xi);
  j["mean_zeta"] = entry(r.mean_zeta);
  j["p00"] = entry(r.p00);
  j["c_Z"] = entry(r.c_Z);
  j["E_z"] = entry(r.E_z);
  j["E_yy"] = entry(r.E_yy);
  j["residuals"] = {{"E_y_minus_1", static_cast<double>(r.residual_Ey)},
                    {"fixed_point", static_cast<double>(r.residual_fixed_point)},
                    {"series_truncation_bound", static_cast<double>(r.truncation_bound)}};
  return j;
}

}  // namespace cograph
