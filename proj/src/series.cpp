#include "cograph/series.hpp"

#include <cctype>
#include <stdexcept>

namespace cograph {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(Integer(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  for (char c : text.substr(dot + 1))
    if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad decimal: " + text);
  if (digits.empty() || digits == "-") throw std::invalid_argument("bad decimal: " + text);
  Integer den = 1;
  for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
  return Rational(Integer(digits), den);
}

Integer SeriesTable::count(std::size_t n) const {
  Rational c = coeffs.at(n);
  if (kind == SeriesKind::egf) {
    Integer f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
    c *= Rational(f);
  }
  if (boost::multiprecision::denominator(c) != 1) throw std::logic_error("count is not integral");
  return boost::multiprecision::numerator(c);
}

Real SeriesTable::evaluate(const Real& x) const {
  Real acc = 0;
  for (std::size_t n = coeffs.size(); n-- > 0;) acc = acc * x + to_real(coeffs[n]);
  return acc;
}

Real SeriesTable::derivative(const Real& x) const {
  Real acc = 0;
  for (std::size_t n = coeffs.size(); n-- > 1;) acc = acc * x + to_real(coeffs[n]) * static_cast<unsigned>(n);
  return acc;
}

std::vector<Rational> series_exp(const std::vector<Rational>& f) {
  if (f.empty()) return {};
  if (f[0] != 0) throw std::invalid_argument("series_exp needs a zero constant term");
  // g' = f' g  =>  n g_n = sum_{k=1}^n k f_k g_{n-k}
  std::vector<Rational> g(f.size());
  g[0] = 1;
  for (std::size_t n = 1; n < f.size(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k)
      if (f[k] != 0) acc += Rational(static_cast<unsigned long>(k)) * f[k] * g[n - k];
    g[n] = acc / static_cast<unsigned long>(n);
  }
  return g;
}

SeriesTable labelled_counts(std::size_t order) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  // With M = exp(T): 2T = z + M - 1, and n M_n = sum_k k T_k M_{n-k}. The
  // k = n term contributes T_n to M_n, which leaves
  //   T_n = (1/n) sum_{k=1}^{n-1} k T_k M_{n-k}   (n >= 2).
  SeriesTable t;
  t.kind = SeriesKind::egf;
  t.coeffs.assign(order + 1, Rational(0));
  std::vector<Rational> m(order + 1, Rational(0));
  m[0] = 1;
  t.coeffs[1] = 1;
  m[1] = 1;
  for (std::size_t n = 2; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k < n; ++k) acc += Rational(static_cast<unsigned long>(k)) * t.coeffs[k] * m[n - k];
    t.coeffs[n] = acc / static_cast<unsigned long>(n);
    m[n] = 2 * t.coeffs[n];
  }
  return t;
}

SeriesTable unlabelled_counts(std::size_t order) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  // M(z) = exp(sum_i A(z^i)/i) satisfies n M_n = sum_{k=1}^n c_k M_{n-k} with
  // c_k = sum_{d | k} d a_d. From 2A = z + M - 1 we get a_n = M_n / 2, and
  // the only a_n-dependence of M_n is the term a_n from c_n, so
  //   a_n = (1/n) (sum_{k=1}^{n-1} c_k M_{n-k} + c_n - n a_n).
  std::vector<Integer> a(order + 1, 0), c(order + 1, 0), m(order + 1, 0);
  a[1] = 1;
  m[0] = 1;
  c[1] = 1;
  m[1] = 1;
  for (std::size_t n = 2; n <= order; ++n) {
    Integer partial_c = 0;  // sum over proper divisors d of n
    for (std::size_t d = 1; d < n; ++d)
      if (n % d == 0) partial_c += Integer(static_cast<unsigned long>(d)) * a[d];
    Integer acc = partial_c;
    for (std::size_t k = 1; k < n; ++k) acc += c[k] * m[n - k];
    if (acc % n != 0) throw std::logic_error("non-integral tree count");
    a[n] = acc / static_cast<unsigned long>(n);
    c[n] = partial_c + Integer(static_cast<unsigned long>(n)) * a[n];
    m[n] = 2 * a[n];
  }
  SeriesTable t;
  t.kind = SeriesKind::ogf;
  t.coeffs.reserve(order + 1);
  for (const auto& v : a) t.coeffs.emplace_back(v);
  return t;
}

SeriesTable polya_tail_exp(const SeriesTable& a_table) {
  const std::size_t order = a_table.order();
  std::vector<Rational> f(order + 1, Rational(0));
  for (std::size_t i = 2; i <= order; ++i)
    for (std::size_t m = 1; m * i <= order; ++m)
      f[m * i] += a_table.coeffs[m] / static_cast<unsigned long>(i);
  SeriesTable out;
  out.kind = SeriesKind::ogf;
  out.coeffs = series_exp(f);
  return out;
}

Integer labelled_cograph_count(const SeriesTable& t_table, std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n == 1) return 1;
  return 2 * t_table.count(n);
}

Integer unlabelled_cograph_count(const SeriesTable& a_table, std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n == 1) return 1;
  return 2 * a_table.count(n);
}

std::string to_csv(const SeriesTable& table) {
  std::string out = "n,coefficient,count\n";
  for (std::size_t n = 1; n <= table.order(); ++n)
    out += std::to_string(n) + "," + to_string(table.coeffs[n]) + "," + table.count(n).str() + "\n";
  return out;
}

}  // namespace cograph
