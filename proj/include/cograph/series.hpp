#pragma once

// Exact coefficient tables for the tree classes behind cographs:
//   T(z) = z + sum_{k>=2} T(z)^k / k!              (EGF, labelled leaves)
//   A(z) = z + exp(sum_{i>=1} A(z^i)/i) - 1 - A(z) (OGF, unlabelled leaves)
// Both count rooted unordered trees whose internal vertices have at least
// two children, with z marking leaves.

#include <cstddef>
#include <string>
#include <vector>

#include "cograph/numeric.hpp"

namespace cograph {

enum class SeriesKind { egf, ogf };

struct SeriesTable {
  SeriesKind kind = SeriesKind::ogf;
  std::vector<Rational> coeffs;  // indices 0..order()

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  const Rational& operator[](std::size_t n) const { return coeffs.at(n); }
  // Number of objects of size n: n! [z^n] for an EGF, [z^n] for an OGF.
  Integer count(std::size_t n) const;
  // Truncated evaluation sum_{n<=order} c_n x^n and its derivative.
  Real evaluate(const Real& x) const;
  Real derivative(const Real& x) const;
};

SeriesTable labelled_counts(std::size_t order);
SeriesTable unlabelled_counts(std::size_t order);

// exp(f) for f with f[0] = 0, truncated to the length of f.
std::vector<Rational> series_exp(const std::vector<Rational>& f);

// exp(sum_{i>=2} A(u^i)/i), truncated at the order of A.
SeriesTable polya_tail_exp(const SeriesTable& a_table);

// Labelled cographs on [n]: 1 for n = 1, else twice the number of labelled
// cotree shapes (one choice of root sign).
Integer labelled_cograph_count(const SeriesTable& t_table, std::size_t n);
// Unlabelled cographs with n vertices: 1 for n = 1, else 2 [z^n] A.
Integer unlabelled_cograph_count(const SeriesTable& a_table, std::size_t n);

// CSV with columns n,coefficient,count (coefficient as "num/den").
std::string to_csv(const SeriesTable& table);

}  // namespace cograph
