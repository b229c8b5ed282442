#pragma once

#include "fibcomm/laurent.hpp"
#include "fibcomm/lattice.hpp"

#include <random>

namespace testutil {

using namespace fibcomm;

inline laurent::LaurentPolynomial poly(std::size_t arity,
                                       std::initializer_list<std::pair<IntVector, long>> terms) {
  laurent::LaurentPolynomial p(arity);
  for (const auto& [e, c] : terms) p.add_term(e, Integer(c));
  return p;
}

inline laurent::UnivariatePoly upoly(std::initializer_list<std::pair<std::int64_t, long>> terms) {
  laurent::UnivariatePoly q;
  for (const auto& [e, c] : terms) q.add_term(e, Integer(c));
  return q;
}

inline lattice::IntMatrix mat(std::vector<IntVector> rows) { return lattice::IntMatrix::from_rows(rows); }

inline lattice::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, long range) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<long> entry(-range, range);
  const std::size_t r = dim(rng), c = dim(rng);
  lattice::IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
  return m;
}

inline bool is_diagonal_chain(const lattice::IntMatrix& d) {
  Integer prev = 1;
  bool seen_zero = false;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (i != j && sgn(d(i, j)) != 0) return false;
      if (i != j) continue;
      const Integer& x = d(i, i);
      if (sgn(x) < 0) return false;
      if (sgn(x) == 0) {
        seen_zero = true;
        continue;
      }
      if (seen_zero) return false;
      if (!mpz_divisible_p(x.get_mpz_t(), prev.get_mpz_t())) return false;
      prev = x;
    }
  return true;
}

} // namespace testutil
