#pragma once

#include "fibcomm/types.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace fibcomm::lattice {

/// Dense arbitrary-precision integer matrix, row-major, at least 1x1.
class IntMatrix {
public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix from_rows(const std::vector<BigVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  BigVector row(std::size_t i) const;
  BigVector column(std::size_t j) const;
  BigVector apply(const BigVector& v) const;
  IntMatrix transpose() const;
  bool is_zero() const;
  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

/// Determinant by fraction-free (Bareiss) elimination. Square matrices only.
Integer determinant(const IntMatrix& a);

/// a = left * diag * right with left, right unimodular and diag in Smith form.
struct SmithDecomposition {
  IntMatrix left;
  IntMatrix diag;
  IntMatrix right;
  /// right^{-1}; its trailing columns span the integer kernel of a.
  IntMatrix right_inverse;

  std::size_t rank() const;
  std::vector<Integer> invariant_factors() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// Row-style Hermite normal form of the lattice spanned by `rows`: echelon
/// form, positive pivots, entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped.
std::vector<BigVector> hermite_rows(const std::vector<BigVector>& rows);

/// Basis of {v in Z^cols : a v = 0}, Hermite-reduced and sorted
/// lexicographically.
std::vector<BigVector> kernel_basis(const IntMatrix& a);

/// gcd of the coordinates is 1. Throws ZeroClass on the zero class.
bool is_primitive(const CohomologyClass& v);

struct ImageOrder {
  Integer d;     // gcd(n, omega(g) for all g), with gcd(n, 0) = n
  Integer order; // n / d
};

/// Order of the image of span(gens) in Z/nZ under omega mod n.
ImageOrder image_order_mod_n(const std::vector<BigVector>& gens,
                             const CohomologyClass& omega, const Integer& n);

} // namespace fibcomm::lattice
