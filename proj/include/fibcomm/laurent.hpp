#pragma once

#include "fibcomm/types.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fibcomm::laurent {

/// Root isolation tolerance used throughout the toolkit.
inline constexpr double kDefaultRootTol = 1e-12;

using Exponent = IntVector;

/// Integer Laurent polynomial in `arity` variables. Zero coefficients are
/// never stored.
class LaurentPolynomial {
public:
  explicit LaurentPolynomial(std::size_t arity) : arity_(arity) {}

  std::size_t arity() const { return arity_; }
  const std::map<Exponent, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * x^e, merging with an existing term (and erasing it on cancellation).
  void add_term(const Exponent& e, const Integer& c);

  std::vector<Exponent> support() const;
  std::string to_string() const;

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
  std::size_t arity_;
  std::map<Exponent, Integer> terms_;
};

/// One-variable Laurent polynomial in t.
class UnivariatePoly {
public:
  UnivariatePoly() = default;

  void add_term(std::int64_t e, const Integer& c);
  const std::map<std::int64_t, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t low_exponent() const;
  std::int64_t high_exponent() const;
  std::string to_string() const;

  friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b);
  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

private:
  std::map<std::int64_t, Integer> terms_;
};

struct NewtonPolytope {
  std::vector<Exponent> vertices; // sorted lexicographically
};

/// Substitutes x^e -> t^<omega, e>.
UnivariatePoly specialize(const LaurentPolynomial& p, const CohomologyClass& omega);

NewtonPolytope newton_polytope(const LaurentPolynomial& p);

/// Extreme points of the convex hull of a finite point set of dimension <= 3,
/// sorted lexicographically. Duplicates are collapsed.
std::vector<IntVector> hull_vertices(std::vector<IntVector> points);

/// Largest real root > 1 of q, to within tol. The bracket is certified by a
/// Sturm sequence over the square-free part, then narrowed by exact sign
/// bisection at dyadic points.
double largest_real_root(const UnivariatePoly& q, double tol = kDefaultRootTol);

/// Bracket [lo, hi] of width < tol containing the root; midpoint is what
/// largest_real_root returns.
struct RootBracket {
  Rational lo;
  Rational hi;
};
RootBracket largest_real_root_bracket(const UnivariatePoly& q, double tol = kDefaultRootTol);

/// Exact value of q at a rational point (q must have no negative exponents
/// unless x is nonzero).
Rational evaluate(const UnivariatePoly& q, const Rational& x);

} // namespace fibcomm::laurent
