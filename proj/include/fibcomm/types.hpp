#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fibcomm {

using Integer = mpz_class;
using Rational = mpq_class;

using BigVector = std::vector<Integer>;
using IntVector = std::vector<std::int64_t>;
using RationalVector = std::vector<Rational>;

/// An integral class in H^1(M;Z), written in the descriptor's fixed basis of
/// Hom(H_1/Tor, Z). Coordinates are machine integers; anything that multiplies
/// them (inner products, lattice reduction) is done in Integer.
class CohomologyClass {
public:
  CohomologyClass() = default;
  explicit CohomologyClass(IntVector coords) : coords_(std::move(coords)) {}
  CohomologyClass(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  std::size_t size() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  const IntVector& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;
  CohomologyClass operator-() const;
  std::string to_string() const;

  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;
  friend auto operator<=>(const CohomologyClass&, const CohomologyClass&) = default;

private:
  IntVector coords_;
};

Integer dot(const IntVector& a, const IntVector& b);
Integer dot(const CohomologyClass& a, const IntVector& b);
Rational dot(const RationalVector& a, const IntVector& b);

Integer gcd_of(const IntVector& v);
RationalVector to_rational(const CohomologyClass& c);

/// Exact conversion of a double to a Rational (every finite double is dyadic).
Rational exact_rational(double x);

std::int64_t to_int64(const Integer& z);

} // namespace fibcomm
