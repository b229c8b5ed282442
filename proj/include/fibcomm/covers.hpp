#pragma once

#include "fibcomm/types.hpp"

#include <cstdint>
#include <vector>

namespace fibcomm::covers {

/// Two fibration classes on the same manifold. chi1/chi2 are the fiber Euler
/// characteristics; conjugate_monodromies is the hypothesis that the two
/// (fiber, monodromy) pairs agree up to conjugacy.
struct FibrationPair {
  CohomologyClass omega1;
  CohomologyClass omega2;
  std::int64_t chi1 = 0;
  std::int64_t chi2 = 0;
  bool conjugate_monodromies = false;

  /// Checks: omega1 != +-omega2, both primitive, chi < 0, conjugate => chi1 == chi2.
  void validate() const;
};

/// Preimage of the second fiber in the degree-n cyclic cover dual to omega1 mod n.
struct CoverReport {
  std::int64_t degree = 0;
  Integer m = 0;                     // gcd of |omega1| over a basis of ker(omega2)
  std::int64_t d = 0;                // gcd(n, m)
  std::int64_t components = 0;       // = d
  std::int64_t component_degree = 0; // = n / d
  std::int64_t component_chi = 0;    // = component_degree * chi2
  bool fibers_homeomorphic = false;  // component_degree == 1
  bool nonsymmetric_commensurable = false;

  friend bool operator==(const CoverReport&, const CoverReport&) = default;
};

/// Basis of ker(omega) in Z^b (b - 1 vectors). omega must be primitive.
std::vector<BigVector> fiber_kernel(const CohomologyClass& omega);

/// gcd of |omega1(a)| over a basis of ker(omega2); positive for a valid pair.
Integer kernel_gcd(const FibrationPair& pair);

CoverReport analyze_cover(const FibrationPair& pair, std::int64_t n);

/// All n <= n_max whose cover separates the pulled-back fibrations; these are
/// exactly the n that do not divide m.
std::vector<CoverReport> search_nonsymmetric(const FibrationPair& pair, std::int64_t n_max);

} // namespace fibcomm::covers
