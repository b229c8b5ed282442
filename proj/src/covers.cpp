#include "fibcomm/covers.hpp"
#include "fibcomm/error.hpp"
#include "fibcomm/lattice.hpp"

namespace fibcomm::covers {

void FibrationPair::validate() const {
  if (omega1.size() != omega2.size())
    fail(ErrorCode::DimensionMismatch, "fibration classes have different lengths");
  if (omega1.is_zero() || omega2.is_zero()) fail(ErrorCode::ZeroClass, "fibration class is zero");
  if (omega1 == omega2 || omega1 == -omega2)
    fail(ErrorCode::ValidationError, "fibration pair requires omega1 != +-omega2");
  if (!lattice::is_primitive(omega1) || !lattice::is_primitive(omega2))
    fail(ErrorCode::NotPrimitive, "fibration classes must be primitive");
  if (chi1 >= 0 || chi2 >= 0)
    fail(ErrorCode::ValidationError, "fiber Euler characteristics must be negative");
  if (conjugate_monodromies && chi1 != chi2)
    fail(ErrorCode::ValidationError, "conjugate monodromies require equal Euler characteristics");
}

std::vector<BigVector> fiber_kernel(const CohomologyClass& omega) {
  if (!lattice::is_primitive(omega))
    fail(ErrorCode::NotPrimitive, "class " + omega.to_string() + " is not primitive");
  return lattice::kernel_basis(lattice::IntMatrix::from_rows(std::vector<IntVector>{omega.coords()}));
}

Integer kernel_gcd(const FibrationPair& pair) {
  pair.validate();
  Integer m = 0;
  for (const auto& a : fiber_kernel(pair.omega2)) {
    Integer value = 0;
    for (std::size_t i = 0; i < a.size(); ++i) value += a[i] * static_cast<long>(pair.omega1[i]);
    mpz_gcd(m.get_mpz_t(), m.get_mpz_t(), value.get_mpz_t());
  }
  // ker(omega2) inside ker(omega1) forces omega1 = +-omega2 for primitive classes.
  if (sgn(m) == 0)
    fail(ErrorCode::Internal, "omega1 vanishes on ker(omega2) although omega1 != +-omega2 "
                              "(are both classes primitive and of the same length?)");
  return m;
}

CoverReport analyze_cover(const FibrationPair& pair, std::int64_t n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "cover degree must be positive");
  CoverReport r;
  r.degree = n;
  r.m = kernel_gcd(pair);
  const auto image = lattice::image_order_mod_n(fiber_kernel(pair.omega2), pair.omega1,
                                                Integer(static_cast<long>(n)));
  r.d = to_int64(image.d);
  r.components = r.d;
  r.component_degree = to_int64(image.order);
  r.component_chi = r.component_degree * pair.chi2;
  r.fibers_homeomorphic = r.component_degree == 1;
  r.nonsymmetric_commensurable = pair.conjugate_monodromies && !r.fibers_homeomorphic;
  return r;
}

std::vector<CoverReport> search_nonsymmetric(const FibrationPair& pair, std::int64_t n_max) {
  if (!pair.conjugate_monodromies)
    fail(ErrorCode::HypothesisUnmet,
         "pulled-back fibrations are certified commensurable only for conjugate monodromies");
  pair.validate();
  std::vector<CoverReport> out;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    auto r = analyze_cover(pair, n);
    if (r.nonsymmetric_commensurable) out.push_back(std::move(r));
  }
  return out;
}

} // namespace fibcomm::covers
