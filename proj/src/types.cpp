#include "fibcomm/types.hpp"
#include "fibcomm/error.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace fibcomm {

bool CohomologyClass::is_zero() const {
  for (auto c : coords_)
    if (c != 0) return false;
  return true;
}

CohomologyClass CohomologyClass::operator-() const {
  IntVector out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = -coords_[i];
  return CohomologyClass(std::move(out));
}

std::string CohomologyClass::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size())
    fail(ErrorCode::DimensionMismatch, "inner product of vectors of different length");
  Integer acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer x(static_cast<long>(a[i]));
    x *= static_cast<long>(b[i]);
    acc += x;
  }
  return acc;
}

Integer dot(const CohomologyClass& a, const IntVector& b) { return dot(a.coords(), b); }

Rational dot(const RationalVector& a, const IntVector& b) {
  if (a.size() != b.size())
    fail(ErrorCode::DimensionMismatch, "inner product of vectors of different length");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * Rational(static_cast<long>(b[i]));
  return acc;
}

Integer gcd_of(const IntVector& v) {
  Integer g = 0;
  for (auto c : v) {
    Integer x(static_cast<long>(c));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

RationalVector to_rational(const CohomologyClass& c) {
  RationalVector out;
  out.reserve(c.size());
  for (auto x : c) out.emplace_back(static_cast<long>(x));
  return out;
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) fail(ErrorCode::InvalidArgument, "non-finite real value");
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) fail(ErrorCode::InvalidArgument, "integer " + z.get_str() + " exceeds 64 bits");
  return z.get_si();
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::ZeroClass: return "ZeroClass";
  case ErrorCode::ArityMismatch: return "ArityMismatch";
  case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
  case ErrorCode::Unsupported: return "Unsupported";
  case ErrorCode::NoRootAboveOne: return "NoRootAboveOne";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::DegenerateNorm: return "DegenerateNorm";
  case ErrorCode::UnboundedCone: return "UnboundedCone";
  case ErrorCode::MissingPolynomial: return "MissingPolynomial";
  case ErrorCode::NotInCone: return "NotInCone";
  case ErrorCode::NotPrimitive: return "NotPrimitive";
  case ErrorCode::NotOnFace: return "NotOnFace";
  case ErrorCode::OrbitOverflow: return "OrbitOverflow";
  case ErrorCode::HypothesisUnmet: return "HypothesisUnmet";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::ValidationError: return "ValidationError";
  case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace fibcomm
