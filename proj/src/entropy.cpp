#include "fibcomm/entropy.hpp"
#include "fibcomm/error.hpp"
#include "fibcomm/lattice.hpp"

#include <cmath>

namespace fibcomm::entropy {

EntropyRecord EntropyRecord::make(CohomologyClass cls, Rational norm, double dilatation) {
  if (!(norm > 0)) fail(ErrorCode::InvalidArgument, "fiber norm must be positive");
  if (!(dilatation > 1)) fail(ErrorCode::InvalidArgument, "dilatation must exceed 1");
  const double entropy = norm.get_d() * std::log(dilatation);
  return EntropyRecord{std::move(cls), std::move(norm), dilatation, entropy};
}

double dilatation(const norm::NormBall& ball, const norm::FiberedFace& face,
                  const CohomologyClass& omega, double tol) {
  if (!face.polynomial)
    fail(ErrorCode::MissingPolynomial, "face " + std::to_string(face.id) + " carries no polynomial");
  if (!lattice::is_primitive(omega))
    fail(ErrorCode::NotPrimitive, "class " + omega.to_string() + " is not primitive");
  if (!norm::cone_contains(face, ball, omega))
    fail(ErrorCode::NotInCone,
         "class " + omega.to_string() + " is not inside the cone of face " + std::to_string(face.id));
  return laurent::largest_real_root(laurent::specialize(*face.polynomial, omega), tol);
}

EntropyRecord normalized_entropy(const norm::NormBall& ball, const norm::FiberedFace& face,
                                 const CohomologyClass& omega, double tol) {
  const double lambda = dilatation(ball, face, omega, tol);
  return EntropyRecord::make(omega, norm::evaluate_norm(ball, omega), lambda);
}

CohomologyClass primitive_on_ray(const RationalVector& p) {
  Integer den = 1;
  for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  BigVector scaled;
  Integer g = 0;
  for (const auto& c : p) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    scaled.push_back(v);
  }
  if (sgn(g) == 0) fail(ErrorCode::ZeroClass, "the zero vector spans no ray");
  IntVector out;
  for (auto& v : scaled) out.push_back(to_int64(v / g));
  return CohomologyClass(std::move(out));
}

RationalVector rescale_to_face(const norm::NormBall& ball, const RationalVector& p) {
  const Rational n = norm::evaluate_norm(ball, p);
  if (!(n > 0)) fail(ErrorCode::NotOnFace, "vector has zero norm");
  RationalVector out;
  for (const auto& c : p) out.push_back(c / n);
  return out;
}

double ent_at_face_point(const norm::NormBall& ball, const norm::FiberedFace& face,
                         const RationalVector& p, double tol) {
  if (p.size() != ball.betti()) fail(ErrorCode::DimensionMismatch, "point length differs from Betti number");
  if (norm::evaluate_norm(ball, p) != 1 || !norm::cone_contains(face, ball, p))
    fail(ErrorCode::NotOnFace, "point is not in the open face " + std::to_string(face.id));
  return normalized_entropy(ball, face, primitive_on_ray(p), tol).entropy;
}

ConcavityProbe concavity_probe(const norm::NormBall& ball, const norm::FiberedFace& face,
                               const RationalVector& p, const RationalVector& q, const Rational& s,
                               double margin_tol, double root_tol) {
  if (!(s > 0 && s < 1)) fail(ErrorCode::InvalidArgument, "weight s must lie in the open interval (0,1)");
  if (p.size() != ball.betti() || q.size() != ball.betti())
    fail(ErrorCode::DimensionMismatch, "point length differs from Betti number");
  const RationalVector pf = rescale_to_face(ball, p);
  const RationalVector qf = rescale_to_face(ball, q);
  if (pf == qf) fail(ErrorCode::InvalidArgument, "probe points coincide after rescaling to the face");

  RationalVector mix(pf.size());
  for (std::size_t i = 0; i < mix.size(); ++i) mix[i] = s * pf[i] + (1 - s) * qf[i];
  const RationalVector mf = rescale_to_face(ball, mix);

  const double ent_p = ent_at_face_point(ball, face, pf, root_tol);
  const double ent_q = ent_at_face_point(ball, face, qf, root_tol);
  const double ent_m = ent_at_face_point(ball, face, mf, root_tol);
  const double sd = s.get_d();

  ConcavityProbe out;
  out.lhs = 1.0 / ent_m;
  out.rhs = sd / ent_p + (1.0 - sd) / ent_q;
  out.strict = out.lhs > out.rhs + margin_tol;
  return out;
}

bool invariant_equal(const EntropyRecord& r1, const EntropyRecord& r2, double tol) {
  return std::fabs(r1.entropy - r2.entropy) <= tol;
}

} // namespace fibcomm::entropy
