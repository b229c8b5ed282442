#pragma once

#include "fibcomm/laurent.hpp"
#include "fibcomm/norm.hpp"
#include "fibcomm/types.hpp"

namespace fibcomm::entropy {

/// Absolute tolerance for comparing normalized entropies.
inline constexpr double kDefaultCompareTol = 1e-9;

/// Normalized entropy of a fibered class: norm = |chi(F)| of the fiber,
/// entropy = norm * log(dilatation).
struct EntropyRecord {
  CohomologyClass cls;
  Rational norm;
  double dilatation = 0;
  double entropy = 0;

  static EntropyRecord make(CohomologyClass cls, Rational norm, double dilatation);

  friend bool operator==(const EntropyRecord&, const EntropyRecord&) = default;
};

/// Largest real root of the face polynomial specialized at omega. omega must be
/// primitive and strictly inside the face's cone.
double dilatation(const norm::NormBall& ball, const norm::FiberedFace& face,
                  const CohomologyClass& omega, double tol = laurent::kDefaultRootTol);

EntropyRecord normalized_entropy(const norm::NormBall& ball, const norm::FiberedFace& face,
                                 const CohomologyClass& omega,
                                 double tol = laurent::kDefaultRootTol);

/// The primitive integral class on the ray through a nonzero rational vector.
CohomologyClass primitive_on_ray(const RationalVector& p);

/// Rescales a rational vector to norm 1; throws NotOnFace if its norm is 0.
RationalVector rescale_to_face(const norm::NormBall& ball, const RationalVector& p);

/// ent at a rational point of the open face, extended along rays (degree 0).
double ent_at_face_point(const norm::NormBall& ball, const norm::FiberedFace& face,
                         const RationalVector& p, double tol = laurent::kDefaultRootTol);

struct ConcavityProbe {
  double lhs = 0; // 1/ent(s p + (1-s) q)
  double rhs = 0; // s/ent(p) + (1-s)/ent(q)
  bool strict = false;

  double margin() const { return lhs - rhs; }

  friend bool operator==(const ConcavityProbe&, const ConcavityProbe&) = default;
};

/// Compares 1/ent at a convex combination with the combination of 1/ent.
/// p and q are rescaled to the face first; strict means lhs > rhs + margin_tol.
ConcavityProbe concavity_probe(const norm::NormBall& ball, const norm::FiberedFace& face,
                               const RationalVector& p, const RationalVector& q, const Rational& s,
                               double margin_tol = kDefaultCompareTol,
                               double root_tol = laurent::kDefaultRootTol);

/// Equal normalized entropy: necessary for commensurability, never sufficient.
bool invariant_equal(const EntropyRecord& r1, const EntropyRecord& r2,
                     double tol = kDefaultCompareTol);

} // namespace fibcomm::entropy
