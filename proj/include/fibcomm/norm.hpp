#pragma once

#include "fibcomm/laurent.hpp"
#include "fibcomm/types.hpp"

#include <optional>
#include <vector>

namespace fibcomm::norm {

/// The Thurston norm as a support function: ||w|| = max_{v in D} <w, v> over
/// a centrally symmetric finite set D of dual vertices.
class NormBall {
public:
  NormBall(std::size_t betti, std::vector<IntVector> dual_vertices);

  std::size_t betti() const { return betti_; }
  /// Sorted lexicographically, duplicates removed.
  const std::vector<IntVector>& dual_vertices() const { return dual_vertices_; }
  bool is_degenerate() const;

  friend bool operator==(const NormBall&, const NormBall&) = default;

private:
  std::size_t betti_;
  std::vector<IntVector> dual_vertices_;
};

struct FiberedFace {
  std::size_t id = 0;
  IntVector supporting_vertex;
  bool fibered = false;
  std::optional<laurent::LaurentPolynomial> polynomial;
};

/// Dual vertices are the extreme points of {e - e'} over Newton vertices.
NormBall norm_from_newton(const laurent::LaurentPolynomial& p);

Rational evaluate_norm(const NormBall& ball, const RationalVector& omega);
Rational evaluate_norm(const NormBall& ball, const CohomologyClass& omega);

/// One face per dual vertex with a nonempty open cone, in dual-vertex order.
/// Faces come back unfibered and without polynomials; descriptors attach those.
std::vector<FiberedFace> top_faces(const NormBall& ball);

/// Strict interior of the cone over the face.
bool cone_contains(const FiberedFace& face, const NormBall& ball, const CohomologyClass& omega);
bool cone_contains(const FiberedFace& face, const NormBall& ball, const RationalVector& omega);

/// All primitive integral classes in the open cone with norm <= max_norm,
/// sorted lexicographically.
std::vector<CohomologyClass> enumerate_primitive_classes(const FiberedFace& face,
                                                         const NormBall& ball,
                                                         std::int64_t max_norm);

/// Vertices of the closed face {||w|| = 1, <w, v> = 1}. Throws UnboundedCone
/// if D does not span.
std::vector<RationalVector> face_vertices(const FiberedFace& face, const NormBall& ball);

} // namespace fibcomm::norm
