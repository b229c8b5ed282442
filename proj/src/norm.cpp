#include "fibcomm/norm.hpp"
#include "fibcomm/error.hpp"
#include "fibcomm/lattice.hpp"

#include <algorithm>
#include <optional>

namespace fibcomm::norm {

NormBall::NormBall(std::size_t betti, std::vector<IntVector> dual_vertices) : betti_(betti) {
  if (betti == 0) fail(ErrorCode::ValidationError, "norm ball: Betti number must be positive");
  if (dual_vertices.empty()) fail(ErrorCode::ValidationError, "norm ball: empty dual vertex set");
  for (const auto& v : dual_vertices)
    if (v.size() != betti)
      fail(ErrorCode::DimensionMismatch, "norm ball: dual vertex length differs from Betti number");
  std::sort(dual_vertices.begin(), dual_vertices.end());
  dual_vertices.erase(std::unique(dual_vertices.begin(), dual_vertices.end()), dual_vertices.end());
  for (const auto& v : dual_vertices) {
    IntVector neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    if (!std::binary_search(dual_vertices.begin(), dual_vertices.end(), neg))
      fail(ErrorCode::ValidationError, "norm ball: dual vertex set is not centrally symmetric");
  }
  dual_vertices_ = std::move(dual_vertices);
}

bool NormBall::is_degenerate() const {
  return std::all_of(dual_vertices_.begin(), dual_vertices_.end(), [](const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
  });
}

NormBall norm_from_newton(const laurent::LaurentPolynomial& p) {
  const auto newton = laurent::newton_polytope(p);
  std::vector<IntVector> diffs;
  for (const auto& a : newton.vertices)
    for (const auto& b : newton.vertices) {
      IntVector d(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
      diffs.push_back(std::move(d));
    }
  return NormBall(p.arity(), laurent::hull_vertices(std::move(diffs)));
}

Rational evaluate_norm(const NormBall& ball, const RationalVector& omega) {
  if (omega.size() != ball.betti())
    fail(ErrorCode::DimensionMismatch, "class length differs from Betti number");
  std::optional<Rational> best;
  for (const auto& v : ball.dual_vertices()) {
    Rational x = dot(omega, v);
    if (!best || x > *best) best = x;
  }
  return *best;
}

Rational evaluate_norm(const NormBall& ball, const CohomologyClass& omega) {
  return evaluate_norm(ball, to_rational(omega));
}

std::vector<FiberedFace> top_faces(const NormBall& ball) {
  if (ball.is_degenerate()) fail(ErrorCode::DegenerateNorm, "every dual vertex is zero");
  const auto extreme = laurent::hull_vertices(ball.dual_vertices());
  std::vector<FiberedFace> faces;
  for (const auto& v : ball.dual_vertices()) {
    if (!std::binary_search(extreme.begin(), extreme.end(), v)) continue;
    FiberedFace f;
    f.id = faces.size();
    f.supporting_vertex = v;
    faces.push_back(std::move(f));
  }
  return faces;
}

bool cone_contains(const FiberedFace& face, const NormBall& ball, const RationalVector& omega) {
  if (omega.size() != ball.betti() || face.supporting_vertex.size() != ball.betti())
    fail(ErrorCode::DimensionMismatch, "class length differs from Betti number");
  const Rational own = dot(omega, face.supporting_vertex);
  for (const auto& v : ball.dual_vertices()) {
    if (v == face.supporting_vertex) continue;
    if (!(own > dot(omega, v))) return false;
  }
  return true;
}

bool cone_contains(const FiberedFace& face, const NormBall& ball, const CohomologyClass& omega) {
  return cone_contains(face, ball, to_rational(omega));
}

namespace {

// Unique solution of the square system rows * x = rhs, if any.
std::optional<RationalVector> solve(const std::vector<IntVector>& rows, const RationalVector& rhs) {
  const std::size_t n = rows.size();
  std::vector<RationalVector> m(n, RationalVector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>(rows[i][j]);
    m[i][n] = rhs[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[c], m[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

} // namespace

std::vector<RationalVector> face_vertices(const FiberedFace& face, const NormBall& ball) {
  const std::size_t b = ball.betti();
  if (lattice::rank(lattice::IntMatrix::from_rows(ball.dual_vertices())) < b)
    fail(ErrorCode::UnboundedCone, "dual vertices do not span; the cone section is unbounded");

  std::vector<IntVector> others;
  for (const auto& v : ball.dual_vertices())
    if (v != face.supporting_vertex) others.push_back(v);

  std::vector<RationalVector> out;
  const RationalVector ones(b, Rational(1));
  // Choose b-1 further active constraints besides the face's own.
  std::vector<bool> mask(others.size(), false);
  if (b - 1 > others.size()) return out;
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(b - 1), true);
  do {
    std::vector<IntVector> rows{face.supporting_vertex};
    for (std::size_t i = 0; i < others.size(); ++i)
      if (mask[i]) rows.push_back(others[i]);
    auto x = solve(rows, ones);
    if (!x) continue;
    if (evaluate_norm(ball, *x) != 1) continue;
    if (std::find(out.begin(), out.end(), *x) == out.end()) out.push_back(*x);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CohomologyClass> enumerate_primitive_classes(const FiberedFace& face,
                                                         const NormBall& ball,
                                                         std::int64_t max_norm) {
  if (max_norm < 0) fail(ErrorCode::InvalidArgument, "max_norm must be nonnegative");
  const auto verts = face_vertices(face, ball);
  if (max_norm == 0) return {};

  // Every class in the closed cone with norm <= K lies in K times the hull of
  // the face vertices, hence in the box |w_i| <= K * max |vertex_i|.
  Rational radius = 0;
  for (const auto& x : verts)
    for (const auto& c : x) radius = std::max(radius, sgn(c) < 0 ? Rational(-c) : c);
  Integer box_q = Integer(static_cast<long>(max_norm)) * radius.get_num() / radius.get_den();
  const std::int64_t box = to_int64(box_q);

  const std::size_t b = ball.betti();
  std::vector<CohomologyClass> out;
  IntVector w(b, -box);
  for (;;) {
    CohomologyClass c(w);
    if (!c.is_zero() && gcd_of(w) == 1 && cone_contains(face, ball, c) &&
        evaluate_norm(ball, c) <= max_norm)
      out.push_back(c);
    std::size_t i = 0;
    while (i < b && w[i] == box) w[i++] = -box;
    if (i == b) break;
    ++w[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace fibcomm::norm
