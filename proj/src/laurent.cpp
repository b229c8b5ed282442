#include "fibcomm/laurent.hpp"
#include "fibcomm/error.hpp"
#include "fibcomm/lattice.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace fibcomm::laurent {

// ---------------------------------------------------------------------------
// Polynomial containers

void LaurentPolynomial::add_term(const Exponent& e, const Integer& c) {
  if (e.size() != arity_) fail(ErrorCode::ArityMismatch, "exponent length differs from arity");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::vector<Exponent> LaurentPolynomial::support() const {
  std::vector<Exponent> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << '-';
    first = false;
    Integer a = abs(c);
    os << a.get_str() << "*x^(";
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << ')';
  }
  return os.str();
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.arity_ != b.arity_) fail(ErrorCode::ArityMismatch, "sum of polynomials of different arity");
  LaurentPolynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

void UnivariatePoly::add_term(std::int64_t e, const Integer& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::int64_t UnivariatePoly::low_exponent() const {
  if (terms_.empty()) fail(ErrorCode::ZeroPolynomial, "zero polynomial has no exponents");
  return terms_.begin()->first;
}

std::int64_t UnivariatePoly::high_exponent() const {
  if (terms_.empty()) fail(ErrorCode::ZeroPolynomial, "zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

std::string UnivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << '-';
    first = false;
    os << Integer(abs(c)).get_str();
    if (e != 0) os << "*t^" << e;
  }
  return os.str();
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
  UnivariatePoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

UnivariatePoly specialize(const LaurentPolynomial& p, const CohomologyClass& omega) {
  if (p.arity() != omega.size())
    fail(ErrorCode::ArityMismatch, "class length " + std::to_string(omega.size()) +
                                       " differs from polynomial arity " + std::to_string(p.arity()));
  UnivariatePoly out;
  for (const auto& [e, c] : p.terms()) out.add_term(to_int64(dot(omega, e)), c);
  return out;
}

// ---------------------------------------------------------------------------
// Convex hulls in dimension <= 3, exact

namespace {

Integer cross2(const IntVector& o, const IntVector& a, const IntVector& b) {
  Integer ax = Integer(static_cast<long>(a[0])) - static_cast<long>(o[0]);
  Integer ay = Integer(static_cast<long>(a[1])) - static_cast<long>(o[1]);
  Integer bx = Integer(static_cast<long>(b[0])) - static_cast<long>(o[0]);
  Integer by = Integer(static_cast<long>(b[1])) - static_cast<long>(o[1]);
  return ax * by - ay * bx;
}

// Strict hull (collinear boundary points dropped) of distinct planar points
// spanning the plane. Returns indices into pts.
std::vector<std::size_t> hull2(const std::vector<IntVector>& pts) {
  std::vector<std::size_t> idx(pts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
  if (idx.size() < 3) return idx;
  std::vector<std::size_t> h(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i : idx) {
    while (k >= 2 && sgn(cross2(pts[h[k - 2]], pts[h[k - 1]], pts[i])) <= 0) --k;
    h[k++] = i;
  }
  for (std::size_t n = idx.size() - 1, t = k + 1; n-- > 0;) {
    std::size_t i = idx[n];
    while (k >= t && sgn(cross2(pts[h[k - 2]], pts[h[k - 1]], pts[i])) <= 0) --k;
    h[k++] = i;
  }
  h.resize(k - 1);
  return h;
}

IntVector project(const IntVector& p, const std::vector<std::size_t>& coords) {
  IntVector out;
  for (auto c : coords) out.push_back(p[c]);
  return out;
}

std::vector<IntVector> differences(const std::vector<IntVector>& pts) {
  std::vector<IntVector> out;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    IntVector d(pts[i].size());
    for (std::size_t c = 0; c < d.size(); ++c) d[c] = pts[i][c] - pts[0][c];
    out.push_back(std::move(d));
  }
  return out;
}

std::size_t affine_dimension(const std::vector<IntVector>& pts) {
  if (pts.size() < 2 || pts.front().empty()) return 0;
  return lattice::rank(lattice::IntMatrix::from_rows(differences(pts)));
}

// A set of k coordinates on which the projection of the affine hull is injective.
std::vector<std::size_t> injective_coordinates(const std::vector<IntVector>& pts, std::size_t k) {
  const std::size_t dim = pts.front().size();
  const auto diffs = differences(pts);
  std::vector<bool> mask(dim, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> coords;
    for (std::size_t c = 0; c < dim; ++c)
      if (mask[c]) coords.push_back(c);
    std::vector<IntVector> proj;
    for (const auto& d : diffs) proj.push_back(project(d, coords));
    if (lattice::rank(lattice::IntMatrix::from_rows(proj)) == k) return coords;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  fail(ErrorCode::Internal, "no injective coordinate projection found");
}

// Vertices of a full-dimensional 3-polytope: union of the 2D hull vertices of
// every supporting plane spanned by three of the points.
std::set<std::size_t> hull3(const std::vector<IntVector>& pts) {
  const std::size_t n = pts.size();
  auto sub = [&](std::size_t a, std::size_t b) {
    return std::array<Integer, 3>{Integer(static_cast<long>(pts[a][0])) - static_cast<long>(pts[b][0]),
                                  Integer(static_cast<long>(pts[a][1])) - static_cast<long>(pts[b][1]),
                                  Integer(static_cast<long>(pts[a][2])) - static_cast<long>(pts[b][2])};
  };
  std::set<std::size_t> verts;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        auto u = sub(j, i), v = sub(k, i);
        std::array<Integer, 3> normal{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                      u[0] * v[1] - u[1] * v[0]};
        if (sgn(normal[0]) == 0 && sgn(normal[1]) == 0 && sgn(normal[2]) == 0) continue;
        bool pos = false, neg = false;
        std::vector<std::size_t> on_plane;
        for (std::size_t l = 0; l < n && !(pos && neg); ++l) {
          auto w = sub(l, i);
          int s = sgn(Integer(normal[0] * w[0] + normal[1] * w[1] + normal[2] * w[2]));
          if (s > 0) pos = true;
          else if (s < 0) neg = true;
          else on_plane.push_back(l);
        }
        if (pos && neg) continue;
        std::size_t drop = sgn(normal[2]) != 0 ? 2 : (sgn(normal[1]) != 0 ? 1 : 0);
        std::vector<std::size_t> keep;
        for (std::size_t c = 0; c < 3; ++c)
          if (c != drop) keep.push_back(c);
        std::vector<IntVector> face;
        for (auto l : on_plane) face.push_back(project(pts[l], keep));
        for (auto h : hull2(face)) verts.insert(on_plane[h]);
      }
  return verts;
}

} // namespace

std::vector<IntVector> hull_vertices(std::vector<IntVector> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) return points;
  const std::size_t dim = points.front().size();
  for (const auto& p : points)
    if (p.size() != dim) fail(ErrorCode::DimensionMismatch, "points of different dimension");
  if (dim > 3) fail(ErrorCode::Unsupported, "convex hulls are supported only in dimension <= 3");
  if (points.size() == 1) return points;

  const std::size_t k = affine_dimension(points);
  const auto coords = injective_coordinates(points, k);
  std::vector<IntVector> proj;
  for (const auto& p : points) proj.push_back(project(p, coords));

  std::vector<IntVector> out;
  if (k == 1) {
    auto [mn, mx] = std::minmax_element(proj.begin(), proj.end());
    out = {points[static_cast<std::size_t>(mn - proj.begin())],
           points[static_cast<std::size_t>(mx - proj.begin())]};
  } else if (k == 2) {
    for (auto i : hull2(proj)) out.push_back(points[i]);
  } else {
    for (auto i : hull3(proj)) out.push_back(points[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

NewtonPolytope newton_polytope(const LaurentPolynomial& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "Newton polytope of the zero polynomial");
  if (p.arity() > 3) fail(ErrorCode::Unsupported, "Newton polytopes are supported only for arity <= 3");
  return NewtonPolytope{hull_vertices(p.support())};
}

// ---------------------------------------------------------------------------
// Root isolation

namespace {

// Dense polynomials, ascending coefficients.
using QPoly = std::vector<Rational>;
using ZPoly = std::vector<Integer>;

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(d);
  return d;
}

// Polynomial division over Q; returns {quotient, remainder}.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

// Positive rescaling to a primitive integer polynomial; signs are preserved.
ZPoly to_primitive(const QPoly& p) {
  Integer den = 1;
  for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  Integer content = 0;
  for (const auto& c : p) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    z.push_back(v);
  }
  if (content > 1)
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return z;
}

QPoly to_q(const ZPoly& z) {
  QPoly p;
  for (const auto& c : z) p.emplace_back(c);
  return p;
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = to_q(to_primitive(r));
  }
  return a;
}

// Sign of z at num/den (den > 0), via homogeneous Horner.
int sign_at(const ZPoly& z, const Integer& num, const Integer& den) {
  if (z.empty()) return 0;
  Integer acc = z.back();
  Integer den_pow = 1;
  for (std::size_t i = z.size() - 1; i-- > 0;) {
    den_pow *= den;
    acc = acc * num + z[i] * den_pow;
  }
  return sgn(acc);
}

int sign_at(const ZPoly& z, const Rational& x) { return sign_at(z, x.get_num(), x.get_den()); }

class SturmChain {
public:
  explicit SturmChain(const ZPoly& p) {
    QPoly a = to_q(p);
    QPoly b = derivative(a);
    chain_.push_back(p);
    while (!b.empty()) {
      chain_.push_back(to_primitive(b));
      QPoly r = divmod(a, b).second;
      for (auto& c : r) c = -c;
      a = std::move(b);
      b = to_q(to_primitive(r));
      trim(b);
    }
    int prev = 0;
    for (const auto& s : chain_) {
      int sg = sgn(s.back());
      if (prev != 0 && sg != prev) ++variations_at_infinity_;
      prev = sg;
    }
  }

  // Number of distinct roots strictly greater than x (x not a root).
  int roots_above(const Rational& x) const {
    int prev = 0, changes = 0;
    for (const auto& s : chain_) {
      int sg = sign_at(s, x);
      if (sg == 0) continue;
      if (prev != 0 && sg != prev) ++changes;
      prev = sg;
    }
    return changes - variations_at_infinity_;
  }

private:
  std::vector<ZPoly> chain_;
  int variations_at_infinity_ = 0;
};

} // namespace

Rational evaluate(const UnivariatePoly& q, const Rational& x) {
  Rational acc = 0;
  for (const auto& [e, c] : q.terms()) {
    if (e < 0 && sgn(x) == 0) fail(ErrorCode::InvalidArgument, "negative power of zero");
    Rational pw = 1;
    Rational base = e < 0 ? Rational(1) / x : x;
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) pw *= base;
    acc += Rational(c) * pw;
  }
  return acc;
}

RootBracket largest_real_root_bracket(const UnivariatePoly& q, double tol) {
  if (!(tol > 0)) fail(ErrorCode::InvalidArgument, "root tolerance must be positive");
  if (q.is_zero()) fail(ErrorCode::ZeroPolynomial, "root of the zero polynomial");
  const std::int64_t low = q.low_exponent();
  const std::int64_t degree = q.high_exponent() - low;
  if (degree < 1)
    fail(ErrorCode::InvalidArgument, "polynomial is a monomial after clearing powers of t");

  QPoly dense(static_cast<std::size_t>(degree) + 1, Rational(0));
  for (const auto& [e, c] : q.terms()) dense[static_cast<std::size_t>(e - low)] = c;

  // Square-free part; a root at t = 1 is divided out so 1 is never a root.
  QPoly g = gcd(dense, derivative(dense));
  QPoly sqfree = divmod(dense, g).first;
  ZPoly z = to_primitive(sqfree);
  if (sign_at(z, Integer(1), Integer(1)) == 0) sqfree = divmod(to_q(z), QPoly{Rational(-1), Rational(1)}).first;
  z = to_primitive(sqfree);
  if (z.size() < 2) fail(ErrorCode::NoRootAboveOne, "no real root greater than 1");

  const SturmChain sturm(z);
  Rational lo = 1;
  int above = sturm.roots_above(lo);
  if (above == 0) fail(ErrorCode::NoRootAboveOne, "no real root greater than 1: " + q.to_string());

  // Cauchy bound: every root has modulus < 1 + max |c_i / c_lead|.
  Rational bound = 0;
  for (std::size_t i = 0; i + 1 < z.size(); ++i) {
    Rational r = Rational(z[i]) / Rational(z.back());
    if (r < 0) r = -r;
    if (r > bound) bound = r;
  }
  Rational hi = 1 + bound;
  const Rational width = exact_rational(tol);

  // Roots above an exact rational root x of z, counted on z / (den*t - num).
  auto roots_above_root = [&](const Rational& x) {
    QPoly linear{Rational(-x.get_num()), Rational(x.get_den())};
    return SturmChain(to_primitive(divmod(to_q(z), linear).first)).roots_above(x);
  };

  while (above > 1 && hi - lo >= width) {
    Rational mid = (lo + hi) / 2;
    int count = sign_at(z, mid) == 0 ? roots_above_root(mid) : sturm.roots_above(mid);
    if (sign_at(z, mid) == 0 && count == 0) return {mid, mid};
    if (count >= 1) {
      lo = mid;
      above = count;
    } else {
      hi = mid;
    }
  }

  const int hi_sign = sign_at(z, hi);
  while (hi - lo >= width) {
    Rational mid = (lo + hi) / 2;
    int s = sign_at(z, mid);
    if (s == 0) return {mid, mid};
    if (s == hi_sign) hi = mid;
    else lo = mid;
  }
  return {lo, hi};
}

double largest_real_root(const UnivariatePoly& q, double tol) {
  RootBracket b = largest_real_root_bracket(q, tol);
  Rational mid = (b.lo + b.hi) / 2;
  return mid.get_d();
}

} // namespace fibcomm::laurent
