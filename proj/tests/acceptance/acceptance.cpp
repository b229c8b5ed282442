// Acceptance checks 1-9. One PASS/FAIL line per criterion; exit status is the
// number of failures.

#include "fibcomm/commensurability.hpp"
#include "fibcomm/covers.hpp"
#include "fibcomm/descriptor.hpp"
#include "fibcomm/entropy.hpp"
#include "fibcomm/error.hpp"
#include "fibcomm/lattice.hpp"
#include "fibcomm/laurent.hpp"
#include "fibcomm/norm.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace fibcomm;

namespace {

// Pinned tolerances.
constexpr double kDilatationTol = 1e-9;
constexpr double kEntropyEqualTol = 1e-9;
constexpr double kConcavityMargin = 1e-9;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Check {
  Outcome& out;
  std::ostringstream note;
  void expect(bool cond, const std::string& what) {
    if (!cond && out.ok) {
      out.ok = false;
      out.detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Check&)>& body) {
  Outcome out;
  Check c{out, {}};
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs > limit_seconds) {
    out.ok = false;
    out.detail = "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s";
  }
  if (out.ok) out.detail = c.note.str();
  if (!out.ok) ++failures;
  std::printf("[%s] AC%d %s (%.3f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              out.detail.empty() ? "" : ": ", out.detail.c_str());
  std::fflush(stdout);
}

const descriptor::ManifoldDescriptor& six22() {
  static const auto d = descriptor::bundled_descriptor("six22");
  return d;
}

// Criterion 3's list: primitive nU + mT in every fibered cone of six22 with norm <= 6.
std::vector<CohomologyClass> six22_classes() {
  std::vector<CohomologyClass> out;
  for (const auto& f : six22().faces)
    if (f.fibered)
      for (const auto& w : norm::enumerate_primitive_classes(f, six22().norm_ball(), 6)) out.push_back(w);
  return out;
}

bool divides(std::int64_t n, std::int64_t m) { return m % n == 0; }

void random_pair(std::mt19937_64& rng, covers::FibrationPair& p) {
  std::uniform_int_distribution<int> dim(2, 4);
  std::uniform_int_distribution<std::int64_t> chi(-8, -1);
  for (;;) {
    const std::size_t b = dim(rng);
    auto w1 = oracle::random_primitive(rng, b, 6), w2 = oracle::random_primitive(rng, b, 6);
    IntVector neg(w2);
    for (auto& x : neg) x = -x;
    if (w1 == w2 || w1 == neg) continue;
    p.omega1 = CohomologyClass(w1);
    p.omega2 = CohomologyClass(w2);
    p.chi1 = p.chi2 = chi(rng);
    p.conjugate_monodromies = true;
    return;
  }
}

} // namespace

int main() {
  criterion(1, "six22 norm ball is a square", 1.0, [](Check& c) {
    const auto& d = six22();
    const auto faces = norm::top_faces(d.norm_ball());
    c.expect(faces.size() == 4, "expected 4 top faces, got " + std::to_string(faces.size()));
    c.expect(d.faces.size() == 4, "descriptor lists " + std::to_string(d.faces.size()) + " faces");
    c.note << faces.size() << " top faces";
  });

  criterion(2, "dilatation of the sigma1 sigma2^-1 class equals the Perron root of [[2,1],[1,1]]", 1.0, [](Check& c) {
    const auto& d = six22();
    const auto& t = d.named_classes.at("T");
    const double lambda = entropy::dilatation(d.norm_ball(), *d.fibered_face_containing(t), t);
    const double perron = oracle::perron_root({{2, 1}, {1, 1}}, 60);
    const double golden = (3 + std::sqrt(5.0)) / 2;
    c.expect(std::fabs(lambda - perron) < kDilatationTol, "lambda differs from the Perron root");
    c.expect(std::fabs(perron - golden) < kDilatationTol, "power iteration did not converge");
    char buf[96];
    std::snprintf(buf, sizeof buf, "lambda = %.13f, Perron root = %.13f", lambda, perron);
    c.note << buf;
  });

  criterion(3, "entropy(nU+mT) = entropy(-nU+mT) for fibered classes of norm <= 6", 10.0, [](Check& c) {
    const auto& d = six22();
    double worst = 0;
    std::size_t count = 0;
    for (const auto& w : six22_classes()) {
      const CohomologyClass mirror{-w[0], w[1]};
      const auto* fm = d.fibered_face_containing(mirror);
      c.expect(fm != nullptr, "mirror of " + w.to_string() + " is not fibered");
      if (!fm) continue;
      const double e1 = entropy::normalized_entropy(d.norm_ball(), *d.fibered_face_containing(w), w).entropy;
      const double e2 = entropy::normalized_entropy(d.norm_ball(), *fm, mirror).entropy;
      worst = std::max(worst, std::fabs(e1 - e2));
      c.expect(std::fabs(e1 - e2) <= kEntropyEqualTol, "entropies differ at " + w.to_string());
      ++count;
    }
    c.expect(count > 0, "no classes enumerated");
    c.note << count << " classes, max |difference| = " << worst;
  });

  criterion(4, "1/ent is strictly concave on 25 sampled triples of the T-face", 30.0, [](Check& c) {
    const auto& d = six22();
    const auto& face = *d.fibered_face_containing(d.named_classes.at("T"));
    // Points (a, 1/2) with |a| < 1/2 are the open T-face; a has denominator <= 8.
    std::mt19937_64 rng(25);
    std::uniform_int_distribution<long> num(-3, 3);
    const std::vector<Rational> weights = {Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(1, 4),
                                           Rational(3, 4)};
    std::uniform_int_distribution<std::size_t> pick(0, weights.size() - 1);
    int done = 0;
    double least = 1e9;
    while (done < 25) {
      Rational a(num(rng), 8), b(num(rng), 8);
      a.canonicalize();
      b.canonicalize();
      if (a == b) continue;
      const RationalVector p{a, Rational(1, 2)}, q{b, Rational(1, 2)};
      const auto probe = entropy::concavity_probe(d.norm_ball(), face, p, q, weights[pick(rng)], kConcavityMargin);
      c.expect(probe.strict && probe.margin() > kConcavityMargin,
               "not strict at p_1 = " + a.get_str() + ", q_1 = " + b.get_str());
      least = std::min(least, probe.margin());
      ++done;
    }
    c.note << done << " triples, smallest margin = " << least;
  });

  criterion(5, "every pair of criterion-3 classes is Symmetric or NonCommensurable", 10.0, [](Check& c) {
    const auto& d = six22();
    c.expect(d.flags.all_fibrations_minimal, "six22 should be flagged all_fibrations_minimal");
    const auto action = d.symmetries();
    const auto classes = six22_classes();
    std::size_t pairs = 0, symmetric = 0;
    for (const auto& a : classes)
      for (const auto& b : classes) {
        const auto v = commensurability::classify_pair(d.flags, action, d.norm_ball(), *d.fibered_face_containing(a),
                                                       *d.fibered_face_containing(b), a, b);
        c.expect(v.kind != commensurability::VerdictKind::Undetermined,
                 "undetermined: " + a.to_string() + " vs " + b.to_string());
        symmetric += v.kind == commensurability::VerdictKind::Symmetric;
        ++pairs;
      }
    c.note << pairs << " ordered pairs, " << symmetric << " symmetric";
  });

  criterion(6, "volume gate reproduces the covering-degree arithmetic", 1.0, [](Check& c) {
    using commensurability::volume_minimality_gate;
    const auto magic = volume_minimality_gate(5.33, 3, 3);
    c.expect(!magic.possible, "magic manifold, degree 3 should be impossible");
    c.expect(std::fabs(magic.quotient_volume - 1.7766666666666666) < 1e-12, "quotient volume 5.33/3");
    c.expect(magic.quotient_volume < 2 * oracle::regular_ideal_tetrahedron_volume(), "5.33/3 < 2 V0");
    const double v0 = oracle::regular_ideal_tetrahedron_volume();
    c.expect(std::fabs(v0 - commensurability::kTetrahedronVolume) < 1e-12, "V0 constant");
    c.expect(std::fabs(oracle::regular_ideal_octahedron_volume() - commensurability::kOctahedronVolume) < 1e-12,
             "V8 constant");
    const auto& d = six22();
    c.expect(d.flags.volume && std::fabs(*d.flags.volume - 4 * v0) < 1e-9, "six22 volume is 4 V0");
    for (std::int64_t n = 3; n <= 12; ++n)
      c.expect(!volume_minimality_gate(4 * v0, *d.flags.cusps, n).possible,
               "six22 should not cover with degree " + std::to_string(n));
    c.expect(volume_minimality_gate(4 * v0, *d.flags.cusps, 2).possible, "degree 2 is not excluded");
    c.note << "magic/3 = " << magic.quotient_volume << " < 2V0 = " << 2 * v0;
  });

  criterion(7, "analyze_cover matches Z/nZ subgroup enumeration on 100 instances", 10.0, [](Check& c) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> deg(1, 30);
    for (int i = 0; i < 100; ++i) {
      covers::FibrationPair p;
      random_pair(rng, p);
      p.conjugate_monodromies = i % 2 == 0;
      const std::int64_t n = deg(rng);
      const auto r = covers::analyze_cover(p, n);
      std::vector<std::int64_t> images;
      for (const auto& a : covers::fiber_kernel(p.omega2)) {
        Integer v = 0;
        for (std::size_t k = 0; k < a.size(); ++k) v += a[k] * static_cast<long>(p.omega1[k]);
        images.push_back(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(n)));
      }
      const auto h = oracle::subgroup_mod_n(images, n);
      const auto order = static_cast<std::int64_t>(h.size());
      c.expect(r.component_degree == order && r.d == n / order && r.components == r.d,
               "mismatch at " + p.omega1.to_string() + ", " + p.omega2.to_string() + ", n = " + std::to_string(n));
      c.expect(r.components * r.component_degree == n, "components * degree != n");
    }
    c.note << "100 instances, b in [2,4], n in [1,30]";
  });

  criterion(8, "search_nonsymmetric reports every n in (m, n_max]", 10.0, [](Check& c) {
    std::mt19937_64 rng(8);
    std::int64_t largest_m = 0;
    for (int i = 0; i < 50; ++i) {
      covers::FibrationPair p;
      random_pair(rng, p);
      const std::int64_t m = to_int64(covers::kernel_gcd(p));
      largest_m = std::max(largest_m, m);
      const std::int64_t n_max = m + 25;
      std::set<std::int64_t> got;
      for (const auto& r : covers::search_nonsymmetric(p, n_max)) got.insert(r.degree);
      for (std::int64_t n = m + 1; n <= n_max; ++n)
        c.expect(got.contains(n), "n = " + std::to_string(n) + " > m = " + std::to_string(m) + " not reported");
      for (std::int64_t n = 1; n <= m; ++n)
        c.expect(got.contains(n) == !divides(n, m), "wrong verdict below the threshold");
    }
    c.note << "50 pairs, largest m = " << largest_m;
  });

  criterion(9, "algebra property suites (Smith, kernel, triangle inequality, linearity)", 30.0, [](Check& c) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    std::uniform_int_distribution<long> entry(-20, 20);
    for (int t = 0; t < 200; ++t) {
      lattice::IntMatrix a(dim(rng), dim(rng));
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
      const auto s = lattice::smith_normal_form(a);
      c.expect(s.left * s.diag * s.right == a, "left * diag * right != a");
      c.expect(abs(lattice::determinant(s.left)) == 1 && abs(lattice::determinant(s.right)) == 1, "not unimodular");
      Integer prev = 1;
      bool zero = false;
      for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) {
        const Integer& x = s.diag(i, i);
        c.expect(sgn(x) >= 0, "negative invariant factor");
        if (sgn(x) == 0) {
          zero = true;
          continue;
        }
        c.expect(!zero && mpz_divisible_p(x.get_mpz_t(), prev.get_mpz_t()), "divisibility chain broken");
        prev = x;
      }
      const auto k = lattice::kernel_basis(a);
      c.expect(k.size() == a.cols() - s.rank(), "kernel has the wrong rank");
      for (const auto& v : k)
        for (const auto& x : a.apply(v)) c.expect(sgn(x) == 0, "kernel vector not annihilated");
    }

    const auto& ball = six22().norm_ball();
    const auto magic = descriptor::bundled_descriptor("magic");
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    for (const auto* b : {&ball, &magic.norm_ball()})
      for (int t = 0; t < 300; ++t) {
        RationalVector x, y, z;
        for (std::size_t i = 0; i < b->betti(); ++i) {
          x.emplace_back(num(rng), den(rng));
          y.emplace_back(num(rng), den(rng));
          x.back().canonicalize();
          y.back().canonicalize();
          z.push_back(x.back() + y.back());
        }
        c.expect(norm::evaluate_norm(*b, z) <= norm::evaluate_norm(*b, x) + norm::evaluate_norm(*b, y),
                 "triangle inequality fails");
      }

    std::uniform_int_distribution<std::int64_t> e(-3, 3);
    for (int t = 0; t < 200; ++t) {
      const std::size_t b = 1 + t % 3;
      laurent::LaurentPolynomial p1(b), p2(b);
      for (int i = 0; i < 6; ++i) {
        IntVector u(b), v(b);
        for (auto& x : u) x = e(rng);
        for (auto& x : v) x = e(rng);
        p1.add_term(u, Integer(num(rng)));
        p2.add_term(v, Integer(num(rng)));
      }
      const CohomologyClass w(oracle::random_primitive(rng, b, 4));
      c.expect(laurent::specialize(p1 + p2, w) == laurent::specialize(p1, w) + laurent::specialize(p2, w),
               "specialization is not linear");
    }
    c.note << "200 Smith/kernel, 600 triangle, 200 linearity samples";
  });

  std::printf("%d of 9 acceptance criteria failed\n", failures);
  return failures;
}
