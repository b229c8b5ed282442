#include "fibcomm/error.hpp"
#include "fibcomm/lattice.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace fibcomm;
using namespace fibcomm::lattice;
using testutil::mat;

TEST_CASE("smith form of small matrices") {
  auto id = IntMatrix::identity(2);
  auto s = smith_normal_form(id);
  CHECK(s.left == id);
  CHECK(s.right == id);
  CHECK(s.diag == id);

  auto z = smith_normal_form(mat({{0, 0}, {0, 0}}));
  CHECK(z.diag.is_zero());
  CHECK(z.rank() == 0);

  const auto a = mat({{2, 4}, {4, 8}});
  auto d = smith_normal_form(a);
  CHECK(d.diag == mat({{2, 0}, {0, 0}}));
  CHECK(d.left * d.diag * d.right == a);
  CHECK(d.right * d.right_inverse == IntMatrix::identity(2));
}

TEST_CASE("smith form is deterministic") {
  const auto a = mat({{6, 4, 0}, {2, -8, 10}, {3, 3, 3}});
  auto s1 = smith_normal_form(a), s2 = smith_normal_form(a);
  CHECK(s1.left == s2.left);
  CHECK(s1.right == s2.right);
  CHECK(s1.diag == s2.diag);
}

TEST_CASE("smith form property: 200 random matrices") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = testutil::random_matrix(rng, 6, 20);
    const auto s = smith_normal_form(a);
    REQUIRE(s.left * s.diag * s.right == a);
    CHECK(abs(determinant(s.left)) == 1);
    CHECK(abs(determinant(s.right)) == 1);
    CHECK(s.right * s.right_inverse == IntMatrix::identity(a.cols()));
    CHECK(testutil::is_diagonal_chain(s.diag));
    // rank agrees with plain elimination over Q
    std::vector<std::vector<mpq_class>> q(a.rows(), std::vector<mpq_class>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) q[i][j] = a(i, j);
    CHECK(s.rank() == oracle::rational_rank(q));
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(mat({{2, 1}, {1, 1}})) == 1);
  CHECK(determinant(mat({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == -3);
}

TEST_CASE("kernel basis examples") {
  CHECK(kernel_basis(mat({{1, 0}})) == std::vector<BigVector>{{0, 1}});
  CHECK(kernel_basis(mat({{0, 0}})) == std::vector<BigVector>{{0, 1}, {1, 0}});
  auto k = kernel_basis(mat({{2, 3}}));
  REQUIRE(k.size() == 1);
  CHECK((k[0] == BigVector{3, -2} || k[0] == BigVector{-3, 2}));
}

TEST_CASE("kernel basis property: annihilated, right count, saturated") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = testutil::random_matrix(rng, 5, 9);
    const auto k = kernel_basis(a);
    const std::size_t r = smith_normal_form(a).rank();
    REQUIRE(k.size() == a.cols() - r);
    for (const auto& v : k)
      for (const auto& x : a.apply(v)) CHECK(sgn(x) == 0);
    if (k.empty()) continue;
    // Saturated lattice: Smith invariants of the basis matrix are all 1.
    const auto s = smith_normal_form(IntMatrix::from_rows(k));
    for (const auto& f : s.invariant_factors()) CHECK(f == 1);
    CHECK(s.rank() == k.size());
    CHECK(std::is_sorted(k.begin(), k.end()));
  }
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(CohomologyClass{1, 0}));
  CHECK_FALSE(is_primitive(CohomologyClass{2, 4}));
  CHECK(is_primitive(CohomologyClass{3, 5}));
  CHECK_THROWS_AS(is_primitive(CohomologyClass{0, 0}), Error);
  try {
    is_primitive(CohomologyClass{0, 0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroClass);
  }
}

TEST_CASE("image order mod n examples") {
  auto r = image_order_mod_n({{0, 1}}, CohomologyClass{1, 0}, 5);
  CHECK(r.d == 5);
  CHECK(r.order == 1);
  r = image_order_mod_n({{1, 0}}, CohomologyClass{1, 0}, 3);
  CHECK(r.d == 1);
  CHECK(r.order == 3);
  r = image_order_mod_n({{2, 0}}, CohomologyClass{1, 0}, 4);
  CHECK(r.d == 2);
  CHECK(r.order == 2);
}

TEST_CASE("image order agrees with subgroup enumeration for n <= 30") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> count(0, 3), coord(-12, 12), dim(1, 4);
  for (std::int64_t n = 1; n <= 30; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t b = dim(rng);
      IntVector w(b);
      for (auto& x : w) x = coord(rng);
      std::vector<BigVector> gens;
      std::vector<std::int64_t> images;
      for (int g = count(rng); g > 0; --g) {
        BigVector v(b);
        IntVector vi(b);
        for (std::size_t i = 0; i < b; ++i) vi[i] = coord(rng), v[i] = static_cast<long>(vi[i]);
        gens.push_back(v);
        images.push_back(oracle::dot(vi, w));
      }
      const auto h = oracle::subgroup_mod_n(images, n);
      const auto r = image_order_mod_n(gens, CohomologyClass(w), Integer(static_cast<long>(n)));
      CHECK(r.order == static_cast<long>(h.size()));
      CHECK(r.d * r.order == n);
    }
}

TEST_CASE("matrix shape is validated") {
  CHECK_THROWS_AS(IntMatrix(0, 2), Error);
  CHECK_THROWS_AS(IntMatrix::from_rows(std::vector<IntVector>{{1, 2}, {3}}), Error);
}
