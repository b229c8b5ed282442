#include "fibcomm/lattice.hpp"
#include "fibcomm/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace fibcomm::lattice {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {
  if (rows == 0 || cols == 0) fail(ErrorCode::InvalidArgument, "matrix dimensions must be positive");
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) fail(ErrorCode::InvalidArgument, "matrix dimensions must be positive");
  if (data_.size() != rows * cols)
    fail(ErrorCode::DimensionMismatch, "entry count does not match rows x cols");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) fail(ErrorCode::InvalidArgument, "matrix needs at least one row");
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) fail(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = static_cast<long>(rows[i][j]);
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<BigVector>& rows) {
  if (rows.empty()) fail(ErrorCode::InvalidArgument, "matrix needs at least one row");
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) fail(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

BigVector IntMatrix::row(std::size_t i) const {
  return BigVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

BigVector IntMatrix::column(std::size_t j) const {
  BigVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

BigVector IntMatrix::apply(const BigVector& v) const {
  if (v.size() != cols_) fail(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
  BigVector out(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product size mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  IntMatrix m = a;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sgn(m(swap_row, k)) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Working state for the Smith reduction. Invariant: input = left * work * right
// and right * right_inv = identity.
struct SmithState {
  IntMatrix work;
  IntMatrix left;
  IntMatrix right;
  IntMatrix right_inv;

  explicit SmithState(const IntMatrix& a)
      : work(a), left(IntMatrix::identity(a.rows())), right(IntMatrix::identity(a.cols())),
        right_inv(IntMatrix::identity(a.cols())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < work.cols(); ++c) std::swap(work(i, c), work(j, c));
    for (std::size_t r = 0; r < left.rows(); ++r) std::swap(left(r, i), left(r, j));
  }

  // row_i += k * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t c = 0; c < work.cols(); ++c) work(i, c) += k * work(j, c);
    for (std::size_t r = 0; r < left.rows(); ++r) left(r, j) -= k * left(r, i);
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < work.cols(); ++c) work(i, c) = -work(i, c);
    for (std::size_t r = 0; r < left.rows(); ++r) left(r, i) = -left(r, i);
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < work.rows(); ++r) std::swap(work(r, i), work(r, j));
    for (std::size_t c = 0; c < right.cols(); ++c) std::swap(right(i, c), right(j, c));
    for (std::size_t r = 0; r < right_inv.rows(); ++r) std::swap(right_inv(r, i), right_inv(r, j));
  }

  // col_j += k * col_i
  void add_col(std::size_t j, std::size_t i, const Integer& k) {
    for (std::size_t r = 0; r < work.rows(); ++r) work(r, j) += k * work(r, i);
    for (std::size_t c = 0; c < right.cols(); ++c) right(i, c) -= k * right(j, c);
    for (std::size_t r = 0; r < right_inv.rows(); ++r) right_inv(r, j) += k * right_inv(r, i);
  }
};

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SmithState s(a);
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t steps = std::min(m, n);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing block, ties by row-major index.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (sgn(s.work(i, j)) == 0) continue;
          if (pi == m || mpz_cmpabs(s.work(i, j).get_mpz_t(), s.work(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == m) break; // trailing block is zero

      s.swap_rows(t, pi);
      s.swap_cols(t, pj);

      bool residue = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(s.work(i, t)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s.work(i, t).get_mpz_t(), s.work(t, t).get_mpz_t());
        if (sgn(q) != 0) s.add_row(i, t, -q);
        if (sgn(s.work(i, t)) != 0) residue = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(s.work(t, j)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s.work(t, j).get_mpz_t(), s.work(t, t).get_mpz_t());
        if (sgn(q) != 0) s.add_col(j, t, -q);
        if (sgn(s.work(t, j)) != 0) residue = true;
      }
      if (residue) continue;

      // Pivot row and column are clear; enforce the divisibility chain.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(s.work(i, j).get_mpz_t(), s.work(t, t).get_mpz_t())) {
            s.add_row(t, i, Integer(1));
            divisible = false;
            break;
          }
        }
      if (!divisible) continue;

      if (sgn(s.work(t, t)) < 0) s.negate_row(t);
      break;
    }
  }
  return SmithDecomposition{std::move(s.left), std::move(s.work), std::move(s.right),
                            std::move(s.right_inv)};
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t steps = std::min(diag.rows(), diag.cols());
  while (r < steps && sgn(diag(r, r)) != 0) ++r;
  return r;
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  const std::size_t steps = std::min(diag.rows(), diag.cols());
  for (std::size_t i = 0; i < steps; ++i) out.push_back(diag(i, i));
  return out;
}

std::size_t rank(const IntMatrix& a) { return smith_normal_form(a).rank(); }

std::vector<BigVector> hermite_rows(const std::vector<BigVector>& input) {
  std::vector<BigVector> rows;
  for (const auto& r : input)
    if (std::any_of(r.begin(), r.end(), [](const Integer& x) { return sgn(x) != 0; }))
      rows.push_back(r);
  if (rows.empty()) return rows;
  const std::size_t width = rows.front().size();

  auto axpy = [](BigVector& dst, const BigVector& src, const Integer& k) {
    for (std::size_t c = 0; c < dst.size(); ++c) dst[c] += k * src[c];
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        if (best == rows.size() || mpz_cmpabs(rows[i][c].get_mpz_t(), rows[best][c].get_mpz_t()) < 0) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        axpy(rows[i], rows[r], -q);
        if (sgn(rows[i][c]) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (sgn(rows[r][c]) == 0) continue;
    if (sgn(rows[r][c]) < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (sgn(q) != 0) axpy(rows[i], rows[r], -q);
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<BigVector> kernel_basis(const IntMatrix& a) {
  const SmithDecomposition snf = smith_normal_form(a);
  std::vector<BigVector> basis;
  for (std::size_t j = snf.rank(); j < a.cols(); ++j) basis.push_back(snf.right_inverse.column(j));
  basis = hermite_rows(basis);
  std::sort(basis.begin(), basis.end());
  return basis;
}

bool is_primitive(const CohomologyClass& v) {
  if (v.is_zero()) fail(ErrorCode::ZeroClass, "primitivity of the zero class is undefined");
  return gcd_of(v.coords()) == 1;
}

ImageOrder image_order_mod_n(const std::vector<BigVector>& gens, const CohomologyClass& omega,
                             const Integer& n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "modulus must be positive");
  Integer d = n;
  for (const auto& g : gens) {
    if (g.size() != omega.size())
      fail(ErrorCode::DimensionMismatch, "generator length differs from class length");
    Integer value = 0;
    for (std::size_t i = 0; i < g.size(); ++i) value += g[i] * static_cast<long>(omega[i]);
    mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), value.get_mpz_t());
  }
  return ImageOrder{d, n / d};
}

} // namespace fibcomm::lattice
