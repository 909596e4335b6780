#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncpoisson/errors.hpp"
#include "ncpoisson/scalar.hpp"

namespace ncp {

namespace detail {
inline void check_index(std::size_t i, std::size_t n) {
  if (i >= n) throw std::out_of_range("index " + std::to_string(i) + " out of range " + std::to_string(n));
}
}  // namespace detail

/// Dense vector of exact scalars. The length is fixed at construction.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n) : data_(n) {}
  explicit Vector(std::vector<Scalar> data) : data_(std::move(data)) {}
  Vector(std::initializer_list<Scalar> init) : data_(init) {}

  static Vector unit(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
  }

  std::size_t size() const noexcept { return data_.size(); }

  Scalar& operator[](std::size_t i) {
    detail::check_index(i, data_.size());
    return data_[i];
  }
  const Scalar& operator[](std::size_t i) const {
    detail::check_index(i, data_.size());
    return data_[i];
  }

  std::span<const Scalar> values() const noexcept { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& q) { return ncp::is_zero(q); });
  }

  Vector& operator+=(const Vector& o) {
    require(o.size() == size(), Errc::DimensionMismatch, "vector sum");
    for (std::size_t i = 0; i < size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Vector& operator-=(const Vector& o) {
    require(o.size() == size(), Errc::DimensionMismatch, "vector difference");
    for (std::size_t i = 0; i < size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Vector& operator*=(const Scalar& s) {
    for (auto& q : data_) q *= s;
    return *this;
  }
  /// this += s * o
  void axpy(const Scalar& s, const Vector& o) {
    require(o.size() == size(), Errc::DimensionMismatch, "axpy");
    if (ncp::is_zero(s)) return;
    for (std::size_t i = 0; i < size(); ++i)
      if (!ncp::is_zero(o.data_[i])) data_[i] += s * o.data_[i];
  }

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator-(Vector a) { return a *= Scalar(-1); }
  friend Vector operator*(const Scalar& s, Vector a) { return a *= s; }
  friend bool operator==(const Vector& a, const Vector& b) { return a.data_ == b.data_; }

 private:
  std::vector<Scalar> data_;
};

inline std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      require(row.size() == cols_, Errc::DimensionMismatch, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_columns(std::span<const Vector> cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      require(cols[j].size() == rows, Errc::DimensionMismatch, "column length");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) {
    detail::check_index(i, rows_);
    detail::check_index(j, cols_);
    return data_[i * cols_ + j];
  }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    detail::check_index(i, rows_);
    detail::check_index(j, cols_);
    return data_[i * cols_ + j];
  }

  Vector column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vector row(std::size_t i) const {
    Vector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& q) { return ncp::is_zero(q); });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
    return t;
  }

  Vector operator*(const Vector& v) const {
    require(v.size() == cols_, Errc::DimensionMismatch, "matrix-vector product");
    Vector out(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (ncp::is_zero(v[j])) continue;
      for (std::size_t i = 0; i < rows_; ++i) {
        const Scalar& a = data_[i * cols_ + j];
        if (!ncp::is_zero(a)) out[i] += a * v[j];
      }
    }
    return out;
  }

  Matrix operator*(const Matrix& o) const {
    require(cols_ == o.rows_, Errc::DimensionMismatch, "matrix product");
    Matrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Scalar& a = data_[i * cols_ + k];
        if (ncp::is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const Scalar& b = o.data_[k * o.cols_ + j];
          if (!ncp::is_zero(b)) out.data_[i * o.cols_ + j] += a * b;
        }
      }
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, Errc::DimensionMismatch, "matrix sum");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, Errc::DimensionMismatch, "matrix difference");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const Scalar& s) {
    for (auto& q : data_) q *= s;
    return *this;
  }
  /// this += s * o
  void axpy(const Scalar& s, const Matrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, Errc::DimensionMismatch, "matrix axpy");
    if (ncp::is_zero(s)) return;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!ncp::is_zero(o.data_[i])) data_[i] += s * o.data_[i];
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= Scalar(-1); }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

inline std::string to_string(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " " : "") + to_string(m(i, j));
  }
  return s + "]";
}

/// Kronecker product; (A (x) B)(v (x) w) = Av (x) Bw with index (i, j) -> i * dim(w) + j.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& s = a(i, j);
      if (is_zero(s)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!is_zero(b(k, l))) out(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
    }
  return out;
}

/// Horizontal concatenation [A | B].
inline Matrix hstack(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), Errc::DimensionMismatch, "hstack");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

/// Dense rank-3 array, index (i, j, k) stored row-major.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2) : d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2) {}

  std::size_t dim0() const noexcept { return d0_; }
  std::size_t dim1() const noexcept { return d1_; }
  std::size_t dim2() const noexcept { return d2_; }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    detail::check_index(i, d0_);
    detail::check_index(j, d1_);
    detail::check_index(k, d2_);
    return data_[(i * d1_ + j) * d2_ + k];
  }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    detail::check_index(i, d0_);
    detail::check_index(j, d1_);
    detail::check_index(k, d2_);
    return data_[(i * d1_ + j) * d2_ + k];
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& q) { return ncp::is_zero(q); });
  }

  Tensor3& operator+=(const Tensor3& o) {
    require(d0_ == o.d0_ && d1_ == o.d1_ && d2_ == o.d2_, Errc::DimensionMismatch, "tensor sum");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Tensor3& operator-=(const Tensor3& o) {
    require(d0_ == o.d0_ && d1_ == o.d1_ && d2_ == o.d2_, Errc::DimensionMismatch, "tensor difference");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Tensor3& operator*=(const Scalar& s) {
    for (auto& q : data_) q *= s;
    return *this;
  }

  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(const Scalar& s, Tensor3 a) { return a *= s; }
  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.d0_ == b.d0_ && a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.data_ == b.data_;
  }

 private:
  std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<Scalar> data_;
};

// ---------------------------------------------------------------------------
// Fraction-free elimination

namespace detail {

using IntRows = std::vector<std::vector<mpz_class>>;

/// Scales each row by the lcm of its denominators, giving an integer matrix
/// with the same row space.
inline IntRows clear_denominators(const Matrix& m) {
  IntRows rows(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return rows;
}

/// Bareiss elimination in place on the first `ncols` columns (the remaining
/// columns are carried along). Returns the pivot columns; rows [0, rank) hold
/// the integer echelon form.
inline std::vector<std::size_t> bareiss(IntRows& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  const std::size_t nrows = a.size();
  const std::size_t width = nrows ? a[0].size() : 0;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && a[p][c] == 0) ++p;
    if (p == nrows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < width; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    // Every surviving entry is a minor of the original rows, so the next
    // division by this pivot is exact (Sylvester's identity).
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Solves the echelon system rows[0..rank) for the given values of the free
/// variables. `rhs_col` selects an augmented column, or none for homogeneous.
inline std::vector<Scalar> back_substitute(const IntRows& e, const std::vector<std::size_t>& pivots,
                                           std::size_t ncols, std::vector<Scalar> x,
                                           std::optional<std::size_t> rhs_col) {
  for (std::size_t r = pivots.size(); r-- > 0;) {
    const std::size_t pc = pivots[r];
    Scalar acc = rhs_col ? Scalar(e[r][*rhs_col]) : Scalar(0);
    for (std::size_t j = pc + 1; j < ncols; ++j)
      if (e[r][j] != 0 && !ncp::is_zero(x[j])) acc -= Scalar(e[r][j]) * x[j];
    x[pc] = acc / Scalar(e[r][pc]);
  }
  return x;
}

}  // namespace detail

/// Rank over the rationals via fraction-free (Bareiss) elimination.
inline std::size_t rank(const Matrix& m) {
  auto rows = detail::clear_denominators(m);
  return detail::bareiss(rows, m.cols()).size();
}

/// Basis of the right null space {v : M v = 0}; empty iff M is injective.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
  auto rows = detail::clear_denominators(m);
  auto pivots = detail::bareiss(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> x(m.cols());
    x[f] = 1;
    basis.emplace_back(detail::back_substitute(rows, pivots, m.cols(), std::move(x), std::nullopt));
  }
  return basis;
}

/// Exact inverse; throws SingularMatrix when rank < n.
inline Matrix invert(const Matrix& m) {
  require(m.square(), Errc::DimensionMismatch, "invert needs a square matrix");
  const std::size_t n = m.rows();
  // Row i scaled by d_i: solve (D M) X = D, so X = M^{-1}.
  detail::IntRows rows(n, std::vector<mpz_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    rows[i][n + i] = l;
  }
  auto pivots = detail::bareiss(rows, n);
  require(pivots.size() == n, Errc::SingularMatrix, "matrix has rank " + std::to_string(pivots.size()) + " < " +
                                                         std::to_string(n));
  Matrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    auto x = detail::back_substitute(rows, pivots, n, std::vector<Scalar>(n), n + c);
    for (std::size_t i = 0; i < n; ++i) inv(i, c) = x[i];
  }
  return inv;
}

/// True iff v lies in the column span of `basis`.
inline bool in_column_span(const Matrix& basis, const Vector& v) {
  require(basis.rows() == v.size(), Errc::DimensionMismatch, "span membership");
  Matrix aug(basis.rows(), basis.cols() + 1);
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    for (std::size_t j = 0; j < basis.cols(); ++j) aug(i, j) = basis(i, j);
    aug(i, basis.cols()) = v[i];
  }
  return rank(aug) == rank(basis);
}

}  // namespace ncp
