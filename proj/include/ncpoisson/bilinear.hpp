#pragma once

#include <cstddef>
#include <vector>

#include "ncpoisson/linalg.hpp"

namespace ncp {

/// Bilinear operation on a fixed basis: e_i o e_j = sum_k c(k, i, j) e_k.
class BilinearMap {
 public:
  BilinearMap() = default;
  explicit BilinearMap(std::size_t dim) : dim_(dim), c_(dim, dim, dim) {}
  explicit BilinearMap(Tensor3 c) : dim_(c.dim0()), c_(std::move(c)) {
    require(c_.dim1() == dim_ && c_.dim2() == dim_, Errc::DimensionMismatch, "structure constants must be n x n x n");
  }

  std::size_t dim() const noexcept { return dim_; }
  const Tensor3& constants() const noexcept { return c_; }

  const Scalar& operator()(std::size_t k, std::size_t i, std::size_t j) const { return c_(k, i, j); }
  Scalar& operator()(std::size_t k, std::size_t i, std::size_t j) { return c_(k, i, j); }

  /// e_i o e_j as a coordinate vector.
  Vector on_basis(std::size_t i, std::size_t j) const {
    Vector v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = c_(k, i, j);
    return v;
  }

  void set(std::size_t i, std::size_t j, const Vector& v) {
    require(v.size() == dim_, Errc::DimensionMismatch, "product value");
    for (std::size_t k = 0; k < dim_; ++k) c_(k, i, j) = v[k];
  }

  Vector operator()(const Vector& x, const Vector& y) const {
    require(x.size() == dim_ && y.size() == dim_, Errc::DimensionMismatch, "bilinear argument");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (ncp::is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (ncp::is_zero(y[j])) continue;
        Scalar w = x[i] * y[j];
        for (std::size_t k = 0; k < dim_; ++k)
          if (!ncp::is_zero(c_(k, i, j))) out[k] += w * c_(k, i, j);
      }
    }
    return out;
  }

  /// Matrix of y -> e_i o y.
  Matrix left(std::size_t i) const {
    Matrix m(dim_, dim_);
    for (std::size_t k = 0; k < dim_; ++k)
      for (std::size_t j = 0; j < dim_; ++j) m(k, j) = c_(k, i, j);
    return m;
  }
  /// Matrix of y -> y o e_i.
  Matrix right(std::size_t i) const {
    Matrix m(dim_, dim_);
    for (std::size_t k = 0; k < dim_; ++k)
      for (std::size_t j = 0; j < dim_; ++j) m(k, j) = c_(k, j, i);
    return m;
  }

  bool is_zero() const { return c_.is_zero(); }

  BilinearMap& operator+=(const BilinearMap& o) {
    c_ += o.c_;
    return *this;
  }
  BilinearMap& operator-=(const BilinearMap& o) {
    c_ -= o.c_;
    return *this;
  }
  BilinearMap& operator*=(const Scalar& s) {
    c_ *= s;
    return *this;
  }
  friend BilinearMap operator+(BilinearMap a, const BilinearMap& b) { return a += b; }
  friend BilinearMap operator-(BilinearMap a, const BilinearMap& b) { return a -= b; }
  friend BilinearMap operator*(const Scalar& s, BilinearMap a) { return a *= s; }
  friend bool operator==(const BilinearMap& a, const BilinearMap& b) = default;

 private:
  std::size_t dim_ = 0;
  Tensor3 c_;
};

/// x o y - y o x.
inline BilinearMap commutator(const BilinearMap& m) {
  BilinearMap out(m.dim());
  for (std::size_t k = 0; k < m.dim(); ++k)
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j) out(k, i, j) = m(k, i, j) - m(k, j, i);
  return out;
}

/// (x, y) -> y o x.
inline BilinearMap opposite(const BilinearMap& m) {
  BilinearMap out(m.dim());
  for (std::size_t k = 0; k < m.dim(); ++k)
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j) out(k, i, j) = m(k, j, i);
  return out;
}

/// Matrix of y -> x o y for an arbitrary element x.
inline Matrix left_mult(const BilinearMap& m, const Vector& x) {
  Matrix out(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (!is_zero(x[i])) out.axpy(x[i], m.left(i));
  return out;
}

/// Matrix of y -> y o x for an arbitrary element x.
inline Matrix right_mult(const BilinearMap& m, const Vector& x) {
  Matrix out(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (!is_zero(x[i])) out.axpy(x[i], m.right(i));
  return out;
}

}  // namespace ncp
