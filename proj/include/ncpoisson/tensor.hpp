#pragma once

#include <cstddef>
#include <vector>

#include "ncpoisson/linalg.hpp"

namespace ncp {

/// r = sum r(i, j) e_i (x) e_j, stored as the coefficient matrix.
using Tensor2 = Matrix;

/// e_i (x) e_j as a Tensor2 on an n-dimensional space.
inline Tensor2 elementary(std::size_t n, std::size_t i, std::size_t j) {
  Tensor2 t(n, n);
  t(i, j) = 1;
  return t;
}

/// e_i ^ e_j = e_i (x) e_j - e_j (x) e_i
inline Tensor2 wedge(std::size_t n, std::size_t i, std::size_t j) { return elementary(n, i, j) - elementary(n, j, i); }

inline Tensor2 tau(const Tensor2& r) { return r.transpose(); }

inline Tensor2 skew_part(const Tensor2& r) { return Scalar(1, 2) * (r - tau(r)); }
inline Tensor2 sym_part(const Tensor2& r) { return Scalar(1, 2) * (r + tau(r)); }

inline bool is_skew(const Tensor2& r) { return r.square() && tau(r) == -r; }
inline bool is_symmetric(const Tensor2& r) { return r.square() && tau(r) == r; }

/// (A (x) B) r
inline Tensor2 apply2(const Matrix& a, const Matrix& b, const Tensor2& r) { return a * r * b.transpose(); }
/// (A (x) 1) r
inline Tensor2 apply_first(const Matrix& a, const Tensor2& r) { return a * r; }
/// (1 (x) B) r
inline Tensor2 apply_second(const Matrix& b, const Tensor2& r) { return r * b.transpose(); }

/// Row-major flattening (i, j) -> i m + j and back.
inline Vector flatten(const Tensor2& t) {
  Vector v(t.rows() * t.cols());
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) v[i * t.cols() + j] = t(i, j);
  return v;
}

inline Tensor2 unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
  require(v.size() == rows * cols, Errc::DimensionMismatch, "unflatten");
  Tensor2 t(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t(i, j) = v[i * cols + j];
  return t;
}

/// Applies M to one leg (0, 1 or 2) of a cubic tensor.
inline Tensor3 apply_leg(const Matrix& m, const Tensor3& t, int leg) {
  const std::size_t d0 = t.dim0(), d1 = t.dim1(), d2 = t.dim2();
  const std::size_t dims[3] = {d0, d1, d2};
  require(leg >= 0 && leg < 3, Errc::DimensionMismatch, "leg index");
  require(m.cols() == dims[leg] && m.rows() == dims[leg], Errc::DimensionMismatch, "leg operator shape");
  Tensor3 out(d0, d1, d2);
  for (std::size_t i = 0; i < d0; ++i)
    for (std::size_t j = 0; j < d1; ++j)
      for (std::size_t k = 0; k < d2; ++k) {
        const Scalar& v = t(i, j, k);
        if (is_zero(v)) continue;
        const std::size_t src = leg == 0 ? i : leg == 1 ? j : k;
        for (std::size_t a = 0; a < dims[leg]; ++a) {
          const Scalar& c = m(a, src);
          if (is_zero(c)) continue;
          if (leg == 0)
            out(a, j, k) += c * v;
          else if (leg == 1)
            out(i, a, k) += c * v;
          else
            out(i, j, a) += c * v;
        }
      }
  return out;
}

inline std::string to_string(const Tensor3& t) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < t.dim0(); ++i)
    for (std::size_t j = 0; j < t.dim1(); ++j)
      for (std::size_t k = 0; k < t.dim2(); ++k)
        if (!is_zero(t(i, j, k))) {
          s += (first ? "" : ", ") + std::string("(") + std::to_string(i) + "," + std::to_string(j) + "," +
               std::to_string(k) + "):" + to_string(t(i, j, k));
          first = false;
        }
  return s + "}";
}

/// Linear map P -> P (x) P. Column x of `matrix` is the flattened image of e_x.
class Comult {
 public:
  Comult() = default;
  explicit Comult(std::size_t n) : n_(n), m_(n * n, n) {}
  Comult(std::size_t n, Matrix m) : n_(n), m_(std::move(m)) {
    require(m_.rows() == n * n && m_.cols() == n, Errc::DimensionMismatch, "comultiplication must be n^2 x n");
  }

  static Comult from_images(const std::vector<Tensor2>& images) {
    const std::size_t n = images.size();
    Comult c(n);
    for (std::size_t x = 0; x < n; ++x) c.set(x, images[x]);
    return c;
  }

  std::size_t dim() const noexcept { return n_; }
  const Matrix& matrix() const noexcept { return m_; }

  Tensor2 operator()(std::size_t x) const {
    Tensor2 t(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(i, j) = m_(i * n_ + j, x);
    return t;
  }
  Tensor2 operator()(const Vector& x) const { return unflatten(m_ * x, n_, n_); }

  void set(std::size_t x, const Tensor2& t) {
    require(t.rows() == n_ && t.cols() == n_, Errc::DimensionMismatch, "comultiplication image");
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m_(i * n_ + j, x) = t(i, j);
  }

  /// <Delta(e_x), e*_i (x) e*_j>
  const Scalar& coeff(std::size_t x, std::size_t i, std::size_t j) const { return m_(i * n_ + j, x); }

  bool images_skew() const {
    for (std::size_t x = 0; x < n_; ++x)
      if (!is_skew((*this)(x))) return false;
    return true;
  }

  bool is_zero() const { return m_.is_zero(); }

  friend bool operator==(const Comult& a, const Comult& b) { return a.n_ == b.n_ && a.m_ == b.m_; }

 private:
  std::size_t n_ = 0;
  Matrix m_;
};

}  // namespace ncp
