#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "ncpoisson/algebra.hpp"
#include "ncpoisson/tensor.hpp"

namespace ncp {

namespace detail {

inline void check_square(const PoissonAlgebra& p, const Tensor2& r) {
  require(r.rows() == p.dim() && r.cols() == p.dim(), Errc::DimensionMismatch, "tensor does not match algebra");
}

}  // namespace detail

/// C(r) = [r12, r13] + [r12, r23] + [r13, r23]
inline Tensor3 cybe(const PoissonAlgebra& p, const Tensor2& r) {
  detail::check_square(p, r);
  const std::size_t n = p.dim();
  const BilinearMap& b = p.bracket();
  Tensor3 out(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(r(i, j))) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if (is_zero(r(k, l))) continue;
          const Scalar w = r(i, j) * r(k, l);
          for (std::size_t m = 0; m < n; ++m) {
            // [e_i, e_k] (x) e_j (x) e_l
            if (!is_zero(b(m, i, k))) out(m, j, l) += w * b(m, i, k);
            // e_i (x) [e_j, e_k] (x) e_l
            if (!is_zero(b(m, j, k))) out(i, m, l) += w * b(m, j, k);
            // e_i (x) e_k (x) [e_j, e_l]
            if (!is_zero(b(m, j, l))) out(i, k, m) += w * b(m, j, l);
          }
        }
    }
  return out;
}

/// A(r) = r12 r13 + r13 r23 - r23 r12
inline Tensor3 aybe(const PoissonAlgebra& p, const Tensor2& r) {
  detail::check_square(p, r);
  const std::size_t n = p.dim();
  const BilinearMap& d = p.dot();
  Tensor3 out(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(r(i, j))) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if (is_zero(r(k, l))) continue;
          const Scalar w = r(i, j) * r(k, l);
          for (std::size_t m = 0; m < n; ++m) {
            // (e_i e_k) (x) e_j (x) e_l
            if (!is_zero(d(m, i, k))) out(m, j, l) += w * d(m, i, k);
            // e_i (x) e_k (x) (e_j e_l)
            if (!is_zero(d(m, j, l))) out(i, k, m) += w * d(m, j, l);
            // e_k (x) (e_i e_l) (x) e_j
            if (!is_zero(d(m, i, l))) out(k, m, j) -= w * d(m, i, l);
          }
        }
    }
  return out;
}

inline bool is_pybe(const PoissonAlgebra& p, const Tensor2& r) {
  require(p.coherent(), Errc::NotCoherent, "the Poisson Yang-Baxter equation needs a coherent algebra");
  return aybe(p, r).is_zero() && cybe(p, r).is_zero();
}

/// delta(x) = (1 (x) ad_x + ad_x (x) 1) r,  Delta(x) = (1 (x) L_x - R_x (x) 1) r
inline std::pair<Comult, Comult> coboundary_comults(const PoissonAlgebra& p, const Tensor2& r) {
  detail::check_square(p, r);
  const std::size_t n = p.dim();
  Comult Delta(n), delta(n);
  for (std::size_t x = 0; x < n; ++x) {
    Delta.set(x, apply_second(p.L(x), r) - apply_first(p.R(x), r));
    delta.set(x, apply_second(p.ad(x), r) + apply_first(p.ad(x), r));
  }
  return {std::move(Delta), std::move(delta)};
}

/// The six conditions characterising coboundary pseudo-bialgebras. Every
/// condition is evaluated on all basis elements (or pairs), skew r included.
struct CoboundaryConditions {
  std::array<bool, 6> holds{};
  bool all() const {
    for (bool b : holds)
      if (!b) return false;
    return true;
  }
};

inline CoboundaryConditions coboundary_conditions(const PoissonAlgebra& p, const Tensor2& r) {
  require(p.coherent(), Errc::NotCoherent, "coboundary conditions need a coherent algebra");
  detail::check_square(p, r);
  const std::size_t n = p.dim();
  const Tensor2 s = r + tau(r);
  CoboundaryConditions out;
  out.holds.fill(true);

  // (1 (x) L_y - R_y (x) 1) s
  std::vector<Tensor2> ls;
  for (std::size_t y = 0; y < n; ++y) ls.push_back(apply_second(p.L(y), s) - apply_first(p.R(y), s));

  for (std::size_t x = 0; x < n; ++x) {
    if (!(apply_first(p.ad(x), s) + apply_second(p.ad(x), s)).is_zero()) out.holds[1] = false;
    for (std::size_t y = 0; y < n; ++y) {
      if (!(apply_first(p.L(x), ls[y]) - apply_second(p.R(x), ls[y])).is_zero()) out.holds[0] = false;
      if (!apply_first(p.ad(x), ls[y]).is_zero()) out.holds[2] = false;
    }
  }

  const Tensor3 A = aybe(p, r), C = cybe(p, r);
  for (std::size_t x = 0; x < n; ++x) {
    Tensor3 iv = apply_leg(p.L(x), A, 2) - apply_leg(p.R(x), A, 0);
    if (!iv.is_zero()) out.holds[3] = false;

    Tensor3 v = apply_leg(p.ad(x), C, 0) + apply_leg(p.ad(x), C, 1) + apply_leg(p.ad(x), C, 2);
    if (!v.is_zero()) out.holds[4] = false;

    Tensor3 vi = apply_leg(p.ad(x), A, 0) + apply_leg(p.L(x), C, 2) - apply_leg(p.R(x), C, 1);
    // sum over r = sum r(i, j) e_i (x) e_j of tau((1 (x) ad_{e_i}) ls[x]) (x) r(i, j) e_j
    for (std::size_t i = 0; i < n; ++i) {
      const Tensor2 u = tau(apply_second(p.ad(i), ls[x]));
      for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(r(i, j))) continue;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            if (!is_zero(u(a, b))) vi(a, b, j) += r(i, j) * u(a, b);
      }
    }
    if (!vi.is_zero()) out.holds[5] = false;
  }
  return out;
}

/// Matrix of r#: P* -> P, <r#(a), b> = r(a, b).
inline Matrix r_sharp(const Tensor2& r) { return r.transpose(); }

/// Dual structure induced by a skew solution:
/// a . b = -R*_{r#a} b - L*_{r#b} a,  {a, b} = ad*_{r#a} b - ad*_{r#b} a.
inline PoissonAlgebra induced_dual(const PoissonAlgebra& p, const Tensor2& r) {
  detail::check_square(p, r);
  require(is_skew(r), Errc::NotSkew, "induced dual needs a skew-symmetric tensor");
  require(is_pybe(p, r), Errc::NotPybe, "induced dual needs a solution of the Poisson Yang-Baxter equation");
  const std::size_t n = p.dim();
  const Matrix rs = r_sharp(r);
  BilinearMap dot(n), br(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vector ea = Vector::unit(n, a), eb = Vector::unit(n, b);
      const Vector xa = rs * ea, xb = rs * eb;
      // starred operators act as negative transposes
      dot.set(a, b, p.R(xa).transpose() * eb + p.L(xb).transpose() * ea);
      br.set(a, b, -(p.ad(xa).transpose() * eb) + p.ad(xb).transpose() * ea);
    }
  return PoissonAlgebra(std::move(dot), std::move(br));
}

/// (1 (x) L_x - R_x (x) 1) s = 0 and (ad_x (x) 1 + 1 (x) ad_x) s = 0 for all x.
inline bool check_lrad_invariant(const PoissonAlgebra& p, const Tensor2& s) {
  detail::check_square(p, s);
  for (std::size_t x = 0; x < p.dim(); ++x) {
    if (!(apply_second(p.L(x), s) - apply_first(p.R(x), s)).is_zero()) return false;
    if (!(apply_first(p.ad(x), s) + apply_second(p.ad(x), s)).is_zero()) return false;
  }
  return true;
}

/// ad*_{s#a . s#b} c + ad*_{s#c . s#a} b + ad*_{s#b . s#c} a = 0 on dual basis triples.
inline bool check_sym_condition(const PoissonAlgebra& p, const Tensor2& s) {
  detail::check_square(p, s);
  require(is_symmetric(s), Errc::NotSymmetric, "symmetric condition needs a symmetric tensor");
  const std::size_t n = p.dim();
  const Matrix ss = r_sharp(s);
  std::vector<Vector> img;
  for (std::size_t a = 0; a < n; ++a) img.push_back(ss * Vector::unit(n, a));
  auto ad_star = [&](const Vector& x, std::size_t c) { return -(p.ad(x).transpose() * Vector::unit(n, c)); };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Vector sum = ad_star(p.mul(img[a], img[b]), c);
        sum += ad_star(p.mul(img[c], img[a]), b);
        sum += ad_star(p.mul(img[b], img[c]), a);
        if (!sum.is_zero()) return false;
      }
  return true;
}

/// Bilinear form as its Gram matrix B(i, j) = B(e_i, e_j).
using BilinForm = Matrix;

/// omega(x, y) = <(r#)^{-1} x, y>; the Gram matrix is r^{-1}.
inline BilinForm omega_from_r(const PoissonAlgebra& p, const Tensor2& r) {
  detail::check_square(p, r);
  require(is_skew(r), Errc::NotSkew, "omega needs a skew-symmetric tensor");
  const Matrix inv = invert(r_sharp(r));
  return inv.transpose();
}

namespace detail {

inline Scalar form(const BilinForm& w, const Vector& x, const Vector& y) {
  const Vector wy = w * y;
  Scalar s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * wy[i];
  return s;
}

inline void report_cyclic_form(const BilinearMap& m, const BilinForm& w, const char* law, LawReport& report) {
  const std::size_t n = m.dim();
  require(w.rows() == n && w.cols() == n, Errc::DimensionMismatch, "form does not match algebra");
  detail::check_triples(n, law, report, [&](std::size_t x, std::size_t y, std::size_t z) {
    const Vector ez = Vector::unit(n, z), ex = Vector::unit(n, x), ey = Vector::unit(n, y);
    Vector s{form(w, m.on_basis(x, y), ez) + form(w, m.on_basis(y, z), ex) + form(w, m.on_basis(z, x), ey)};
    return std::pair{s, Vector(1)};
  });
}

inline bool cyclic_form(const BilinearMap& m, const BilinForm& w) {
  auto r = first_failure();
  report_cyclic_form(m, w, "cyclic-form", r);
  return r.ok();
}

inline void check_skew_nondegenerate(const BilinForm& w) {
  require(w.square() && w.transpose() == -w, Errc::NotSkew, "form must be skew-symmetric");
  require(rank(w) == w.rows(), Errc::SingularMatrix, "form must be nondegenerate");
}

}  // namespace detail

/// w(xy, z) + w(yz, x) + w(zx, y) = 0
inline void report_connes(const PoissonAlgebra& p, const BilinForm& w, LawReport& report) {
  detail::check_skew_nondegenerate(w);
  detail::report_cyclic_form(p.dot(), w, "connes", report);
}

inline void report_symplectic(const PoissonAlgebra& p, const BilinForm& w, LawReport& report) {
  detail::check_skew_nondegenerate(w);
  detail::report_cyclic_form(p.bracket(), w, "symplectic", report);
}

inline bool check_connes(const PoissonAlgebra& p, const BilinForm& w) {
  detail::check_skew_nondegenerate(w);
  return detail::cyclic_form(p.dot(), w);
}

/// w({x,y}, z) + w({y,z}, x) + w({z,x}, y) = 0
inline bool check_symplectic(const PoissonAlgebra& p, const BilinForm& w) {
  detail::check_skew_nondegenerate(w);
  return detail::cyclic_form(p.bracket(), w);
}

/// Skew tensor whose form is w, inverse of omega_from_r.
inline Tensor2 r_from_omega(const BilinForm& w) {
  detail::check_skew_nondegenerate(w);
  return invert(w);
}

// ---------------------------------------------------------------------------
// Fixture families of skew tensors (indices are 0-based, e1 is index 0)

/// k13 e1^e3 + k23 e2^e3 on example_3d.
inline Tensor2 r3d_family(const Scalar& k13, const Scalar& k23) {
  return k13 * wedge(3, 0, 2) + k23 * wedge(3, 1, 2);
}

/// k12 e1^e2 + k14 e1^e4 + k12 e2^e3 + k24 e2^e4 - k14 e3^e4 on example_4d.
inline Tensor2 r4d_family_a(const Scalar& k12, const Scalar& k14, const Scalar& k24) {
  return k12 * wedge(4, 0, 1) + k14 * wedge(4, 0, 3) + k12 * wedge(4, 1, 2) + k24 * wedge(4, 1, 3) -
         k14 * wedge(4, 2, 3);
}

/// k14 e1^e4 + k24 e2^e4 + (k14 + k24) e3^e4 on example_4d.
inline Tensor2 r4d_family_b(const Scalar& k14, const Scalar& k24) {
  return k14 * wedge(4, 0, 3) + k24 * wedge(4, 1, 3) + (k14 + k24) * wedge(4, 2, 3);
}

}  // namespace ncp
