#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ncpoisson/algebra.hpp"

namespace ncp {

/// Action matrices of a candidate representation on an m-dimensional space:
/// one m x m matrix per basis element of the acting algebra, for each of the
/// left associative action, the right associative action and the Lie action.
struct RepData {
  std::size_t vdim = 0;
  std::vector<Matrix> L, R, rho;

  static RepData zero(std::size_t base_dim, std::size_t vdim) {
    RepData d;
    d.vdim = vdim;
    d.L.assign(base_dim, Matrix(vdim, vdim));
    d.R.assign(base_dim, Matrix(vdim, vdim));
    d.rho.assign(base_dim, Matrix(vdim, vdim));
    return d;
  }

  std::size_t base_dim() const noexcept { return L.size(); }

  Matrix act(const std::vector<Matrix>& ms, const Vector& x) const {
    require(x.size() == ms.size(), Errc::DimensionMismatch, "acting element");
    Matrix out(vdim, vdim);
    for (std::size_t i = 0; i < ms.size(); ++i) out.axpy(x[i], ms[i]);
    return out;
  }
  Matrix left(const Vector& x) const { return act(L, x); }
  Matrix right(const Vector& x) const { return act(R, x); }
  Matrix lie(const Vector& x) const { return act(rho, x); }

  friend bool operator==(const RepData&, const RepData&) = default;
};

enum class RepKind { Quasi, Full, FullCoherent };

inline const char* rep_kind_name(RepKind k) {
  switch (k) {
    case RepKind::Quasi: return "quasi";
    case RepKind::Full: return "full";
    case RepKind::FullCoherent: return "full-coherent";
  }
  return "?";
}

namespace detail {

inline void check_shapes(const PoissonAlgebra& p, const RepData& d) {
  const std::size_t n = p.dim();
  require(d.L.size() == n && d.R.size() == n && d.rho.size() == n, Errc::DimensionMismatch,
          "need one action matrix per basis element");
  for (std::size_t i = 0; i < n; ++i)
    for (const Matrix* m : {&d.L[i], &d.R[i], &d.rho[i]})
      require(m->rows() == d.vdim && m->cols() == d.vdim, Errc::DimensionMismatch, "action matrix shape");
}

}  // namespace detail

/// Associative representation laws, Lie representation law and the two
/// mixed identities L_{x,y} = [rho(x), L_y], R_{x,y} = [rho(x), R_y].
inline void report_quasi_rep(const PoissonAlgebra& p, const RepData& d, LawReport& report) {
  detail::check_shapes(p, d);
  const std::size_t n = p.dim();
  detail::check_pairs(n, "assoc-rep-left", report, [&](std::size_t x, std::size_t y) {
    return std::pair{d.left(p.dot().on_basis(x, y)), d.L[x] * d.L[y]};
  });
  detail::check_pairs(n, "assoc-rep-right", report, [&](std::size_t x, std::size_t y) {
    return std::pair{d.right(p.dot().on_basis(x, y)), d.R[y] * d.R[x]};
  });
  detail::check_pairs(n, "assoc-rep-commute", report, [&](std::size_t x, std::size_t y) {
    return std::pair{d.L[x] * d.R[y], d.R[y] * d.L[x]};
  });
  detail::check_pairs(n, "lie-rep", report, [&](std::size_t x, std::size_t y) {
    return std::pair{d.lie(p.bracket().on_basis(x, y)), d.rho[x] * d.rho[y] - d.rho[y] * d.rho[x]};
  });
  detail::check_pairs(n, "rep-1", report, [&](std::size_t x, std::size_t y) {
    return std::pair{d.left(p.bracket().on_basis(x, y)), d.rho[x] * d.L[y] - d.L[y] * d.rho[x]};
  });
  detail::check_pairs(n, "rep-2", report, [&](std::size_t x, std::size_t y) {
    return std::pair{d.right(p.bracket().on_basis(x, y)), d.rho[x] * d.R[y] - d.R[y] * d.rho[x]};
  });
}

/// rho(x y) = L_x rho(y) + R_y rho(x)
inline void report_full_rep(const PoissonAlgebra& p, const RepData& d, LawReport& report) {
  detail::check_pairs(p.dim(), "con-rep", report, [&](std::size_t x, std::size_t y) {
    return std::pair{d.lie(p.dot().on_basis(x, y)), d.L[x] * d.rho[y] + d.R[y] * d.rho[x]};
  });
}

/// rho(x y) = rho(x) L_y + rho(y) R_x
inline void report_coherent_condition(const PoissonAlgebra& p, const RepData& d, LawReport& report) {
  detail::check_pairs(p.dim(), "coherent-condition", report, [&](std::size_t x, std::size_t y) {
    return std::pair{d.lie(p.dot().on_basis(x, y)), d.rho[x] * d.L[y] + d.rho[y] * d.R[x]};
  });
}

/// A quasi-representation of a noncommutative Poisson algebra; validated on
/// construction.
class PoissonRep {
 public:
  PoissonRep(PoissonAlgebra base, RepData data) : base_(std::move(base)), data_(std::move(data)) {
    LawReport r(1);
    report_quasi_rep(base_, data_, r);
    if (!r.ok()) {
      const auto& v = r.violations().front();
      fail(Errc::NotQuasiRep, v.law + " fails on basis pair (" + std::to_string(v.at[0]) + "," +
                                  std::to_string(v.at[1]) + ")");
    }
  }

  const PoissonAlgebra& base() const noexcept { return base_; }
  const RepData& data() const noexcept { return data_; }
  std::size_t vdim() const noexcept { return data_.vdim; }
  const Matrix& L(std::size_t i) const { return data_.L.at(i); }
  const Matrix& R(std::size_t i) const { return data_.R.at(i); }
  const Matrix& rho(std::size_t i) const { return data_.rho.at(i); }

 private:
  PoissonAlgebra base_;
  RepData data_;
};

inline bool satisfies_coherent_condition(const PoissonRep& r) {
  auto rep = first_failure();
  report_coherent_condition(r.base(), r.data(), rep);
  return rep.ok();
}

/// Strongest kind: FullCoherent needs both the representation identity and
/// the coherent condition; Full needs the former.
inline RepKind classify_rep(const PoissonRep& r) {
  auto full = first_failure();
  report_full_rep(r.base(), r.data(), full);
  if (!full.ok()) return RepKind::Quasi;
  return satisfies_coherent_condition(r) ? RepKind::FullCoherent : RepKind::Full;
}

/// (P; L, R, ad)
inline PoissonRep regular_rep(const PoissonAlgebra& p) {
  RepData d;
  d.vdim = p.dim();
  for (std::size_t i = 0; i < p.dim(); ++i) {
    d.L.push_back(p.L(i));
    d.R.push_back(p.R(i));
    d.rho.push_back(p.ad(i));
  }
  return PoissonRep(p, std::move(d));
}

/// Action data of the dual (V*; -R*, -L*, rho*) in the dual basis. A starred
/// operator is the negative transpose, so -R*_x = R_x^T and -L*_x = L_x^T.
inline RepData dual_data(const RepData& d) {
  RepData out;
  out.vdim = d.vdim;
  for (std::size_t i = 0; i < d.base_dim(); ++i) {
    out.L.push_back(d.R[i].transpose());
    out.R.push_back(d.L[i].transpose());
    out.rho.push_back(-d.rho[i].transpose());
  }
  return out;
}

inline PoissonRep dualize(const PoissonRep& r) { return PoissonRep(r.base(), dual_data(r.data())); }

/// (P (x) P; 1 (x) L, R (x) 1, ad (x) 1 + 1 (x) ad), basis (i, j) -> i n + j.
inline PoissonRep tensor_quasi_rep(const PoissonAlgebra& p) {
  const std::size_t n = p.dim();
  const Matrix id = Matrix::identity(n);
  RepData d;
  d.vdim = n * n;
  for (std::size_t i = 0; i < n; ++i) {
    d.L.push_back(kron(id, p.L(i)));
    d.R.push_back(kron(p.R(i), id));
    d.rho.push_back(kron(p.ad(i), id) + kron(id, p.ad(i)));
  }
  return PoissonRep(p, std::move(d));
}

/// Semidirect product structure constants on P (+) V without validation;
/// `semidirect` validates through the PoissonAlgebra constructor.
inline std::pair<BilinearMap, BilinearMap> semidirect_constants(const PoissonAlgebra& p, const RepData& d) {
  const std::size_t n = p.dim(), m = d.vdim, N = n + m;
  BilinearMap dot(N), br(N);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        dot(k, i, j) = p.dot()(k, i, j);
        br(k, i, j) = p.bracket()(k, i, j);
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        // x v = L_x v, v x = R_x v, {x, v} = rho(x) v = -{v, x}
        dot(n + a, i, n + b) = d.L[i](a, b);
        dot(n + a, n + b, i) = d.R[i](a, b);
        br(n + a, i, n + b) = d.rho[i](a, b);
        br(n + a, n + b, i) = -d.rho[i](a, b);
      }
  return {std::move(dot), std::move(br)};
}

/// P semidirect V; requires a representation (not merely quasi).
inline PoissonAlgebra semidirect(const PoissonAlgebra& p, const PoissonRep& r) {
  require(p == r.base(), Errc::DimensionMismatch, "representation is attached to a different algebra");
  require(classify_rep(r) != RepKind::Quasi, Errc::RepNotFull, "semidirect product needs a representation");
  auto [dot, br] = semidirect_constants(p, r.data());
  return PoissonAlgebra(std::move(dot), std::move(br));
}

inline PoissonAlgebra semidirect(const PoissonRep& r) { return semidirect(r.base(), r); }

}  // namespace ncp
