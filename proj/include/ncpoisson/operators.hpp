#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ncpoisson/representation.hpp"
#include "ncpoisson/tensor.hpp"

namespace ncp {

/// Linear map T : V -> P stored as a dim(P) x dim(V) matrix; column u is T(e_u).
using LinearOperator = Matrix;

// ---------------------------------------------------------------------------
// Dendriform and pre-Lie products

/// (x < y) < z = x < (y > z + y < z)
/// (x > y) < z = x > (y < z)
/// x > (y > z) = (x > y + x < y) > z
inline void report_dendriform(const BilinearMap& s, const BilinearMap& p, LawReport& report) {
  require(s.dim() == p.dim(), Errc::DimensionMismatch, "dendriform");
  using detail::mul;
  const std::size_t n = s.dim();
  detail::check_triples(n, "dendriform-1", report, [&](std::size_t x, std::size_t y, std::size_t z) {
    return std::pair{mul(p, p.on_basis(x, y), z), mul(p, x, s.on_basis(y, z) + p.on_basis(y, z))};
  });
  detail::check_triples(n, "dendriform-2", report, [&](std::size_t x, std::size_t y, std::size_t z) {
    return std::pair{mul(p, s.on_basis(x, y), z), mul(s, x, p.on_basis(y, z))};
  });
  detail::check_triples(n, "dendriform-3", report, [&](std::size_t x, std::size_t y, std::size_t z) {
    return std::pair{mul(s, x, s.on_basis(y, z)), mul(s, s.on_basis(x, y) + p.on_basis(x, y), z)};
  });
}

inline bool check_dendriform(const BilinearMap& s, const BilinearMap& p) {
  auto r = first_failure();
  report_dendriform(s, p, r);
  return r.ok();
}

/// (x*y)*z - x*(y*z) symmetric in x, y
inline void report_prelie(const BilinearMap& a, LawReport& report) {
  using detail::mul;
  detail::check_triples(a.dim(), "left-symmetry", report, [&](std::size_t x, std::size_t y, std::size_t z) {
    return std::pair{mul(a, a.on_basis(x, y), z) - mul(a, x, a.on_basis(y, z)),
                     mul(a, a.on_basis(y, x), z) - mul(a, y, a.on_basis(x, z))};
  });
}

inline bool check_prelie(const BilinearMap& a) {
  auto r = first_failure();
  report_prelie(a, r);
  return r.ok();
}

/// Mixed identity making k1 o + k2 * pre-Lie for all k1, k2.
inline void report_compatible_prelie(const BilinearMap& o, const BilinearMap& a, LawReport& report) {
  require(o.dim() == a.dim(), Errc::DimensionMismatch, "compatible pre-Lie");
  require(check_prelie(o), Errc::NotPreLie, "first product is not pre-Lie");
  require(check_prelie(a), Errc::NotPreLie, "second product is not pre-Lie");
  using detail::mul;
  auto side = [&](std::size_t x, std::size_t y, std::size_t z) {
    return mul(a, o.on_basis(x, y), z) - mul(a, x, o.on_basis(y, z)) + mul(o, a.on_basis(x, y), z) -
           mul(o, x, a.on_basis(y, z));
  };
  detail::check_triples(o.dim(), "compatible-prelie", report, [&](std::size_t x, std::size_t y, std::size_t z) {
    return std::pair{side(x, y, z), side(y, x, z)};
  });
}

inline bool check_compatible_prelie(const BilinearMap& o, const BilinearMap& a) {
  auto r = first_failure();
  report_compatible_prelie(o, a, r);
  return r.ok();
}

// ---------------------------------------------------------------------------
// Noncommutative pre-Poisson algebras

struct PrePoisson {
  BilinearMap succ, prec, ast;

  static PrePoisson zero(std::size_t n) { return {BilinearMap(n), BilinearMap(n), BilinearMap(n)}; }

  std::size_t dim() const noexcept { return succ.dim(); }

  /// x o y = x > y - y < x
  BilinearMap circ() const {
    BilinearMap o(dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) o.set(i, j, succ.on_basis(i, j) - prec.on_basis(j, i));
    return o;
  }

  friend bool operator==(const PrePoisson&, const PrePoisson&) = default;
};

enum class PrePoissonKind { No, Yes, YesCoherent };

inline const char* pre_poisson_kind_name(PrePoissonKind k) {
  switch (k) {
    case PrePoissonKind::No: return "no";
    case PrePoissonKind::Yes: return "yes";
    case PrePoissonKind::YesCoherent: return "yes-coherent";
  }
  return "?";
}

/// The three compatibility identities between the dendriform and pre-Lie parts.
inline void report_pre_poisson(const PrePoisson& a, LawReport& report) {
  const auto &s = a.succ, &p = a.prec, &t = a.ast;
  require(s.dim() == p.dim() && s.dim() == t.dim(), Errc::DimensionMismatch, "pre-Poisson components");
  using detail::mul;
  const std::size_t n = a.dim();
  // (x*y - y*x) > z = x*(y > z) - y > (x*z)
  detail::check_triples(n, "pre-poisson-1", report, [&](std::size_t x, std::size_t y, std::size_t z) {
    return std::pair{mul(s, t.on_basis(x, y) - t.on_basis(y, x), z),
                     mul(t, x, s.on_basis(y, z)) - mul(s, y, t.on_basis(x, z))};
  });
  // x < (y*z - z*y) = y*(x < z) - (y*x) < z
  detail::check_triples(n, "pre-poisson-2", report, [&](std::size_t x, std::size_t y, std::size_t z) {
    return std::pair{mul(p, x, t.on_basis(y, z) - t.on_basis(z, y)),
                     mul(t, y, p.on_basis(x, z)) - mul(p, t.on_basis(y, x), z)};
  });
  // (x > y + x < y)*z = (x*z) < y + x > (y*z)
  detail::check_triples(n, "pre-poisson-3", report, [&](std::size_t x, std::size_t y, std::size_t z) {
    return std::pair{mul(t, s.on_basis(x, y) + p.on_basis(x, y), z),
                     mul(p, t.on_basis(x, z), y) + mul(s, x, t.on_basis(y, z))};
  });
}

/// (x > y + x < y)*z = x*(y > z) + y*(z < x)
inline void report_pre_poisson_coherent(const PrePoisson& a, LawReport& report) {
  const auto &s = a.succ, &p = a.prec, &t = a.ast;
  using detail::mul;
  detail::check_triples(a.dim(), "pre-poisson-coherent", report, [&](std::size_t x, std::size_t y, std::size_t z) {
    return std::pair{mul(t, s.on_basis(x, y) + p.on_basis(x, y), z),
                     mul(t, x, s.on_basis(y, z)) + mul(t, y, p.on_basis(z, x))};
  });
}

inline PrePoissonKind check_pre_poisson(const PrePoisson& a) {
  require(check_dendriform(a.succ, a.prec), Errc::ComponentInvalid, "(succ, prec) is not dendriform");
  require(check_prelie(a.ast), Errc::ComponentInvalid, "ast is not pre-Lie");
  auto r = first_failure();
  report_pre_poisson(a, r);
  if (!r.ok()) return PrePoissonKind::No;
  auto c = first_failure();
  report_pre_poisson_coherent(a, c);
  return c.ok() ? PrePoissonKind::YesCoherent : PrePoissonKind::Yes;
}

/// (x*y) o z - x o (y*z) symmetric in x, y
inline bool check_circ_ast_identity(const PrePoisson& a) {
  const BilinearMap o = a.circ();
  const auto& t = a.ast;
  using detail::mul;
  auto side = [&](std::size_t x, std::size_t y, std::size_t z) {
    return mul(o, t.on_basis(x, y), z) - mul(o, x, t.on_basis(y, z));
  };
  auto r = first_failure();
  detail::check_triples(a.dim(), "circ-ast", r, [&](std::size_t x, std::size_t y, std::size_t z) {
    return std::pair{side(x, y, z), side(y, x, z)};
  });
  return r.ok();
}

/// (x o y)*z - x*(y o z) symmetric in x, y
inline bool check_ast_circ_identity(const PrePoisson& a) {
  const BilinearMap o = a.circ();
  const auto& t = a.ast;
  using detail::mul;
  auto side = [&](std::size_t x, std::size_t y, std::size_t z) {
    return mul(t, o.on_basis(x, y), z) - mul(t, x, o.on_basis(y, z));
  };
  auto r = first_failure();
  detail::check_triples(a.dim(), "ast-circ", r, [&](std::size_t x, std::size_t y, std::size_t z) {
    return std::pair{side(x, y, z), side(y, x, z)};
  });
  return r.ok();
}

/// ast_hbar(x, y) = hbar (x > y - y < x)
inline PrePoisson dendriform_pre_poisson(const BilinearMap& succ, const BilinearMap& prec, const Scalar& hbar) {
  PrePoisson a{succ, prec, BilinearMap(succ.dim())};
  a.ast = hbar * a.circ();
  return a;
}

/// x.y = x > y + x < y, {x,y} = x*y - y*x
inline PoissonAlgebra subadjacent(const PrePoisson& a) {
  require(check_pre_poisson(a) != PrePoissonKind::No, Errc::NotPrePoisson, "sub-adjacent needs a pre-Poisson algebra");
  return PoissonAlgebra(a.succ + a.prec, commutator(a.ast));
}

/// (A; L_>, R_<, L_*) over the sub-adjacent algebra.
inline PoissonRep prepoisson_rep(const PrePoisson& a) {
  PoissonAlgebra base = subadjacent(a);
  RepData d;
  d.vdim = a.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    d.L.push_back(a.succ.left(i));
    d.R.push_back(a.prec.right(i));
    d.rho.push_back(a.ast.left(i));
  }
  return PoissonRep(std::move(base), std::move(d));
}

// ---------------------------------------------------------------------------
// O-operators and Rota-Baxter operators

namespace detail {

inline void check_operator_shape(const LinearOperator& t, const PoissonRep& rep) {
  require(t.rows() == rep.base().dim() && t.cols() == rep.vdim(), Errc::DimensionMismatch,
          "operator must be dim(P) x dim(V)");
}

}  // namespace detail

/// T(u).T(v) = T(L_{Tu} v + R_{Tv} u) and {Tu, Tv} = T(rho(Tu) v - rho(Tv) u).
inline void report_O_operator(const LinearOperator& t, const PoissonRep& rep, LawReport& report) {
  detail::check_operator_shape(t, rep);
  const auto& p = rep.base();
  const auto& d = rep.data();
  const std::size_t m = rep.vdim();
  detail::check_pairs(m, "O-operator-assoc", report, [&](std::size_t u, std::size_t v) {
    const Vector tu = t.column(u), tv = t.column(v);
    return std::pair{p.mul(tu, tv), t * (d.left(tu).column(v) + d.right(tv).column(u))};
  });
  detail::check_pairs(m, "O-operator-lie", report, [&](std::size_t u, std::size_t v) {
    const Vector tu = t.column(u), tv = t.column(v);
    return std::pair{p.br(tu, tv), t * (d.lie(tu).column(v) - d.lie(tv).column(u))};
  });
}

inline bool is_O_operator(const LinearOperator& t, const PoissonRep& rep) {
  auto r = first_failure();
  report_O_operator(t, rep, r);
  return r.ok();
}

inline bool is_rota_baxter(const PoissonAlgebra& p, const LinearOperator& b) {
  require(b.rows() == p.dim() && b.cols() == p.dim(), Errc::DimensionMismatch, "Rota-Baxter operator must be square");
  return is_O_operator(b, regular_rep(p));
}

/// u > v = L_{Tu} v, u < v = R_{Tv} u, u*v = rho(Tu) v on V.
inline PrePoisson induced_pre_poisson(const LinearOperator& t, const PoissonRep& rep) {
  require(is_O_operator(t, rep), Errc::NotOOperator, "induced structure needs an O-operator");
  const auto& d = rep.data();
  const std::size_t m = rep.vdim();
  PrePoisson a = PrePoisson::zero(m);
  for (std::size_t u = 0; u < m; ++u) {
    const Matrix lu = d.left(t.column(u)), ru = d.right(t.column(u)), pu = d.lie(t.column(u));
    for (std::size_t v = 0; v < m; ++v) {
      a.succ.set(u, v, lu.column(v));
      a.prec.set(v, u, ru.column(v));
      a.ast.set(u, v, pu.column(v));
    }
  }
  return a;
}

/// T o (product on V) = (product on P) o (T x T) for both product and bracket.
inline bool is_homomorphism(const LinearOperator& t, const PoissonAlgebra& from, const PoissonAlgebra& to) {
  require(t.rows() == to.dim() && t.cols() == from.dim(), Errc::DimensionMismatch, "homomorphism shape");
  for (std::size_t u = 0; u < from.dim(); ++u)
    for (std::size_t v = 0; v < from.dim(); ++v) {
      if (!(t * from.dot().on_basis(u, v) == to.mul(t.column(u), t.column(v)))) return false;
      if (!(t * from.bracket().on_basis(u, v) == to.br(t.column(u), t.column(v)))) return false;
    }
  return true;
}

/// Structure carried to P by an invertible O-operator:
/// x > y = T(L_x T^-1 y), x < y = T(R_y T^-1 x), x*y = T(rho(x) T^-1 y).
inline PrePoisson transported_pre_poisson(const LinearOperator& t, const PoissonRep& rep) {
  require(is_O_operator(t, rep), Errc::NotOOperator, "transport needs an O-operator");
  const Matrix inv = invert(t);
  const auto& d = rep.data();
  const std::size_t n = t.rows();
  PrePoisson a = PrePoisson::zero(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      a.succ.set(x, y, t * (d.L[x] * inv.column(y)));
      a.prec.set(x, y, t * (d.R[y] * inv.column(x)));
      a.ast.set(x, y, t * (d.rho[x] * inv.column(y)));
    }
  return a;
}

/// S = P semidirect V* with (V*; -R*, -L*, rho*), and Tbar = T - tau(T) where
/// T is embedded as sum_u T(e_u) (x) e*_u.
inline std::pair<PoissonAlgebra, Tensor2> lift_operator(const LinearOperator& t, const PoissonRep& rep) {
  detail::check_operator_shape(t, rep);
  require(rep.base().coherent(), Errc::PremiseViolated, "lift needs a coherent algebra");
  require(classify_rep(rep) == RepKind::FullCoherent, Errc::PremiseViolated,
          "lift needs a representation satisfying the coherent condition");
  PoissonAlgebra s = semidirect(rep.base(), dualize(rep));
  const std::size_t n = t.rows(), m = t.cols();
  Tensor2 bar(n + m, n + m);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t u = 0; u < m; ++u) {
      bar(k, n + u) = t(k, u);
      bar(n + u, k) = -t(k, u);
    }
  return {std::move(s), std::move(bar)};
}

/// Every Rota-Baxter operator on P whose entries lie in {-1, 0, 1} with at
/// most `max_nonzero` nonzero entries, the zero operator excluded.
inline std::vector<LinearOperator> find_rota_baxter(const PoissonAlgebra& p, std::size_t max_nonzero = 3) {
  const std::size_t n = p.dim(), cells = n * n;
  const PoissonRep reg = regular_rep(p);
  std::vector<LinearOperator> found;
  LinearOperator b(n, n);
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t from, std::size_t left) {
    for (std::size_t c = from; c < cells; ++c)
      for (int s : {1, -1}) {
        b(c / n, c % n) = s;
        if (is_O_operator(b, reg)) found.push_back(b);
        if (left > 1) walk(c + 1, left - 1);
        b(c / n, c % n) = 0;
      }
  };
  if (max_nonzero > 0) walk(0, max_nonzero);
  return found;
}

}  // namespace ncp
