#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ncpoisson/representation.hpp"
#include "ncpoisson/yang_baxter.hpp"

namespace ncp {

/// Structure on P* dual to (Delta, delta):
/// <e*_i . e*_j, e_k> = <Delta(e_k), e*_i (x) e*_j>, same for the bracket.
inline PoissonAlgebra dual_algebra(const Comult& Delta, const Comult& delta) {
  require(Delta.dim() == delta.dim(), Errc::DimensionMismatch, "comultiplications of different dimension");
  require(delta.images_skew(), Errc::NotSkew, "delta must take values in the exterior square");
  const std::size_t n = Delta.dim();
  BilinearMap dot(n), br(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        dot(k, i, j) = Delta.coeff(k, i, j);
        br(k, i, j) = delta.coeff(k, i, j);
      }
  try {
    return PoissonAlgebra(std::move(dot), std::move(br));
  } catch (const Error& e) {
    fail(Errc::DualNotPoisson, std::string("dual structure: ") + e.what());
  }
}

struct Bialgebra {
  PoissonAlgebra P;
  Comult Delta;
  Comult delta;
};

inline Bialgebra coboundary_bialgebra(const PoissonAlgebra& p, const Tensor2& r) {
  auto [Delta, delta] = coboundary_comults(p, r);
  return {p, std::move(Delta), std::move(delta)};
}

inline PoissonAlgebra dual_algebra(const Bialgebra& b) { return dual_algebra(b.Delta, b.delta); }

// ---------------------------------------------------------------------------
// Compatibility equations between P and (Delta, delta)

namespace detail {

inline void check_comult_shapes(const Bialgebra& b) {
  require(b.Delta.dim() == b.P.dim() && b.delta.dim() == b.P.dim(), Errc::DimensionMismatch,
          "comultiplication does not match algebra");
}

}  // namespace detail

/// Delta(xy) = (1 (x) L_x) Delta(y) + (R_y (x) 1) Delta(x)
inline void report_pba1(const Bialgebra& b, LawReport& rep) {
  const auto& p = b.P;
  detail::check_pairs(p.dim(), "PBA1", rep, [&](std::size_t x, std::size_t y) {
    return std::pair{b.Delta(p.dot().on_basis(x, y)),
                     apply_second(p.L(x), b.Delta(y)) + apply_first(p.R(y), b.Delta(x))};
  });
}

/// Delta({x,y}) = (ad_x (x) 1 + 1 (x) ad_x) Delta(y) - (1 (x) L_y) delta(x) + (R_y (x) 1) delta(x)
inline void report_pba2(const Bialgebra& b, LawReport& rep) {
  const auto& p = b.P;
  detail::check_pairs(p.dim(), "PBA2", rep, [&](std::size_t x, std::size_t y) {
    Tensor2 rhs = apply_first(p.ad(x), b.Delta(y)) + apply_second(p.ad(x), b.Delta(y));
    rhs -= apply_second(p.L(y), b.delta(x));
    rhs += apply_first(p.R(y), b.delta(x));
    return std::pair{b.Delta(p.bracket().on_basis(x, y)), rhs};
  });
}

/// delta({x,y}) = (ad_x (x) 1 + 1 (x) ad_x) delta(y) - (ad_y (x) 1 + 1 (x) ad_y) delta(x)
inline void report_pba3(const Bialgebra& b, LawReport& rep) {
  const auto& p = b.P;
  detail::check_pairs(p.dim(), "PBA3", rep, [&](std::size_t x, std::size_t y) {
    Tensor2 rhs = apply_first(p.ad(x), b.delta(y)) + apply_second(p.ad(x), b.delta(y));
    rhs -= apply_first(p.ad(y), b.delta(x)) + apply_second(p.ad(y), b.delta(x));
    return std::pair{b.delta(p.bracket().on_basis(x, y)), rhs};
  });
}

/// (L_y (x) 1 - 1 (x) R_y) Delta(x) + tau((L_x (x) 1 - 1 (x) R_x) Delta(y)) = 0
inline void report_pba4(const Bialgebra& b, LawReport& rep) {
  const auto& p = b.P;
  const std::size_t n = p.dim();
  detail::check_pairs(n, "PBA4", rep, [&](std::size_t x, std::size_t y) {
    Tensor2 lhs = apply_first(p.L(y), b.Delta(x)) - apply_second(p.R(y), b.Delta(x));
    lhs += tau(apply_first(p.L(x), b.Delta(y)) - apply_second(p.R(x), b.Delta(y)));
    return std::pair{lhs, Tensor2(n, n)};
  });
}

/// (L_x (x) 1) delta(y) + (R_y (x) 1) delta(x) + (1 (x) ad_x) Delta(y) + (1 (x) ad_y) tau(Delta(x)) = delta(xy)
inline void report_pba5(const Bialgebra& b, LawReport& rep) {
  const auto& p = b.P;
  detail::check_pairs(p.dim(), "PBA5", rep, [&](std::size_t x, std::size_t y) {
    Tensor2 lhs = apply_first(p.L(x), b.delta(y)) + apply_first(p.R(y), b.delta(x));
    lhs += apply_second(p.ad(x), b.Delta(y));
    lhs += apply_second(p.ad(y), tau(b.Delta(x)));
    return std::pair{lhs, b.delta(p.dot().on_basis(x, y))};
  });
}

enum class BialgebraKind { Invalid, Pseudo, Full };

inline const char* bialgebra_kind_name(BialgebraKind k) {
  switch (k) {
    case BialgebraKind::Invalid: return "invalid";
    case BialgebraKind::Pseudo: return "pseudo";
    case BialgebraKind::Full: return "full";
  }
  return "?";
}

struct BialgebraVerdict {
  BialgebraKind kind = BialgebraKind::Invalid;
  std::string reason;
};

inline BialgebraVerdict check_bialgebra(const Bialgebra& b) {
  detail::check_comult_shapes(b);
  if (!b.P.coherent()) return {BialgebraKind::Invalid, "algebra is not coherent"};
  if (!b.delta.images_skew()) return {BialgebraKind::Invalid, "delta is not skew-symmetric"};
  PoissonAlgebra dual;
  try {
    dual = dual_algebra(b);
  } catch (const Error& e) {
    return {BialgebraKind::Invalid, e.what()};
  }
  auto rep = first_failure();
  for (auto check : {report_pba1, report_pba2, report_pba3, report_pba4, report_pba5}) {
    check(b, rep);
    if (!rep.ok()) {
      const auto& v = rep.violations().front();
      return {BialgebraKind::Invalid, v.law + " fails on basis pair (" + std::to_string(v.at[0]) + "," +
                                          std::to_string(v.at[1]) + ")"};
    }
  }
  if (!dual.coherent()) return {BialgebraKind::Pseudo, "dual algebra is not coherent"};
  return {BialgebraKind::Full, ""};
}

/// Lie coalgebra plus the cocycle identity for delta alone.
inline bool check_lie_bialgebra(const Bialgebra& b) {
  detail::check_comult_shapes(b);
  if (!b.delta.images_skew()) return false;
  const std::size_t n = b.P.dim();
  BilinearMap br(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) br(k, i, j) = b.delta.coeff(k, i, j);
  if (!check_lie(br)) return false;
  auto rep = first_failure();
  report_pba3(b, rep);
  return rep.ok();
}

/// Coassociative Delta with the cocycle and antisymmetry identities.
inline bool check_infinitesimal_bialgebra(const Bialgebra& b) {
  detail::check_comult_shapes(b);
  const std::size_t n = b.P.dim();
  BilinearMap dot(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) dot(k, i, j) = b.Delta.coeff(k, i, j);
  if (!check_associative(dot)) return false;
  auto rep = first_failure();
  report_pba1(b, rep);
  report_pba4(b, rep);
  return rep.ok();
}

// ---------------------------------------------------------------------------
// Matched pairs

namespace detail {

inline Vector act(const std::vector<Matrix>& ms, const Vector& x, const Vector& v) {
  Matrix m(v.size(), v.size());
  for (std::size_t i = 0; i < ms.size(); ++i) m.axpy(x[i], ms[i]);
  return m * v;
}

/// Runs side(a, b, c) over index triples with the given ranges.
template <class F>
void check_mixed(std::size_t na, std::size_t nb, std::size_t nc, const char* law, LawReport& rep, F&& side) {
  for (std::size_t a = 0; a < na && !rep.full(); ++a)
    for (std::size_t b = 0; b < nb && !rep.full(); ++b)
      for (std::size_t c = 0; c < nc && !rep.full(); ++c) {
        auto [lhs, rhs] = side(a, b, c);
        if (!(lhs == rhs)) rep.add(law, {a, b, c}, to_string(lhs), to_string(rhs));
      }
}

inline void check_lie_rep(const BilinearMap& g, const std::vector<Matrix>& rho, const char* law, LawReport& rep) {
  check_pairs(g.dim(), law, rep, [&](std::size_t x, std::size_t y) {
    Matrix lhs(rho[x].rows(), rho[x].cols());
    for (std::size_t k = 0; k < g.dim(); ++k) lhs.axpy(g(k, x, y), rho[k]);
    return std::pair{lhs, rho[x] * rho[y] - rho[y] * rho[x]};
  });
}

inline void check_assoc_rep(const BilinearMap& a, const std::vector<Matrix>& L, const std::vector<Matrix>& R,
                            const char* law, LawReport& rep) {
  auto comb = [&](const std::vector<Matrix>& ms, std::size_t x, std::size_t y) {
    Matrix m(ms[0].rows(), ms[0].cols());
    for (std::size_t k = 0; k < a.dim(); ++k) m.axpy(a(k, x, y), ms[k]);
    return m;
  };
  check_pairs(a.dim(), law, rep, [&](std::size_t x, std::size_t y) { return std::pair{comb(L, x, y), L[x] * L[y]}; });
  check_pairs(a.dim(), law, rep, [&](std::size_t x, std::size_t y) { return std::pair{comb(R, x, y), R[y] * R[x]}; });
  check_pairs(a.dim(), law, rep, [&](std::size_t x, std::size_t y) { return std::pair{L[x] * R[y], R[y] * L[x]}; });
}

}  // namespace detail

/// Matched pair of Lie algebras: rho is g1 acting on g2, varrho is g2 acting on g1.
inline void report_matched_pair_lie(const BilinearMap& g1, const BilinearMap& g2, const std::vector<Matrix>& rho,
                                    const std::vector<Matrix>& varrho, LawReport& rep) {
  const std::size_t n1 = g1.dim(), n2 = g2.dim();
  require(rho.size() == n1 && varrho.size() == n2, Errc::DimensionMismatch, "matched pair actions");
  detail::check_lie_rep(g1, rho, "lie-rep-1on2", rep);
  detail::check_lie_rep(g2, varrho, "lie-rep-2on1", rep);
  const auto e1 = [&](std::size_t i) { return Vector::unit(n1, i); };
  const auto e2 = [&](std::size_t i) { return Vector::unit(n2, i); };
  // varrho(a)[x,y] = [varrho(a)x, y] + [x, varrho(a)y] - varrho(rho(x)a)y + varrho(rho(y)a)x
  detail::check_mixed(n2, n1, n1, "matched-lie-1", rep, [&](std::size_t a, std::size_t x, std::size_t y) {
    Vector lhs = varrho[a] * g1.on_basis(x, y);
    Vector rhs = g1(varrho[a] * e1(x), e1(y)) + g1(e1(x), varrho[a] * e1(y));
    rhs -= detail::act(varrho, rho[x] * e2(a), e1(y));
    rhs += detail::act(varrho, rho[y] * e2(a), e1(x));
    return std::pair{lhs, rhs};
  });
  // rho(x)[a,b] = [rho(x)a, b] + [a, rho(x)b] - rho(varrho(a)x)b + rho(varrho(b)x)a
  detail::check_mixed(n1, n2, n2, "matched-lie-2", rep, [&](std::size_t x, std::size_t a, std::size_t b) {
    Vector lhs = rho[x] * g2.on_basis(a, b);
    Vector rhs = g2(rho[x] * e2(a), e2(b)) + g2(e2(a), rho[x] * e2(b));
    rhs -= detail::act(rho, varrho[a] * e1(x), e2(b));
    rhs += detail::act(rho, varrho[b] * e1(x), e2(a));
    return std::pair{lhs, rhs};
  });
}

inline bool check_matched_pair_lie(const BilinearMap& g1, const BilinearMap& g2, const std::vector<Matrix>& rho,
                                   const std::vector<Matrix>& varrho) {
  auto rep = first_failure();
  report_matched_pair_lie(g1, g2, rho, varrho, rep);
  return rep.ok();
}

/// Matched pair of associative algebras: (L, R) is A1 acting on A2,
/// (Lt, Rt) is A2 acting on A1.
inline void report_matched_pair_assoc(const BilinearMap& a1, const BilinearMap& a2, const std::vector<Matrix>& L,
                                      const std::vector<Matrix>& R, const std::vector<Matrix>& Lt,
                                      const std::vector<Matrix>& Rt, LawReport& rep) {
  const std::size_t n1 = a1.dim(), n2 = a2.dim();
  require(L.size() == n1 && R.size() == n1 && Lt.size() == n2 && Rt.size() == n2, Errc::DimensionMismatch,
          "matched pair actions");
  detail::check_assoc_rep(a1, L, R, "assoc-rep-1on2", rep);
  detail::check_assoc_rep(a2, Lt, Rt, "assoc-rep-2on1", rep);
  const auto e1 = [&](std::size_t i) { return Vector::unit(n1, i); };
  const auto e2 = [&](std::size_t i) { return Vector::unit(n2, i); };
  using detail::act;
  // L_x(a.b) = L_{Rt_a x} b + (L_x a).b
  detail::check_mixed(n1, n2, n2, "matched-assoc-1", rep, [&](std::size_t x, std::size_t a, std::size_t b) {
    return std::pair{L[x] * a2.on_basis(a, b), act(L, Rt[a] * e1(x), e2(b)) + a2(L[x] * e2(a), e2(b))};
  });
  // R_x(a.b) = R_{Lt_b x} a + a.(R_x b)
  detail::check_mixed(n1, n2, n2, "matched-assoc-2", rep, [&](std::size_t x, std::size_t a, std::size_t b) {
    return std::pair{R[x] * a2.on_basis(a, b), act(R, Lt[b] * e1(x), e2(a)) + a2(e2(a), R[x] * e2(b))};
  });
  // Lt_a(x.y) = Lt_{R_x a} y + (Lt_a x).y
  detail::check_mixed(n2, n1, n1, "matched-assoc-3", rep, [&](std::size_t a, std::size_t x, std::size_t y) {
    return std::pair{Lt[a] * a1.on_basis(x, y), act(Lt, R[x] * e2(a), e1(y)) + a1(Lt[a] * e1(x), e1(y))};
  });
  // Rt_a(x.y) = Rt_{L_y a} x + x.(Rt_a y)
  detail::check_mixed(n2, n1, n1, "matched-assoc-4", rep, [&](std::size_t a, std::size_t x, std::size_t y) {
    return std::pair{Rt[a] * a1.on_basis(x, y), act(Rt, L[y] * e2(a), e1(x)) + a1(e1(x), Rt[a] * e1(y))};
  });
  // L_{Lt_a x} b + (R_x a).b - R_{Rt_b x} a - a.(L_x b) = 0
  detail::check_mixed(n1, n2, n2, "matched-assoc-5", rep, [&](std::size_t x, std::size_t a, std::size_t b) {
    Vector lhs = act(L, Lt[a] * e1(x), e2(b)) + a2(R[x] * e2(a), e2(b));
    lhs -= act(R, Rt[b] * e1(x), e2(a)) + a2(e2(a), L[x] * e2(b));
    return std::pair{lhs, Vector(n2)};
  });
  // Lt_{L_x a} y + (Rt_a x).y - Rt_{R_y a} x - x.(Lt_a y) = 0
  detail::check_mixed(n2, n1, n1, "matched-assoc-6", rep, [&](std::size_t a, std::size_t x, std::size_t y) {
    Vector lhs = act(Lt, L[x] * e2(a), e1(y)) + a1(Rt[a] * e1(x), e1(y));
    lhs -= act(Rt, R[y] * e2(a), e1(x)) + a1(e1(x), Lt[a] * e1(y));
    return std::pair{lhs, Vector(n1)};
  });
}

inline bool check_matched_pair_assoc(const BilinearMap& a1, const BilinearMap& a2, const std::vector<Matrix>& L,
                                     const std::vector<Matrix>& R, const std::vector<Matrix>& Lt,
                                     const std::vector<Matrix>& Rt) {
  auto rep = first_failure();
  report_matched_pair_assoc(a1, a2, L, R, Lt, Rt, rep);
  return rep.ok();
}

/// P1 and P2 acting on each other: rep12 is P1 on P2's space (L, R, rho),
/// rep21 is P2 on P1's space (Lt, Rt, varrho).
struct MatchedPairPoisson {
  PoissonAlgebra P1;
  PoissonAlgebra P2;
  RepData rep12;
  RepData rep21;
};

inline void report_matched_pair_poisson(const MatchedPairPoisson& mp, LawReport& rep) {
  const auto& [P1, P2, r12, r21] = mp;
  const std::size_t n1 = P1.dim(), n2 = P2.dim();
  require(r12.vdim == n2 && r21.vdim == n1, Errc::DimensionMismatch, "matched pair representation spaces");
  report_quasi_rep(P1, r12, rep);
  report_full_rep(P1, r12, rep);
  report_quasi_rep(P2, r21, rep);
  report_full_rep(P2, r21, rep);
  report_matched_pair_lie(P1.bracket(), P2.bracket(), r12.rho, r21.rho, rep);
  report_matched_pair_assoc(P1.dot(), P2.dot(), r12.L, r12.R, r21.L, r21.R, rep);

  const auto& [L, R, rho] = std::tie(r12.L, r12.R, r12.rho);
  const auto& [Lt, Rt, varrho] = std::tie(r21.L, r21.R, r21.rho);
  const BilinearMap &d1 = P1.dot(), &d2 = P2.dot(), &b1 = P1.bracket(), &b2 = P2.bracket();
  const auto e1 = [&](std::size_t i) { return Vector::unit(n1, i); };
  const auto e2 = [&](std::size_t i) { return Vector::unit(n2, i); };
  using detail::act;
  // rho(x)(a.b) = (rho(x)a).b + a.rho(x)b - L_{varrho(a)x} b - R_{varrho(b)x} a
  detail::check_mixed(n1, n2, n2, "MPP1", rep, [&](std::size_t x, std::size_t a, std::size_t b) {
    Vector rhs = d2(rho[x] * e2(a), e2(b)) + d2(e2(a), rho[x] * e2(b));
    rhs -= act(L, varrho[a] * e1(x), e2(b));
    rhs -= act(R, varrho[b] * e1(x), e2(a));
    return std::pair{rho[x] * d2.on_basis(a, b), rhs};
  });
  // L_x{a,b} = {a, L_x b} - rho(Rt_b x) a - L_{varrho(a)x} b + (rho(x)a).b
  detail::check_mixed(n1, n2, n2, "MPP2", rep, [&](std::size_t x, std::size_t a, std::size_t b) {
    Vector rhs = b2(e2(a), L[x] * e2(b));
    rhs -= act(rho, Rt[b] * e1(x), e2(a));
    rhs -= act(L, varrho[a] * e1(x), e2(b));
    rhs += d2(rho[x] * e2(a), e2(b));
    return std::pair{L[x] * b2.on_basis(a, b), rhs};
  });
  // varrho(a)(x.y) = (varrho(a)x).y + x.varrho(a)y - Lt_{rho(x)a} y - Rt_{rho(y)a} x
  detail::check_mixed(n2, n1, n1, "MPP3", rep, [&](std::size_t a, std::size_t x, std::size_t y) {
    Vector rhs = d1(varrho[a] * e1(x), e1(y)) + d1(e1(x), varrho[a] * e1(y));
    rhs -= act(Lt, rho[x] * e2(a), e1(y));
    rhs -= act(Rt, rho[y] * e2(a), e1(x));
    return std::pair{varrho[a] * d1.on_basis(x, y), rhs};
  });
  // Lt_a{x,y} = {x, Lt_a y} - varrho(R_y a) x - Lt_{rho(x)a} y + (varrho(a)x).y
  detail::check_mixed(n2, n1, n1, "MPP4", rep, [&](std::size_t a, std::size_t x, std::size_t y) {
    Vector rhs = b1(e1(x), Lt[a] * e1(y));
    rhs -= act(varrho, R[y] * e2(a), e1(x));
    rhs -= act(Lt, rho[x] * e2(a), e1(y));
    rhs += d1(varrho[a] * e1(x), e1(y));
    return std::pair{Lt[a] * b1.on_basis(x, y), rhs};
  });
}

inline bool check_matched_pair_poisson(const MatchedPairPoisson& mp) {
  auto rep = first_failure();
  report_matched_pair_poisson(mp, rep);
  return rep.ok();
}

/// P1 (+) P2 with
/// {x+a, y+b} = {x,y} + varrho(a)y - varrho(b)x + {a,b} + rho(x)b - rho(y)a,
/// (x+a)(y+b) = xy + Lt_a y + Rt_b x + ab + L_x b + R_y a.
inline PoissonAlgebra matched_pair_double(const MatchedPairPoisson& mp) {
  auto rep = first_failure();
  report_matched_pair_poisson(mp, rep);
  if (!rep.ok()) fail(Errc::NotMatchedPair, rep.violations().front().law + " fails");
  const std::size_t n1 = mp.P1.dim(), n2 = mp.P2.dim(), N = n1 + n2;
  BilinearMap dot(N), br(N);
  for (std::size_t k = 0; k < n1; ++k)
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n1; ++j) {
        dot(k, i, j) = mp.P1.dot()(k, i, j);
        br(k, i, j) = mp.P1.bracket()(k, i, j);
      }
  for (std::size_t k = 0; k < n2; ++k)
    for (std::size_t i = 0; i < n2; ++i)
      for (std::size_t j = 0; j < n2; ++j) {
        dot(n1 + k, n1 + i, n1 + j) = mp.P2.dot()(k, i, j);
        br(n1 + k, n1 + i, n1 + j) = mp.P2.bracket()(k, i, j);
      }
  const RepData &r12 = mp.rep12, &r21 = mp.rep21;
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t b = 0; b < n2; ++b) {
      for (std::size_t k = 0; k < n1; ++k) {
        dot(k, i, n1 + b) = r21.R[b](k, i);
        dot(k, n1 + b, i) = r21.L[b](k, i);
        br(k, i, n1 + b) = -r21.rho[b](k, i);
        br(k, n1 + b, i) = r21.rho[b](k, i);
      }
      for (std::size_t c = 0; c < n2; ++c) {
        dot(n1 + c, i, n1 + b) = r12.L[i](c, b);
        dot(n1 + c, n1 + b, i) = r12.R[i](c, b);
        br(n1 + c, i, n1 + b) = r12.rho[i](c, b);
        br(n1 + c, n1 + b, i) = -r12.rho[i](c, b);
      }
    }
  return PoissonAlgebra(std::move(dot), std::move(br));
}

/// (P, P*; -R*, -L*, ad*, -frkR*, -frkL*, frkad*)
inline MatchedPairPoisson matched_pair_from_bialgebra(const Bialgebra& b) {
  const PoissonAlgebra dual = dual_algebra(b);
  auto regular = [](const PoissonAlgebra& p) {
    RepData d;
    d.vdim = p.dim();
    for (std::size_t i = 0; i < p.dim(); ++i) {
      d.L.push_back(p.L(i));
      d.R.push_back(p.R(i));
      d.rho.push_back(p.ad(i));
    }
    return d;
  };
  return {b.P, dual, dual_data(regular(b.P)), dual_data(regular(dual))};
}

// ---------------------------------------------------------------------------
// Quadratic algebras and Manin triples

/// Symmetric, nondegenerate, B({a,b},c) = B(a,{b,c}) and B(ab,c) = B(a,bc).
inline void report_quadratic(const PoissonAlgebra& p, const BilinForm& B, LawReport& rep) {
  const std::size_t n = p.dim();
  require(B.rows() == n && B.cols() == n, Errc::DimensionMismatch, "form does not match algebra");
  if (!(B.transpose() == B)) rep.add_note("form-symmetric", "form is not symmetric");
  if (rank(B) != n) rep.add_note("form-nondegenerate", "form is degenerate");
  auto invariant = [&](const BilinearMap& m, const char* law) {
    detail::check_triples(n, law, rep, [&](std::size_t a, std::size_t b, std::size_t c) {
      const Vector ea = Vector::unit(n, a), ec = Vector::unit(n, c);
      return std::pair{Vector{detail::form(B, m.on_basis(a, b), ec)}, Vector{detail::form(B, ea, m.on_basis(b, c))}};
    });
  };
  invariant(p.bracket(), "invariant-bracket");
  invariant(p.dot(), "invariant-product");
}

inline bool check_quadratic(const PoissonAlgebra& p, const BilinForm& B) {
  auto rep = first_failure();
  report_quadratic(p, B, rep);
  return rep.ok();
}

/// Subspaces are the column spans of s1 and s2; each must be an isotropic
/// subalgebra and B must be quadratic.
inline void report_manin_triple(const PoissonAlgebra& p, const BilinForm& B, const Matrix& s1, const Matrix& s2,
                                LawReport& rep) {
  const std::size_t n = p.dim();
  require(s1.rows() == n && s2.rows() == n, Errc::DimensionMismatch, "split subspace dimension");
  require(rank(s1) == s1.cols() && rank(s2) == s2.cols() && s1.cols() + s2.cols() == n &&
              rank(hstack(s1, s2)) == n,
          Errc::BadSplit, "subspaces must form a direct sum decomposition");
  const std::pair<const Matrix*, std::string> parts[] = {{&s1, "s1"}, {&s2, "s2"}};
  for (const auto& [s, name] : parts)
    for (std::size_t i = 0; i < s->cols(); ++i)
      for (std::size_t j = 0; j < s->cols(); ++j) {
        if (rep.full()) return;
        const Vector u = s->column(i), v = s->column(j);
        const Vector uv = p.mul(u, v), br = p.br(u, v);
        if (!in_column_span(*s, uv)) rep.add(name + "-closed-product", {i, j}, to_string(uv), "outside " + name);
        if (!in_column_span(*s, br)) rep.add(name + "-closed-bracket", {i, j}, to_string(br), "outside " + name);
        const Scalar b = detail::form(B, u, v);
        if (!is_zero(b)) rep.add(name + "-isotropic", {i, j}, to_string(b), "0");
      }
  report_quadratic(p, B, rep);
}

inline bool check_manin_triple(const PoissonAlgebra& p, const BilinForm& B, const Matrix& s1, const Matrix& s2) {
  auto rep = first_failure();
  report_manin_triple(p, B, s1, s2, rep);
  return rep.ok();
}

/// B(x+a, y+b) = <x, b> + <a, y> on P (+) P*.
inline BilinForm standard_form(std::size_t n) {
  BilinForm B(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    B(i, n + i) = 1;
    B(n + i, i) = 1;
  }
  return B;
}

/// Column bases of P and P* inside P (+) P*.
inline std::pair<Matrix, Matrix> standard_split(std::size_t n) {
  Matrix s1(2 * n, n), s2(2 * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    s1(i, i) = 1;
    s2(n + i, i) = 1;
  }
  return {s1, s2};
}

/// P (+) P* with
/// (x+a) * (y+b) = xy - frkR*_a y - frkL*_b x + a.b - R*_x b - L*_y a,
/// {x+a, y+b} = {x,y} + frkad*_a y - frkad*_b x + {a,b} + ad*_x b - ad*_y a,
/// each coefficient read off through the pairing.
inline std::pair<PoissonAlgebra, BilinForm> manin_from_bialgebra(const Bialgebra& b) {
  const auto verdict = check_bialgebra(b);
  require(verdict.kind == BialgebraKind::Full, Errc::NotFullBialgebra, "not a Poisson bialgebra: " + verdict.reason);
  const PoissonAlgebra dual = dual_algebra(b);
  const std::size_t n = b.P.dim(), N = 2 * n;
  const BilinearMap &pd = b.P.dot(), &pb = b.P.bracket(), &sd = dual.dot(), &sb = dual.bracket();
  BilinearMap dot(N), br(N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < n; ++c) {
        dot(c, i, j) = pd(c, i, j);
        br(c, i, j) = pb(c, i, j);
        dot(n + c, n + i, n + j) = sd(c, i, j);
        br(n + c, n + i, n + j) = sb(c, i, j);

        // e_i * f_j: <-frkL*_{f_j} e_i, f_c> = <e_i, f_j . f_c>, <-R*_{e_i} f_j, e_c> = <f_j, e_c e_i>
        dot(c, i, n + j) = sd(i, j, c);
        dot(n + c, i, n + j) = pd(j, c, i);
        // f_i * e_j: <-frkR*_{f_i} e_j, f_c> = <e_j, f_c . f_i>, <-L*_{e_j} f_i, e_c> = <f_i, e_j e_c>
        dot(c, n + i, j) = sd(j, c, i);
        dot(n + c, n + i, j) = pd(i, j, c);
        // {e_i, f_j}: <-frkad*_{f_j} e_i, f_c> = <e_i, {f_j, f_c}>, <ad*_{e_i} f_j, e_c> = -<f_j, {e_i, e_c}>
        br(c, i, n + j) = sb(i, j, c);
        br(n + c, i, n + j) = -pb(j, i, c);
        // {f_i, e_j}: <frkad*_{f_i} e_j, f_c> = -<e_j, {f_i, f_c}>, <-ad*_{e_j} f_i, e_c> = <f_i, {e_j, e_c}>
        br(c, n + i, j) = -sb(j, i, c);
        br(n + c, n + i, j) = pb(i, j, c);
      }
  return {PoissonAlgebra(std::move(dot), std::move(br)), standard_form(n)};
}

/// Drinfeld double D = P (+) P* together with r = sum_i e_i (x) e*_i.
inline std::pair<PoissonAlgebra, Tensor2> drinfeld_double_r(const Bialgebra& b) {
  auto [D, B] = manin_from_bialgebra(b);
  const std::size_t n = b.P.dim();
  Tensor2 r(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) r(i, n + i) = 1;
  return {std::move(D), std::move(r)};
}

}  // namespace ncp
