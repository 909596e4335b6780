#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ncpoisson/bilinear.hpp"
#include "ncpoisson/law_report.hpp"

namespace ncp {

namespace detail {

/// Evaluates `side(i, j, k) -> pair<lhs, rhs>` on every basis triple and
/// records the tuples where the two sides differ.
template <class F>
void check_triples(std::size_t n, const char* law, LawReport& report, F&& side) {
  for (std::size_t i = 0; i < n && !report.full(); ++i)
    for (std::size_t j = 0; j < n && !report.full(); ++j)
      for (std::size_t k = 0; k < n && !report.full(); ++k) {
        auto [lhs, rhs] = side(i, j, k);
        if (!(lhs == rhs)) report.add(law, {i, j, k}, to_string(lhs), to_string(rhs));
      }
}

template <class F>
void check_pairs(std::size_t n, const char* law, LawReport& report, F&& side) {
  for (std::size_t i = 0; i < n && !report.full(); ++i)
    for (std::size_t j = 0; j < n && !report.full(); ++j) {
      auto [lhs, rhs] = side(i, j);
      if (!(lhs == rhs)) report.add(law, {i, j}, to_string(lhs), to_string(rhs));
    }
}

/// Product of a basis element with a vector, both orders.
inline Vector mul(const BilinearMap& m, const Vector& x, std::size_t j) {
  return m(x, Vector::unit(m.dim(), j));
}
inline Vector mul(const BilinearMap& m, std::size_t i, const Vector& y) {
  return m(Vector::unit(m.dim(), i), y);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Axiom checkers on raw structure constants

inline void report_associative(const BilinearMap& m, LawReport& report) {
  detail::check_triples(m.dim(), "associative", report, [&](std::size_t i, std::size_t j, std::size_t k) {
    return std::pair{detail::mul(m, m.on_basis(i, j), k), detail::mul(m, i, m.on_basis(j, k))};
  });
}

inline bool check_associative(const BilinearMap& m) {
  auto r = first_failure();
  report_associative(m, r);
  return r.ok();
}

inline void report_antisymmetric(const BilinearMap& m, const char* law, LawReport& report) {
  detail::check_pairs(m.dim(), law, report, [&](std::size_t i, std::size_t j) {
    return std::pair{m.on_basis(i, j), -m.on_basis(j, i)};
  });
}

inline void report_lie(const BilinearMap& m, LawReport& report) {
  report_antisymmetric(m, "antisymmetry", report);
  detail::check_triples(m.dim(), "jacobi", report, [&](std::size_t i, std::size_t j, std::size_t k) {
    Vector s = detail::mul(m, m.on_basis(i, j), k);
    s += detail::mul(m, m.on_basis(j, k), i);
    s += detail::mul(m, m.on_basis(k, i), j);
    return std::pair{s, Vector(m.dim())};
  });
}

inline bool check_lie(const BilinearMap& m) {
  auto r = first_failure();
  report_lie(m, r);
  return r.ok();
}

/// {x, y z} = {x, y} z + y {x, z}
inline void report_leibniz(const BilinearMap& dot, const BilinearMap& bracket, LawReport& report) {
  require(dot.dim() == bracket.dim(), Errc::DimensionMismatch, "leibniz");
  detail::check_triples(dot.dim(), "leibniz", report, [&](std::size_t x, std::size_t y, std::size_t z) {
    Vector lhs = detail::mul(bracket, x, dot.on_basis(y, z));
    Vector rhs = detail::mul(dot, bracket.on_basis(x, y), z) + detail::mul(dot, y, bracket.on_basis(x, z));
    return std::pair{lhs, rhs};
  });
}

inline bool check_leibniz(const BilinearMap& dot, const BilinearMap& bracket) {
  auto r = first_failure();
  report_leibniz(dot, bracket, r);
  return r.ok();
}

/// {x, y z} + {y, z x} + {z, x y} = 0
inline void report_coherent(const BilinearMap& dot, const BilinearMap& bracket, LawReport& report) {
  require(dot.dim() == bracket.dim(), Errc::DimensionMismatch, "coherence");
  detail::check_triples(dot.dim(), "coherent", report, [&](std::size_t x, std::size_t y, std::size_t z) {
    Vector s = detail::mul(bracket, x, dot.on_basis(y, z));
    s += detail::mul(bracket, y, dot.on_basis(z, x));
    s += detail::mul(bracket, z, dot.on_basis(x, y));
    return std::pair{s, Vector(dot.dim())};
  });
}

/// [{x, y}, z] + [{z, x}, y] + [{y, z}, x] = 0 with [,] the commutator of `dot`.
inline bool check_commutator_cyclic(const BilinearMap& dot, const BilinearMap& bracket) {
  auto comm = commutator(dot);
  auto r = first_failure();
  detail::check_triples(dot.dim(), "commutator-cyclic", r, [&](std::size_t x, std::size_t y, std::size_t z) {
    Vector s = detail::mul(comm, bracket.on_basis(x, y), z);
    s += detail::mul(comm, bracket.on_basis(z, x), y);
    s += detail::mul(comm, bracket.on_basis(y, z), x);
    return std::pair{s, Vector(dot.dim())};
  });
  return r.ok();
}

/// {[x, y], z} + {[z, x], y} + {[y, z], x} = 0.
inline bool check_bracket_of_commutator_cyclic(const BilinearMap& dot, const BilinearMap& bracket) {
  auto comm = commutator(dot);
  auto r = first_failure();
  detail::check_triples(dot.dim(), "bracket-cyclic", r, [&](std::size_t x, std::size_t y, std::size_t z) {
    Vector s = detail::mul(bracket, comm.on_basis(x, y), z);
    s += detail::mul(bracket, comm.on_basis(z, x), y);
    s += detail::mul(bracket, comm.on_basis(y, z), x);
    return std::pair{s, Vector(dot.dim())};
  });
  return r.ok();
}

// ---------------------------------------------------------------------------
// Noncommutative Poisson algebra

/// Associative product plus Lie bracket on a common basis, tied by the
/// Leibniz rule. All three axioms are verified at construction.
class PoissonAlgebra {
 public:
  PoissonAlgebra() = default;

  PoissonAlgebra(BilinearMap dot, BilinearMap bracket) : dot_(std::move(dot)), bracket_(std::move(bracket)) {
    require(dot_.dim() == bracket_.dim(), Errc::DimensionMismatch, "dot and bracket dimensions differ");
    LawReport r(1);
    report_associative(dot_, r);
    if (!r.ok()) fail(Errc::InvalidAlgebra, "product is not associative at " + describe(r));
    report_lie(bracket_, r);
    if (!r.ok()) fail(Errc::InvalidAlgebra, "bracket is not a Lie bracket (" + describe(r) + ")");
    report_leibniz(dot_, bracket_, r);
    if (!r.ok()) fail(Errc::InvalidAlgebra, "Leibniz rule fails at " + describe(r));
    auto c = first_failure();
    report_coherent(dot_, bracket_, c);
    coherent_ = c.ok();
    for (std::size_t i = 0; i < dim(); ++i) {
      left_.push_back(dot_.left(i));
      right_.push_back(dot_.right(i));
      ad_.push_back(bracket_.left(i));
    }
  }

  std::size_t dim() const noexcept { return dot_.dim(); }
  const BilinearMap& dot() const noexcept { return dot_; }
  const BilinearMap& bracket() const noexcept { return bracket_; }
  bool coherent() const noexcept { return coherent_; }

  /// Left / right multiplication and adjoint matrices of basis elements.
  const Matrix& L(std::size_t i) const { return left_.at(i); }
  const Matrix& R(std::size_t i) const { return right_.at(i); }
  const Matrix& ad(std::size_t i) const { return ad_.at(i); }

  Matrix L(const Vector& x) const { return combine(left_, x); }
  Matrix R(const Vector& x) const { return combine(right_, x); }
  Matrix ad(const Vector& x) const { return combine(ad_, x); }

  Vector mul(const Vector& x, const Vector& y) const { return dot_(x, y); }
  Vector br(const Vector& x, const Vector& y) const { return bracket_(x, y); }

  friend bool operator==(const PoissonAlgebra& a, const PoissonAlgebra& b) {
    return a.dot_ == b.dot_ && a.bracket_ == b.bracket_;
  }

 private:
  static std::string describe(const LawReport& r) {
    const auto& v = r.violations().front();
    std::string s = v.law + " (";
    for (std::size_t i = 0; i < v.at.size(); ++i) s += (i ? "," : "") + std::to_string(v.at[i]);
    return s + "): " + v.lhs + " != " + v.rhs;
  }

  Matrix combine(const std::vector<Matrix>& ms, const Vector& x) const {
    require(x.size() == dim(), Errc::DimensionMismatch, "element dimension");
    Matrix out(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) out.axpy(x[i], ms[i]);
    return out;
  }

  BilinearMap dot_;
  BilinearMap bracket_;
  bool coherent_ = true;
  std::vector<Matrix> left_, right_, ad_;
};

inline void report_coherent(const PoissonAlgebra& p, LawReport& report) {
  report_coherent(p.dot(), p.bracket(), report);
}

inline bool check_coherent(const PoissonAlgebra& p) { return p.coherent(); }

/// Standard noncommutative Poisson structure: bracket = hbar * (xy - yx).
inline PoissonAlgebra standard_poisson(const BilinearMap& dot, const Scalar& hbar) {
  require(check_associative(dot), Errc::NotAssociative, "standard_poisson needs an associative product");
  return PoissonAlgebra(dot, hbar * commutator(dot));
}

/// Mixed Jacobi identity making k1 [,]_1 + k2 [,]_2 a Lie bracket for all k1, k2.
inline void report_compatible_lie(const BilinearMap& b1, const BilinearMap& b2, LawReport& report) {
  require(b1.dim() == b2.dim(), Errc::DimensionMismatch, "compatible lie");
  require(check_lie(b1), Errc::NotLie, "first bracket");
  require(check_lie(b2), Errc::NotLie, "second bracket");
  detail::check_triples(b1.dim(), "compatible-lie", report, [&](std::size_t x, std::size_t y, std::size_t z) {
    Vector s = detail::mul(b2, b1.on_basis(x, y), z);
    s += detail::mul(b2, b1.on_basis(y, z), x);
    s += detail::mul(b2, b1.on_basis(z, x), y);
    s += detail::mul(b1, b2.on_basis(x, y), z);
    s += detail::mul(b1, b2.on_basis(y, z), x);
    s += detail::mul(b1, b2.on_basis(z, x), y);
    return std::pair{s, Vector(b1.dim())};
  });
}

inline bool check_compatible_lie(const BilinearMap& b1, const BilinearMap& b2) {
  auto r = first_failure();
  report_compatible_lie(b1, b2, r);
  return r.ok();
}

// ---------------------------------------------------------------------------
// Fixture families

/// Three-dimensional coherent family: e1 e2 = e3, e2 e1 = -e3,
/// {e1,e2} = a e1 + b e2 + c e3, {e1,e3} = b e3, {e2,e3} = -a e3.
inline PoissonAlgebra example_3d(const Scalar& a, const Scalar& b, const Scalar& c) {
  BilinearMap dot(3), br(3);
  dot(2, 0, 1) = 1;
  dot(2, 1, 0) = -1;
  auto set_br = [&](std::size_t i, std::size_t j, Vector v) {
    br.set(i, j, v);
    br.set(j, i, -v);
  };
  set_br(0, 1, Vector{a, b, c});
  set_br(0, 2, Vector{0, 0, b});
  set_br(1, 2, Vector{0, 0, -a});
  return PoissonAlgebra(std::move(dot), std::move(br));
}

/// Four-dimensional coherent family: e1e1 = e1e2 = e3e2 = e4, e3e3 = -e4,
/// {e1,e2} = a e4, {e1,e3} = b e4, {e2,e3} = c e4.
inline PoissonAlgebra example_4d(const Scalar& a, const Scalar& b, const Scalar& c) {
  BilinearMap dot(4), br(4);
  dot(3, 0, 0) = 1;
  dot(3, 0, 1) = 1;
  dot(3, 2, 1) = 1;
  dot(3, 2, 2) = -1;
  auto set_br = [&](std::size_t i, std::size_t j, const Scalar& s) {
    br(3, i, j) = s;
    br(3, j, i) = -s;
  };
  set_br(0, 1, a);
  set_br(0, 2, b);
  set_br(1, 2, c);
  return PoissonAlgebra(std::move(dot), std::move(br));
}

/// Product of the full matrix algebra M_m on the matrix units, E_ab -> index a m + b.
inline BilinearMap matrix_units_product(std::size_t m) {
  BilinearMap dot(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) dot(a * m + c, a * m + b, b * m + c) = 1;
  return dot;
}

/// Upper triangular 2 x 2 matrices on E11, E12, E22.
inline BilinearMap upper_triangular_product() {
  BilinearMap dot(3);
  dot(0, 0, 0) = 1;
  dot(1, 0, 1) = 1;
  dot(1, 1, 2) = 1;
  dot(2, 2, 2) = 1;
  return dot;
}

/// Structure on the zero product / zero bracket.
inline PoissonAlgebra abelian(std::size_t n) { return PoissonAlgebra(BilinearMap(n), BilinearMap(n)); }

}  // namespace ncp
