#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "ncpoisson/representation.hpp"

namespace ncp {

/// Highest cochain degree i + j the coboundaries will produce.
inline constexpr std::size_t max_cochain_degree = 4;

/// Element of C^{i,j}(P, V) = Hom((x)^i P (x) ^^j P, V), tabulated on basis
/// tuples: every ordered i-tuple paired with every strictly increasing j-tuple.
class Cochain {
 public:
  Cochain(std::shared_ptr<const PoissonRep> rep, std::size_t i, std::size_t j)
      : rep_(std::move(rep)), i_(i), j_(j) {
    require(rep_ != nullptr, Errc::DimensionMismatch, "cochain needs a representation");
    const std::size_t n = rep_->base().dim();
    std::size_t count = 1;
    for (std::size_t k = 0; k < i_; ++k) count *= n;
    tensors_ = count;
    wedges_ = combinations(n, j_).size();
    values_.assign(tensors_ * wedges_, Vector(rep_->vdim()));
  }

  const std::shared_ptr<const PoissonRep>& rep() const noexcept { return rep_; }
  std::size_t i() const noexcept { return i_; }
  std::size_t j() const noexcept { return j_; }
  std::size_t degree() const noexcept { return i_ + j_; }
  std::size_t base_dim() const noexcept { return rep_->base().dim(); }
  std::size_t vdim() const noexcept { return rep_->vdim(); }

  /// Strictly increasing j-subsets of {0..n-1} in lexicographic order.
  static std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t j) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (cur.size() == j) {
        out.push_back(cur);
        return;
      }
      for (std::size_t v = start; v < n; ++v) {
        cur.push_back(v);
        self(self, v + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  }

  /// Value on basis arguments; xs may be in any order and is reordered with sign.
  Vector at(const std::vector<std::size_t>& as, std::vector<std::size_t> xs) const {
    require(as.size() == i_ && xs.size() == j_, Errc::DimensionMismatch, "cochain arity");
    int sign = 1;
    for (std::size_t p = 0; p < xs.size(); ++p)
      for (std::size_t q = 0; q + 1 < xs.size() - p; ++q)
        if (xs[q] > xs[q + 1]) {
          std::swap(xs[q], xs[q + 1]);
          sign = -sign;
        }
    for (std::size_t q = 0; q + 1 < xs.size(); ++q)
      if (xs[q] == xs[q + 1]) return Vector(vdim());
    Vector v = values_[slot(as, xs)];
    if (sign < 0) v *= Scalar(-1);
    return v;
  }

  /// Sets the value on (as, xs) with xs strictly increasing.
  void set(const std::vector<std::size_t>& as, const std::vector<std::size_t>& xs, Vector v) {
    require(v.size() == vdim(), Errc::DimensionMismatch, "cochain value");
    require(std::is_sorted(xs.begin(), xs.end()) && std::adjacent_find(xs.begin(), xs.end()) == xs.end(),
            Errc::DimensionMismatch, "wedge arguments must be strictly increasing");
    values_[slot(as, xs)] = std::move(v);
  }

  /// Multilinear evaluation on arbitrary vectors.
  Vector eval(const std::vector<Vector>& as, const std::vector<Vector>& xs) const {
    require(as.size() == i_ && xs.size() == j_, Errc::DimensionMismatch, "cochain arity");
    const std::size_t n = base_dim();
    Vector out(vdim());
    std::vector<std::size_t> ai(i_), xi(j_);
    auto rec = [&](auto&& self, std::size_t pos, const Scalar& w) -> void {
      if (pos == i_ + j_) {
        out.axpy(w, at(ai, xi));
        return;
      }
      const Vector& arg = pos < i_ ? as[pos] : xs[pos - i_];
      for (std::size_t b = 0; b < n; ++b) {
        if (ncp::is_zero(arg[b])) continue;
        (pos < i_ ? ai[pos] : xi[pos - i_]) = b;
        self(self, pos + 1, w * arg[b]);
      }
    };
    rec(rec, 0, Scalar(1));
    return out;
  }

  /// Calls f(as, xs) for every stored basis tuple.
  template <class F>
  void for_each_tuple(F&& f) const {
    const std::size_t n = base_dim();
    const auto combos = combinations(n, j_);
    std::vector<std::size_t> as(i_);
    for (std::size_t t = 0; t < tensors_; ++t) {
      std::size_t rest = t;
      for (std::size_t k = i_; k-- > 0;) {
        as[k] = rest % n;
        rest /= n;
      }
      for (const auto& xs : combos) f(as, xs);
    }
  }

  bool is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Vector& v) { return v.is_zero(); });
  }

  Cochain& operator+=(const Cochain& o) {
    require(same_shape(o), Errc::DimensionMismatch, "cochain sum");
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
    return *this;
  }
  Cochain& operator*=(const Scalar& s) {
    for (auto& v : values_) v *= s;
    return *this;
  }
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator*(const Scalar& s, Cochain a) { return a *= s; }
  friend bool operator==(const Cochain& a, const Cochain& b) { return a.same_shape(b) && a.values_ == b.values_; }

 private:
  bool same_shape(const Cochain& o) const { return rep_ == o.rep_ && i_ == o.i_ && j_ == o.j_; }

  std::size_t slot(const std::vector<std::size_t>& as, const std::vector<std::size_t>& xs) const {
    const std::size_t n = base_dim();
    std::size_t t = 0;
    for (std::size_t a : as) {
      detail::check_index(a, n);
      t = t * n + a;
    }
    // rank of xs among increasing j-subsets in lexicographic order
    std::size_t rank = 0, prev = 0;
    for (std::size_t p = 0; p < xs.size(); ++p) {
      detail::check_index(xs[p], n);
      for (std::size_t v = (p == 0 ? 0 : prev + 1); v < xs[p]; ++v) rank += binom(n - v - 1, j_ - p - 1);
      prev = xs[p];
    }
    return t * wedges_ + rank;
  }

  static std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
  }

  std::shared_ptr<const PoissonRep> rep_;
  std::size_t i_, j_;
  std::size_t tensors_ = 1, wedges_ = 1;
  std::vector<Vector> values_;
};

inline Cochain random_cochain(const std::shared_ptr<const PoissonRep>& rep, std::size_t i, std::size_t j,
                              std::mt19937_64& rng) {
  Cochain c(rep, i, j);
  c.for_each_tuple([&](const auto& as, const auto& xs) {
    Vector v(c.vdim());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = random_scalar(rng);
    c.set(as, xs, std::move(v));
  });
  return c;
}

namespace detail {

inline void check_output_degree(const Cochain& c) {
  require(c.degree() + 1 <= max_cochain_degree, Errc::DegreeUnsupported,
          "coboundary output degree above " + std::to_string(max_cochain_degree));
}

inline std::vector<Vector> units(std::size_t n, const std::vector<std::size_t>& idx) {
  std::vector<Vector> v;
  for (std::size_t k : idx) v.push_back(Vector::unit(n, k));
  return v;
}

}  // namespace detail

/// Hochschild-type coboundary C^{i,j} -> C^{i+1,j}.
inline Cochain dhat(const Cochain& phi) {
  detail::check_output_degree(phi);
  const PoissonRep& rep = *phi.rep();
  const PoissonAlgebra& P = rep.base();
  const std::size_t n = P.dim(), i = phi.i();
  Cochain out(phi.rep(), i + 1, phi.j());
  out.for_each_tuple([&](const std::vector<std::size_t>& as, const std::vector<std::size_t>& xs) {
    const auto xv = detail::units(n, xs);
    Vector v = rep.L(as[0]) * phi.at({as.begin() + 1, as.end()}, xs);
    for (std::size_t k = 0; k < i; ++k) {
      auto args = detail::units(n, as);
      args[k] = P.dot().on_basis(as[k], as[k + 1]);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(k) + 1);
      Vector term = phi.eval(args, xv);
      if (k % 2 == 0)
        v -= term;
      else
        v += term;
    }
    Vector last = rep.R(as[i]) * phi.at({as.begin(), as.end() - 1}, xs);
    if (i % 2 == 0)
      v -= last;
    else
      v += last;
    out.set(as, xs, std::move(v));
  });
  return out;
}

/// Chevalley-Eilenberg-type coboundary C^{i,j} -> C^{i,j+1}.
inline Cochain dbar(const Cochain& phi) {
  detail::check_output_degree(phi);
  const PoissonRep& rep = *phi.rep();
  const PoissonAlgebra& P = rep.base();
  const std::size_t n = P.dim(), i = phi.i(), j = phi.j();
  Cochain out(phi.rep(), i, j + 1);
  out.for_each_tuple([&](const std::vector<std::size_t>& as, const std::vector<std::size_t>& xs) {
    Vector v(phi.vdim());
    const auto av = detail::units(n, as);
    for (std::size_t l = 0; l <= j; ++l) {
      std::vector<std::size_t> rest = xs;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(l));
      Vector term = rep.rho(xs[l]) * phi.at(as, rest);
      const auto rv = detail::units(n, rest);
      for (std::size_t k = 0; k < i; ++k) {
        auto args = av;
        args[k] = P.bracket().on_basis(xs[l], as[k]);
        term -= phi.eval(args, rv);
      }
      if (l % 2 == 0)
        v += term;
      else
        v -= term;
    }
    for (std::size_t p = 0; p <= j; ++p)
      for (std::size_t q = p + 1; q <= j; ++q) {
        std::vector<Vector> args{P.bracket().on_basis(xs[p], xs[q])};
        for (std::size_t t = 0; t <= j; ++t)
          if (t != p && t != q) args.push_back(Vector::unit(n, xs[t]));
        Vector term = phi.eval(av, args);
        if ((p + q) % 2 == 0)
          v += term;
        else
          v -= term;
      }
    out.set(as, xs, std::move(v));
  });
  return out;
}

/// Element of C^n = sum_{i+j=n} C^{i,j}; component k has bidegree (k, n-k).
struct MixedCochain {
  std::size_t degree = 0;
  std::vector<Cochain> parts;

  static MixedCochain zero(const std::shared_ptr<const PoissonRep>& rep, std::size_t n) {
    MixedCochain m{n, {}};
    for (std::size_t k = 0; k <= n; ++k) m.parts.emplace_back(rep, k, n - k);
    return m;
  }

  static MixedCochain random(const std::shared_ptr<const PoissonRep>& rep, std::size_t n, std::mt19937_64& rng) {
    MixedCochain m{n, {}};
    for (std::size_t k = 0; k <= n; ++k) m.parts.push_back(random_cochain(rep, k, n - k, rng));
    return m;
  }

  bool is_zero() const {
    return std::all_of(parts.begin(), parts.end(), [](const Cochain& c) { return c.is_zero(); });
  }
};

/// delta^n = sum_{i+j=n} (dhat^{i,j} + (-1)^i dbar^{i,j})
inline MixedCochain delta(const MixedCochain& c) {
  require(!c.parts.empty() && c.parts.size() == c.degree + 1, Errc::DimensionMismatch, "mixed cochain shape");
  const std::size_t n = c.degree;
  for (std::size_t k = 0; k <= n; ++k)
    require(c.parts[k].i() == k && c.parts[k].j() == n - k, Errc::DimensionMismatch, "mixed cochain bidegrees");
  require(n + 1 <= max_cochain_degree, Errc::DegreeUnsupported,
          "coboundary output degree above " + std::to_string(max_cochain_degree));
  const auto& rep = c.parts.front().rep();
  MixedCochain out = MixedCochain::zero(rep, n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    out.parts[k + 1] += dhat(c.parts[k]);
    Cochain b = dbar(c.parts[k]);
    if (k % 2 == 1) b *= Scalar(-1);
    out.parts[k] += b;
  }
  return out;
}

/// phi(ab) = L_a phi(b) + R_b phi(a),
/// phi({x,a}) = rho(x) phi(a) - L_a psi(x) + R_a psi(x),
/// psi({x,y}) = rho(x) psi(y) - rho(y) psi(x).
inline bool is_one_cocycle(const Cochain& phi, const Cochain& psi) {
  require(phi.i() == 1 && phi.j() == 0 && psi.i() == 0 && psi.j() == 1, Errc::DimensionMismatch,
          "one-cocycle needs bidegrees (1,0) and (0,1)");
  require(phi.rep() == psi.rep(), Errc::DimensionMismatch, "cochains attached to different representations");
  const PoissonRep& rep = *phi.rep();
  const PoissonAlgebra& P = rep.base();
  const std::size_t n = P.dim();
  auto f = [&](const Vector& a) { return phi.eval({a}, {}); };
  auto g = [&](const Vector& x) { return psi.eval({}, {x}); };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vector ea = Vector::unit(n, a), eb = Vector::unit(n, b);
      if (!(f(P.dot().on_basis(a, b)) == rep.L(a) * f(eb) + rep.R(b) * f(ea))) return false;
      // x = e_a, second argument e_b
      if (!(f(P.bracket().on_basis(a, b)) == rep.rho(a) * f(eb) - rep.L(b) * g(ea) + rep.R(b) * g(ea))) return false;
      if (!(g(P.bracket().on_basis(a, b)) == rep.rho(a) * g(eb) - rep.rho(b) * g(ea))) return false;
    }
  return true;
}

/// phi(a) = L_a u - R_a u, psi(x) = rho(x) u
inline std::pair<Cochain, Cochain> one_coboundary_from(const std::shared_ptr<const PoissonRep>& rep, const Vector& u) {
  require(u.size() == rep->vdim(), Errc::DimensionMismatch, "u must lie in the representation space");
  Cochain phi(rep, 1, 0), psi(rep, 0, 1);
  for (std::size_t a = 0; a < rep->base().dim(); ++a) {
    phi.set({a}, {}, rep->L(a) * u - rep->R(a) * u);
    psi.set({}, {a}, rep->rho(a) * u);
  }
  return {std::move(phi), std::move(psi)};
}

}  // namespace ncp
