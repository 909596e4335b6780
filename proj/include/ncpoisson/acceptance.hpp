#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ncpoisson/bialgebra.hpp"
#include "ncpoisson/cohomology.hpp"
#include "ncpoisson/operators.hpp"
#include "ncpoisson/yang_baxter.hpp"

namespace ncp {

struct AcceptanceConfig {
  std::uint64_t seed = 20211;
  /// Raises per-criterion sample counts above their floors; 0 keeps the floors.
  std::size_t samples = 0;

  std::size_t at_least(std::size_t floor) const { return samples > floor ? samples : floor; }
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::size_t checks = 0;
  std::string detail;
  double seconds = 0;
};

namespace accept {

/// Counts checks and remembers the first few failures.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (notes_.size() < 4) notes_.push_back(what);
  }
  void note(const std::string& s) { extra_.push_back(s); }

  CriterionResult result(int id, std::string title) const {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    r.pass = failures_ == 0 && checks_ > 0;
    r.checks = checks_;
    std::string d;
    if (failures_) d = std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed";
    for (const auto& n : notes_) d += (d.empty() ? "" : "; ") + n;
    for (const auto& n : extra_) d += (d.empty() ? "" : "; ") + n;
    r.detail = d;
    return r;
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::vector<std::string> notes_, extra_;
};

inline Scalar rnd(std::mt19937_64& rng) { return random_scalar(rng); }
inline Scalar rnd_nz(std::mt19937_64& rng) { return random_nonzero_scalar(rng); }

inline std::string params_str(std::initializer_list<Scalar> xs) {
  std::string s = "(";
  bool first = true;
  for (const auto& x : xs) {
    s += (first ? "" : ",") + to_string(x);
    first = false;
  }
  return s + ")";
}

/// Fixture solution together with its algebra and a label.
struct Fixture {
  std::string name;
  PoissonAlgebra P;
  Tensor2 r;
};

/// The tensors that solve the PYBE as printed, plus the first 4d family on
/// the slice a = -c where it does.
inline std::vector<Fixture> solving_fixtures(std::mt19937_64& rng) {
  const Scalar a = rnd(rng), b = rnd(rng), c = rnd(rng);
  return {
      {"r3d_family" + params_str({a, b, c}), example_3d(a, b, c), r3d_family(rnd(rng), rnd(rng))},
      {"r4d_family_b" + params_str({a, b, c}), example_4d(a, b, c), r4d_family_b(rnd(rng), rnd(rng))},
      {"r4d_family_a on a=-c" + params_str({a, b, -a}), example_4d(a, b, -a),
       r4d_family_a(rnd(rng), rnd(rng), rnd(rng))},
  };
}

inline Tensor2 random_sparse(std::size_t n, std::mt19937_64& rng, std::size_t max_terms = 4) {
  Tensor2 t(n, n);
  const std::size_t terms = 1 + rng() % max_terms;
  for (std::size_t k = 0; k < terms; ++k) t(rng() % n, rng() % n) = static_cast<long>(rng() % 5) - 2;
  return t;
}

inline bool law_holds(const std::function<void(LawReport&)>& f) {
  auto r = first_failure();
  f(r);
  return r.ok();
}

inline bool algebra_laws_hold(const BilinearMap& dot, const BilinearMap& br) {
  return check_associative(dot) && check_lie(br) && check_leibniz(dot, br) &&
         law_holds([&](LawReport& r) { report_coherent(dot, br, r); });
}

/// Dendriform structures from Rota-Baxter operators on small associative algebras.
inline std::vector<std::pair<std::string, PrePoisson>> dendriform_corpus() {
  std::vector<std::pair<std::string, PrePoisson>> out;
  const std::vector<std::pair<std::string, BilinearMap>> sources = {
      {"example_3d product", example_3d(0, 0, 0).dot()},
      {"upper triangular 2x2", upper_triangular_product()},
      {"M2", matrix_units_product(2)},
  };
  for (const auto& [name, dot] : sources) {
    const PoissonAlgebra P(dot, BilinearMap(dot.dim()));
    const PoissonRep reg = regular_rep(P);
    for (const auto& B : find_rota_baxter(P, 2)) {
      PrePoisson a = induced_pre_poisson(B, reg);
      if (a.succ.is_zero() && a.prec.is_zero()) continue;
      out.push_back({name + " with B=" + to_string(B), std::move(a)});
      break;
    }
  }
  return out;
}

}  // namespace accept

// ---------------------------------------------------------------------------

inline CriterionResult criterion_1(const AcceptanceConfig& cfg) {
  accept::Tally t;
  std::mt19937_64 rng(cfg.seed + 1);
  std::size_t survivors = 0;
  std::string first_survivor;
  for (std::size_t s = 0; s < cfg.at_least(10); ++s) {
    const Scalar a = accept::rnd(rng), b = accept::rnd(rng), c = accept::rnd(rng);
    for (bool four : {false, true}) {
      const PoissonAlgebra P = four ? example_4d(a, b, c) : example_3d(a, b, c);
      const std::string tag = std::string(four ? "example_4d" : "example_3d") + accept::params_str({a, b, c});
      t.expect(check_associative(P.dot()), tag + " associative");
      t.expect(check_lie(P.bracket()), tag + " lie");
      t.expect(check_leibniz(P.dot(), P.bracket()), tag + " leibniz");
      t.expect(check_coherent(P), tag + " coherent");
      const std::size_t n = P.dim();
      for (int part = 0; part < 2; ++part)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
              BilinearMap dot = P.dot(), br = P.bracket();
              (part ? br : dot)(k, i, j) += 1;
              const bool caught = !accept::algebra_laws_hold(dot, br);
              if (!caught) {
                ++survivors;
                if (first_survivor.empty())
                  first_survivor = tag + " " + (part ? "bracket" : "dot") + " entry (" + std::to_string(k) + "," +
                                   std::to_string(i) + "," + std::to_string(j) + ")";
              }
              t.expect(caught, "mutation survives all checkers");
            }
    }
  }
  if (survivors) t.note(std::to_string(survivors) + " mutations leave a valid coherent algebra, first: " + first_survivor);
  return t.result(1, "fixture algebras satisfy all axioms; single-entry mutations are caught");
}

inline CriterionResult criterion_2(const AcceptanceConfig& cfg) {
  accept::Tally t;
  std::mt19937_64 rng(cfg.seed + 2);
  std::map<std::string, std::size_t> bad;
  const std::size_t samples = cfg.at_least(10);
  for (std::size_t s = 0; s < samples; ++s) {
    const Scalar a = accept::rnd(rng), b = accept::rnd(rng), c = accept::rnd(rng);
    const PoissonAlgebra P3 = example_3d(a, b, c), P4 = example_4d(a, b, c);
    const std::vector<std::pair<std::string, std::pair<const PoissonAlgebra*, Tensor2>>> cases = {
        {"r3d_family", {&P3, r3d_family(accept::rnd(rng), accept::rnd(rng))}},
        {"r4d_family_a", {&P4, r4d_family_a(accept::rnd(rng), accept::rnd(rng), accept::rnd(rng))}},
        {"r4d_family_b", {&P4, r4d_family_b(accept::rnd(rng), accept::rnd(rng))}},
    };
    for (const auto& [name, pr] : cases) {
      const auto& [P, r] = pr;
      const bool a0 = aybe(*P, r).is_zero(), c0 = cybe(*P, r).is_zero();
      if (!(a0 && c0)) ++bad[name];
      t.expect(a0, name + accept::params_str({a, b, c}) + " A(r) != 0");
      t.expect(c0, name + accept::params_str({a, b, c}) + " C(r) != 0");
      const Tensor2 perturbed = r + elementary(P->dim(), 0, 0);
      t.expect(!aybe(*P, perturbed).is_zero() || !cybe(*P, perturbed).is_zero(),
               name + " perturbation leaves zero residuals");
    }
  }
  for (const auto& [name, count] : bad)
    t.note(name + " fails the Yang-Baxter equations in " + std::to_string(count) + "/" + std::to_string(samples) +
           " samples");
  return t.result(2, "fixture tensors solve the PYBE; one-term perturbations do not");
}

inline CriterionResult criterion_3(const AcceptanceConfig& cfg) {
  accept::Tally t;
  std::mt19937_64 rng(cfg.seed + 3);
  for (std::size_t s = 0; s < cfg.at_least(4); ++s)
    for (const auto& [name, P, r] : accept::solving_fixtures(rng)) {
      const Bialgebra b = coboundary_bialgebra(P, r);
      const auto verdict = check_bialgebra(b);
      t.expect(verdict.kind == BialgebraKind::Full, name + " verdict " + bialgebra_kind_name(verdict.kind));
      if (verdict.kind != BialgebraKind::Full) continue;
      const auto [D, B] = manin_from_bialgebra(b);
      const std::size_t n = P.dim();
      const auto [s1, s2] = standard_split(n);
      t.expect(check_manin_triple(D, B, s1, s2), name + " Manin triple");
      const PoissonAlgebra induced = induced_dual(P, r);
      bool same = true;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            same = same && induced.dot()(k, i, j) == D.dot()(n + k, n + i, n + j) &&
                   induced.bracket()(k, i, j) == D.bracket()(n + k, n + i, n + j);
      t.expect(same, name + " induced dual differs from the Manin dual block");
    }
  return t.result(3, "coboundary pipeline: Full bialgebra, Manin triple, induced dual");
}

namespace accept {

struct CorpusEntry {
  std::string name;
  PoissonAlgebra P;
  Tensor2 r;
};

/// Fixtures at random parameters, their perturbations and random sparse tensors.
inline std::vector<CorpusEntry> bialgebra_corpus(const AcceptanceConfig& cfg, std::mt19937_64& rng) {
  std::vector<CorpusEntry> out;
  for (std::size_t s = 0; s < cfg.at_least(6); ++s) {
    const Scalar a = rnd(rng), b = rnd(rng), c = rnd(rng);
    const PoissonAlgebra P3 = example_3d(a, b, c), P4 = example_4d(a, b, c);
    std::vector<CorpusEntry> base = {
        {"r3d_family", P3, r3d_family(rnd(rng), rnd(rng))},
        {"r4d_family_b", P4, r4d_family_b(rnd(rng), rnd(rng))},
        {"r4d_family_a", P4, r4d_family_a(rnd(rng), rnd(rng), rnd(rng))},
        {"r4d_family_a on a=-c", example_4d(a, b, -a), r4d_family_a(rnd(rng), rnd(rng), rnd(rng))},
    };
    for (auto& e : base) {
      const std::size_t n = e.P.dim();
      const std::size_t i = rng() % n, j = rng() % n;
      out.push_back({e.name + " + e" + std::to_string(i + 1) + "(x)e" + std::to_string(j + 1), e.P,
                     e.r + elementary(n, i, j)});
      out.push_back({e.name + " + skew term", e.P, e.r + rnd_nz(rng) * wedge(n, i, (i + 1) % n)});
      out.push_back(std::move(e));
    }
    out.push_back({"random on example_3d", P3, random_sparse(3, rng)});
    out.push_back({"random on example_4d", P4, random_sparse(4, rng)});
    Tensor2 skew = random_sparse(4, rng);
    out.push_back({"random skew on example_4d", P4, skew - tau(skew)});
  }
  return out;
}

}  // namespace accept

inline CriterionResult criterion_4(const AcceptanceConfig& cfg) {
  accept::Tally t;
  std::mt19937_64 rng(cfg.seed + 4);
  const auto corpus = accept::bialgebra_corpus(cfg, rng);
  std::size_t valid = 0;
  for (const auto& [name, P, r] : corpus) {
    const bool six = coboundary_conditions(P, r).all();
    const bool direct = check_bialgebra(coboundary_bialgebra(P, r)).kind != BialgebraKind::Invalid;
    valid += direct;
    t.expect(six == direct, name + ": six conditions " + (six ? "hold" : "fail") + ", direct check " +
                                (direct ? "valid" : "invalid"));
  }
  t.expect(corpus.size() >= 50, "corpus smaller than 50");
  t.expect(valid > 0 && valid < corpus.size(), "corpus does not exercise both verdicts");
  t.note(std::to_string(corpus.size()) + " tensors, " + std::to_string(valid) + " give bialgebras");
  return t.result(4, "six-condition criterion agrees with the direct bialgebra check");
}

inline CriterionResult criterion_5(const AcceptanceConfig& cfg) {
  accept::Tally t;
  std::mt19937_64 rng(cfg.seed + 4);
  std::size_t full = 0;
  for (const auto& [name, P, r] : accept::bialgebra_corpus(cfg, rng)) {
    const Bialgebra b = coboundary_bialgebra(P, r);
    if (check_bialgebra(b).kind != BialgebraKind::Full) continue;
    ++full;
    const MatchedPairPoisson mp = matched_pair_from_bialgebra(b);
    t.expect(check_matched_pair_poisson(mp), name + " matched pair");
    t.expect(matched_pair_double(mp) == manin_from_bialgebra(b).first, name + " double differs from Manin algebra");
  }
  t.expect(full > 0, "no Full bialgebra in corpus");
  t.note(std::to_string(full) + " Full bialgebras");
  return t.result(5, "bialgebra, matched pair and Manin triple constructions agree");
}

inline CriterionResult criterion_6(const AcceptanceConfig& cfg) {
  accept::Tally t;
  std::mt19937_64 rng(cfg.seed + 4);
  std::size_t triples = 0;
  for (const auto& [name, P, r] : accept::bialgebra_corpus(cfg, rng)) {
    const Bialgebra b = coboundary_bialgebra(P, r);
    if (check_bialgebra(b).kind != BialgebraKind::Full) continue;
    const auto [D, B] = manin_from_bialgebra(b);
    const auto [s1, s2] = standard_split(P.dim());
    if (!check_manin_triple(D, B, s1, s2)) continue;
    ++triples;
    t.expect(D.coherent(), name + " double not coherent");
    t.expect(P.coherent(), name + " P not coherent");
    t.expect(dual_algebra(b).coherent(), name + " dual not coherent");
  }
  t.expect(triples > 0, "no Manin triple in corpus");
  t.note(std::to_string(triples) + " Manin triples");
  return t.result(6, "every Manin triple has coherent components");
}

inline CriterionResult criterion_7(const AcceptanceConfig& cfg) {
  accept::Tally t;
  std::mt19937_64 rng(cfg.seed + 7);
  std::vector<std::pair<std::string, std::shared_ptr<const PoissonRep>>> reps;
  const Scalar a = accept::rnd(rng), b = accept::rnd(rng), c = accept::rnd(rng);
  for (const auto& [name, P] : {std::pair{std::string("example_3d"), example_3d(a, b, c)},
                                std::pair{std::string("example_4d"), example_4d(a, b, c)}}) {
    reps.push_back({name + " regular", std::make_shared<const PoissonRep>(regular_rep(P))});
    reps.push_back({name + " dual", std::make_shared<const PoissonRep>(dualize(regular_rep(P)))});
    reps.push_back({name + " tensor", std::make_shared<const PoissonRep>(tensor_quasi_rep(P))});
  }
  const std::size_t samples = cfg.at_least(20);
  for (std::size_t degree : {1, 2})
    for (std::size_t s = 0; s < samples; ++s) {
      const auto& [name, rep] = reps[s % reps.size()];
      const MixedCochain cc = MixedCochain::random(rep, degree, rng);
      t.expect(delta(delta(cc)).is_zero(), name + " degree " + std::to_string(degree) + " delta^2 != 0");
    }
  for (std::size_t s = 0; s < samples; ++s) {
    const auto& [name, rep] = reps[s % reps.size()];
    Vector u(rep->vdim());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = accept::rnd(rng);
    const auto [phi, psi] = one_coboundary_from(rep, u);
    t.expect(is_one_cocycle(phi, psi), name + " coboundary is not a cocycle");
  }
  return t.result(7, "delta^2 = 0 and coboundaries are cocycles");
}

inline CriterionResult criterion_8(const AcceptanceConfig& cfg) {
  accept::Tally t;
  std::mt19937_64 rng(cfg.seed + 8);
  struct Case {
    std::string name;
    LinearOperator T;
    std::shared_ptr<const PoissonRep> rep;
  };
  std::vector<Case> cases;
  for (const auto& [name, d] : accept::dendriform_corpus()) {
    const PrePoisson A = dendriform_pre_poisson(d.succ, d.prec, accept::rnd_nz(rng));
    cases.push_back({"id on " + name, Matrix::identity(A.dim()), std::make_shared<const PoissonRep>(prepoisson_rep(A))});
  }
  for (std::size_t s = 0; s < cfg.at_least(2); ++s) {
    const Scalar a = accept::rnd(rng), b = accept::rnd(rng), c = accept::rnd(rng);
    for (const PoissonAlgebra& P : {example_3d(a, b, c), example_4d(a, b, c)}) {
      auto reg = std::make_shared<const PoissonRep>(regular_rep(P));
      auto found = find_rota_baxter(P, 2);
      for (std::size_t k = 0; k < found.size() && k < 3; ++k)
        cases.push_back({"Rota-Baxter on dim " + std::to_string(P.dim()), found[(k * 7) % found.size()], reg});
      for (std::size_t k = 0; k < 4; ++k) {
        LinearOperator T(P.dim(), P.dim());
        const std::size_t terms = 1 + rng() % 3;
        for (std::size_t e = 0; e < terms; ++e) T(rng() % P.dim(), rng() % P.dim()) = accept::rnd_nz(rng);
        cases.push_back({"random on dim " + std::to_string(P.dim()), T, reg});
      }
      if (!found.empty()) {
        LinearOperator T = found.front();
        T(rng() % P.dim(), rng() % P.dim()) += 1;
        cases.push_back({"perturbed Rota-Baxter", T, reg});
      }
    }
    for (const auto& [name, P, r] : accept::solving_fixtures(rng)) {
      auto dual = std::make_shared<const PoissonRep>(dualize(regular_rep(P)));
      cases.push_back({"r# of " + name, r_sharp(r), dual});
      cases.push_back({"perturbed r# of " + name, r_sharp(r + elementary(P.dim(), 0, 0)), dual});
    }
  }
  std::size_t positive = 0, negative = 0;
  for (const auto& [name, T, rep] : cases) {
    const bool o = is_O_operator(T, *rep);
    const auto [S, bar] = lift_operator(T, *rep);
    const bool pybe = is_pybe(S, bar);
    (o ? positive : negative)++;
    t.expect(o == pybe, name + ": O-operator " + (o ? "yes" : "no") + ", PYBE " + (pybe ? "yes" : "no"));
  }
  t.expect(positive >= 5, "fewer than 5 O-operators");
  t.expect(negative >= 20, "fewer than 20 non-O-operators");
  t.note(std::to_string(positive) + " O-operators, " + std::to_string(negative) + " non-O-operators");
  return t.result(8, "O-operator iff lifted tensor solves the PYBE");
}

inline CriterionResult criterion_9(const AcceptanceConfig& cfg) {
  accept::Tally t;
  std::mt19937_64 rng(cfg.seed + 9);
  std::vector<PoissonAlgebra> hosts;
  std::size_t count = 0;
  for (const auto& [name, d] : accept::dendriform_corpus()) {
    ++count;
    const PrePoisson A = dendriform_pre_poisson(d.succ, d.prec, accept::rnd_nz(rng));
    t.expect(check_pre_poisson(A) == PrePoissonKind::YesCoherent, name + " not coherent pre-Poisson");
    const PoissonRep rep = prepoisson_rep(A);
    const std::size_t n = A.dim();
    const auto [S, r] = lift_operator(Matrix::identity(n), rep);
    Tensor2 canonical(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      canonical(i, n + i) = 1;
      canonical(n + i, i) = -1;
    }
    t.expect(r == canonical, name + " lifted identity is not the canonical tensor");
    t.expect(is_pybe(S, r), name + " canonical tensor fails the PYBE");
    const BilinForm w = omega_from_r(S, r);
    t.expect(check_connes(S, w), name + " omega not a Connes cocycle");
    t.expect(check_symplectic(S, w), name + " omega not symplectic");
    hosts.push_back(S);
  }
  t.expect(count >= 3, "fewer than 3 dendriform algebras");
  const Scalar a = accept::rnd(rng), b = accept::rnd(rng), c = accept::rnd(rng);
  hosts.push_back(example_4d(a, b, c));
  hosts.push_back(example_4d(a, b, -a));
  std::size_t sampled = 0, agree_true = 0;
  while (sampled < cfg.at_least(20)) {
    const PoissonAlgebra& P = hosts[sampled % hosts.size()];
    const std::size_t n = P.dim();
    BilinForm w(n, n);
    // Sparse pairs keep some samples on the positive side.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) {
          w(i, j) = accept::rnd(rng);
          w(j, i) = -w(i, j);
        }
    if (rank(w) != n) continue;
    ++sampled;
    const bool form_side = check_connes(P, w) && check_symplectic(P, w);
    const bool tensor_side = is_pybe(P, r_from_omega(w));
    agree_true += form_side && tensor_side;
    t.expect(form_side == tensor_side, "random omega: forms " + std::string(form_side ? "pass" : "fail") +
                                           ", tensor " + (tensor_side ? "solves" : "does not solve"));
  }
  t.note(std::to_string(count) + " dendriform algebras, " + std::to_string(sampled) + " random forms (" +
         std::to_string(agree_true) + " positive)");
  return t.result(9, "canonical tensor on the pre-Poisson double; forms versus tensors");
}

inline CriterionResult criterion_10(const AcceptanceConfig& cfg) {
  accept::Tally t;
  std::mt19937_64 rng(cfg.seed + 10);
  for (std::size_t s = 0; s < cfg.at_least(2); ++s)
    for (const auto& [name, P, rr] : accept::solving_fixtures(rng)) {
      const Bialgebra b = coboundary_bialgebra(P, rr);
      if (check_bialgebra(b).kind != BialgebraKind::Full) {
        t.expect(false, name + " is not a Full bialgebra");
        continue;
      }
      const auto [D, r] = drinfeld_double_r(b);
      t.expect(aybe(D, r).is_zero() && cybe(D, r).is_zero(), name + " double tensor fails the PYBE");
      const Tensor2 s = sym_part(r);
      t.expect(check_lrad_invariant(D, s), name + " symmetric part not invariant");
      t.expect(check_sym_condition(D, s), name + " symmetric part fails the symmetric condition");

      const auto [DeltaD, deltaD] = coboundary_comults(D, r);
      const PoissonAlgebra Dstar = dual_algebra(DeltaD, deltaD);
      const PoissonAlgebra Pstar = dual_algebra(b);
      const std::size_t n = P.dim(), N = 2 * n;
      BilinearMap dot(N), br(N);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            // D* is read as P (+) P* through x + a -> -B(x + a, -), so the
            // coordinate dual to e*_i carries e_i and the one dual to e_i carries e*_i.
            dot(n + k, n + i, n + j) = -P.dot()(k, i, j);
            br(n + k, n + i, n + j) = -P.bracket()(k, i, j);
            dot(k, i, j) = Pstar.dot()(k, i, j);
            br(k, i, j) = Pstar.bracket()(k, i, j);
          }
      t.expect(Dstar.dot() == dot && Dstar.bracket() == br, name + " dual of the double differs from the display");
    }
  return t.result(10, "Drinfeld double tensor and its dual structure");
}

inline CriterionResult criterion_11(const AcceptanceConfig& cfg) {
  accept::Tally t;
  std::mt19937_64 rng(cfg.seed + 11);
  std::size_t operators = 0;
  auto chain = [&](const std::string& name, const LinearOperator& T, const PoissonRep& rep) {
    ++operators;
    const PrePoisson A = induced_pre_poisson(T, rep);
    const PoissonAlgebra sub = subadjacent(A);
    t.expect(is_homomorphism(T, sub, rep.base()), name + " is not a homomorphism from the sub-adjacent algebra");
  };
  for (std::size_t s = 0; s < cfg.at_least(2); ++s) {
    const Scalar a = accept::rnd(rng), b = accept::rnd(rng), c = accept::rnd(rng);
    for (const PoissonAlgebra& P : {example_3d(a, b, c), example_4d(a, b, c)}) {
      const PoissonRep reg = regular_rep(P);
      const auto found = find_rota_baxter(P, 2);
      for (std::size_t k = 0; k < found.size() && k < 4; ++k) {
        const LinearOperator& B = found[(k * 5) % found.size()];
        chain("Rota-Baxter " + to_string(B), B, reg);
      }
    }
    for (const auto& [name, P, r] : accept::solving_fixtures(rng)) chain("r# of " + name, r_sharp(r), dualize(regular_rep(P)));
  }
  for (const auto& [name, d] : accept::dendriform_corpus()) {
    const Scalar hbar = accept::rnd_nz(rng);
    const PrePoisson A = dendriform_pre_poisson(d.succ, d.prec, hbar);
    chain("id on " + name, Matrix::identity(A.dim()), prepoisson_rep(A));
    t.expect(subadjacent(A) == standard_poisson(d.succ + d.prec, hbar),
             name + " sub-adjacent algebra differs from the standard structure");
  }
  t.note(std::to_string(operators) + " operators");
  return t.result(11, "sub-adjacency chain and homomorphism identities");
}

// ---------------------------------------------------------------------------

using CriterionFn = CriterionResult (*)(const AcceptanceConfig&);

inline const std::vector<CriterionFn>& all_criteria() {
  static const std::vector<CriterionFn> fns = {criterion_1, criterion_2, criterion_3, criterion_4,
                                               criterion_5, criterion_6, criterion_7, criterion_8,
                                               criterion_9, criterion_10, criterion_11};
  return fns;
}

inline const std::map<std::string, std::vector<int>>& suites() {
  static const std::map<std::string, std::vector<int>> s = {
      {"paper-examples", {1, 2, 3}},
      {"yang-baxter", {2, 4, 9}},
      {"bialgebra", {3, 5, 6, 10}},
      {"cohomology", {7}},
      {"operators", {8, 11}},
      {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}},
  };
  return s;
}

inline CriterionResult run_criterion(int id, const AcceptanceConfig& cfg) {
  require(id >= 1 && id <= static_cast<int>(all_criteria().size()), Errc::DimensionMismatch, "criterion id");
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = all_criteria()[id - 1](cfg);
  } catch (const Error& e) {
    r.id = id;
    r.pass = false;
    r.detail = std::string("error ") + std::string(errc_name(e.code())) + ": " + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace ncp
