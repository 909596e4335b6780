#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncpoisson/acceptance.hpp"
#include "ncpoisson/manifest.hpp"

namespace ncp {

// ---------------------------------------------------------------------------
// verify

struct VerifyResult {
  std::string law;
  bool pass = false;
  LawReport report;
  std::vector<std::string> notes;
};

namespace detail {

inline void need_kind(const Document& doc, const std::string& what, const std::vector<Kind>& kinds) {
  if (std::find(kinds.begin(), kinds.end(), doc.kind) != kinds.end()) return;
  std::string accepted;
  for (Kind k : kinds) accepted += std::string(accepted.empty() ? "" : ", ") + kind_name(k);
  fail(Errc::UnknownLaw, what + " does not apply to kind " + kind_name(doc.kind) + " (accepts " + accepted + ")");
}

inline PoissonAlgebra ambient(const Document& doc) {
  require(doc.algebra.has_value(), Errc::ParseError, std::string("kind ") + kind_name(doc.kind) + " without an algebra");
  return doc.algebra->build();
}

inline void report_nonzero(const Tensor3& t, const char* law, LawReport& rep) {
  for (std::size_t i = 0; i < t.dim0(); ++i)
    for (std::size_t j = 0; j < t.dim1(); ++j)
      for (std::size_t k = 0; k < t.dim2(); ++k)
        if (!is_zero(t(i, j, k))) rep.add(law, {i, j, k}, to_string(t(i, j, k)), "0");
}

using LawFn = std::function<void(const Document&, VerifyResult&)>;

inline const std::map<std::string, LawFn>& law_registry() {
  static const std::map<std::string, LawFn> registry = {
      {"associative",
       [](const Document& d, VerifyResult& r) {
         need_kind(d, r.law, {Kind::Algebra, Kind::Bilinear});
         report_associative(d.kind == Kind::Bilinear ? *d.bilinear : d.algebra->dot, r.report);
       }},
      {"lie",
       [](const Document& d, VerifyResult& r) {
         need_kind(d, r.law, {Kind::Algebra, Kind::Bilinear});
         report_lie(d.kind == Kind::Bilinear ? *d.bilinear : d.algebra->bracket, r.report);
       }},
      {"leibniz",
       [](const Document& d, VerifyResult& r) {
         need_kind(d, r.law, {Kind::Algebra});
         report_leibniz(d.algebra->dot, d.algebra->bracket, r.report);
       }},
      {"coherent",
       [](const Document& d, VerifyResult& r) {
         need_kind(d, r.law, {Kind::Algebra});
         report_coherent(d.algebra->dot, d.algebra->bracket, r.report);
       }},
      {"quasi-rep",
       [](const Document& d, VerifyResult& r) {
         need_kind(d, r.law, {Kind::Rep, Kind::Operator});
         const PoissonAlgebra p = ambient(d);
         report_quasi_rep(p, *d.rep, r.report);
         if (r.report.ok()) r.notes.push_back(std::string("kind: ") + rep_kind_name(classify_rep(PoissonRep(p, *d.rep))));
       }},
      {"matched-pair",
       [](const Document& d, VerifyResult& r) {
         need_kind(d, r.law, {Kind::MatchedPair});
         report_matched_pair_poisson(d.matched->build(), r.report);
       }},
      {"manin",
       [](const Document& d, VerifyResult& r) {
         need_kind(d, r.law, {Kind::Manin});
         report_manin_triple(ambient(d), *d.form, *d.split1, *d.split2, r.report);
       }},
      {"bialgebra",
       [](const Document& d, VerifyResult& r) {
         need_kind(d, r.law, {Kind::Bialgebra});
         const Bialgebra b{ambient(d), *d.Delta, *d.delta};
         check_comult_shapes(b);
         if (!b.P.coherent()) r.report.add_note("coherent", "algebra is not coherent");
         if (!b.delta.images_skew()) r.report.add_note("delta-skew", "delta is not skew-symmetric");
         for (auto check : {report_pba1, report_pba2, report_pba3, report_pba4, report_pba5}) check(b, r.report);
         const auto verdict = check_bialgebra(b);
         if (verdict.kind == BialgebraKind::Pseudo) r.report.add_note("dual-coherent", verdict.reason);
         if (verdict.kind == BialgebraKind::Invalid && r.report.ok()) r.report.add_note("dual", verdict.reason);
         r.notes.push_back(std::string("kind: ") + bialgebra_kind_name(verdict.kind));
       }},
      {"pybe",
       [](const Document& d, VerifyResult& r) {
         need_kind(d, r.law, {Kind::Tensor2});
         const PoissonAlgebra p = ambient(d);
         if (!p.coherent()) r.report.add_note("coherent", "algebra is not coherent");
         report_nonzero(aybe(p, *d.tensor), "aybe", r.report);
         report_nonzero(cybe(p, *d.tensor), "cybe", r.report);
       }},
      {"dendriform",
       [](const Document& d, VerifyResult& r) {
         need_kind(d, r.law, {Kind::PrePoisson});
         report_dendriform(d.pre->succ, d.pre->prec, r.report);
       }},
      {"prelie",
       [](const Document& d, VerifyResult& r) {
         need_kind(d, r.law, {Kind::PrePoisson, Kind::Bilinear});
         report_prelie(d.kind == Kind::Bilinear ? *d.bilinear : d.pre->ast, r.report);
       }},
      {"prepoisson",
       [](const Document& d, VerifyResult& r) {
         need_kind(d, r.law, {Kind::PrePoisson});
         report_dendriform(d.pre->succ, d.pre->prec, r.report);
         report_prelie(d.pre->ast, r.report);
         report_pre_poisson(*d.pre, r.report);
         if (r.report.ok()) r.notes.push_back(std::string("kind: ") + pre_poisson_kind_name(check_pre_poisson(*d.pre)));
       }},
      {"o-operator",
       [](const Document& d, VerifyResult& r) {
         need_kind(d, r.law, {Kind::Operator});
         report_O_operator(*d.op, PoissonRep(ambient(d), *d.rep), r.report);
       }},
      {"rota-baxter",
       [](const Document& d, VerifyResult& r) {
         need_kind(d, r.law, {Kind::Operator});
         const PoissonAlgebra p = ambient(d);
         require(d.op->rows() == d.op->cols(), Errc::DimensionMismatch, "a Rota-Baxter operator is square");
         if (!(*d.rep == regular_data(*d.algebra))) r.notes.push_back("checked against the regular representation");
         report_O_operator(*d.op, regular_rep(p), r.report);
       }},
      {"connes",
       [](const Document& d, VerifyResult& r) {
         need_kind(d, r.law, {Kind::Form});
         report_connes(ambient(d), *d.form, r.report);
       }},
      {"symplectic",
       [](const Document& d, VerifyResult& r) {
         need_kind(d, r.law, {Kind::Form});
         report_symplectic(ambient(d), *d.form, r.report);
       }},
  };
  return registry;
}

}  // namespace detail

inline std::vector<std::string> law_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : detail::law_registry()) out.push_back(name);
  return out;
}

/// Structural failures (an invalid ambient algebra, a non-skew form, ...)
/// propagate as Error; the caller decides how to present them.
inline VerifyResult verify(const Document& doc, const std::string& law) {
  const auto& reg = detail::law_registry();
  const auto it = reg.find(law);
  if (it == reg.end()) fail(Errc::UnknownLaw, "unknown law \"" + law + "\"");
  VerifyResult r;
  r.law = law;
  it->second(doc, r);
  r.pass = r.report.ok();
  return r;
}

inline std::string format_violation(const Violation& v) {
  if (v.at.empty()) return v.law + ": " + v.lhs;
  std::string s = v.law + " (";
  for (std::size_t i = 0; i < v.at.size(); ++i) s += (i ? "," : "") + std::to_string(v.at[i]);
  return s + "): " + v.lhs + " != " + v.rhs;
}

inline std::string format_report(const VerifyResult& r) {
  std::string out = r.law + ": " + (r.pass ? "pass" : "fail");
  if (!r.pass) out += " (" + std::to_string(r.report.violations().size()) + " violations)";
  out += "\n";
  for (const auto& n : r.notes) out += "  " + n + "\n";
  for (const auto& v : r.report.violations()) out += "  " + format_violation(v) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// build

namespace detail {

inline Scalar hbar_of(const Params& params) {
  const auto it = params.find("hbar");
  return it == params.end() ? Scalar(1) : it->second;
}

inline const BilinearMap& product_of(const Document& d) {
  return d.kind == Kind::Bilinear ? *d.bilinear : d.algebra->dot;
}

inline Bialgebra bialgebra_of(const Document& d) { return {ambient(d), *d.Delta, *d.delta}; }

inline PoissonRep rep_of(const Document& d) { return PoissonRep(ambient(d), *d.rep); }

struct Construction {
  std::vector<Kind> accepts;
  std::function<Document(const Document&, const Params&)> run;
};

inline const std::map<std::string, Construction>& construction_registry() {
  static const std::map<std::string, Construction> registry = {
      {"semidirect",
       {{Kind::Rep}, [](const Document& d, const Params&) { return algebra_document(semidirect(rep_of(d))); }}},
      {"double",
       {{Kind::MatchedPair, Kind::Bialgebra},
        [](const Document& d, const Params&) {
          if (d.kind == Kind::Bialgebra) return algebra_document(manin_from_bialgebra(bialgebra_of(d)).first);
          return algebra_document(matched_pair_double(d.matched->build()));
        }}},
      {"dual",
       {{Kind::Bialgebra, Kind::Rep},
        [](const Document& d, const Params&) {
          if (d.kind == Kind::Rep) return rep_document(dualize(rep_of(d)));
          return algebra_document(dual_algebra(bialgebra_of(d)));
        }}},
      {"coboundary-comults",
       {{Kind::Tensor2},
        [](const Document& d, const Params&) {
          return bialgebra_document(coboundary_bialgebra(ambient(d), *d.tensor));
        }}},
      {"drinfeld-double-r",
       {{Kind::Bialgebra},
        [](const Document& d, const Params&) {
          auto [D, r] = drinfeld_double_r(bialgebra_of(d));
          return tensor_document(D, r);
        }}},
      {"manin",
       {{Kind::Bialgebra},
        [](const Document& d, const Params&) {
          const Bialgebra b = bialgebra_of(d);
          auto [D, B] = manin_from_bialgebra(b);
          auto [s1, s2] = standard_split(b.P.dim());
          return manin_document(D, B, s1, s2);
        }}},
      {"matched-pair",
       {{Kind::Bialgebra},
        [](const Document& d, const Params&) {
          const Bialgebra b = bialgebra_of(d);
          require(check_bialgebra(b).kind == BialgebraKind::Full, Errc::NotFullBialgebra,
                  "matched pair needs a Poisson bialgebra");
          return matched_pair_document(matched_pair_from_bialgebra(b));
        }}},
      {"subadjacent",
       {{Kind::PrePoisson}, [](const Document& d, const Params&) { return algebra_document(subadjacent(*d.pre)); }}},
      {"dendriform-prepoisson",
       {{Kind::PrePoisson},
        [](const Document& d, const Params& p) {
          return prepoisson_document(dendriform_pre_poisson(d.pre->succ, d.pre->prec, hbar_of(p)));
        }}},
      {"induced-prepoisson",
       {{Kind::Operator},
        [](const Document& d, const Params&) { return prepoisson_document(induced_pre_poisson(*d.op, rep_of(d))); }}},
      {"lift-operator",
       {{Kind::Operator},
        [](const Document& d, const Params&) {
          auto [S, bar] = lift_operator(*d.op, rep_of(d));
          return tensor_document(S, bar);
        }}},
      {"standard-poisson",
       {{Kind::Algebra, Kind::Bilinear},
        [](const Document& d, const Params& p) {
          return algebra_document(standard_poisson(product_of(d), hbar_of(p)));
        }}},
      {"commutator",
       {{Kind::Algebra, Kind::Bilinear},
        [](const Document& d, const Params&) { return bilinear_document(commutator(product_of(d))); }}},
      {"regular-rep",
       {{Kind::Algebra}, [](const Document& d, const Params&) { return rep_document(regular_rep(ambient(d))); }}},
      {"omega",
       {{Kind::Tensor2},
        [](const Document& d, const Params&) {
          const PoissonAlgebra p = ambient(d);
          return form_document(p, omega_from_r(p, *d.tensor));
        }}},
  };
  return registry;
}

}  // namespace detail

inline std::vector<std::string> construction_names() {
  std::vector<std::string> out;
  for (const auto& [name, c] : detail::construction_registry()) out.push_back(name);
  return out;
}

/// Every construction takes one manifest. `params` supplies hbar (default 1).
inline Document build(const std::string& construction, const std::vector<Document>& inputs, const Params& params = {}) {
  const auto& reg = detail::construction_registry();
  const auto it = reg.find(construction);
  if (it == reg.end()) fail(Errc::UnknownLaw, "unknown construction \"" + construction + "\"");
  require(inputs.size() == 1, Errc::ParseError,
          construction + " takes exactly one input, got " + std::to_string(inputs.size()));
  detail::need_kind(inputs.front(), construction, it->second.accepts);
  return it->second.run(inputs.front(), params);
}

// ---------------------------------------------------------------------------
// suite

inline std::vector<CriterionResult> run_suite(const std::string& name, const AcceptanceConfig& cfg) {
  const auto& s = suites();
  const auto it = s.find(name);
  if (it == s.end()) fail(Errc::UnknownLaw, "unknown suite \"" + name + "\"");
  std::vector<CriterionResult> out;
  for (int id : it->second) out.push_back(run_criterion(id, cfg));
  return out;
}

inline Json suite_summary(const std::string& name, const AcceptanceConfig& cfg,
                          const std::vector<CriterionResult>& results) {
  Json j;
  j["suite"] = name;
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  std::size_t passed = 0;
  double seconds = 0;
  Json list = Json::array();
  for (const auto& r : results) {
    passed += r.pass;
    seconds += r.seconds;
    Json e;
    e["id"] = r.id;
    e["title"] = r.title;
    e["pass"] = r.pass;
    e["checks"] = r.checks;
    e["seconds"] = r.seconds;
    if (!r.detail.empty()) e["detail"] = r.detail;
    list.push_back(std::move(e));
  }
  j["passed"] = passed;
  j["failed"] = results.size() - passed;
  j["seconds"] = seconds;
  j["criteria"] = std::move(list);
  return j;
}

}  // namespace ncp
