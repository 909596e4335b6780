#include <catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "support.hpp"

using namespace ncp;
namespace fs = std::filesystem;

namespace {

const std::string kCli = NCP_CLI;
const std::string kFixtures = NCP_FIXTURES;

std::string fixture(const std::string& name) { return kFixtures + "/" + name + ".json"; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Document load(const std::string& name, const Params& p = {}) { return parse_document(slurp(fixture(name)), p); }

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  FILE* pipe = popen((kCli + " " + args + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("ncp_commands_" + std::to_string(getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

Errc error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::ParseError;
}

/// One zero manifest per kind, paired with the laws that apply to it.
std::vector<std::pair<Document, std::vector<std::string>>> zero_documents() {
  const std::size_t n = 3;
  const PoissonAlgebra Z = abelian(n);
  std::vector<std::pair<Document, std::vector<std::string>>> out;
  out.push_back({algebra_document(Z), {"associative", "lie", "leibniz", "coherent"}});
  out.push_back({bilinear_document(BilinearMap(n)), {"associative", "lie", "prelie"}});
  out.push_back({rep_document(PoissonRep(Z, RepData::zero(n, 2))), {"quasi-rep"}});
  out.push_back({tensor_document(Z, Matrix(n, n)), {"pybe"}});
  out.push_back({bialgebra_document(Bialgebra{Z, Comult(n), Comult(n)}), {"bialgebra"}});
  out.push_back({operator_document(Matrix(n, n), regular_rep(Z)), {"quasi-rep", "o-operator", "rota-baxter"}});
  out.push_back({prepoisson_document(PrePoisson::zero(n)), {"dendriform", "prelie", "prepoisson"}});
  const auto [s1, s2] = standard_split(n);
  out.push_back({manin_document(abelian(2 * n), standard_form(n), s1, s2), {"manin"}});
  out.push_back(
      {matched_pair_document(MatchedPairPoisson{Z, abelian(2), RepData::zero(n, 2), RepData::zero(2, n)}),
       {"matched-pair"}});
  return out;
}

}  // namespace

TEST_CASE("verify on the fixtures", "[commands]") {
  for (const char* law : {"associative", "lie", "leibniz", "coherent"}) {
    INFO(law);
    CHECK(verify(load("poisson3d"), law).pass);
    CHECK(verify(load("poisson4d"), law).pass);
    CHECK(verify(load("upper_triangular"), law).pass);
  }
  CHECK(verify(load("r3d"), "pybe").pass);
  CHECK(verify(load("r4d_b"), "pybe").pass);
  CHECK(verify(load("bialgebra3d"), "bialgebra").pass);
  CHECK(verify(load("rb_upper"), "rota-baxter").pass);
  CHECK(verify(load("rb_upper"), "o-operator").pass);
  CHECK(verify(load("dendriform1"), "dendriform").pass);
}

TEST_CASE("verify reports every violated tuple with exact values", "[commands]") {
  const Document d = load("r3d_perturbed");
  const VerifyResult r = verify(d, "pybe");
  CHECK_FALSE(r.pass);
  REQUIRE_FALSE(r.report.violations().empty());

  const PoissonAlgebra P = d.algebra->build();
  const Tensor3 A = aybe(P, *d.tensor), C = cybe(P, *d.tensor);
  std::size_t nonzero = 0;
  for (const Tensor3* t : {&A, &C})
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) nonzero += !is_zero((*t)(i, j, k));
  CHECK(r.report.violations().size() == nonzero);
  for (const Violation& v : r.report.violations()) {
    REQUIRE(v.at.size() == 3);
    const Tensor3& t = v.law == "aybe" ? A : C;
    CHECK(v.lhs == to_string(t(v.at[0], v.at[1], v.at[2])));
    CHECK(v.rhs == "0");
  }

  const std::string text = format_report(r);
  CHECK(text.rfind("pybe: fail (" + std::to_string(nonzero) + " violations)\n", 0) == 0);
  CHECK(text.find(format_violation(r.report.violations().front())) != std::string::npos);
  CHECK(format_report(verify(load("r3d"), "pybe")) == "pybe: pass\n");
}

TEST_CASE("zero manifests pass every applicable law", "[commands]") {
  std::set<std::string> covered;
  for (const auto& [doc, laws] : zero_documents()) {
    CHECK(parse_document(serialize(doc)) == doc);
    for (const auto& law : laws) {
      INFO(kind_name(doc.kind) << " " << law);
      CHECK(verify(doc, law).pass);
      covered.insert(law);
    }
  }
  for (const auto& law : law_names())
    if (law != "connes" && law != "symplectic") CHECK(covered.count(law) == 1);
}

TEST_CASE("form laws need a nondegenerate form", "[commands]") {
  CHECK(error_of([] { verify(form_document(abelian(2), Matrix(2, 2)), "symplectic"); }) == Errc::SingularMatrix);
  CHECK(error_of([] { verify(form_document(abelian(2), Matrix(2, 2)), "connes"); }) == Errc::SingularMatrix);
  Matrix w(2, 2);
  w(0, 1) = 1;
  w(1, 0) = -1;
  CHECK(verify(form_document(abelian(2), w), "symplectic").pass);
  CHECK(verify(form_document(abelian(2), w), "connes").pass);
}

TEST_CASE("unknown laws and wrong kinds", "[commands]") {
  CHECK(error_of([] { verify(load("zero3"), "no-such-law"); }) == Errc::UnknownLaw);
  CHECK(error_of([] { verify(load("zero3"), "pybe"); }) == Errc::UnknownLaw);
  CHECK(error_of([] { verify(load("r3d"), "dendriform"); }) == Errc::UnknownLaw);
  const auto names = law_names();
  CHECK(names.size() == 16);
}

TEST_CASE("build constructions", "[commands]") {
  // standard-poisson from the 3-dim product: {e1,e2} = e1e2 - e2e1 = 2 e3
  const Document sp = build("standard-poisson", {load("poisson3d")}, {{"hbar", Scalar(1)}});
  CHECK(sp.kind == Kind::Algebra);
  CHECK(sp.algebra->bracket(2, 0, 1) == 2);
  CHECK(sp.algebra->bracket(2, 1, 0) == -2);
  CHECK(sp.algebra->build() == standard_poisson(example_3d(1, 2, 3).dot(), 1));
  const Document sp2 = build("standard-poisson", {load("poisson3d")}, {{"hbar", Scalar(1, 3)}});
  CHECK(sp2.algebra->bracket(2, 0, 1) == Scalar(2, 3));

  const Document sub = build("subadjacent", {prepoisson_document(PrePoisson::zero(3))});
  CHECK(sub.algebra->build() == abelian(3));

  const Document dd = build("drinfeld-double-r", {load("bialgebra3d")});
  CHECK(dd.kind == Kind::Tensor2);
  CHECK(dd.algebra->dim() == 6);
  CHECK(verify(dd, "pybe").pass);

  const Document r = load("r3d");
  const Bialgebra b = coboundary_bialgebra(r.algebra->build(), *r.tensor);
  const Document cc = build("coboundary-comults", {r});
  CHECK(*cc.Delta == b.Delta);
  CHECK(*cc.delta == b.delta);
  CHECK(verify(cc, "bialgebra").pass);
  CHECK(build("double", {cc}).algebra->build() == manin_from_bialgebra(b).first);
  CHECK(build("dual", {cc}).algebra->build() == dual_algebra(b));
  CHECK(verify(build("manin", {cc}), "manin").pass);
  const Document mp = build("matched-pair", {cc});
  CHECK(verify(mp, "matched-pair").pass);
  CHECK(build("double", {mp}).algebra->build() == manin_from_bialgebra(b).first);

  const Document reg = build("regular-rep", {load("poisson3d")});
  CHECK(*reg.rep == regular_rep(example_3d(1, 2, 3)).data());
  CHECK(*build("dual", {reg}).rep == dualize(regular_rep(example_3d(1, 2, 3))).data());
  CHECK(build("semidirect", {reg}).algebra->dim() == 6);
  CHECK(*build("commutator", {load("poisson3d")}).bilinear == commutator(example_3d(1, 2, 3).dot()));

  const Document rb = load("rb_upper");
  const PrePoisson induced = induced_pre_poisson(*rb.op, PoissonRep(rb.algebra->build(), *rb.rep));
  CHECK(*build("induced-prepoisson", {rb}).pre == induced);
  CHECK(verify(build("lift-operator", {rb}), "pybe").pass == verify(rb, "o-operator").pass);
  CHECK(*build("dendriform-prepoisson", {load("dendriform1")}).pre ==
        dendriform_pre_poisson(load("dendriform1").pre->succ, load("dendriform1").pre->prec, 1));
}

TEST_CASE("build errors", "[commands]") {
  CHECK(error_of([] { build("no-such-construction", {load("zero3")}); }) == Errc::UnknownLaw);
  CHECK(error_of([] { build("semidirect", {load("zero3")}); }) == Errc::UnknownLaw);
  CHECK(error_of([] { build("commutator", {}); }) == Errc::ParseError);
  CHECK(error_of([] { build("commutator", {load("zero3"), load("zero3")}); }) == Errc::ParseError);
  CHECK(error_of([] { build("semidirect", {rep_document(tensor_quasi_rep(example_3d(1, 1, 1)))}); }) ==
        Errc::RepNotFull);
  CHECK(error_of([] { build("omega", {tensor_document(example_3d(1, 2, 3), r3d_family(1, 1))}); }) ==
        Errc::SingularMatrix);
}

TEST_CASE("build output is deterministic", "[commands][property]") {
  for (const auto& name : construction_names()) {
    for (const char* input : {"poisson3d", "r3d", "bialgebra3d", "rb_upper", "dendriform1", "upper_triangular"}) {
      std::string first;
      try {
        first = serialize(build(name, {load(input)}));
      } catch (const Error&) {
        continue;
      }
      INFO(name << " " << input);
      CHECK(serialize(build(name, {load(input)})) == first);
      CHECK(serialize(parse_document(first)) == first);
    }
  }
}

TEST_CASE("suites", "[commands]") {
  const AcceptanceConfig cfg;
  const auto cohomology = run_suite("cohomology", cfg);
  REQUIRE(cohomology.size() == 1);
  CHECK(cohomology[0].id == 7);
  CHECK(cohomology[0].pass);

  const auto pe = run_suite("paper-examples", cfg);
  REQUIRE(pe.size() == 3);
  const Json summary = suite_summary("paper-examples", cfg, pe);
  CHECK(summary["suite"] == "paper-examples");
  CHECK(summary["seed"] == cfg.seed);
  CHECK(summary["criteria"].size() == 3);
  std::size_t passed = 0;
  for (std::size_t i = 0; i < pe.size(); ++i) {
    CHECK(summary["criteria"][i]["id"] == pe[i].id);
    CHECK(summary["criteria"][i]["pass"] == pe[i].pass);
    CHECK(pe[i].pass == run_criterion(pe[i].id, cfg).pass);
    passed += pe[i].pass;
  }
  CHECK(summary["passed"] == passed);
  CHECK(summary["failed"] == pe.size() - passed);

  for (const char* name : {"yang-baxter", "operators", "bialgebra", "cohomology", "paper-examples"})
    CHECK(suites().count(name) == 1);
  CHECK(error_of([] { run_suite("nope", AcceptanceConfig{}); }) == Errc::UnknownLaw);
}

TEST_CASE("suite results depend only on the seed", "[commands][property]") {
  AcceptanceConfig a;
  a.seed = 7;
  const auto x = run_suite("operators", a), y = run_suite("operators", a);
  REQUIRE(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(x[i].pass == y[i].pass);
    CHECK(x[i].checks == y[i].checks);
    CHECK(x[i].detail == y[i].detail);
  }
  AcceptanceConfig more = a;
  more.samples = 40;
  for (const auto& r : run_suite("cohomology", more)) CHECK(r.checks >= run_criterion(r.id, a).checks);
}

TEST_CASE("cli verify exit codes", "[cli]") {
  CHECK(run("verify " + fixture("poisson3d") + " --law coherent").code == 0);
  CHECK(run("verify " + fixture("poisson3d") + " --law coherent").out == "coherent: pass\n");
  CHECK(run("verify " + fixture("poisson4d") + " --law leibniz").code == 0);
  CHECK(run("verify " + fixture("r3d") + " --law pybe").code == 0);
  CHECK(run("verify " + fixture("r4d_b") + " --law pybe").code == 0);

  const Run bad = run("verify " + fixture("r3d_perturbed") + " --law pybe");
  CHECK(bad.code == 1);
  CHECK(bad.out == format_report(verify(load("r3d_perturbed"), "pybe")));
  CHECK(bad.out.find("(0,1,2)") != std::string::npos);

  {
    TempDir tmp;
    Document broken = load("poisson3d");
    broken.algebra->dot(0, 0, 0) = 1;
    const std::string path = tmp.file("broken.json");
    std::ofstream(path) << serialize(broken);
    CHECK(run("verify " + path + " --law associative").code == 1);
    CHECK(run("verify " + path + " --law lie").code == 0);
  }
  for (const char* law : {"associative", "lie", "leibniz", "coherent"})
    CHECK(run("verify " + fixture("zero3") + " --law " + law).code == 0);

  CHECK(run("verify " + fixture("zero3") + " --law nope").code == 2);
  CHECK(run("verify " + fixture("zero3") + " --law pybe").code == 2);
  CHECK(run("verify /nonexistent.json --law coherent").code == 2);
  CHECK(run("verify " + fixture("poisson3d")).code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("cli parameters", "[cli]") {
  CHECK(run("verify " + fixture("poisson3d") + " --law coherent --param a=1/2 --param b=-3").code == 0);
  CHECK(run("verify " + fixture("r3d") + " --law pybe --param k13=7/5 --param k23=0").code == 0);
  CHECK(run("verify " + fixture("poisson3d") + " --law coherent --param a=x").code == 2);
  CHECK(run("verify " + fixture("poisson3d") + " --law coherent --param a").code == 2);
  CHECK(run("verify " + fixture("poisson3d") + " --law coherent --param a=1/0").code == 2);

  const Run a = run("build standard-poisson " + fixture("upper_triangular") + " -o - --param hbar=2/3");
  REQUIRE(a.code == 0);
  CHECK(parse_document(a.out) == build("standard-poisson", {load("upper_triangular")}, {{"hbar", Scalar(2, 3)}}));
}

TEST_CASE("cli build", "[cli]") {
  TempDir tmp;
  const std::string out1 = tmp.file("dd1.json"), out2 = tmp.file("dd2.json");
  REQUIRE(run("build drinfeld-double-r " + fixture("bialgebra3d") + " -o " + out1).code == 0);
  REQUIRE(run("build drinfeld-double-r " + fixture("bialgebra3d") + " -o " + out2).code == 0);
  CHECK(slurp(out1) == slurp(out2));
  CHECK(slurp(out1) == serialize(build("drinfeld-double-r", {load("bialgebra3d")})));
  const Run v = run("verify " + out1 + " --law pybe");
  CHECK(v.code == 0);
  CHECK(parse_document(slurp(out1)).algebra->dim() == 6);

  const std::string sp = tmp.file("sp.json");
  REQUIRE(run("build standard-poisson " + fixture("poisson3d") + " -o " + sp + " --param hbar=1").code == 0);
  CHECK(parse_document(slurp(sp)).algebra->bracket(2, 0, 1) == 2);
  CHECK(run("verify " + sp + " --law coherent").code == 0);

  const std::string zp = tmp.file("zero_pre.json"), zs = tmp.file("zero_sub.json");
  {
    std::ofstream f(zp);
    f << serialize(prepoisson_document(PrePoisson::zero(2)));
  }
  REQUIRE(run("build subadjacent " + zp + " -o " + zs).code == 0);
  CHECK(parse_document(slurp(zs)).algebra->build() == abelian(2));

  CHECK(run("build nope " + fixture("poisson3d") + " -o -").code == 2);
  CHECK(run("build semidirect " + fixture("poisson3d") + " -o -").code == 2);
  CHECK(run("build commutator " + fixture("poisson3d")).code == 2);
  CHECK(run("build semidirect " + fixture("poisson3d") + " -o " + tmp.file("missing/dir/x.json")).code == 2);
  CHECK(run("build omega " + fixture("r3d") + " -o -").code == 1);
}

TEST_CASE("cli suites", "[cli]") {
  const Run c = run("suite cohomology --seed 11 --samples 3");
  CHECK(c.code == 0);
  const Json j = Json::parse(c.out);
  CHECK(j["suite"] == "cohomology");
  CHECK(j["seed"] == 11);
  CHECK(j["failed"] == 0);
  CHECK(j["criteria"][0]["id"] == 7);
  CHECK(j["criteria"][0]["pass"] == true);

  CHECK(run("suite nope").code == 2);
  CHECK(run("suite cohomology --seed x").code == 2);

  const Run pe = run("suite paper-examples");
  const Json pj = Json::parse(pe.out);
  CHECK(pe.code == (pj["failed"] == 0 ? 0 : 1));
  for (const auto& r : pj["criteria"]) CHECK(r["pass"] == run_criterion(r["id"].get<int>(), AcceptanceConfig{}).pass);
}
