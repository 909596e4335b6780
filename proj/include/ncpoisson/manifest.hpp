#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ncpoisson/bialgebra.hpp"
#include "ncpoisson/operators.hpp"

// File format: JSON objects with a "kind" tag and sparse entry lists.
//   bilinear maps   [k, i, j, num, den]   meaning  e_i o e_j  has  num/den  on e_k
//   matrices        [row, col, num, den]
//   action families [x, row, col, num, den]  meaning  (M_x)(row, col)
//   comults         [x, i, j, num, den]  meaning  Delta(e_x) has num/den on e_i (x) e_j
// `num` may be a string expression over the names bound in "params"; `den`
// is a nonzero integer. Omitted entries are zero.

namespace ncp {

using Json = nlohmann::ordered_json;
using Params = std::map<std::string, Scalar>;

// ---------------------------------------------------------------------------
// Parameter expressions

namespace detail {

class ExprParser {
 public:
  ExprParser(const std::string& text, const Params& params) : s_(text), params_(params) {}

  Scalar parse() {
    Scalar v = sum();
    skip();
    if (pos_ != s_.size()) bad("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void bad(const std::string& why) const { fail(Errc::ParseError, "expression \"" + s_ + "\": " + why); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar sum() {
    Scalar v = product();
    for (;;) {
      if (eat('+'))
        v += product();
      else if (eat('-'))
        v -= product();
      else
        return v;
    }
  }

  Scalar product() {
    Scalar v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        Scalar d = unary();
        if (is_zero(d)) bad("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    if (eat('(')) {
      Scalar v = sum();
      if (!eat(')')) bad("missing ')'");
      return v;
    }
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(mpz_class(s_.substr(start, pos_ - start)));
    }
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) bad(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end");
    const std::string name = s_.substr(start, pos_ - start);
    auto it = params_.find(name);
    if (it == params_.end()) bad("unbound parameter '" + name + "'");
    return it->second;
  }

  const std::string& s_;
  const Params& params_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Scalar eval_expr(const std::string& text, const Params& params = {}) {
  return detail::ExprParser(text, params).parse();
}

/// "name=p/q" as given on the command line.
inline std::pair<std::string, Scalar> parse_binding(const std::string& text) {
  const auto eq = text.find('=');
  require(eq != std::string::npos && eq > 0, Errc::ParseError, "parameter binding must look like name=p/q: " + text);
  return {text.substr(0, eq), eval_expr(text.substr(eq + 1))};
}

// ---------------------------------------------------------------------------
// Reading

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), Errc::ParseError, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline std::size_t read_index(const Json& j, std::size_t bound, const char* what) {
  require(j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0), Errc::ParseError,
          std::string(what) + " must be a nonnegative integer");
  const auto v = j.get<unsigned long long>();
  require(v < bound, Errc::ParseError,
          std::string(what) + " " + std::to_string(v) + " out of range (dimension " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(v);
}

inline Scalar read_number(const Json& j, const Params& params) {
  if (j.is_number_integer()) return Scalar(mpz_class(j.dump()));
  if (j.is_string()) return eval_expr(j.get<std::string>(), params);
  fail(Errc::ParseError, "entry value must be an integer or an expression string, got " + j.dump());
}

inline Scalar read_value(const Json& num, const Json& den, const Params& params) {
  require(den.is_number_integer() || den.is_string(), Errc::ParseError, "denominator must be an integer");
  const Scalar d = read_number(den, params);
  require(!is_zero(d), Errc::ParseError, "zero denominator");
  return read_number(num, params) / d;
}

inline std::size_t read_dim(const Json& j, const char* key = "dim") {
  const Json& d = field(j, key);
  require(d.is_number_integer() && d.get<long long>() >= 0, Errc::ParseError,
          std::string("\"") + key + "\" must be a nonnegative integer");
  return d.get<std::size_t>();
}

/// Each entry is `arity` indices followed by num and den.
template <class F>
void for_entries(const Json& list, std::size_t arity, std::initializer_list<std::size_t> bounds, const Params& params,
                 F&& put) {
  require(list.is_array(), Errc::ParseError, "entries must be an array");
  for (const Json& e : list) {
    require(e.is_array() && e.size() == arity + 2, Errc::ParseError,
            "entry " + e.dump() + " must have " + std::to_string(arity + 2) + " components");
    std::vector<std::size_t> idx;
    auto b = bounds.begin();
    for (std::size_t a = 0; a < arity; ++a, ++b) idx.push_back(read_index(e[a], *b, "index"));
    put(idx, read_value(e[arity], e[arity + 1], params));
  }
}

inline BilinearMap read_bilinear(const Json& list, std::size_t n, const Params& params) {
  BilinearMap m(n);
  for_entries(list, 3, {n, n, n}, params, [&](const auto& ix, const Scalar& v) { m(ix[0], ix[1], ix[2]) += v; });
  return m;
}

inline Matrix read_matrix(const Json& list, std::size_t rows, std::size_t cols, const Params& params) {
  Matrix m(rows, cols);
  for_entries(list, 2, {rows, cols}, params, [&](const auto& ix, const Scalar& v) { m(ix[0], ix[1]) += v; });
  return m;
}

inline std::vector<Matrix> read_family(const Json& list, std::size_t count, std::size_t m, const Params& params) {
  std::vector<Matrix> out(count, Matrix(m, m));
  for_entries(list, 3, {count, m, m}, params, [&](const auto& ix, const Scalar& v) { out[ix[0]](ix[1], ix[2]) += v; });
  return out;
}

inline Comult read_comult(const Json& list, std::size_t n, const Params& params) {
  Matrix m(n * n, n);
  for_entries(list, 3, {n, n, n}, params, [&](const auto& ix, const Scalar& v) { m(ix[1] * n + ix[2], ix[0]) += v; });
  return Comult(n, std::move(m));
}

inline Params read_params(const Json& j, const Params& overrides) {
  Params p;
  if (j.is_object() && j.contains("params")) {
    const Json& ps = j.at("params");
    require(ps.is_object(), Errc::ParseError, "\"params\" must be an object");
    for (const auto& [name, v] : ps.items()) p[name] = read_number(v, {});
  }
  for (const auto& [name, v] : overrides) p[name] = v;
  return p;
}

}  // namespace detail

/// Product and bracket exactly as written, before any axiom is checked.
struct RawAlgebra {
  BilinearMap dot, bracket;

  std::size_t dim() const noexcept { return dot.dim(); }
  PoissonAlgebra build() const { return PoissonAlgebra(dot, bracket); }

  static RawAlgebra of(const PoissonAlgebra& p) { return {p.dot(), p.bracket()}; }
  friend bool operator==(const RawAlgebra&, const RawAlgebra&) = default;
};

struct RawMatchedPair {
  RawAlgebra P1, P2;
  RepData rep12, rep21;

  MatchedPairPoisson build() const { return {P1.build(), P2.build(), rep12, rep21}; }
  friend bool operator==(const RawMatchedPair&, const RawMatchedPair&) = default;
};

enum class Kind { Algebra, Bilinear, Rep, Tensor2, Comult, Bialgebra, Operator, PrePoisson, Form, Manin, MatchedPair };

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Algebra: return "algebra";
    case Kind::Bilinear: return "bilinear";
    case Kind::Rep: return "rep";
    case Kind::Tensor2: return "tensor2";
    case Kind::Comult: return "comult";
    case Kind::Bialgebra: return "bialgebra";
    case Kind::Operator: return "operator";
    case Kind::PrePoisson: return "prepoisson";
    case Kind::Form: return "form";
    case Kind::Manin: return "manin";
    case Kind::MatchedPair: return "matched-pair";
  }
  return "?";
}

inline Kind parse_kind(const std::string& s) {
  for (Kind k : {Kind::Algebra, Kind::Bilinear, Kind::Rep, Kind::Tensor2, Kind::Comult, Kind::Bialgebra,
                 Kind::Operator, Kind::PrePoisson, Kind::Form, Kind::Manin, Kind::MatchedPair})
    if (s == kind_name(k)) return k;
  fail(Errc::ParseError, "unknown kind \"" + s + "\"");
}

/// One manifest. Only the members relevant to `kind` are set; `algebra` is
/// the ambient algebra for every kind that has one (the base of a rep or
/// operator, the algebra of a tensor, form or bialgebra).
struct Document {
  Kind kind = Kind::Algebra;
  std::optional<RawAlgebra> algebra;
  std::optional<BilinearMap> bilinear;
  std::optional<RepData> rep;
  std::optional<Tensor2> tensor;
  std::optional<Comult> Delta, delta;
  std::optional<LinearOperator> op;
  std::optional<PrePoisson> pre;
  std::optional<BilinForm> form;
  std::optional<Matrix> split1, split2;
  std::optional<RawMatchedPair> matched;

  friend bool operator==(const Document&, const Document&) = default;
};

namespace detail {

inline RawAlgebra read_algebra_body(const Json& j, const Params& params) {
  const std::size_t n = read_dim(j);
  RawAlgebra a{BilinearMap(n), BilinearMap(n)};
  if (j.contains("dot")) a.dot = read_bilinear(j.at("dot"), n, params);
  if (j.contains("bracket")) a.bracket = read_bilinear(j.at("bracket"), n, params);
  return a;
}

inline RepData read_rep_body(const Json& j, std::size_t base_dim, const Params& params) {
  RepData d = RepData::zero(base_dim, read_dim(j, "vdim"));
  if (j.contains("L")) d.L = read_family(j.at("L"), base_dim, d.vdim, params);
  if (j.contains("R")) d.R = read_family(j.at("R"), base_dim, d.vdim, params);
  if (j.contains("rho")) d.rho = read_family(j.at("rho"), base_dim, d.vdim, params);
  return d;
}

inline RepData regular_data(const RawAlgebra& a) {
  RepData d = RepData::zero(a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    d.L[i] = a.dot.left(i);
    d.R[i] = a.dot.right(i);
    d.rho[i] = a.bracket.left(i);
  }
  return d;
}

inline Matrix read_subspace(const Json& j, std::size_t rows, const Params& params) {
  return read_matrix(field(j, "entries"), rows, read_dim(j, "cols"), params);
}

}  // namespace detail

inline Document parse_document(const Json& j, const Params& overrides = {}) {
  using namespace detail;
  require(j.is_object(), Errc::ParseError, "manifest must be a JSON object");
  const Json& k = field(j, "kind");
  require(k.is_string(), Errc::ParseError, "\"kind\" must be a string");
  const Params params = read_params(j, overrides);
  Document doc;
  doc.kind = parse_kind(k.get<std::string>());
  switch (doc.kind) {
    case Kind::Algebra:
      doc.algebra = read_algebra_body(j, params);
      break;
    case Kind::Bilinear:
      doc.bilinear = read_bilinear(field(j, "entries"), read_dim(j), params);
      break;
    case Kind::Rep:
      doc.algebra = read_algebra_body(field(j, "algebra"), params);
      doc.rep = read_rep_body(j, doc.algebra->dim(), params);
      break;
    case Kind::Tensor2: {
      std::size_t n;
      if (j.contains("algebra")) {
        doc.algebra = read_algebra_body(j.at("algebra"), params);
        n = doc.algebra->dim();
      } else {
        n = read_dim(j);
      }
      doc.tensor = read_matrix(field(j, "entries"), n, n, params);
      break;
    }
    case Kind::Comult:
      doc.Delta = read_comult(field(j, "entries"), read_dim(j), params);
      break;
    case Kind::Bialgebra: {
      doc.algebra = read_algebra_body(field(j, "algebra"), params);
      const std::size_t n = doc.algebra->dim();
      if (j.contains("r")) {
        auto [D, d] = coboundary_comults(doc.algebra->build(), read_matrix(j.at("r"), n, n, params));
        doc.Delta = std::move(D);
        doc.delta = std::move(d);
      } else {
        doc.Delta = read_comult(field(j, "Delta"), n, params);
        doc.delta = read_comult(field(j, "delta"), n, params);
      }
      break;
    }
    case Kind::Operator: {
      if (j.contains("rep")) {
        const Json& r = j.at("rep");
        doc.algebra = read_algebra_body(field(r, "algebra"), params);
        doc.rep = read_rep_body(r, doc.algebra->dim(), params);
      } else {
        doc.algebra = read_algebra_body(field(j, "algebra"), params);
        doc.rep = regular_data(*doc.algebra);
      }
      doc.op = read_matrix(field(j, "entries"), doc.algebra->dim(), doc.rep->vdim, params);
      break;
    }
    case Kind::PrePoisson: {
      const std::size_t n = read_dim(j);
      doc.pre = PrePoisson::zero(n);
      if (j.contains("succ")) doc.pre->succ = read_bilinear(j.at("succ"), n, params);
      if (j.contains("prec")) doc.pre->prec = read_bilinear(j.at("prec"), n, params);
      if (j.contains("ast")) doc.pre->ast = read_bilinear(j.at("ast"), n, params);
      break;
    }
    case Kind::Form: {
      doc.algebra = read_algebra_body(field(j, "algebra"), params);
      const std::size_t n = doc.algebra->dim();
      doc.form = read_matrix(field(j, "entries"), n, n, params);
      break;
    }
    case Kind::Manin: {
      doc.algebra = read_algebra_body(field(j, "algebra"), params);
      const std::size_t n = doc.algebra->dim();
      doc.form = read_matrix(field(j, "form"), n, n, params);
      doc.split1 = read_subspace(field(j, "s1"), n, params);
      doc.split2 = read_subspace(field(j, "s2"), n, params);
      break;
    }
    case Kind::MatchedPair: {
      RawMatchedPair mp;
      mp.P1 = read_algebra_body(field(j, "P1"), params);
      mp.P2 = read_algebra_body(field(j, "P2"), params);
      Json r12 = field(j, "rep12"), r21 = field(j, "rep21");
      r12["vdim"] = mp.P2.dim();
      r21["vdim"] = mp.P1.dim();
      mp.rep12 = read_rep_body(r12, mp.P1.dim(), params);
      mp.rep21 = read_rep_body(r21, mp.P2.dim(), params);
      doc.matched = std::move(mp);
      break;
    }
  }
  return doc;
}

inline Document parse_document(const std::string& text, const Params& overrides = {}) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, std::string("malformed JSON: ") + e.what());
  }
  return parse_document(j, overrides);
}

inline Document parse_document(const char* text, const Params& overrides = {}) {
  return parse_document(std::string(text), overrides);
}

// ---------------------------------------------------------------------------
// Writing

namespace detail {

inline Json scalar_part(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline void push_value(Json& entry, const Scalar& v) {
  entry.push_back(scalar_part(v.get_num()));
  entry.push_back(scalar_part(v.get_den()));
}

inline Json write_bilinear(const BilinearMap& m) {
  Json out = Json::array();
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(m(k, i, j))) {
          Json e = {k, i, j};
          push_value(e, m(k, i, j));
          out.push_back(std::move(e));
        }
  return out;
}

inline Json write_matrix(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) {
        Json e = {i, j};
        push_value(e, m(i, j));
        out.push_back(std::move(e));
      }
  return out;
}

inline Json write_family(const std::vector<Matrix>& ms) {
  Json out = Json::array();
  for (std::size_t x = 0; x < ms.size(); ++x)
    for (std::size_t a = 0; a < ms[x].rows(); ++a)
      for (std::size_t b = 0; b < ms[x].cols(); ++b)
        if (!is_zero(ms[x](a, b))) {
          Json e = {x, a, b};
          push_value(e, ms[x](a, b));
          out.push_back(std::move(e));
        }
  return out;
}

inline Json write_comult(const Comult& c) {
  Json out = Json::array();
  const std::size_t n = c.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(c.coeff(x, i, j))) {
          Json e = {x, i, j};
          push_value(e, c.coeff(x, i, j));
          out.push_back(std::move(e));
        }
  return out;
}

inline Json write_algebra_body(const RawAlgebra& a) {
  Json j;
  j["dim"] = a.dim();
  j["dot"] = write_bilinear(a.dot);
  j["bracket"] = write_bilinear(a.bracket);
  return j;
}

inline void write_rep_body(Json& j, const RepData& d, bool with_vdim = true) {
  if (with_vdim) j["vdim"] = d.vdim;
  j["L"] = write_family(d.L);
  j["R"] = write_family(d.R);
  j["rho"] = write_family(d.rho);
}

inline Json write_subspace(const Matrix& s) {
  Json j;
  j["cols"] = s.cols();
  j["entries"] = write_matrix(s);
  return j;
}

inline bool is_scalar_array(const Json& j) {
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

/// Objects one key per line, arrays of scalars on a single line.
inline void emit(const Json& j, std::string& out, std::size_t indent) {
  const std::string pad(indent, ' '), inner(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [key, v] : j.items()) {
      out += inner + Json(key).dump() + ": ";
      emit(v, out, indent + 2);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += pad + "}";
  } else if (j.is_array() && !j.empty() && !is_scalar_array(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += inner;
      emit(j[i], out, indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace detail

inline Json to_json(const Document& doc) {
  using namespace detail;
  Json j;
  j["kind"] = kind_name(doc.kind);
  switch (doc.kind) {
    case Kind::Algebra: {
      const Json body = write_algebra_body(*doc.algebra);
      for (const auto& [key, v] : body.items()) j[key] = v;
      break;
    }
    case Kind::Bilinear:
      j["dim"] = doc.bilinear->dim();
      j["entries"] = write_bilinear(*doc.bilinear);
      break;
    case Kind::Rep:
      j["algebra"] = write_algebra_body(*doc.algebra);
      write_rep_body(j, *doc.rep);
      break;
    case Kind::Tensor2:
      if (doc.algebra)
        j["algebra"] = write_algebra_body(*doc.algebra);
      else
        j["dim"] = doc.tensor->rows();
      j["entries"] = write_matrix(*doc.tensor);
      break;
    case Kind::Comult:
      j["dim"] = doc.Delta->dim();
      j["entries"] = write_comult(*doc.Delta);
      break;
    case Kind::Bialgebra:
      j["algebra"] = write_algebra_body(*doc.algebra);
      j["Delta"] = write_comult(*doc.Delta);
      j["delta"] = write_comult(*doc.delta);
      break;
    case Kind::Operator: {
      Json r;
      r["algebra"] = write_algebra_body(*doc.algebra);
      write_rep_body(r, *doc.rep);
      j["rep"] = std::move(r);
      j["entries"] = write_matrix(*doc.op);
      break;
    }
    case Kind::PrePoisson:
      j["dim"] = doc.pre->dim();
      j["succ"] = write_bilinear(doc.pre->succ);
      j["prec"] = write_bilinear(doc.pre->prec);
      j["ast"] = write_bilinear(doc.pre->ast);
      break;
    case Kind::Form:
      j["algebra"] = write_algebra_body(*doc.algebra);
      j["entries"] = write_matrix(*doc.form);
      break;
    case Kind::Manin:
      j["algebra"] = write_algebra_body(*doc.algebra);
      j["form"] = write_matrix(*doc.form);
      j["s1"] = write_subspace(*doc.split1);
      j["s2"] = write_subspace(*doc.split2);
      break;
    case Kind::MatchedPair: {
      j["P1"] = write_algebra_body(doc.matched->P1);
      j["P2"] = write_algebra_body(doc.matched->P2);
      Json r12 = Json::object(), r21 = Json::object();
      write_rep_body(r12, doc.matched->rep12, false);
      write_rep_body(r21, doc.matched->rep21, false);
      j["rep12"] = std::move(r12);
      j["rep21"] = std::move(r21);
      break;
    }
  }
  return j;
}

inline std::string serialize(const Document& doc) {
  std::string out;
  detail::emit(to_json(doc), out, 0);
  return out + "\n";
}

// ---------------------------------------------------------------------------
// Constructors for documents

inline Document algebra_document(const PoissonAlgebra& p) {
  Document d;
  d.kind = Kind::Algebra;
  d.algebra = RawAlgebra::of(p);
  return d;
}

inline Document bilinear_document(const BilinearMap& m) {
  Document d;
  d.kind = Kind::Bilinear;
  d.bilinear = m;
  return d;
}

inline Document rep_document(const PoissonRep& r) {
  Document d;
  d.kind = Kind::Rep;
  d.algebra = RawAlgebra::of(r.base());
  d.rep = r.data();
  return d;
}

inline Document tensor_document(const PoissonAlgebra& p, const Tensor2& r) {
  Document d;
  d.kind = Kind::Tensor2;
  d.algebra = RawAlgebra::of(p);
  d.tensor = r;
  return d;
}

inline Document bialgebra_document(const Bialgebra& b) {
  Document d;
  d.kind = Kind::Bialgebra;
  d.algebra = RawAlgebra::of(b.P);
  d.Delta = b.Delta;
  d.delta = b.delta;
  return d;
}

inline Document operator_document(const LinearOperator& t, const PoissonRep& r) {
  Document d;
  d.kind = Kind::Operator;
  d.algebra = RawAlgebra::of(r.base());
  d.rep = r.data();
  d.op = t;
  return d;
}

inline Document prepoisson_document(const PrePoisson& a) {
  Document d;
  d.kind = Kind::PrePoisson;
  d.pre = a;
  return d;
}

inline Document form_document(const PoissonAlgebra& p, const BilinForm& w) {
  Document d;
  d.kind = Kind::Form;
  d.algebra = RawAlgebra::of(p);
  d.form = w;
  return d;
}

inline Document manin_document(const PoissonAlgebra& p, const BilinForm& B, const Matrix& s1, const Matrix& s2) {
  Document d;
  d.kind = Kind::Manin;
  d.algebra = RawAlgebra::of(p);
  d.form = B;
  d.split1 = s1;
  d.split2 = s2;
  return d;
}

inline Document matched_pair_document(const MatchedPairPoisson& mp) {
  Document d;
  d.kind = Kind::MatchedPair;
  d.matched = RawMatchedPair{RawAlgebra::of(mp.P1), RawAlgebra::of(mp.P2), mp.rep12, mp.rep21};
  return d;
}

}  // namespace ncp
