#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace ncp;

namespace {

bool at_least_full(const PoissonRep& r) { return classify_rep(r) != RepKind::Quasi; }

Vector concat(const Vector& a, const Vector& b) {
  Vector out(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[a.size() + i] = b[i];
  return out;
}

Vector random_vector(std::size_t n, std::mt19937_64& rng) {
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = random_scalar(rng);
  return v;
}

Scalar pairing(const Vector& a, const Vector& b) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// a (x) b in the row-major tensor basis
Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

}  // namespace

TEST_CASE("regular representation examples", "[rep]") {
  const PoissonRep reg = regular_rep(example_3d(1, 1, 1));
  CHECK(at_least_full(reg));
  CHECK(classify_rep(reg) == RepKind::FullCoherent);

  const PoissonRep zero_bracket = regular_rep(example_3d(0, 0, 0));
  for (std::size_t i = 0; i < 3; ++i) CHECK(zero_bracket.rho(i).is_zero());

  const PoissonRep r100 = regular_rep(example_3d(1, 0, 0));
  Matrix expected(3, 3);
  expected(2, 1) = 1;  // e2 -> e3
  CHECK(r100.L(0) == expected);

  BilinearMap one(1);
  one(0, 0, 0) = 1;
  const PoissonRep unit = regular_rep(PoissonAlgebra(one, BilinearMap(1)));
  CHECK(unit.L(0) == Matrix::identity(1));
  CHECK(unit.R(0) == Matrix::identity(1));
}

TEST_CASE("zero actions are a representation", "[rep]") {
  for (std::size_t m : {1u, 2u, 4u}) {
    const PoissonRep z(example_3d(1, 2, 3), RepData::zero(3, m));
    CHECK(at_least_full(z));
    CHECK(classify_rep(z) == RepKind::FullCoherent);
    CHECK(dualize(z).data() == z.data());
  }
}

TEST_CASE("broken actions are rejected", "[rep]") {
  const PoissonAlgebra p = example_3d(1, 1, 1);
  RepData d = regular_rep(p).data();
  d.L[0] = d.L[0] + d.L[0];
  try {
    PoissonRep(p, d);
    FAIL("expected NotQuasiRep");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotQuasiRep);
  }
  RepData wrong_shape = RepData::zero(2, 2);
  CHECK_THROWS_AS(PoissonRep(p, wrong_shape), Error);
}

TEST_CASE("regular actions agree with the products they come from", "[rep][property]") {
  std::mt19937_64 rng(testing::kSeed);
  for (const auto& p : testing::algebra_corpus(rng, 3)) {
    const PoissonRep reg = regular_rep(p);
    for (int s = 0; s < 5; ++s) {
      const Vector x = random_vector(p.dim(), rng), v = random_vector(p.dim(), rng);
      CHECK(reg.data().left(x) * v == p.mul(x, v));
      CHECK(reg.data().right(x) * v == p.mul(v, x));
      CHECK(reg.data().lie(x) * v == p.br(x, v));
    }
  }
}

TEST_CASE("regular representation kind tracks coherence", "[rep][property]") {
  std::mt19937_64 rng(testing::kSeed + 1);
  for (const auto& p : testing::algebra_corpus(rng, 4)) {
    const PoissonRep reg = regular_rep(p);
    CHECK(at_least_full(reg));
    CHECK((classify_rep(reg) == RepKind::FullCoherent) == check_coherent(p));
    const PoissonRep dual = dualize(reg);
    CHECK(at_least_full(dual) == check_coherent(p));
  }
}

TEST_CASE("dual representation", "[rep]") {
  const PoissonRep reg = regular_rep(example_3d(1, 1, 1));
  const PoissonRep dual = dualize(reg);
  CHECK(dual.vdim() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(dual.L(i) == reg.R(i).transpose());
    CHECK(dual.R(i) == reg.L(i).transpose());
    CHECK(dual.rho(i) == -reg.rho(i).transpose());
  }
  // dual pairing: <rho*(x) f, v> = -<f, rho(x) v>
  std::mt19937_64 rng(testing::kSeed + 2);
  for (int s = 0; s < 10; ++s) {
    const Vector f = random_vector(3, rng), v = random_vector(3, rng);
    const std::size_t x = rng() % 3;
    CHECK(pairing(dual.rho(x) * f, v) == -pairing(f, reg.rho(x) * v));
  }
}

TEST_CASE("dualizing twice is the identity", "[rep][property]") {
  std::mt19937_64 rng(testing::kSeed + 3);
  for (const auto& p : testing::algebra_corpus(rng, 3)) {
    const PoissonRep reg = regular_rep(p);
    CHECK(dualize(dualize(reg)).data() == reg.data());
    const PoissonRep t = tensor_quasi_rep(p);
    CHECK(dual_data(dual_data(t.data())) == t.data());
  }
}

TEST_CASE("tensor quasi-representation", "[rep]") {
  const PoissonAlgebra p = example_3d(1, 1, 1);
  const PoissonRep t = tensor_quasi_rep(p);
  CHECK(t.vdim() == 9);
  CHECK(classify_rep(t) == RepKind::Quasi);
  // (1 (x) L_{e1}) (e1 (x) e2) = e1 (x) e3
  CHECK(t.L(0) * Vector::unit(9, 0 * 3 + 1) == Vector::unit(9, 0 * 3 + 2));
  CHECK(at_least_full(tensor_quasi_rep(abelian(3))));
  CHECK_NOTHROW(dualize(t));
}

TEST_CASE("tensor actions expand on simple tensors", "[rep][property]") {
  std::mt19937_64 rng(testing::kSeed + 4);
  for (const auto& p : testing::algebra_corpus(rng, 2)) {
    const std::size_t n = p.dim();
    const PoissonRep t = tensor_quasi_rep(p);
    for (int s = 0; s < 4; ++s) {
      const Vector x = random_vector(n, rng), a = random_vector(n, rng), b = random_vector(n, rng);
      CHECK(t.data().left(x) * kron(a, b) == kron(a, p.mul(x, b)));
      CHECK(t.data().right(x) * kron(a, b) == kron(p.mul(a, x), b));
      CHECK(t.data().lie(x) * kron(a, b) == kron(p.br(x, a), b) + kron(a, p.br(x, b)));
    }
  }
}

TEST_CASE("semidirect products", "[rep]") {
  const PoissonAlgebra p = example_3d(1, 1, 1);
  const PoissonAlgebra s = semidirect(regular_rep(p));
  CHECK(s.dim() == 6);

  const PoissonAlgebra triv = semidirect(PoissonRep(p, RepData::zero(3, 1)));
  CHECK(triv.dim() == 4);
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const bool inside = k < 3 && i < 3 && j < 3;
        CHECK(triv.dot()(k, i, j) == (inside ? p.dot()(k, i, j) : Scalar(0)));
        CHECK(triv.bracket()(k, i, j) == (inside ? p.bracket()(k, i, j) : Scalar(0)));
      }

  const PoissonAlgebra q = example_3d(1, 2, 3);
  CHECK(check_coherent(semidirect(dualize(regular_rep(q)))));

  try {
    semidirect(tensor_quasi_rep(p));
    FAIL("expected RepNotFull");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RepNotFull);
  }
}

TEST_CASE("semidirect products follow the defining formulas", "[rep][property]") {
  std::mt19937_64 rng(testing::kSeed + 5);
  for (const auto& p : testing::algebra_corpus(rng, 2)) {
    for (const PoissonRep& r : {regular_rep(p), dualize(regular_rep(p))}) {
      if (!at_least_full(r)) continue;
      const PoissonAlgebra s = semidirect(r);
      const std::size_t n = p.dim(), m = r.vdim();
      for (int t = 0; t < 4; ++t) {
        const Vector x = random_vector(n, rng), y = random_vector(n, rng);
        const Vector u = random_vector(m, rng), v = random_vector(m, rng);
        const Vector xu = concat(x, u), yv = concat(y, v);
        CHECK(s.mul(xu, yv) == concat(p.mul(x, y), r.data().left(x) * v + r.data().right(y) * u));
        CHECK(s.br(xu, yv) == concat(p.br(x, y), r.data().lie(x) * v - r.data().lie(y) * u));
      }
      if (check_coherent(p) && classify_rep(r) == RepKind::FullCoherent) CHECK(check_coherent(s));
    }
  }
}
