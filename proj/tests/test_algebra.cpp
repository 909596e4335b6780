#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace ncp;

namespace {

BilinearMap bracket_3d(const Scalar& a, const Scalar& b, const Scalar& c) { return example_3d(a, b, c).bracket(); }

bool all_axioms(const BilinearMap& dot, const BilinearMap& br) {
  return check_associative(dot) && check_lie(br) && check_leibniz(dot, br) && check_coherent(PoissonAlgebra(dot, br));
}

bool axioms_or_throw(const BilinearMap& dot, const BilinearMap& br) {
  if (!check_associative(dot) || !check_lie(br) || !check_leibniz(dot, br)) return false;
  auto r = first_failure();
  report_coherent(dot, br, r);
  return r.ok();
}

}  // namespace

TEST_CASE("associativity examples", "[algebra]") {
  BilinearMap dot = example_3d(0, 0, 0).dot();
  CHECK(check_associative(dot));
  CHECK(check_associative(BilinearMap(3)));
  dot(0, 2, 0) = 1;  // e3 e1 = e1
  CHECK_FALSE(check_associative(dot));
  LawReport r;
  report_associative(dot, r);
  bool saw = false;
  for (const auto& v : r.violations())
    if (v.at == std::vector<std::size_t>{0, 1, 0}) saw = true;
  CHECK(saw);
}

TEST_CASE("Jacobi examples", "[algebra]") {
  CHECK(check_lie(bracket_3d(1, 2, 3)));
  CHECK(check_lie(BilinearMap(3)));
  BilinearMap br = bracket_3d(1, 2, 3);
  br(2, 1, 2) = 1;  // {e2,e3} = +a e3 with a = 1
  br(2, 2, 1) = -1;
  CHECK_FALSE(check_lie(br));
}

TEST_CASE("Leibniz examples", "[algebra]") {
  const PoissonAlgebra p = example_3d(1, 0, 2);
  CHECK(check_leibniz(p.dot(), p.bracket()));
  CHECK(check_leibniz(upper_triangular_product(), BilinearMap(3)));
  BilinearMap br = bracket_3d(1, 1, 1);
  br(2, 0, 2) = 0;  // {e1,e3} = b e1 with b = 1
  br(2, 2, 0) = 0;
  br(0, 0, 2) = 1;
  br(0, 2, 0) = -1;
  CHECK_FALSE(check_leibniz(example_3d(1, 1, 1).dot(), br));
}

TEST_CASE("fixture families are coherent", "[algebra]") {
  std::mt19937_64 rng(testing::kSeed);
  for (int s = 0; s < 10; ++s) {
    auto p = testing::params(rng, 3);
    CHECK(check_coherent(example_3d(p[0], p[1], p[2])));
    CHECK(check_coherent(example_4d(p[0], p[1], p[2])));
  }
  CHECK(check_coherent(PoissonAlgebra(BilinearMap(3), bracket_3d(1, 2, 3))));
  const PoissonAlgebra z = example_3d(0, 0, 0);
  CHECK(z.bracket().is_zero());
  CHECK(z.dot() == example_3d(5, 6, 7).dot());
}

TEST_CASE("invalid structures are rejected at construction", "[algebra]") {
  BilinearMap dot = example_3d(0, 0, 0).dot();
  dot(0, 2, 0) = 1;
  try {
    PoissonAlgebra(dot, BilinearMap(3));
    FAIL("expected InvalidAlgebra");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidAlgebra);
  }
  CHECK_THROWS_AS(PoissonAlgebra(BilinearMap(2), BilinearMap(3)), Error);
}

TEST_CASE("commutator and standard structure", "[algebra]") {
  const BilinearMap comm = commutator(example_3d(0, 0, 0).dot());
  BilinearMap expected(3);
  expected(2, 0, 1) = 2;
  expected(2, 1, 0) = -2;
  CHECK(comm == expected);
  CHECK(commutator(BilinearMap(2)).is_zero());
  CHECK(commutator(example_4d(0, 0, 0).dot()) != BilinearMap(4));

  CHECK(standard_poisson(example_3d(0, 0, 0).dot(), 1).bracket() == expected);
  CHECK(standard_poisson(upper_triangular_product(), 0).bracket().is_zero());
  const PoissonAlgebra half = standard_poisson(example_4d(0, 0, 0).dot(), Scalar(1, 2));
  CHECK(half.bracket().on_basis(0, 1) == (Vector{0, 0, 0, Scalar(1, 2)}));
  CHECK(half.bracket().on_basis(1, 0) == (Vector{0, 0, 0, Scalar(-1, 2)}));

  BilinearMap commutative(2);
  commutative(0, 0, 1) = 1;
  commutative(0, 1, 0) = 1;
  CHECK(commutator(commutative).is_zero());
  BilinearMap bad = example_3d(0, 0, 0).dot();
  bad(0, 2, 0) = 1;
  CHECK_THROWS_AS(standard_poisson(bad, 1), Error);
}

TEST_CASE("compatible Lie brackets", "[algebra]") {
  const PoissonAlgebra p = example_3d(1, 1, 1);
  CHECK(check_compatible_lie(p.bracket(), commutator(p.dot())));
  CHECK(check_compatible_lie(p.bracket(), BilinearMap(3)));

  BilinearMap b1(3), b2(3);  // {e1,e2} = e1 and {e2,e3} = e2
  b1(0, 0, 1) = 1;
  b1(0, 1, 0) = -1;
  b2(1, 1, 2) = 1;
  b2(1, 2, 1) = -1;
  BilinearMap so3(3);
  auto put = [&](std::size_t i, std::size_t j, std::size_t k) {
    so3(k, i, j) = 1;
    so3(k, j, i) = -1;
  };
  put(0, 1, 2);
  put(1, 2, 0);
  put(2, 0, 1);
  REQUIRE(check_lie(so3));
  REQUIRE(check_lie(b1));
  // oracle: two Lie brackets are compatible iff their sum is a Lie bracket
  for (const auto& [x, y] : {std::pair{so3, b1}, std::pair{so3, b2}, std::pair{b1, b2}, std::pair{so3, so3}})
    CHECK(check_compatible_lie(x, y) == check_lie(x + y));
  CHECK_FALSE(check_compatible_lie(so3, b1));
}

TEST_CASE("coherence matches the commutator criterion", "[algebra][property]") {
  std::mt19937_64 rng(testing::kSeed + 1);
  for (const auto& p : testing::algebra_corpus(rng, 6)) {
    CHECK(check_coherent(p) == check_commutator_cyclic(p.dot(), p.bracket()));
    if (check_coherent(p)) CHECK(check_bracket_of_commutator_cyclic(p.dot(), p.bracket()));
  }
}

TEST_CASE("single-entry mutations of the 3d family are caught", "[algebra][property]") {
  std::mt19937_64 rng(testing::kSeed + 2);
  for (int s = 0; s < 4; ++s) {
    auto q = testing::params(rng, 3);
    const PoissonAlgebra p = example_3d(q[0], q[1], q[2]);
    for (int which = 0; which < 2; ++which)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = 0; j < 3; ++j) {
            BilinearMap dot = p.dot(), br = p.bracket();
            (which ? br : dot)(k, i, j) += random_nonzero_scalar(rng);
            CHECK_FALSE(axioms_or_throw(dot, br));
          }
  }
}

TEST_CASE("the central element of the 4d family absorbs product mutations", "[algebra]") {
  // e4 annihilates everything, so any change to the e4 coefficient of e_i e_j
  // with i, j < 4 keeps every axiom.
  const PoissonAlgebra p = example_4d(1, 2, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      BilinearMap dot = p.dot();
      dot(3, i, j) += 5;
      CHECK(all_axioms(dot, p.bracket()));
    }
  BilinearMap dot = p.dot();
  dot(0, 0, 0) += 1;
  CHECK_FALSE(axioms_or_throw(dot, p.bracket()));
}
