#pragma once

#include <random>
#include <string>
#include <vector>

#include "ncpoisson/ncpoisson.hpp"

namespace ncp::testing {

inline constexpr std::uint64_t kSeed = 424242;

inline std::vector<Scalar> params(std::mt19937_64& rng, std::size_t k) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(random_scalar(rng));
  return out;
}

inline Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int bound = 5) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(rng, bound);
  return m;
}

/// Poisson algebras from the fixture families and from standard structures
/// on small associative algebras.
inline std::vector<PoissonAlgebra> algebra_corpus(std::mt19937_64& rng, std::size_t samples = 4) {
  std::vector<PoissonAlgebra> out;
  for (std::size_t s = 0; s < samples; ++s) {
    auto p = params(rng, 3);
    out.push_back(example_3d(p[0], p[1], p[2]));
    out.push_back(example_4d(p[0], p[1], p[2]));
    out.push_back(standard_poisson(upper_triangular_product(), random_nonzero_scalar(rng)));
  }
  out.push_back(standard_poisson(matrix_units_product(2), Scalar(1, 2)));
  out.push_back(abelian(2));
  return out;
}

/// Perturbs one random structure constant of a random map by a nonzero amount.
inline BilinearMap perturb(BilinearMap m, std::mt19937_64& rng) {
  const std::size_t n = m.dim();
  m(rng() % n, rng() % n, rng() % n) += random_nonzero_scalar(rng);
  return m;
}

}  // namespace ncp::testing
