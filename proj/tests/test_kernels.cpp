#include <doctest.h>

#include <omp.h>

#include <random>
#include <stdexcept>

#include "ietlab/family.hpp"
#include "ietlab/kernels.hpp"

using namespace ietlab;

namespace {

TransitionMatrix random_matrix(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(0, 1'000'000);
  TransitionMatrix m(n);
  for (int r = 1; r <= static_cast<int>(n); ++r)
    for (int c = 1; c <= static_cast<int>(n); ++c) m(r, c) = BigInt(d(rng)) * BigInt(d(rng)) * BigInt(d(rng));
  return m;
}

}  // namespace

TEST_CASE("serial and OpenMP kernels agree") {
  std::mt19937 rng(17);
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    for (std::size_t n : {1U, 3U, 8U, 17U}) {
      std::vector<TransitionMatrix> factors;
      for (int k = 0; k < 6; ++k) factors.push_back(random_matrix(n, rng));
      std::vector<IntVector> seeds;
      for (int j = 1; j <= static_cast<int>(n); ++j) seeds.push_back(unit_vector(n, j));

      CHECK(kernels::serial::multiply(factors[0], factors[1]) == kernels::omp::multiply(factors[0], factors[1]));
      CHECK(kernels::serial::apply(factors[2], seeds.back()) == kernels::omp::apply(factors[2], seeds.back()));
      CHECK(kernels::serial::prefix_products(factors) == kernels::omp::prefix_products(factors));
      CHECK(kernels::serial::suffix_chains(factors, seeds) == kernels::omp::suffix_chains(factors, seeds));
    }
  }
}

TEST_CASE("prefix products and suffix chains follow their definitions") {
  const auto s = schedule(6, 7, 8, 3);
  const auto factors = s.thetas(3);
  const auto prefixes = kernels::prefix_products(factors);
  REQUIRE(prefixes.size() == 4);
  CHECK(prefixes[0] == TransitionMatrix::identity(6));
  CHECK(prefixes[3] == kernels::multiply(kernels::multiply(factors[0], factors[1]), factors[2]));

  const auto chains = kernels::suffix_chains(factors, {unit_vector(6, 3)});
  REQUIRE(chains.front().size() == 4);
  CHECK(chains[0][3] == unit_vector(6, 3));
  CHECK(chains[0][0] == prefixes[3].column(3));
  CHECK(chains[0][1] == kernels::apply(factors[1], chains[0][2]));
}

TEST_CASE("backend switch and error propagation") {
  kernels::set_backend(kernels::Backend::Serial);
  CHECK(kernels::backend() == kernels::Backend::Serial);
  kernels::set_backend(kernels::Backend::OpenMP);
  CHECK(kernels::backend() == kernels::Backend::OpenMP);
  CHECK(kernels::max_threads() >= 1);

  const TransitionMatrix a(2);
  const TransitionMatrix b(3);
  CHECK_THROWS_AS(kernels::serial::multiply(a, b), std::invalid_argument);
  CHECK_THROWS_AS(kernels::omp::multiply(a, b), std::invalid_argument);
  CHECK_THROWS_AS(kernels::omp::apply(a, IntVector(3)), std::invalid_argument);
  CHECK_THROWS_AS(kernels::omp::suffix_chains({a, b}, {IntVector(3)}), std::invalid_argument);
}
