#include <doctest.h>

#include <stdexcept>

#include "ietlab/kernels.hpp"
#include "ietlab/measure.hpp"

using namespace ietlab;

TEST_CASE("product column at small depth") {
  const auto s = schedule(6, 7, 8, 4);
  const auto e3 = compute_product_column(s, 3, 0);
  CHECK(e3.v() == unit_vector(6, 3));
  CHECK(e3.total == 1);

  CHECK(compute_product_column(s, 1, 1).v() == IntVector{1, 0, 0, 0, 0, 1});
  const auto pc = compute_product_column(s, 3, 1);
  CHECK(pc.v() == IntVector{8, 2, 57, 1, 0, 9});
  CHECK(pc.total == 77);
  CHECK(measure_of_interval(pc, 0, 3) == Rational(57, 77));
  CHECK(measure_of_interval(pc, 0, 1) == Rational(8, 77));
  CHECK(measure_of_interval(pc, 1, 3) == Rational(1, 77));
  CHECK(measure_of_interval(pc, 1, 2) == 0);
  CHECK_THROWS_AS(measure_of_interval(pc, 2, 3), std::out_of_range);
  CHECK_THROWS_AS(compute_product_column(s, 7, 1), std::out_of_range);
}

TEST_CASE("two-level columns match an independently computed product") {
  const auto s = schedule(6, 7, 8, 2);
  CHECK(compute_product_column(s, 1, 2).v() == IntVector{9, 1, 0, 1, 0, 10});
  CHECK(compute_product_column(s, 3, 2).v() == IntVector{25520, 5888, 156577, 3142, 56, 28661});
  CHECK(compute_product_column(s, 6, 2).v() == IntVector{3552, 396, 56, 396, 56, 3947});
}

TEST_CASE("telescoping, partition of unity and the return-time bracket") {
  for (int n : {4, 5, 6, 7, 8}) {
    const auto s = schedule(n, 2 * n, 4 * n * n, 5);
    const auto columns = compute_all_columns(s, 5);
    const auto rt = return_times(s, 5);
    for (const auto& pc : columns) {
      CHECK(pc.tails[0] == compute_product_column(s, pc.j, 5).v());
      for (int k = 0; k <= 5; ++k) {
        Rational total = 0;
        for (int i = 1; i <= n; ++i) {
          const Rational lambda = measure_of_interval(pc, k, i);
          total += lambda;
          CHECK(lambda * Rational(rt.at(k, i)) <= 1);
        }
        // Tower over level k covers everything exactly once.
        CHECK(total == level_total(pc, k));
        Rational covered = 0;
        for (int i = 1; i <= n; ++i) covered += orbit_mass(pc, rt, k, i);
        CHECK(covered == 1);
        if (k < 5) CHECK(kernels::apply(s.theta(k + 1), pc.tail(k + 1)) == pc.tail(k));
      }
    }
  }
}

TEST_CASE("return times") {
  const auto s = schedule(6, 7, 8, 3);
  const auto rt = return_times(s, 2);
  CHECK(rt.b[0] == ones_vector(6));
  CHECK(rt.b[1] == IntVector{2, 76, 77, 76, 77, 19});
  CHECK(rt.at(2, 3) == l1_norm(compute_product_column(s, 3, 2).v()));
  CHECK_THROWS_AS(rt.at(3, 1), std::out_of_range);
  CHECK(return_times(s, 0).b.size() == 1);
}

TEST_CASE("normalized limits and pairwise distances") {
  const auto s = schedule(6, 7, 8, 4);
  CHECK(normalized_limit(s, 4, 0) == RationalVector{0, 0, 0, 1, 0, 0});
  CHECK(pairwise_l1(s, 3, 3, 4) == 0);

  // Band partners collapse; the pair (1, n) shrinks with depth.
  for (int m = 2; m <= 4; ++m) CHECK(pairwise_l1(s, 2, 3, m) * s.a(m) <= 4);
  CHECK(pairwise_l1(s, 1, 6, 3) < pairwise_l1(s, 1, 6, 2));
  CHECK(pairwise_l1(s, 1, 6, 4) < pairwise_l1(s, 1, 6, 3));
  CHECK(pairwise_l1(s, 1, 6, 2).get_d() == doctest::Approx(0.026657146257289065));

  const auto t = schedule(6, 8, 64, 6);
  CHECK(pairwise_l1(t, 3, 5, 6) > Rational(2, 5));
  CHECK(pairwise_l1(t, 3, 6, 6) > Rational(2, 5));
}

TEST_CASE("orbit mass of a measure on its own interval") {
  const auto s = schedule(6, 8, 64, 6);
  const auto pc = compute_product_column(s, 3, 6);
  const auto rt = return_times(s, 6);
  CHECK(orbit_mass(pc, rt, 0, 3) == measure_of_interval(pc, 0, 3));
  CHECK(orbit_mass(pc, rt, 3, 3).get_d() == doctest::Approx(0.9995523983683987));
  CHECK(orbit_mass(pc, rt, 3, 5) < Rational(1, 100));
}

TEST_CASE("visit counts of the induced tower match matrix columns") {
  const auto s = schedule(6, 7, 8, 3);
  CHECK(visit_count_column(s, 3, 0, 4, 100) == unit_vector(6, 4));
  CHECK(visit_count_column(s, 3, 1, 1) == IntVector{1, 0, 0, 0, 0, 1});
  const auto theta1 = s.theta(1);
  for (int i = 1; i <= 6; ++i) CHECK(visit_count_column(s, 3, 1, i) == theta1.column(i));
  CHECK(visit_count_column(s, 3, 2, 3) == IntVector{25520, 5888, 156577, 3142, 56, 28661});
  CHECK_THROWS(visit_count_column(s, 3, 4, 1));
  CHECK_THROWS_AS(visit_count_column(s, 3, 2, 3, 1000), std::runtime_error);
}
