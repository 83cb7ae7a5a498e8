#include <doctest.h>

#include <stdexcept>

#include "ietlab/dimension.hpp"

using namespace ietlab;

namespace {

struct Fixture {
  ParameterSchedule s = schedule(6, 8, 64, 8);
  ProductColumn pc3 = compute_product_column(s, 3, 8);
  ProductColumn pc5 = compute_product_column(s, 5, 8);
  ProductColumn pc6 = compute_product_column(s, 6, 8);
  ReturnTimes rt = return_times(s, 6);
};

}  // namespace

TEST_CASE("series values match an independent floating-point evaluation") {
  const Fixture f;
  const auto series = dimension_series(f.pc3, f.pc5, f.rt, 6);
  const std::vector<double> upper{0.0, 0.3094560155436015, 0.47635042508822634, 0.5805326771299398,
                                  0.6510720920446323, 0.7016342339599665, 0.7389638415049972};
  const std::vector<double> lower{0.02455709680767209, 0.3108497576666186, 0.4764517898285044, 0.5805409567990837,
                                  0.6510728194328198, 0.7016343011422439, 0.7389638478719438};
  REQUIRE(series.points.size() == 7);
  for (std::size_t k = 0; k < 7; ++k) {
    CHECK(static_cast<double>(series.upper()[k]) == doctest::Approx(upper[k]).epsilon(1e-12));
    CHECK(static_cast<double>(series.lower()[k]) == doctest::Approx(lower[k]).epsilon(1e-12));
  }
  CHECK(series.upper_at_most_one());
  CHECK(series.bracket_holds());
  CHECK(series.gap_strictly_decreasing());
  CHECK(lower_series(f.pc3, f.pc5, f.rt, 6) == series.lower());
  CHECK(upper_series(f.pc5, f.rt, 3, 6) == series.upper());
}

TEST_CASE("identical measures give ratio one") {
  const Fixture f;
  for (long double x : lower_series(f.pc5, f.pc5, f.rt, 6)) CHECK(x == 1.0L);
}

TEST_CASE("every measure pair satisfies the exact checks") {
  const Fixture f;
  const std::vector<const ProductColumn*> pcs{&f.pc3, &f.pc5, &f.pc6};
  for (const auto* a : pcs) {
    for (const auto* b : pcs) {
      if (a == b) continue;
      const auto series = dimension_series(*a, *b, f.rt, 6);
      CHECK(series.upper_at_most_one());
      CHECK(series.bracket_holds());
      CHECK(series.gap_strictly_decreasing());
      for (int k = 0; k <= 6; ++k) CHECK(argmin_interval(*a, *b, k) == a->j);
    }
  }
}

TEST_CASE("tail minimum estimate") {
  CHECK(liminf_estimate({0.5L, 0.4L, 0.3L}, 1) == 0.3L);
  CHECK(liminf_estimate({0.1L, 0.7L, 0.6L, 0.65L}, 3) == 0.6L);
  CHECK(liminf_estimate({1.0L, 1.0L}, 2) == 1.0L);
  CHECK_THROWS_AS(liminf_estimate({0.5L}, 0), std::invalid_argument);
  CHECK_THROWS_AS(liminf_estimate({0.5L}, 2), std::invalid_argument);
  CHECK(default_window(1) == 1);
  CHECK(default_window(6) == 2);
  CHECK(default_window(7) == 3);

  // Rising estimate as the truncation deepens.
  const Fixture f;
  const auto upper = upper_series(f.pc5, f.rt, 3, 6);
  long double previous = -1;
  for (int K = 4; K <= 6; ++K) {
    const std::vector<long double> head(upper.begin(), upper.begin() + K + 1);
    const long double estimate = liminf_estimate(head, default_window(K));
    CHECK(estimate > previous);
    previous = estimate;
  }
}

TEST_CASE("frostman checks") {
  const Fixture f;
  CHECK(frostman_check(f.pc3, f.pc5, 0, 1, 6).holds);
  CHECK(frostman_check(f.pc5, f.pc5, 1, 1, 6).holds);
  // Exponent with a large denominator goes through the interval path.
  CHECK(frostman_check(f.pc5, f.pc5, Rational(999, 1000), 1, 6).holds);
  const auto bad = frostman_check(f.pc5, f.pc5, Rational(1001, 1000), 1, 6);
  CHECK_FALSE(bad.holds);
  CHECK(bad.k >= 0);

  const Rational alpha(3, 10);
  const Rational C = frostman_constant(f.pc3, f.pc5, alpha, 6);
  const auto verdict = frostman_check(f.pc3, f.pc5, alpha, C, 6);
  CHECK(verdict.holds);
  CHECK(verdict.instances == 7 * 6);
  CHECK_FALSE(frostman_check(f.pc3, f.pc5, alpha, C / 2, 6).holds);
}

TEST_CASE("argument checks") {
  const Fixture f;
  CHECK_THROWS_AS(dimension_series(f.pc3, f.pc5, f.rt, 7), std::invalid_argument);
}
