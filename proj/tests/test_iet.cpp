#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ietlab/iet.hpp"
#include "reference.hpp"

using namespace ietlab;

namespace {

Iet make(const std::vector<int>& images, std::vector<Rational> lengths) {
  return build_iet(Permutation::from_images(images), LengthVector(std::move(lengths)));
}

Rational random_length(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(1, 97);
  std::uniform_int_distribution<long> den(1, 13);
  return make_rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("breakpoints of small exchanges") {
  const auto t = make({2, 1}, {Rational(1, 3), Rational(2, 3)});
  CHECK(t.breakpoints() == RationalVector{0, Rational(1, 3), 1});
  CHECK(t.range_breakpoints() == RationalVector{0, Rational(2, 3), 1});

  const auto u = make({3, 1, 2}, {Rational(1, 10), Rational(1, 2), Rational(2, 5)});
  CHECK(u.breakpoints() == RationalVector{0, Rational(1, 10), Rational(3, 5), 1});
  CHECK(u.range_lengths() == RationalVector{Rational(1, 2), Rational(2, 5), Rational(1, 10)});
  CHECK(u.permutation().bottom() == std::vector<int>{2, 3, 1});
  CHECK(u.permutation().images() == std::vector<int>{3, 1, 2});
}

TEST_CASE("evaluation and location") {
  const auto id = make({1, 2, 3}, {Rational(1, 3), Rational(1, 3), Rational(1, 3)});
  CHECK(id.evaluate(Rational(1, 2)) == Rational(1, 2));

  const auto r = make({2, 1}, {Rational(1, 3), Rational(2, 3)});
  CHECK(r.evaluate(0) == Rational(2, 3));
  CHECK(r.evaluate(Rational(1, 3)) == 0);

  const auto u = make({3, 1, 2}, {Rational(1, 10), Rational(1, 2), Rational(2, 5)});
  CHECK(u.evaluate(Rational(1, 20)) == Rational(19, 20));
  CHECK(u.locate(0) == 1);
  CHECK(u.locate(Rational(1, 10)) == 2);
  CHECK(u.locate(Rational(7, 10)) == 3);
  CHECK(u.locate(Rational(3, 5)) == 3);
  CHECK_THROWS_AS(u.evaluate(1), std::out_of_range);
  CHECK_THROWS_AS(u.evaluate(Rational(-1, 5)), std::out_of_range);
}

TEST_CASE("malformed data is rejected") {
  CHECK_THROWS(Permutation::from_images({1, 1}));
  CHECK_THROWS(Permutation::from_images({1, 3}));
  CHECK_THROWS(Permutation::from_rows({1, 2}, {1, 2, 3}));
  CHECK_THROWS(LengthVector({Rational(1), Rational(0)}));
  CHECK_THROWS(LengthVector({Rational(-1, 2)}));
  CHECK_THROWS(make({2, 1}, {Rational(1)}));
}

TEST_CASE("irreducibility agrees with the prefix-set definition") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 6;
    std::vector<int> bottom(static_cast<std::size_t>(n));
    std::iota(bottom.begin(), bottom.end(), 1);
    std::shuffle(bottom.begin(), bottom.end(), rng);
    ref::Rows rows{{}, bottom};
    rows.top.resize(bottom.size());
    std::iota(rows.top.begin(), rows.top.end(), 1);
    CHECK(Permutation::from_bottom(bottom).irreducible() == ref::irreducible(rows));
  }
  CHECK_FALSE(Permutation::from_bottom({1, 2, 3}).irreducible());
  CHECK_FALSE(Permutation::from_bottom({2, 1, 3}).irreducible());
  CHECK(Permutation::from_bottom({3, 2, 1}).irreducible());
}

TEST_CASE("random exchanges are bijective piecewise translations preserving length") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 6;
    const auto rows = ref::random_irreducible(n, rng);
    RationalVector lengths;
    for (int i = 0; i < n; ++i) lengths.push_back(random_length(rng));
    const auto t = build_iet(Permutation::from_bottom(rows.bottom), LengthVector(lengths));
    const auto tau = t.permutation().images();

    Rational image_total = 0;
    for (int pos = 1; pos <= n; ++pos) {
      const auto& b = t.breakpoints();
      const auto& rb = t.range_breakpoints();
      const Rational lo = b[static_cast<std::size_t>(pos - 1)];
      const Rational hi = b[static_cast<std::size_t>(pos)];
      const int target = tau[static_cast<std::size_t>(pos - 1)];
      // The interval lands exactly on its range slot, so T is a bijection.
      CHECK(t.evaluate(lo) == rb[static_cast<std::size_t>(target - 1)]);
      CHECK(hi - lo == rb[static_cast<std::size_t>(target)] - rb[static_cast<std::size_t>(target - 1)]);
      const Rational mid = (lo + hi) / 2;
      CHECK(t.evaluate(mid) - mid == t.evaluate(lo) - lo);
      image_total += hi - lo;
    }
    CHECK(image_total == t.total());
  }
}

TEST_CASE("orbit counts") {
  const auto id = make({1, 2, 3}, {Rational(1), Rational(1), Rational(1)});
  CHECK(orbit_counts(id, Rational(3, 2), 5) == IntVector{0, 5, 0});

  const auto half = make({2, 1}, {Rational(1, 2), Rational(1, 2)});
  CHECK(orbit_counts(half, Rational(1, 4), 4) == IntVector{2, 2});

  const auto u = make({3, 1, 2}, {Rational(1, 10), Rational(1, 2), Rational(2, 5)});
  CHECK(l1_norm(orbit_counts(u, Rational(1, 7), 37)) == 37);
}

TEST_CASE("keane prefix check") {
  // Rotation by 1/2: beta_1 returns to itself after two steps.
  const auto half = make({2, 1}, {Rational(1, 2), Rational(1, 2)});
  CHECK_FALSE(keane_prefix_check(half, 2));
  CHECK(keane_prefix_check(half, 1));

  // Lengths (89, 55): T^t(beta_1) = 89 + 55 t mod 144, which only returns
  // to 89 when 144 divides t.
  const auto fib = make({2, 1}, {Rational(89), Rational(55)});
  CHECK(keane_prefix_check(fib, 143));
  CHECK_FALSE(keane_prefix_check(fib, 144));
}
