#include "oracles.hpp"
#include "qreider/errors.hpp"
#include "qreider/witness_search.hpp"

#include <doctest.h>

using namespace qreider;

namespace {

// largest lo + j/2^k with square < bound, by linear scan
std::optional<Rational> scan_below_sqrt(const Rational& lo, const Rational& bound, unsigned k) {
  if (lo * lo >= bound) return std::nullopt;
  const Rational step(1, 1L << k);
  Rational x = lo;
  while ((x + step) * (x + step) < bound) x += step;
  return x;
}

// enumeration order of the two-parameter grid, written out directly
std::optional<GridPoint> scan_disc(const Rational& lo_x, const Rational& lo_y, const Rational& bound,
                                   unsigned grid_depth, unsigned depth, const Accept2& accept) {
  for (unsigned k = 0; k <= grid_depth; ++k) {
    const Rational step(1, 1L << k);
    for (long j = 0;; ++j) {
      if (k > 0 && j % 2 == 0) continue;
      const Rational x = lo_x + step * j;
      if (x * x + lo_y * lo_y >= bound) break;
      const auto y = scan_below_sqrt(lo_y, bound - x * x, depth);
      if (y && accept(x, *y)) return GridPoint{x, *y};
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("largest dyadic below a square root") {
  CHECK(largest_dyadic_below_sqrt(2, 12, 0) == Rational(3));
  CHECK(largest_dyadic_below_sqrt(2, 12, 2) == Rational(13, 4));
  CHECK_FALSE(largest_dyadic_below_sqrt(2, 4, 10).has_value());
  CHECK(largest_dyadic_below_sqrt(0, 1, 3) == Rational(7, 8));
  CHECK_THROWS_AS(largest_dyadic_below_sqrt(-1, 4, 2), DomainError);

  oracle::Gen gen(21);
  for (int i = 0; i < 400; ++i) {
    const Rational lo = gen.rational(0, 3, 8);
    const Rational bound = gen.rational(0, 40, 9);
    const unsigned k = static_cast<unsigned>(gen.integer(0, 7));
    CHECK(largest_dyadic_below_sqrt(lo, bound, k) == scan_below_sqrt(lo, bound, k));
  }
}

TEST_CASE("one-parameter sweep takes the first accepted level") {
  // accept x <= 7/2 below sqrt(20) = 4.47: level 0 gives 4, level 1 gives 4, 2 gives 17/4 ...
  std::vector<Rational> seen;
  const auto r = sweep_below_sqrt(2, 20, 6, [&](const Rational& x) {
    seen.push_back(x);
    return x * x * 4 < 79;  // x < 4.44
  });
  REQUIRE(r);
  CHECK(*r * *r * 4 < 79);
  CHECK(seen.front() == 4);
  CHECK_FALSE(sweep_below_sqrt(2, 4, 6, [](const Rational&) { return true; }).has_value());
  CHECK_FALSE(sweep_below_sqrt(2, 20, 6, [](const Rational&) { return false; }).has_value());
}

TEST_CASE("two-parameter sweep matches the written-out enumeration") {
  oracle::Gen gen(22);
  for (int i = 0; i < 60; ++i) {
    const Rational lo_x = gen.rational(0, 2, 4);
    const Rational lo_y = gen.rational(0, 2, 4);
    const Rational bound = gen.rational(1, 30, 5);
    const Rational a = gen.rational(0, 3, 6);
    const Rational b = gen.rational(0, 3, 6);
    const Rational c = gen.rational(1, 12, 6);
    // a half-plane predicate; often first satisfied deep in the grid
    const Accept2 accept = [&](const Rational& x, const Rational& y) { return a * x + b * y >= c; };
    SearchOptions opts;
    opts.depth = 6;
    opts.grid_depth = 4;
    const auto expected = scan_disc(lo_x, lo_y, bound, opts.grid_depth, opts.depth, accept);
    for (const auto exec : {Execution::serial, Execution::parallel}) {
      opts.execution = exec;
      const auto got = sweep_disc(lo_x, lo_y, bound, opts, accept);
      REQUIRE(got.has_value() == expected.has_value());
      if (got) {
        CHECK(got->x == expected->x);
        CHECK(got->y == expected->y);
      }
    }
  }
}

TEST_CASE("serial and parallel sweeps agree on large levels") {
  SearchOptions opts;
  opts.depth = 24;
  opts.grid_depth = 12;
  // accepts only a narrow window of x so the hit lands in a late block
  const Accept2 accept = [](const Rational& x, const Rational& y) {
    return x > Rational(51, 10) && x < Rational(5101, 1000) && y > 0;
  };
  opts.execution = Execution::serial;
  const auto s = sweep_disc(0, 0, 30, opts, accept);
  opts.execution = Execution::parallel;
  const auto p = sweep_disc(0, 0, 30, opts, accept);
  REQUIRE(s);
  REQUIRE(p);
  CHECK(s->x == p->x);
  CHECK(s->y == p->y);
  CHECK(s->x * s->x + s->y * s->y < 30);
}
