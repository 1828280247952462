#include "qreider/witness_search.hpp"

#include "qreider/errors.hpp"

#include <algorithm>
#include <vector>

#include <omp.h>

namespace qreider {

std::optional<Rational> largest_dyadic_below_sqrt(const Rational& lo, const Rational& bound, unsigned k) {
  if (lo < 0) throw DomainError("dyadic sweep needs a non-negative lower end");
  if (lo * lo >= bound) return std::nullopt;
  Integer scale = 1;
  scale <<= k;
  const Rational step(Integer(1), scale);
  // s*sqrt(bound) is bracketed by isqrt(bound*s^2); refine exactly afterwards
  const Integer root = isqrt_floor(bound * Rational(scale * scale));
  Integer j = floor_of(Rational(root) - lo * Rational(scale));
  if (j < 0) j = 0;
  auto at = [&](const Integer& i) { return lo + Rational(i) * step; };
  auto fits = [&](const Integer& i) {
    const Rational x = at(i);
    return x * x < bound;
  };
  while (fits(j + 1)) ++j;
  while (j > 0 && !fits(j)) --j;
  return at(j);
}

std::optional<Rational> sweep_below_sqrt(const Rational& lo, const Rational& bound, unsigned depth,
                                         const Accept1& accept) {
  for (unsigned k = 0; k <= depth; ++k) {
    const auto x = largest_dyadic_below_sqrt(lo, bound, k);
    if (!x) return std::nullopt;
    if (accept(*x)) return x;
  }
  return std::nullopt;
}

namespace {

constexpr std::size_t kBlock = 512;

// Outer values for one level, in j order, already restricted to the disc.
std::vector<Rational> outer_level(const Rational& lo_x, const Rational& room, unsigned k, std::size_t cap) {
  std::vector<Rational> xs;
  Integer scale = 1;
  scale <<= k;
  const Rational step(Integer(1), scale);
  const unsigned stride = k == 0 ? 1 : 2;
  for (Integer j = k == 0 ? 0 : 1; xs.size() < cap; j += stride) {
    const Rational x = lo_x + Rational(j) * step;
    if (x * x >= room) break;
    xs.push_back(x);
  }
  return xs;
}

}  // namespace

std::optional<GridPoint> sweep_disc(const Rational& lo_x, const Rational& lo_y, const Rational& bound,
                                    const SearchOptions& options, const Accept2& accept) {
  if (lo_x < 0 || lo_y < 0) throw DomainError("dyadic sweep needs non-negative lower ends");
  // x must leave room for y >= lo_y
  const Rational room = bound - lo_y * lo_y;
  if (room <= 0) return std::nullopt;

  auto evaluate = [&](const Rational& x, std::optional<Rational>& y) {
    y = largest_dyadic_below_sqrt(lo_y, bound - x * x, options.depth);
    return y && accept(x, *y);
  };

  for (unsigned k = 0; k <= options.grid_depth; ++k) {
    const auto xs = outer_level(lo_x, room, k, options.max_outer);
    if (options.execution == Execution::serial) {
      for (const auto& x : xs) {
        std::optional<Rational> y;
        if (evaluate(x, y)) return GridPoint{x, *y};
      }
      continue;
    }
    std::size_t width = static_cast<std::size_t>(8 * std::max(1, omp_get_max_threads()));
    for (std::size_t begin = 0, end = 0; begin < xs.size(); begin = end, width = std::min(kBlock, 2 * width)) {
      end = std::min(xs.size(), begin + width);
      std::vector<std::optional<Rational>> ys(end - begin);
      std::vector<char> hit(end - begin, 0);
      const auto count = static_cast<long>(end - begin);
#pragma omp parallel for schedule(dynamic, 8)
      for (long i = 0; i < count; ++i) hit[i] = evaluate(xs[begin + i], ys[i]) ? 1 : 0;
      for (std::size_t i = 0; i < hit.size(); ++i)
        if (hit[i]) return GridPoint{xs[begin + i], *ys[i]};
    }
  }
  return std::nullopt;
}

}  // namespace qreider
