#pragma once

#include "qreider/rational.hpp"

#include <cstddef>
#include <functional>
#include <optional>

namespace qreider {

enum class Execution { serial, parallel };

struct SearchOptions {
  unsigned depth = 24;        // finest dyadic level for the inner (or only) parameter
  unsigned grid_depth = 8;    // finest dyadic level for the outer parameter of two-parameter sweeps
  std::size_t max_outer = std::size_t{1} << 16;  // outer candidates per level
  Execution execution = Execution::parallel;
};

/// Largest lo + j/2^k (j >= 0) whose square is < bound, or none when
/// lo^2 >= bound. Requires lo >= 0.
std::optional<Rational> largest_dyadic_below_sqrt(const Rational& lo, const Rational& bound, unsigned k);

using Accept1 = std::function<bool(const Rational&)>;
using Accept2 = std::function<bool(const Rational&, const Rational&)>;

/// For k = 0..depth takes the largest level-k candidate below sqrt(bound) and
/// returns the first one accepted. Suited to predicates that are monotone in
/// the parameter (a larger value is never worse).
std::optional<Rational> sweep_below_sqrt(const Rational& lo, const Rational& bound, unsigned depth,
                                         const Accept1& accept);

struct GridPoint {
  Rational x;
  Rational y;
};

/// Two-parameter sweep over x^2 + y^2 < bound with x >= lo_x, y >= lo_y.
/// x runs over lo_x + j/2^k level by level (new points only), y is pushed as
/// high as the disc allows at the inner depth. Returns the first accepted
/// point in (k, j) order; the parallel path evaluates a level concurrently
/// and returns exactly what the serial path would.
std::optional<GridPoint> sweep_disc(const Rational& lo_x, const Rational& lo_y, const Rational& bound,
                                    const SearchOptions& options, const Accept2& accept);

}  // namespace qreider
