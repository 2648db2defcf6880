#pragma once

// Seeded random inputs: point configurations, gauge scrambles, mutations.

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "nestedquiver/correspondence.hpp"

namespace nq {

using Rng = std::mt19937_64;
using Point2 = std::pair<Rational, Rational>;

/// p/q with |p| <= span, 1 <= q <= max_den.
Rational random_rational(Rng& rng, long span = 4, long max_den = 3);

/// Invertible integer matrix with entries in [-2, 2].
Matrix random_invertible(Rng& rng, std::size_t size);
GaugeElement random_gauge(Rng& rng, std::size_t c, std::size_t cp);

/// Ideal of a set of distinct points (reduced cycle).
ZeroCycleIdeal ideal_of_points(const std::vector<Point2>& points);

/// A point given in chart `from` read in chart `to`, or nullopt when it lies
/// on the fiber removed from `to`:
///   A1 = (nu2 + nu1 x)/N, A2 = (nu1 - nu2 x)/N, A' = nu2' A1 + nu1' A2,
///   x' = (nu1' A1 - nu2' A2)/A', y' = A'^n y.
std::optional<Point2> transform_point(const Point2& p, const NuPoint& from, const NuPoint& to, int n);

struct PointPair {
  NuPoint nu{1, 0};
  std::vector<Point2> points;  // the first cp points form the small cycle
  std::size_t cp = 0;
  NestedIdealPair pair;        // on the canonical chart
};

/// c distinct random points on a random sample chart, nested with the first cp.
PointPair random_point_pair(Rng& rng, std::size_t c, std::size_t cp, int n);

/// Gamma_c-stable representation whose first regular sample chart is [1,k]:
/// points at x = (jk+1)/(k-j), j < k, on chart [1,k], plus c - k random points.
HirzRep planted_pencil_rep(Rng& rng, std::size_t c, std::size_t k, int n);

}  // namespace nq
