#include "nestedquiver/generators.hpp"

#include <algorithm>

namespace nq {

Rational random_rational(Rng& rng, long span, long max_den) {
  std::uniform_int_distribution<long> num(-span, span), den(1, max_den);
  const long p = num(rng);
  return frac(p, den(rng));
}

Matrix random_invertible(Rng& rng, std::size_t size) {
  std::uniform_int_distribution<int> entry(-2, 2);
  for (;;) {
    Matrix m(size, size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) m(i, j) = entry(rng);
    if (sgn(determinant(m)) != 0) return m;
  }
}

GaugeElement random_gauge(Rng& rng, std::size_t c, std::size_t cp) {
  Matrix g1 = random_invertible(rng, c);
  Matrix g2 = random_invertible(rng, c);
  Matrix g3 = random_invertible(rng, c - cp);
  Matrix g4 = random_invertible(rng, c - cp);
  return GaugeElement(std::move(g1), std::move(g2), std::move(g3), std::move(g4));
}

namespace {

AdhmData diagonal_data(const std::vector<Point2>& points) {
  std::vector<Rational> xs, ys;
  for (const auto& [x, y] : points) {
    xs.push_back(x);
    ys.push_back(y);
  }
  AdhmData a{points.size(), Matrix::diagonal(xs), Matrix::diagonal(ys), Matrix(1, points.size())};
  for (std::size_t j = 0; j < points.size(); ++j) a.e(0, j) = 1;
  return a;
}

std::vector<Point2> distinct_points(Rng& rng, std::size_t count, const std::vector<Point2>& avoid_x_of,
                                    const std::vector<Rational>& forbidden_x) {
  std::vector<Point2> pts = avoid_x_of;
  while (pts.size() < avoid_x_of.size() + count) {
    Point2 p{random_rational(rng), random_rational(rng)};
    if (std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
    if (std::find(forbidden_x.begin(), forbidden_x.end(), p.first) != forbidden_x.end()) continue;
    pts.push_back(p);
  }
  return std::vector<Point2>(pts.begin() + static_cast<std::ptrdiff_t>(avoid_x_of.size()), pts.end());
}

}  // namespace

ZeroCycleIdeal ideal_of_points(const std::vector<Point2>& points) { return ideal_from_adhm(diagonal_data(points)); }

std::optional<Point2> transform_point(const Point2& p, const NuPoint& from, const NuPoint& to, int n) {
  const Rational norm = from.norm2();
  const Rational a1 = (from.nu2() + from.nu1() * p.first) / norm;
  const Rational a2 = (from.nu1() - from.nu2() * p.first) / norm;
  const Rational a = to.nu2() * a1 + to.nu1() * a2;
  if (sgn(a) == 0) return std::nullopt;
  const Rational d = to.nu1() * a1 - to.nu2() * a2;
  return Point2{d / a, pow(a, static_cast<unsigned>(n)) * p.second};
}

PointPair random_point_pair(Rng& rng, std::size_t c, std::size_t cp, int n) {
  std::uniform_int_distribution<std::size_t> pick(0, c);
  PointPair out;
  out.nu = nu_sample(c + 1)[pick(rng)];
  out.cp = cp;
  out.points = distinct_points(rng, c, {}, {});
  const std::vector<Point2> small(out.points.begin(), out.points.begin() + static_cast<std::ptrdiff_t>(cp));
  out.pair = normalize_chart(NestedIdealPair{out.nu, ideal_of_points(out.points), ideal_of_points(small)}, n);
  return out;
}

HirzRep planted_pencil_rep(Rng& rng, std::size_t c, std::size_t k, int n) {
  if (k > c) throw Error(ErrorCode::DomainError, "need k <= c");
  std::vector<Point2> pts;
  std::vector<Rational> planted;
  const Rational kk(static_cast<long>(k));
  for (std::size_t j = 0; j < k; ++j) {
    const Rational jj(static_cast<long>(j));
    planted.push_back((jj * kk + 1) / (kk - jj));
    pts.push_back({planted.back(), random_rational(rng)});
  }
  for (const auto& p : distinct_points(rng, c - k, {}, planted)) pts.push_back(p);
  return chart_embed(diagonal_data(pts), NuPoint(1, kk), n);
}

}  // namespace nq
