#pragma once

// Worked examples shared by the test files.

#include <set>
#include <vector>

#include "nestedquiver/correspondence.hpp"
#include "nestedquiver/generators.hpp"

namespace fx {

using nq::Matrix;
using nq::Rational;

// n = 1, c = 1: A1 = 0, A2 = 1, C1 = 0, J = 1.
inline nq::HirzRep e1() {
  nq::HirzRep x = nq::HirzRep::zero(1, 1);
  x.A2 = Matrix{{1}};
  x.J = Matrix{{1}};
  return x;
}

// Data of (y, x^2): b1 = [[0,1],[0,0]], b2 = 0, e = (1,0).
inline nq::AdhmData e2() { return {2, Matrix{{0, 1}, {0, 0}}, Matrix(2, 2), Matrix{{1, 0}}}; }

// Nested example ((y, x^2), (x, y)) on chart [1,0], n = 1.
inline nq::EnhRep e3() {
  nq::EnhRep x = nq::EnhRep::zero(1, 2, 1);
  x.left.A1 = Matrix{{0, 1}, {0, 0}};
  x.left.A2 = Matrix::identity(2);
  x.left.J = Matrix{{1, 0}};
  x.Ap1 = Matrix{{0}};
  x.Ap2 = Matrix{{1}};
  x.F1 = Matrix{{0, 1}};
  x.F2 = Matrix{{0, 1}};
  return x;
}

inline nq::EnhThetaParam cone_theta() { return {1, Rational(-3, 5), Rational(-1, 10), Rational(-1, 10)}; }

inline nq::ZeroCycleIdeal ideal(std::initializer_list<const char*> gens) {
  std::vector<nq::Poly2> polys;
  for (const char* g : gens) polys.push_back(nq::Poly2::parse(g));
  return nq::ZeroCycleIdeal::from_generators(polys);
}

inline Rational eval(const nq::Poly2& f, const Rational& x, const Rational& y) {
  Rational s = 0;
  for (const auto& [m, v] : f.terms()) s += v * nq::pow(x, m.first) * nq::pow(y, m.second);
  return s;
}

// Random commuting pair: polynomials in one random matrix.
inline nq::AdhmData random_commuting(nq::Rng& rng, std::size_t c, bool costable_e = true) {
  Matrix m(c, c);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = nq::random_rational(rng, 2, 2);
  const Rational p = nq::random_rational(rng), q = nq::random_rational(rng), r = nq::random_rational(rng);
  nq::AdhmData a{c, m, p * Matrix::identity(c) + q * m + r * (m * m), Matrix(1, c)};
  for (std::size_t j = 0; j < c; ++j) a.e(0, j) = costable_e ? nq::random_rational(rng, 3, 1) : Rational(0);
  return a;
}

// Staircases of size m as cell sets, grown cell by cell (independent of
// the partition generator).
inline std::set<std::set<nq::Monomial>> staircases_by_growth(unsigned m) {
  std::set<std::set<nq::Monomial>> level{{}};
  for (unsigned k = 0; k < m; ++k) {
    std::set<std::set<nq::Monomial>> next;
    for (const auto& s : level)
      for (unsigned a = 0; a <= k; ++a)
        for (unsigned b = 0; a + b <= k; ++b) {
          const nq::Monomial cell{a, b};
          if (s.count(cell)) continue;
          if (a > 0 && !s.count({a - 1, b})) continue;
          if (b > 0 && !s.count({a, b - 1})) continue;
          auto t = s;
          t.insert(cell);
          next.insert(t);
        }
    level = std::move(next);
  }
  return level;
}

// Number of nested staircase pairs mu inside lambda with |lambda| = c, |mu| = cp.
inline std::size_t nested_count_oracle(unsigned cp, unsigned c) {
  std::size_t count = 0;
  const auto bigs = staircases_by_growth(c);
  const auto smalls = staircases_by_growth(cp);
  for (const auto& l : bigs)
    for (const auto& m : smalls) {
      bool inside = true;
      for (const auto& cell : m) inside = inside && l.count(cell);
      count += inside ? 1 : 0;
    }
  return count;
}

}  // namespace fx
