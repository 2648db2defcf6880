#include "doctest.h"

#include <random>

#include "nestedquiver/ratmat.hpp"

using nq::Matrix;
using nq::Rational;

TEST_CASE("rank of zero, identity and a rank-one matrix") {
  CHECK(nq::rank(Matrix(3, 3)) == 0);
  CHECK(nq::rank(Matrix::identity(3)) == 3);
  CHECK(nq::rank(Matrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("kernel bases") {
  CHECK(nq::kernel_basis(Matrix::identity(2)).cols() == 0);
  const Matrix k = nq::kernel_basis(Matrix{{1, 2}, {2, 4}});
  CHECK(k == Matrix{{-2}, {1}});
  CHECK(nq::kernel_basis(Matrix(1, 2)) == Matrix::identity(2));
}

TEST_CASE("inverses") {
  CHECK(nq::invert(Matrix::identity(3)) == Matrix::identity(3));
  CHECK(nq::invert(Matrix{{0, 1}, {1, 0}}) == Matrix{{0, 1}, {1, 0}});
  CHECK(nq::invert(Matrix{{1, 1}, {0, 1}}) == Matrix{{1, -1}, {0, 1}});
  try {
    nq::invert(Matrix{{1, 2}, {2, 4}});
    FAIL("expected Singular");
  } catch (const nq::Error& e) {
    CHECK(e.code() == nq::ErrorCode::Singular);
  }
  CHECK(nq::invert(Matrix(0, 0)).rows() == 0);
}

TEST_CASE("rational text round trip") {
  CHECK(nq::to_string(nq::frac(6, 4)) == "3/2");
  CHECK(nq::to_string(nq::frac(-4, 2)) == "-2");
  CHECK(nq::parse_rational(" -3/6 ") == Rational(-1, 2));
  CHECK(nq::parse_rational("7") == 7);
  CHECK(nq::frac(3, -6) == Rational(-1, 2));
  for (const char* bad : {"", "1/0", "a", "1/2/3", "--1", "1.5"}) {
    try {
      nq::parse_rational(bad);
      FAIL("accepted " << bad);
    } catch (const nq::Error& e) {
      CHECK(e.code() == nq::ErrorCode::ParseError);
    }
  }
}

TEST_CASE("determinant and solve") {
  CHECK(nq::determinant(Matrix{{2, 1}, {1, 3}}) == 5);
  CHECK(nq::determinant(Matrix{{0, 1}, {1, 0}}) == -1);
  CHECK(nq::determinant(Matrix{{Rational(1, 2), 0}, {0, Rational(2, 3)}}) == Rational(1, 3));
  const auto x = nq::solve(Matrix{{1, 1}, {1, -1}}, Matrix{{3}, {1}});
  REQUIRE(x);
  CHECK(*x == Matrix{{2}, {1}});
  CHECK_FALSE(nq::solve(Matrix{{1, 1}, {2, 2}}, Matrix{{1}, {3}}));
}

TEST_CASE("rank-nullity and exact inverses on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 4), dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    Matrix m(r, c);
    // Low-rank products make kernels non-trivial.
    const auto inner = static_cast<std::size_t>(dim(rng));
    Matrix a(r, inner), b(inner, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < inner; ++j) a(i, j) = nq::frac(num(rng), den(rng));
    for (std::size_t i = 0; i < inner; ++i)
      for (std::size_t j = 0; j < c; ++j) b(i, j) = nq::frac(num(rng), den(rng));
    m = a * b;
    const Matrix k = nq::kernel_basis(m);
    CHECK(nq::rank(m) + k.cols() == c);
    CHECK((m * k).is_zero());
    CHECK(nq::rank(k) == k.cols());
    CHECK(nq::rank(m) == nq::rref(m).pivots.size());
    if (r == c && nq::rank(m) == r) {
      const Matrix inv = nq::invert(m);
      CHECK(m * inv == Matrix::identity(r));
      CHECK(inv * m == Matrix::identity(r));
      CHECK(nq::determinant(m) * nq::determinant(inv) == 1);
    } else if (r == c) {
      CHECK(nq::determinant(m) == 0);
    }
  }
}
