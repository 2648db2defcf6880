#include "doctest.h"

#include "fixtures.hpp"

using nq::Matrix;
using nq::NuPoint;
using nq::Rational;

TEST_CASE("worked nested example") {
  const nq::NestedIdealPair p{NuPoint(1, 0), fx::ideal({"y", "x^2"}), fx::ideal({"x", "y"})};
  const nq::EnhRep x = nq::nested_to_rep(p, 1);
  CHECK(x.left.A1 == Matrix{{0, 1}, {0, 0}});
  CHECK(x.left.A2 == Matrix::identity(2));
  CHECK(x.left.J == Matrix{{1, 0}});
  CHECK(x.Ap2 == Matrix{{1}});
  CHECK(x.F1 == Matrix{{0, 1}});
  CHECK(x.F2 == Matrix{{0, 1}});
  CHECK(nq::all_zero(nq::enh_residuals(x)));
  CHECK(nq::rep_to_nested(x) == p);
  CHECK(nq::rep_to_nested(fx::e3(), fx::cone_theta()) == p);
}

TEST_CASE("inclusion matrix") {
  // Standard monomials of (y, x^2) are 1, x; on (x, y) both evaluate to e = 1, b1 = 0.
  const Matrix incl = nq::nested_inclusion(fx::ideal({"y", "x^2"}), nq::adhm_from_ideal(fx::ideal({"x", "y"})));
  CHECK(incl == Matrix{{1}, {0}});
  const nq::NestedAdhmData d = nq::nested_adhm({NuPoint(1, 0), fx::ideal({"y", "x^2"}), fx::ideal({"x", "y"})});
  CHECK(d.quot.rows() == 1);
  CHECK((d.quot * d.incl).is_zero());
}

TEST_CASE("bad pairs are rejected") {
  auto expect = [](const nq::NestedIdealPair& p, nq::ErrorCode code) {
    try {
      nq::nested_to_rep(p, 1);
      FAIL("accepted a bad pair");
    } catch (const nq::Error& e) {
      CHECK(e.code() == code);
    }
  };
  expect({NuPoint(1, 0), fx::ideal({"x", "y"}), fx::ideal({"y", "x^2"})}, nq::ErrorCode::BadPair);
  expect({NuPoint(1, 0), fx::ideal({"x", "y"}), fx::ideal({"x", "y"})}, nq::ErrorCode::BadPair);
  expect({NuPoint(1, 0), fx::ideal({"y", "x^2"}), fx::ideal({"x - 1", "y"})}, nq::ErrorCode::BadPair);
}

TEST_CASE("unit small ideal") {
  const nq::NestedIdealPair p{NuPoint(1, 0), fx::ideal({"x", "y"}), nq::ZeroCycleIdeal::unit()};
  for (int n = 1; n <= 3; ++n) {
    const nq::EnhRep x = nq::nested_to_rep(p, n);
    CHECK(x.cp == 0);
    CHECK(nq::all_zero(nq::enh_residuals(x)));
    CHECK(nq::is_theta_stable(x, nq::default_theta(1, 0)).stable);
    CHECK(nq::rep_to_nested(x) == p);
  }
}

TEST_CASE("monomial pairs round trip on every chart count") {
  for (int n = 1; n <= 3; ++n)
    for (unsigned c = 1; c <= 3; ++c)
      for (unsigned cp = 0; cp < c; ++cp)
        for (const auto& p : nq::enumerate_nested_monomial(cp, c, 2, n)) {
          const nq::EnhRep x = nq::nested_to_rep(p, n);
          CHECK(nq::all_zero(nq::enh_residuals(x)));
          CHECK(nq::is_theta_stable(x, nq::default_theta(c, cp)).stable);
          CHECK(nq::rep_to_nested(x) == p);
        }
}

TEST_CASE("random point pairs survive gauge scrambling") {
  nq::Rng rng(2024);
  for (int t = 0; t < 40; ++t) {
    const std::size_t c = 2 + static_cast<std::size_t>(t % 3), cp = 1 + static_cast<std::size_t>(t) % (c - 1);
    const int n = 1 + t % 3;
    const nq::PointPair pp = nq::random_point_pair(rng, c, cp, n);
    const nq::EnhRep x = nq::nested_to_rep(pp.pair, n);
    const nq::EnhRep y = nq::act(nq::random_gauge(rng, c, cp), x);
    CHECK(nq::rep_to_nested(y) == pp.pair);
    CHECK(nq::same_orbit(x, y, nq::default_theta(c, cp)));
    // The ideals vanish on the planted points, moved to the pair's chart.
    for (std::size_t k = 0; k < pp.points.size(); ++k) {
      const auto q = nq::transform_point(pp.points[k], pp.nu, pp.pair.nu, n);
      REQUIRE(q);
      for (const auto& f : pp.pair.big.polys()) CHECK(fx::eval(f, q->first, q->second) == 0);
      if (k < pp.cp)
        for (const auto& f : pp.pair.small.polys()) CHECK(fx::eval(f, q->first, q->second) == 0);
    }
  }
}

TEST_CASE("different pairs are different orbits") {
  const nq::NestedIdealPair a{NuPoint(1, 0), fx::ideal({"y", "x^2"}), fx::ideal({"x", "y"})};
  const nq::NestedIdealPair b{NuPoint(1, 0), fx::ideal({"x", "y^2"}), fx::ideal({"x", "y"})};
  CHECK_FALSE(nq::same_orbit(nq::nested_to_rep(a, 1), nq::nested_to_rep(b, 1), nq::default_theta(2, 1)));
}

TEST_CASE("unstable reps are refused") {
  nq::EnhRep x = fx::e3();
  x.F1 = Matrix(1, 2);
  try {
    nq::rep_to_nested(x, fx::cone_theta());
    FAIL("expected NotStable");
  } catch (const nq::Error& e) {
    CHECK(e.code() == nq::ErrorCode::NotStable);
  }
}
