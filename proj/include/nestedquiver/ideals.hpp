#pragma once

// Zero-dimensional ideals of Q[x, y] stored as truncations to degree <= d.
//
// Monomial order: degree-lex with x < y, ascending: 1, x, y, x^2, xy, y^2, ...
// An ideal of colength c contains every monomial of degree >= c, so its
// truncation to degree c determines it.

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nestedquiver/chart.hpp"

namespace nq {

/// Exponent pair (a, b) for x^a y^b.
using Monomial = std::pair<unsigned, unsigned>;

std::size_t monomial_count(std::size_t d);
std::size_t monomial_index(const Monomial& m);
Monomial monomial_at(std::size_t index);

class Poly2 {
 public:
  Poly2() = default;
  explicit Poly2(const Rational& constant);
  static Poly2 monomial(unsigned a, unsigned b, const Rational& coeff = 1);
  static Poly2 x() { return monomial(1, 0); }
  static Poly2 y() { return monomial(0, 1); }

  /// Parses expressions such as "x^2 - 3/2*x*y + (x - 1)^2". Throws Error(ParseError).
  static Poly2 parse(std::string_view text);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  Rational coeff(const Monomial& m) const;

  /// Coefficient row in the degree-lex basis of degree <= d.
  Matrix to_row(std::size_t d) const;
  static Poly2 from_row(const Matrix& row);

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Rational& s, const Poly2& a);
  friend bool operator==(const Poly2&, const Poly2&) = default;

 private:
  void set(const Monomial& m, const Rational& v);
  std::map<Monomial, Rational> terms_;
};

/// Highest degree term first, e.g. "x^2 - x".
std::string to_string(const Poly2& p);

/// I intersected with polynomials of degree <= d, as a reduced echelon basis
/// whose pivots sit on the largest monomial of each row.
class ZeroCycleIdeal {
 public:
  ZeroCycleIdeal() = default;
  /// Canonicalizes the row span of `rows` (any spanning set). Throws
  /// Error(NotAnIdeal) unless the span is closed under x and y up to degree d.
  ZeroCycleIdeal(std::size_t d, const Matrix& rows);

  /// The unit ideal (colength 0).
  static ZeroCycleIdeal unit();
  /// Ideal generated by the given polynomials; must be zero-dimensional.
  static ZeroCycleIdeal from_generators(const std::vector<Poly2>& generators);
  /// Monomial ideal spanned by all monomials outside the given staircase.
  static ZeroCycleIdeal monomial(const std::vector<Monomial>& staircase);

  std::size_t c() const { return c_; }
  std::size_t d() const { return d_; }
  const Matrix& basis() const { return basis_; }

  /// Non-pivot monomials, ascending.
  std::vector<Monomial> standard_monomials() const;
  /// Normal form of a coefficient row (degree <= d): zero on pivot columns.
  Matrix normal_form(const Matrix& row) const;
  bool contains(const Poly2& f) const;
  /// Basis rows as polynomials.
  std::vector<Poly2> polys() const;
  /// Same ideal truncated at degree D >= c.
  ZeroCycleIdeal with_degree_bound(std::size_t D) const;

  friend bool operator==(const ZeroCycleIdeal&, const ZeroCycleIdeal&) = default;

 private:
  std::size_t c_ = 0;
  std::size_t d_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

std::size_t colength(const ZeroCycleIdeal& i);

/// True iff I is a subset of J.
bool is_subideal(const ZeroCycleIdeal& i, const ZeroCycleIdeal& j);

/// {f : e f(b1, b2) = 0} truncated at degree d (default c). Throws
/// Error(NotCommuting) or Error(NotCostable).
ZeroCycleIdeal ideal_from_adhm(const AdhmData& a);
ZeroCycleIdeal ideal_from_adhm(const AdhmData& a, std::size_t d);

/// Data on the dual of R/I in its standard-monomial basis: b1, b2 are the
/// transposed multiplication tables, e = (1, 0, ..., 0), so e f(b) is the
/// coordinate row of the normal form of f. Equals canonical_form of any
/// data with the same ideal. Throws Error(NotAnIdeal).
AdhmData adhm_from_ideal(const ZeroCycleIdeal& i);

/// Nested pair on a chart of Xi_n: big = I_Z (colength c), small = I_Z'
/// (colength c'), big is a subideal of small.
struct NestedIdealPair {
  NuPoint nu{1, 0};
  ZeroCycleIdeal big;
  ZeroCycleIdeal small;

  friend bool operator==(const NestedIdealPair&, const NestedIdealPair&) = default;
};

/// Partitions of m, parts descending, in lex-descending order.
std::vector<std::vector<unsigned>> partitions(unsigned m);
/// Cells x^j y^i for j < lambda_i.
std::vector<Monomial> staircase(const std::vector<unsigned>& lambda);
/// Young-diagram containment.
bool partition_contains(const std::vector<unsigned>& outer, const std::vector<unsigned>& inner);

struct MonomialPairSpec {
  std::vector<unsigned> lambda0, mu0;    // at the fixed point on chart [1,0]
  std::vector<unsigned> lambdaI, muI;    // at the fixed point on chart [0,1]
};

/// All nested monomial configurations with |lambda| = c, |mu| = cp, mu inside
/// lambda. charts = 1: the fixed point of chart [1,0] only; charts = 2: both
/// torus-fixed points, with lambda0/lambdaI running over all splits of c.
std::vector<MonomialPairSpec> enumerate_monomial_specs(unsigned cp, unsigned c, int charts);

/// First nu of the frozen sample that is regular for the representation the
/// big ideal defines on Xi_n (read on chart nu).
NuPoint canonical_chart(const ZeroCycleIdeal& big, const NuPoint& nu, int n);

/// The same nested cycle described on chart `to`. Throws Error(ChartUnavailable)
/// when A_to is singular for the cycle.
NestedIdealPair transport(const NestedIdealPair& p, const NuPoint& to, int n);

/// transport to canonical_chart.
NestedIdealPair normalize_chart(const NestedIdealPair& p, int n);

/// Pairs for enumerate_monomial_specs. Two-chart configurations are assembled
/// on chart [1,1] (which contains both fixed points) and then normalized.
NestedIdealPair monomial_pair(const MonomialPairSpec& spec, int n);
std::vector<NestedIdealPair> enumerate_nested_monomial(unsigned cp, unsigned c, int charts, int n = 1);

struct SupportPoint {
  std::complex<double> x, y;
  std::size_t multiplicity = 0;
};

/// Approximate joint spectrum of commuting b1, b2 (advisory only).
/// Throws Error(NotCommuting) or Error(IllConditioned).
std::vector<SupportPoint> support_approx(const AdhmData& a, double tol);

}  // namespace nq
