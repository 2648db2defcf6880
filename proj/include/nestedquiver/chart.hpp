#pragma once

// Pencil charts: reduction of a Hirzebruch representation to ADHM data on the
// chart attached to a point nu of P^1, and the inverse embedding.
//
// Conventions (fixed throughout the library):
//   A_nu = nu2 A1 + nu1 A2,   D_nu = nu1 A1 - nu2 A2,
//   b1 = A_nu^-1 D_nu,  b2 = C_nu A_nu,  e = J   (all acting on V0).
// Linear data are stored as matrices acting on column vectors; e is a row.

#include <optional>
#include <vector>

#include "nestedquiver/quiver.hpp"

namespace nq {

class NuPoint {
 public:
  /// Normalizes so that the first nonzero coordinate is 1.
  /// Throws Error(DomainError) for (0, 0).
  NuPoint(Rational nu1, Rational nu2);

  const Rational& nu1() const { return nu1_; }
  const Rational& nu2() const { return nu2_; }
  /// nu1^2 + nu2^2, never zero over Q.
  Rational norm2() const { return nu1_ * nu1_ + nu2_ * nu2_; }

  friend bool operator==(const NuPoint&, const NuPoint&) = default;

 private:
  Rational nu1_, nu2_;
};

std::string to_string(const NuPoint& nu);

/// The frozen sample [1,0], [1,1], ..., [1,count-1].
std::vector<NuPoint> nu_sample(std::size_t count);

struct AdhmData {
  std::size_t c = 0;
  Matrix b1, b2;  // c x c
  Matrix e;       // 1 x c

  /// Throws Error(ShapeMismatch) on inconsistent shapes.
  void validate() const;
  friend bool operator==(const AdhmData&, const AdhmData&) = default;
};

struct PencilCombos {
  Matrix Anu, Dnu, Cnu, Inu;
};

Matrix pencil_a(const Matrix& A1, const Matrix& A2, const NuPoint& nu);

/// First nu in nu_sample(c + 1) with A_nu invertible.
/// Throws Error(IrregularPencil) when every sample is singular.
NuPoint find_regular_nu(const Matrix& A1, const Matrix& A2);

/// Every nu of nu_sample(count) with A_nu invertible, in sample order.
std::vector<NuPoint> regular_nus(const Matrix& A1, const Matrix& A2, std::size_t count);

/// C_nu = sum_q binom(n-1,q-1) nu1^(n-q) nu2^(q-1) C_q,
/// I_nu = (nu1^2+nu2^2) sum_q binom(n-2,q-1) nu1^(n-q-1) nu2^(q-1) I_q (zero for n = 1).
PencilCombos pencil_combos(const HirzRep& x, const NuPoint& nu);

/// Throws Error(SingularAnu) or Error(RelationsViolated) if [b1,b2] != 0.
AdhmData chart_extract(const HirzRep& x, const NuPoint& nu);

/// Representation with A_nu = id, D_nu = b1, C_nu A_nu = b2, I = 0, J = e:
///   A1 = (nu2 id + nu1 b1) / N,  A2 = (nu1 id - nu2 b1) / N,  N = nu1^2 + nu2^2,
///   C_q = A1^(q-1) A2^(n-q) b2 = sum_k sigma(q-1, k) b1^k b2.
/// Requires [b1,b2] = 0 (Error(NotCommuting) otherwise).
HirzRep chart_embed(const AdhmData& a, const NuPoint& nu, int n);

/// Row p holds the coefficients of (nu2 z1 + nu1 z2)^p (nu1 z1 - nu2 z2)^(n-1-p)
/// on z1^(n-1-q) z2^q, divided by N^(n-1).
Matrix sigma_matrix(const NuPoint& nu, int n);

/// Greedy degree-lex basis e b1^i b2^j of the row space; rewrites the data in
/// it, so e becomes (1, 0, ..., 0). Throws Error(NotCostable).
AdhmData canonical_form(const AdhmData& a);

/// Rows e f(b1, b2) for the monomials f of degree <= d in degree-lex order
/// (1, x, y, x^2, xy, y^2, ...). Row count (d+1)(d+2)/2.
Matrix evaluation_matrix(const AdhmData& a, std::size_t d);

/// Block sum with e = (e_a e_b).
AdhmData direct_sum(const AdhmData& a, const AdhmData& b);

/// Data of the same representation read on another chart:
/// chart_extract(chart_embed(a, from, n), to).
AdhmData transport(const AdhmData& a, const NuPoint& from, const NuPoint& to, int n);

/// Exact sequence 0 -> small -> big -> quotient -> 0 of ADHM data.
/// incl (c x c') satisfies big.b_i incl = incl small.b_i and big.e incl = small.e;
/// quot ((c-c') x c) spans the left kernel of incl; quot b_i = qb_i quot.
struct NestedAdhmData {
  AdhmData small, big;
  Matrix incl, quot;
  Matrix qb1, qb2;
};

/// Throws Error(NotInjective) or Error(NotIntertwining).
NestedAdhmData build_nested_adhm(const AdhmData& small, const AdhmData& big, const Matrix& incl);

}  // namespace nq
