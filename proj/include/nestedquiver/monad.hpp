#pragma once

// Cox-ring arithmetic on the Hirzebruch surface Sigma_n and the monad of a
// Hirzebruch representation.
//
// Variables (y1, y2, s_e, s_inf) with bidegrees (0,1), (0,1), (1,-n), (1,0).
// On chart nu the rotated coordinates are y1nu = nu1 y1 + nu2 y2 and
// y2nu = -nu2 y1 + nu1 y2. With b1 = A_nu^-1 D_nu, b2 = C_nu A_nu:
//   alpha = [ id y2nu^n s_e + b2^T s_inf ; id y1nu + b1^T y2nu ; -I_nu^T y2nu ]
//   beta  = [ id y1nu + b1^T y2nu , -(id y2nu^n s_e + b2^T s_inf) , J^T s_inf ]
// so that beta alpha = -([b1,b2] + I_nu J)^T y2nu s_inf.

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "nestedquiver/chart.hpp"

namespace nq {

using CoxExponents = std::array<unsigned, 4>;
using Bidegree = std::pair<long, long>;

class CoxPoly {
 public:
  CoxPoly() = default;
  explicit CoxPoly(const Rational& constant);
  static CoxPoly var(int index);  // 0: y1, 1: y2, 2: s_e, 3: s_inf
  static CoxPoly term(const CoxExponents& e, const Rational& coeff);

  const std::map<CoxExponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Bidegree shared by all terms, nullopt for 0. Throws Error(DomainError)
  /// for inhomogeneous polynomials.
  std::optional<Bidegree> bidegree(int n) const;

  Rational evaluate(const std::array<Rational, 4>& pt) const;

  CoxPoly& operator+=(const CoxPoly& o);
  friend CoxPoly operator+(CoxPoly a, const CoxPoly& b) { return a += b; }
  friend CoxPoly operator-(const CoxPoly& a) { return Rational(-1) * a; }
  friend CoxPoly operator-(CoxPoly a, const CoxPoly& b) { return a += -b; }
  friend CoxPoly operator*(const Rational& s, const CoxPoly& a);
  friend bool operator==(const CoxPoly&, const CoxPoly&) = default;

 private:
  void add(const CoxExponents& e, const Rational& v);
  std::map<CoxExponents, Rational> terms_;
};

CoxPoly cox_mul(const CoxPoly& f, const CoxPoly& g);
CoxPoly cox_pow(const CoxPoly& f, unsigned k);
std::string to_string(const CoxPoly& f);

struct CoxMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<CoxPoly> entries;  // row-major

  CoxMatrix() = default;
  CoxMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}
  CoxPoly& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const CoxPoly& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  bool is_zero() const;
  Matrix evaluate(const std::array<Rational, 4>& pt) const;
};

CoxMatrix operator*(const CoxMatrix& a, const CoxMatrix& b);

struct MonadComplex {
  int n = 1;
  std::size_t c = 0;
  NuPoint nu{1, 0};
  CoxMatrix alpha;  // (2c+1) x c
  CoxMatrix beta;   // c x (2c+1)
  // Twists of the three terms: V0* (0,-1); V0* (1,-1) + V0* (0,0) + W (0,0); V0* (1,0).
  Bidegree source{0, -1};
  std::vector<Bidegree> middle;
  Bidegree target{1, 0};
};

/// Throws Error(SingularAnu).
MonadComplex build_monad(const HirzRep& x, const NuPoint& nu);

/// Every nonzero entry of alpha and beta has the bidegree of its slot.
bool bidegrees_consistent(const MonadComplex& m);

/// beta * alpha.
CoxMatrix check_complex(const MonadComplex& m);

/// Exact ranks of alpha and beta at a point given in homogeneous Cox
/// coordinates (y1, y2, s_e, s_inf). Throws Error(ExcludedLocus).
std::pair<std::size_t, std::size_t> fiber_ranks(const MonadComplex& m, const std::array<Rational, 4>& pt);

/// 20 fixed points, the last 5 on the line s_inf = 0, chosen away from small
/// rational coordinates.
std::vector<std::array<Rational, 4>> monad_sample_points();

}  // namespace nq
