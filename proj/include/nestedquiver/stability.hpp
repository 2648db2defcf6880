#pragma once

// Stability for the Hirzebruch quiver (cone Gamma_c) and the enhanced quiver.

#include <optional>
#include <string>

#include "nestedquiver/chart.hpp"

namespace nq {

struct GammaParam {
  Rational theta0, theta1;
};

struct EnhThetaParam {
  Rational theta1, theta2, theta3, theta4;
};

struct StabilityVerdict {
  bool stable = false;
  std::optional<std::string> witness;  // present when unstable
  std::optional<NuPoint> nu;           // chart used, when one was found

  static StabilityVerdict ok(std::optional<NuPoint> nu = std::nullopt) { return {true, std::nullopt, nu}; }
  static StabilityVerdict fail(std::string why, std::optional<NuPoint> nu = std::nullopt) {
    return {false, std::move(why), nu};
  }
};

/// theta0 > 0 and -theta0 < theta1 < -((c-1)/c) theta0.
bool in_gamma_c(const GammaParam& p, std::size_t c);

/// (theta1, theta2) in Gamma_c, theta3 < 0, theta4 < 0 and
/// theta1 + theta2 + (theta3 + theta4)(c - cp) > 0.
bool in_enh_cone(const EnhThetaParam& p, std::size_t c, std::size_t cp);

/// (1, -(2c-1)/(2c), -1/(8c(c-cp)), -1/(8c(c-cp))), inside the cone for all 0 <= cp < c.
EnhThetaParam default_theta(std::size_t c, std::size_t cp);

/// No nonzero (b1,b2)-invariant subspace inside ker e, i.e. the rows
/// e b1^i b2^j span everything. Throws Error(NotCommuting).
StabilityVerdict is_costable(const Matrix& b1, const Matrix& b2, const Matrix& e);

/// (i) n >= 2: every I_q vanishes; (ii) the pencil is regular;
/// (iii) the chart data at the first regular nu are costable.
StabilityVerdict is_gamma_stable(const HirzRep& x);
/// Same test on a prescribed chart. Throws Error(SingularAnu).
StabilityVerdict is_gamma_stable_at(const HirzRep& x, const NuPoint& nu);

/// (C1) F1 and F2 surjective and (C2) left part Gamma_c-stable.
/// Throws Error(ConeViolation) outside the enhanced cone.
StabilityVerdict is_theta_stable(const EnhRep& x, const EnhThetaParam& p);

/// Restriction to (ker F1, ker F2) in canonical kernel bases.
/// Throws Error(NotWellDefined) when the kernels are not preserved.
HirzRep kernel_subrep(const EnhRep& x);

/// Every column of every matrix has at most one nonzero entry.
bool is_fixed_form(const EnhRep& x);
bool is_fixed_form(const HirzRep& x);

/// King semistability checked over all arrow-closed tuples of coordinate
/// subspaces. Subrepresentations S with S_W = 0 need S inside ker J and
/// theta.dim S <= 0; those with S_W = W need Im I inside S and
/// theta.dim S <= theta.dim V. Throws Error(NotFixedForm).
bool oracle_semistable_fixed(const EnhRep& x, const EnhThetaParam& p);
bool oracle_semistable_fixed(const HirzRep& x, const GammaParam& p);

}  // namespace nq
