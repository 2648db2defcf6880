#pragma once

// Framed representations of the Hirzebruch quiver and of its enhanced
// (two-copy) version, their relation residuals, and the gauge action.
//
// Arrow naming: the framing arrows W -> V0 are called I1..I(n-1) and the arrow
// V0 -> W is J. Some texts call the same arrows h_q and l; the data is the same.
// The framing space W is always one dimensional.

#include <string>
#include <vector>

#include "nestedquiver/ratmat.hpp"

namespace nq {

/// Representation of the Hirzebruch quiver with dimension vector (c0, c1, 1).
struct HirzRep {
  int n = 1;
  std::size_t c0 = 0;
  std::size_t c1 = 0;
  Matrix A1, A2;           // c1 x c0
  std::vector<Matrix> C;   // n matrices, c0 x c1
  std::vector<Matrix> I;   // n-1 matrices, c0 x 1
  Matrix J;                // 1 x c0

  /// All-zero representation with c0 = c1 = c.
  static HirzRep zero(int n, std::size_t c);

  /// Throws Error(ShapeMismatch) when a shape disagrees with (n, c0, c1).
  void validate() const;

  friend bool operator==(const HirzRep&, const HirzRep&) = default;
};

/// Representation of the enhanced quiver with dimension vector
/// (c, c, c - cp, c - cp, 1). Stability and the correspondence need cp < c;
/// cp = c (empty quotient) is accepted only as a direct-sum summand.
struct EnhRep {
  int n = 1;
  std::size_t c = 0;
  std::size_t cp = 0;
  HirzRep left;            // vertices 1, 2 and the framing
  Matrix Ap1, Ap2;         // (c-cp) x (c-cp), vertex 3 -> vertex 4
  std::vector<Matrix> Cp;  // n matrices, vertex 4 -> vertex 3
  Matrix F1, F2;           // (c-cp) x c

  std::size_t quotient_dim() const { return c - cp; }

  static EnhRep zero(int n, std::size_t c, std::size_t cp);
  void validate() const;

  friend bool operator==(const EnhRep&, const EnhRep&) = default;
};

/// Element (g1, g2, g3, g4) of GL(c) x GL(c) x GL(c-cp) x GL(c-cp).
class GaugeElement {
 public:
  /// Throws Error(Singular) if any component is not invertible.
  GaugeElement(Matrix g1, Matrix g2, Matrix g3, Matrix g4);

  static GaugeElement identity(std::size_t c, std::size_t cp);

  const Matrix& g(int k) const { return g_[k - 1]; }
  const Matrix& g_inv(int k) const { return inv_[k - 1]; }

  GaugeElement inverse() const;

 private:
  Matrix g_[4];
  Matrix inv_[4];
};

/// Relation residuals of the Hirzebruch quiver.
///   n = 1:  [A1 C1 A2 - A2 C1 A1]
///   n >= 2: for q = 1..n-1, A1 Cq - A2 C(q+1) then Cq A1 - C(q+1) A2 - Iq J.
std::vector<Matrix> hirz_residuals(const HirzRep& x);
std::vector<std::string> hirz_residual_names(int n);

/// Residuals of the enhanced quiver relations, in this order:
///   1. hirz_residuals(left)
///   2. the same relation list for the quotient copy (Ap*, Cp*, no framing):
///      n = 1: Ap1 Cp1 Ap2 - Ap2 Cp1 Ap1;
///      n >= 2: Ap1 Cpq - Ap2 Cp(q+1), Cpq Ap1 - Cp(q+1) Ap2 for each q
///   3. F2 A1 - Ap1 F1, F2 A2 - Ap2 F1
///   4. F1 Ct - Cpt F2 for t = 1..n
///   5. F1 Iq for q = 1..n-1
std::vector<Matrix> enh_residuals(const EnhRep& x);
std::vector<std::string> enh_residual_names(int n);

bool all_zero(const std::vector<Matrix>& residuals);

/// (g2 Ai g1^-1, g1 Ci g2^-1, g1 Iq, J g1^-1, g4 Api g3^-1, g3 Cpi g4^-1,
///  g3 F1 g1^-1, g4 F2 g2^-1). Throws Error(ShapeMismatch) on size mismatch.
EnhRep act(const GaugeElement& g, const EnhRep& x);

/// Action of (g1, g2) on a Hirzebruch representation.
HirzRep act(const Matrix& g1, const Matrix& g2, const HirzRep& x);

/// Block direct sum sharing the one-dimensional framing: J = (J_a J_b),
/// I_q stacked.
HirzRep direct_sum(const HirzRep& a, const HirzRep& b);
EnhRep direct_sum(const EnhRep& a, const EnhRep& b);

}  // namespace nq
