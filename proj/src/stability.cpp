#include "nestedquiver/stability.hpp"

#include <bit>
#include <cstdint>

namespace nq {

bool in_gamma_c(const GammaParam& p, std::size_t c) {
  if (c == 0) throw Error(ErrorCode::DomainError, "Gamma_c needs c >= 1");
  const Rational cc(static_cast<long>(c));
  return p.theta0 > 0 && -p.theta0 < p.theta1 && p.theta1 < -((cc - 1) / cc) * p.theta0;
}

bool in_enh_cone(const EnhThetaParam& p, std::size_t c, std::size_t cp) {
  if (cp >= c) throw Error(ErrorCode::DomainError, "need 0 <= cp < c");
  const Rational q(static_cast<long>(c - cp));
  return in_gamma_c({p.theta1, p.theta2}, c) && p.theta3 < 0 && p.theta4 < 0 &&
         p.theta1 + p.theta2 + (p.theta3 + p.theta4) * q > 0;
}

EnhThetaParam default_theta(std::size_t c, std::size_t cp) {
  if (cp >= c) throw Error(ErrorCode::DomainError, "need 0 <= cp < c");
  const Rational cc(static_cast<long>(c));
  const Rational small = Rational(-1) / (8 * cc * Rational(static_cast<long>(c - cp)));
  return {1, -(2 * cc - 1) / (2 * cc), small, small};
}

StabilityVerdict is_costable(const Matrix& b1, const Matrix& b2, const Matrix& e) {
  const std::size_t c = b1.rows();
  AdhmData a{c, b1, b2, e};
  a.validate();
  if (!commutator(b1, b2).is_zero()) throw Error(ErrorCode::NotCommuting, "[b1,b2] != 0");
  if (c == 0) return StabilityVerdict::ok();
  // Grow the closure of e under right multiplication until it stabilizes.
  Matrix span = e;
  std::size_t r = rank(span);
  Matrix frontier = e;
  while (r < c && frontier.rows() > 0) {
    Matrix next(0, c);
    const Matrix step = vstack(frontier * b1, frontier * b2);
    for (std::size_t i = 0; i < step.rows(); ++i) {
      Matrix trial = vstack(span, step.row_at(i));
      if (rank(trial) > r) {
        span = std::move(trial);
        ++r;
        next = vstack(next, step.row_at(i));
      }
    }
    frontier = std::move(next);
  }
  if (r < c)
    return StabilityVerdict::fail("costability closure rank " + std::to_string(r) + " < " + std::to_string(c));
  return StabilityVerdict::ok();
}

StabilityVerdict is_gamma_stable_at(const HirzRep& x, const NuPoint& nu) {
  x.validate();
  if (x.c0 != x.c1) throw Error(ErrorCode::ShapeMismatch, "Gamma_c-stability needs c0 = c1");
  for (std::size_t q = 0; q < x.I.size(); ++q)
    if (!x.I[q].is_zero()) return StabilityVerdict::fail("nonzero I" + std::to_string(q + 1), nu);
  const AdhmData a = chart_extract(x, nu);
  StabilityVerdict v = is_costable(a.b1, a.b2, a.e);
  v.nu = nu;
  if (!v.stable) *v.witness += " at chart " + to_string(nu);
  return v;
}

StabilityVerdict is_gamma_stable(const HirzRep& x) {
  x.validate();
  if (x.c0 != x.c1) throw Error(ErrorCode::ShapeMismatch, "Gamma_c-stability needs c0 = c1");
  for (std::size_t q = 0; q < x.I.size(); ++q)
    if (!x.I[q].is_zero()) return StabilityVerdict::fail("nonzero I" + std::to_string(q + 1));
  std::optional<NuPoint> nu;
  try {
    nu = find_regular_nu(x.A1, x.A2);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::IrregularPencil) throw;
    return StabilityVerdict::fail("irregular pencil");
  }
  return is_gamma_stable_at(x, *nu);
}

StabilityVerdict is_theta_stable(const EnhRep& x, const EnhThetaParam& p) {
  x.validate();
  if (x.cp >= x.c || !in_enh_cone(p, x.c, x.cp))
    throw Error(ErrorCode::ConeViolation, "stability parameter outside the enhanced cone");
  const std::size_t s = x.quotient_dim();
  if (const auto r = rank(x.F1); r < s)
    return StabilityVerdict::fail("(C1) F1 not surjective (rank " + std::to_string(r) + " < " + std::to_string(s) + ")");
  if (const auto r = rank(x.F2); r < s)
    return StabilityVerdict::fail("(C1) F2 not surjective (rank " + std::to_string(r) + " < " + std::to_string(s) + ")");
  StabilityVerdict v = is_gamma_stable(x.left);
  if (!v.stable) v.witness = "(C2) " + *v.witness;
  return v;
}

HirzRep kernel_subrep(const EnhRep& x) {
  x.validate();
  const Matrix k1 = kernel_basis(x.F1), k2 = kernel_basis(x.F2);
  if (k1.cols() != x.cp || k2.cols() != x.cp)
    throw Error(ErrorCode::NotWellDefined, "kernels of F1, F2 do not have dimension c'");
  auto restrict = [](const Matrix& target, const Matrix& rhs, const char* what) {
    auto s = solve(target, rhs);
    if (!s) throw Error(ErrorCode::NotWellDefined, std::string(what) + " does not preserve the kernels");
    return *s;
  };
  HirzRep y;
  y.n = x.n;
  y.c0 = y.c1 = x.cp;
  y.A1 = restrict(k2, x.left.A1 * k1, "A1");
  y.A2 = restrict(k2, x.left.A2 * k1, "A2");
  for (std::size_t q = 0; q < x.left.C.size(); ++q)
    y.C.push_back(restrict(k1, x.left.C[q] * k2, ("C" + std::to_string(q + 1)).c_str()));
  for (std::size_t q = 0; q < x.left.I.size(); ++q)
    y.I.push_back(restrict(k1, x.left.I[q], ("I" + std::to_string(q + 1)).c_str()));
  y.J = x.left.J * k1;
  return y;
}

// ---------------------------------------------------------------------------
// Oracle

namespace {

bool columns_fixed(const Matrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    int nonzero = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (sgn(m(i, j)) != 0) ++nonzero;
    if (nonzero > 1) return false;
  }
  return true;
}

// Arrow between two vertices of the coordinate model; vertex -1 is W.
struct Arrow {
  int from, to;
  const Matrix* m;
};

struct Model {
  std::vector<std::size_t> dims;  // vertex dimensions (W excluded)
  std::vector<Rational> theta;
  std::vector<Arrow> arrows;
};

bool closed(const Model& mdl, const std::vector<std::uint32_t>& mask, bool with_w) {
  for (const auto& a : mdl.arrows) {
    const std::uint32_t src = a.from < 0 ? (with_w ? 1u : 0u) : mask[static_cast<std::size_t>(a.from)];
    for (std::size_t j = 0; j < a.m->cols(); ++j) {
      if (!(src >> j & 1u)) continue;
      for (std::size_t i = 0; i < a.m->rows(); ++i) {
        if (sgn((*a.m)(i, j)) == 0) continue;
        const bool in = a.to < 0 ? with_w : (mask[static_cast<std::size_t>(a.to)] >> i & 1u);
        if (!in) return false;
      }
    }
  }
  return true;
}

bool semistable(const Model& mdl) {
  std::size_t total_bits = 0;
  for (auto d : mdl.dims) total_bits += d;
  if (total_bits > 24) throw Error(ErrorCode::DomainError, "oracle enumeration too large");
  Rational theta_v = 0;
  for (std::size_t k = 0; k < mdl.dims.size(); ++k) theta_v += mdl.theta[k] * Rational(static_cast<long>(mdl.dims[k]));
  std::vector<std::uint32_t> mask(mdl.dims.size());
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << total_bits); ++code) {
    std::uint64_t rest = code;
    Rational theta_s = 0;
    for (std::size_t k = 0; k < mdl.dims.size(); ++k) {
      mask[k] = static_cast<std::uint32_t>(rest & ((std::uint64_t{1} << mdl.dims[k]) - 1));
      rest >>= mdl.dims[k];
      theta_s += mdl.theta[k] * Rational(std::popcount(mask[k]));
    }
    if (closed(mdl, mask, false) && theta_s > 0) return false;
    if (closed(mdl, mask, true) && theta_s > theta_v) return false;
  }
  return true;
}

void add_hirz_arrows(Model& mdl, const HirzRep& x, int v0, int v1) {
  mdl.arrows.push_back({v0, v1, &x.A1});
  mdl.arrows.push_back({v0, v1, &x.A2});
  for (const auto& c : x.C) mdl.arrows.push_back({v1, v0, &c});
  for (const auto& i : x.I) mdl.arrows.push_back({-1, v0, &i});
  mdl.arrows.push_back({v0, -1, &x.J});
}

}  // namespace

bool is_fixed_form(const HirzRep& x) {
  if (!columns_fixed(x.A1) || !columns_fixed(x.A2) || !columns_fixed(x.J)) return false;
  for (const auto& c : x.C)
    if (!columns_fixed(c)) return false;
  for (const auto& i : x.I)
    if (!columns_fixed(i)) return false;
  return true;
}

bool is_fixed_form(const EnhRep& x) {
  if (!is_fixed_form(x.left) || !columns_fixed(x.Ap1) || !columns_fixed(x.Ap2) || !columns_fixed(x.F1) ||
      !columns_fixed(x.F2))
    return false;
  for (const auto& c : x.Cp)
    if (!columns_fixed(c)) return false;
  return true;
}

bool oracle_semistable_fixed(const HirzRep& x, const GammaParam& p) {
  x.validate();
  if (!is_fixed_form(x)) throw Error(ErrorCode::NotFixedForm, "representation is not in torus-fixed form");
  Model mdl{{x.c0, x.c1}, {p.theta0, p.theta1}, {}};
  add_hirz_arrows(mdl, x, 0, 1);
  return semistable(mdl);
}

bool oracle_semistable_fixed(const EnhRep& x, const EnhThetaParam& p) {
  x.validate();
  if (!is_fixed_form(x)) throw Error(ErrorCode::NotFixedForm, "representation is not in torus-fixed form");
  const std::size_t s = x.quotient_dim();
  Model mdl{{x.c, x.c, s, s}, {p.theta1, p.theta2, p.theta3, p.theta4}, {}};
  add_hirz_arrows(mdl, x.left, 0, 1);
  mdl.arrows.push_back({2, 3, &x.Ap1});
  mdl.arrows.push_back({2, 3, &x.Ap2});
  for (const auto& c : x.Cp) mdl.arrows.push_back({3, 2, &c});
  mdl.arrows.push_back({0, 2, &x.F1});
  mdl.arrows.push_back({1, 3, &x.F2});
  return semistable(mdl);
}

}  // namespace nq
