#include "nestedquiver/chart.hpp"

namespace nq {

NuPoint::NuPoint(Rational nu1, Rational nu2) {
  if (sgn(nu1) != 0) {
    nu2_ = nu2 / nu1;
    nu1_ = 1;
  } else if (sgn(nu2) != 0) {
    nu1_ = 0;
    nu2_ = 1;
  } else {
    throw Error(ErrorCode::DomainError, "nu = [0,0] is not a point of P^1");
  }
}

std::string to_string(const NuPoint& nu) { return "[" + to_string(nu.nu1()) + "," + to_string(nu.nu2()) + "]"; }

std::vector<NuPoint> nu_sample(std::size_t count) {
  std::vector<NuPoint> out;
  for (std::size_t k = 0; k < count; ++k) out.emplace_back(1, Rational(static_cast<long>(k)));
  return out;
}

void AdhmData::validate() const {
  if (b1.rows() != c || b1.cols() != c || b2.rows() != c || b2.cols() != c || e.rows() != 1 ||
      e.cols() != c)
    throw Error(ErrorCode::ShapeMismatch, "ADHM data shapes do not match c = " + std::to_string(c));
}

// ---------------------------------------------------------------------------

Matrix pencil_a(const Matrix& A1, const Matrix& A2, const NuPoint& nu) {
  return nu.nu2() * A1 + nu.nu1() * A2;
}

std::vector<NuPoint> regular_nus(const Matrix& A1, const Matrix& A2, std::size_t count) {
  if (!A1.is_square() || A1.rows() != A2.rows() || A1.cols() != A2.cols())
    throw Error(ErrorCode::ShapeMismatch, "pencil needs two square matrices of equal size");
  std::vector<NuPoint> out;
  for (const auto& nu : nu_sample(count))
    if (sgn(determinant(pencil_a(A1, A2, nu))) != 0) out.push_back(nu);
  return out;
}

NuPoint find_regular_nu(const Matrix& A1, const Matrix& A2) {
  if (!A1.is_square() || A1.rows() != A2.rows() || A1.cols() != A2.cols())
    throw Error(ErrorCode::ShapeMismatch, "pencil needs two square matrices of equal size");
  for (const auto& nu : nu_sample(A1.rows() + 1))
    if (sgn(determinant(pencil_a(A1, A2, nu))) != 0) return nu;
  throw Error(ErrorCode::IrregularPencil,
              "nu2 A1 + nu1 A2 is singular at all " + std::to_string(A1.rows() + 1) + " samples");
}

PencilCombos pencil_combos(const HirzRep& x, const NuPoint& nu) {
  x.validate();
  PencilCombos p;
  p.Anu = pencil_a(x.A1, x.A2, nu);
  p.Dnu = nu.nu1() * x.A1 - nu.nu2() * x.A2;
  const auto n = static_cast<unsigned>(x.n);
  p.Cnu = Matrix(x.c0, x.c1);
  for (unsigned q = 1; q <= n; ++q)
    p.Cnu += binomial(n - 1, q - 1) * pow(nu.nu1(), n - q) * pow(nu.nu2(), q - 1) * x.C[q - 1];
  p.Inu = Matrix(x.c0, 1);
  for (unsigned q = 1; q + 1 <= n; ++q)
    p.Inu += binomial(n - 2, q - 1) * pow(nu.nu1(), n - q - 1) * pow(nu.nu2(), q - 1) * x.I[q - 1];
  p.Inu *= nu.norm2();
  return p;
}

AdhmData chart_extract(const HirzRep& x, const NuPoint& nu) {
  if (x.c0 != x.c1) throw Error(ErrorCode::ShapeMismatch, "chart reduction needs c0 = c1");
  const PencilCombos p = pencil_combos(x, nu);
  Matrix ainv;
  try {
    ainv = invert(p.Anu);
  } catch (const Error&) {
    throw Error(ErrorCode::SingularAnu, "A_nu is singular at nu = " + to_string(nu));
  }
  AdhmData a;
  a.c = x.c0;
  a.b1 = ainv * p.Dnu;
  a.b2 = p.Cnu * p.Anu;
  a.e = x.J;
  if (!commutator(a.b1, a.b2).is_zero())
    throw Error(ErrorCode::RelationsViolated, "extracted b1, b2 do not commute at nu = " + to_string(nu));
  return a;
}

// ---------------------------------------------------------------------------

Matrix sigma_matrix(const NuPoint& nu, int n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "n must be >= 1");
  const auto m = static_cast<std::size_t>(n);
  // Polynomials in z2 (z1 is homogenized away); coefficient k is on z1^(m-1-k) z2^k.
  auto mul = [](const std::vector<Rational>& f, const Rational& a0, const Rational& a1) {
    std::vector<Rational> g(f.size() + 1);
    for (std::size_t k = 0; k < f.size(); ++k) {
      g[k] += a0 * f[k];
      g[k + 1] += a1 * f[k];
    }
    return g;
  };
  const Rational scale = 1 / pow(nu.norm2(), static_cast<unsigned>(n - 1));
  Matrix sigma(m, m);
  for (std::size_t p = 0; p < m; ++p) {
    std::vector<Rational> f{Rational(1)};
    for (std::size_t i = 0; i < p; ++i) f = mul(f, nu.nu2(), nu.nu1());
    for (std::size_t i = p; i + 1 < m; ++i) f = mul(f, nu.nu1(), -nu.nu2());
    for (std::size_t k = 0; k < m; ++k) sigma(p, k) = f[k] * scale;
  }
  return sigma;
}

HirzRep chart_embed(const AdhmData& a, const NuPoint& nu, int n) {
  a.validate();
  if (!commutator(a.b1, a.b2).is_zero())
    throw Error(ErrorCode::NotCommuting, "chart_embed needs commuting b1, b2");
  HirzRep x = HirzRep::zero(n, a.c);
  const Rational inv_n = 1 / nu.norm2();
  const Matrix id = Matrix::identity(a.c);
  x.A1 = inv_n * (nu.nu2() * id + nu.nu1() * a.b1);
  x.A2 = inv_n * (nu.nu1() * id - nu.nu2() * a.b1);
  const Matrix sigma = sigma_matrix(nu, n);
  std::vector<Matrix> powers_b2{a.b2};
  for (int k = 1; k < n; ++k) powers_b2.push_back(a.b1 * powers_b2.back());
  for (int p = 0; p < n; ++p) {
    Matrix cq(a.c, a.c);
    for (int k = 0; k < n; ++k) {
      const Rational& s = sigma(static_cast<std::size_t>(p), static_cast<std::size_t>(k));
      if (sgn(s) != 0) cq += s * powers_b2[static_cast<std::size_t>(k)];
    }
    x.C[static_cast<std::size_t>(p)] = std::move(cq);
  }
  x.J = a.e;
  return x;
}

AdhmData transport(const AdhmData& a, const NuPoint& from, const NuPoint& to, int n) {
  return chart_extract(chart_embed(a, from, n), to);
}

// ---------------------------------------------------------------------------

Matrix evaluation_matrix(const AdhmData& a, std::size_t d) {
  a.validate();
  // Degree k block: e x^(k-j) y^j for j = 0..k, built from the previous block.
  Matrix out((d + 1) * (d + 2) / 2, a.c);
  std::vector<Matrix> prev{a.e};
  std::size_t row = 0;
  auto put = [&](const Matrix& v) {
    for (std::size_t j = 0; j < a.c; ++j) out(row, j) = v(0, j);
    ++row;
  };
  put(a.e);
  for (std::size_t k = 1; k <= d; ++k) {
    std::vector<Matrix> cur;
    for (const auto& v : prev) cur.push_back(v * a.b1);
    cur.push_back(prev.back() * a.b2);
    for (const auto& v : cur) put(v);
    prev = std::move(cur);
  }
  return out;
}

AdhmData canonical_form(const AdhmData& a) {
  a.validate();
  if (a.c == 0) return a;
  const Matrix ev = evaluation_matrix(a, a.c - 1);
  Matrix t(0, a.c);
  std::size_t r = 0;
  for (std::size_t i = 0; i < ev.rows() && r < a.c; ++i) {
    Matrix trial = vstack(t, ev.row_at(i));
    if (rank(trial) > r) {
      t = std::move(trial);
      ++r;
    }
  }
  if (r < a.c)
    throw Error(ErrorCode::NotCostable,
                "closure of e has dimension " + std::to_string(r) + " < " + std::to_string(a.c));
  const Matrix tinv = invert(t);
  AdhmData out;
  out.c = a.c;
  out.b1 = t * a.b1 * tinv;
  out.b2 = t * a.b2 * tinv;
  out.e = a.e * tinv;
  return out;
}

AdhmData direct_sum(const AdhmData& a, const AdhmData& b) {
  AdhmData s;
  s.c = a.c + b.c;
  s.b1 = block_diagonal(a.b1, b.b1);
  s.b2 = block_diagonal(a.b2, b.b2);
  s.e = hstack(a.e, b.e);
  return s;
}

NestedAdhmData build_nested_adhm(const AdhmData& small, const AdhmData& big, const Matrix& incl) {
  small.validate();
  big.validate();
  if (incl.rows() != big.c || incl.cols() != small.c)
    throw Error(ErrorCode::ShapeMismatch, "inclusion must be c x c'");
  if (rank(incl) != small.c) throw Error(ErrorCode::NotInjective, "inclusion is not injective");
  if (big.b1 * incl != incl * small.b1 || big.b2 * incl != incl * small.b2)
    throw Error(ErrorCode::NotIntertwining, "inclusion does not intertwine b1, b2");
  if (big.e * incl != small.e) throw Error(ErrorCode::NotIntertwining, "inclusion does not intertwine e");
  NestedAdhmData d;
  d.small = small;
  d.big = big;
  d.incl = incl;
  d.quot = kernel_basis(incl.transpose()).transpose();
  // quot has full row rank; right inverse from its pivot columns.
  const auto right = solve(d.quot * d.quot.transpose(), Matrix::identity(d.quot.rows()));
  const Matrix r = d.quot.transpose() * *right;
  d.qb1 = d.quot * big.b1 * r;
  d.qb2 = d.quot * big.b2 * r;
  if (d.quot * big.b1 != d.qb1 * d.quot || d.quot * big.b2 != d.qb2 * d.quot)
    throw Error(ErrorCode::NotIntertwining, "image of the inclusion is not b-invariant");
  if (!commutator(d.qb1, d.qb2).is_zero())
    throw Error(ErrorCode::NotCommuting, "quotient maps do not commute");
  return d;
}

}  // namespace nq
