#include "nestedquiver/quiver.hpp"

namespace nq {

namespace {

void expect_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& name) {
  if (m.rows() != rows || m.cols() != cols)
    throw Error(ErrorCode::ShapeMismatch, name + " is " + std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()) + ", expected " +
                                              std::to_string(rows) + "x" + std::to_string(cols));
}

}  // namespace

HirzRep HirzRep::zero(int n, std::size_t c) {
  HirzRep x;
  x.n = n;
  x.c0 = x.c1 = c;
  x.A1 = x.A2 = Matrix(c, c);
  x.C.assign(static_cast<std::size_t>(n), Matrix(c, c));
  x.I.assign(static_cast<std::size_t>(n - 1), Matrix(c, 1));
  x.J = Matrix(1, c);
  return x;
}

void HirzRep::validate() const {
  if (n < 1) throw Error(ErrorCode::ShapeMismatch, "n must be >= 1");
  expect_shape(A1, c1, c0, "A1");
  expect_shape(A2, c1, c0, "A2");
  if (C.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(n) + " C matrices");
  for (std::size_t q = 0; q < C.size(); ++q) expect_shape(C[q], c0, c1, "C" + std::to_string(q + 1));
  if (I.size() != static_cast<std::size_t>(n - 1))
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(n - 1) + " I matrices");
  for (std::size_t q = 0; q < I.size(); ++q) expect_shape(I[q], c0, 1, "I" + std::to_string(q + 1));
  expect_shape(J, 1, c0, "J");
}

EnhRep EnhRep::zero(int n, std::size_t c, std::size_t cp) {
  if (cp > c) throw Error(ErrorCode::ShapeMismatch, "cp must be <= c");
  EnhRep x;
  x.n = n;
  x.c = c;
  x.cp = cp;
  x.left = HirzRep::zero(n, c);
  const std::size_t s = c - cp;
  x.Ap1 = x.Ap2 = Matrix(s, s);
  x.Cp.assign(static_cast<std::size_t>(n), Matrix(s, s));
  x.F1 = x.F2 = Matrix(s, c);
  return x;
}

void EnhRep::validate() const {
  if (cp > c) throw Error(ErrorCode::ShapeMismatch, "cp must be <= c");
  if (left.n != n || left.c0 != c || left.c1 != c)
    throw Error(ErrorCode::ShapeMismatch, "left part does not have dimension (c, c)");
  left.validate();
  const std::size_t s = c - cp;
  expect_shape(Ap1, s, s, "Ap1");
  expect_shape(Ap2, s, s, "Ap2");
  if (Cp.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(n) + " Cp matrices");
  for (std::size_t t = 0; t < Cp.size(); ++t) expect_shape(Cp[t], s, s, "Cp" + std::to_string(t + 1));
  expect_shape(F1, s, c, "F1");
  expect_shape(F2, s, c, "F2");
}

// ---------------------------------------------------------------------------

GaugeElement::GaugeElement(Matrix g1, Matrix g2, Matrix g3, Matrix g4)
    : g_{std::move(g1), std::move(g2), std::move(g3), std::move(g4)} {
  for (int k = 0; k < 4; ++k) inv_[k] = invert(g_[k]);
}

GaugeElement GaugeElement::identity(std::size_t c, std::size_t cp) {
  return GaugeElement(Matrix::identity(c), Matrix::identity(c), Matrix::identity(c - cp),
                      Matrix::identity(c - cp));
}

GaugeElement GaugeElement::inverse() const { return GaugeElement(inv_[0], inv_[1], inv_[2], inv_[3]); }

// ---------------------------------------------------------------------------

std::vector<Matrix> hirz_residuals(const HirzRep& x) {
  std::vector<Matrix> out;
  if (x.n == 1) {
    out.push_back(x.A1 * x.C[0] * x.A2 - x.A2 * x.C[0] * x.A1);
    return out;
  }
  for (int q = 0; q + 1 < x.n; ++q) {
    out.push_back(x.A1 * x.C[q] - x.A2 * x.C[q + 1]);
    out.push_back(x.C[q] * x.A1 - x.C[q + 1] * x.A2 - x.I[q] * x.J);
  }
  return out;
}

std::vector<std::string> hirz_residual_names(int n) {
  std::vector<std::string> names;
  if (n == 1) return {"A1C1A2-A2C1A1"};
  for (int q = 1; q < n; ++q) {
    const std::string a = std::to_string(q), b = std::to_string(q + 1);
    names.push_back("A1C" + a + "-A2C" + b);
    names.push_back("C" + a + "A1-C" + b + "A2-I" + a + "J");
  }
  return names;
}

std::vector<Matrix> enh_residuals(const EnhRep& x) {
  std::vector<Matrix> out = hirz_residuals(x.left);
  if (x.n == 1) {
    out.push_back(x.Ap1 * x.Cp[0] * x.Ap2 - x.Ap2 * x.Cp[0] * x.Ap1);
  } else {
    for (int q = 0; q + 1 < x.n; ++q) {
      out.push_back(x.Ap1 * x.Cp[q] - x.Ap2 * x.Cp[q + 1]);
      out.push_back(x.Cp[q] * x.Ap1 - x.Cp[q + 1] * x.Ap2);
    }
  }
  out.push_back(x.F2 * x.left.A1 - x.Ap1 * x.F1);
  out.push_back(x.F2 * x.left.A2 - x.Ap2 * x.F1);
  for (int t = 0; t < x.n; ++t) out.push_back(x.F1 * x.left.C[t] - x.Cp[t] * x.F2);
  for (int q = 0; q + 1 < x.n; ++q) out.push_back(x.F1 * x.left.I[q]);
  return out;
}

std::vector<std::string> enh_residual_names(int n) {
  std::vector<std::string> names = hirz_residual_names(n);
  if (n == 1) {
    names.push_back("Ap1Cp1Ap2-Ap2Cp1Ap1");
  } else {
    for (int q = 1; q < n; ++q) {
      const std::string a = std::to_string(q), b = std::to_string(q + 1);
      names.push_back("Ap1Cp" + a + "-Ap2Cp" + b);
      names.push_back("Cp" + a + "Ap1-Cp" + b + "Ap2");
    }
  }
  names.push_back("F2A1-Ap1F1");
  names.push_back("F2A2-Ap2F1");
  for (int t = 1; t <= n; ++t) names.push_back("F1C" + std::to_string(t) + "-Cp" + std::to_string(t) + "F2");
  for (int q = 1; q < n; ++q) names.push_back("F1I" + std::to_string(q));
  return names;
}

bool all_zero(const std::vector<Matrix>& residuals) {
  for (const auto& r : residuals)
    if (!r.is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------

HirzRep act(const Matrix& g1, const Matrix& g2, const HirzRep& x) {
  x.validate();
  if (g1.rows() != x.c0 || g2.rows() != x.c1)
    throw Error(ErrorCode::ShapeMismatch, "gauge sizes do not match the representation");
  const Matrix g1i = invert(g1), g2i = invert(g2);
  HirzRep y = x;
  y.A1 = g2 * x.A1 * g1i;
  y.A2 = g2 * x.A2 * g1i;
  for (auto& c : y.C) c = g1 * c * g2i;
  for (auto& i : y.I) i = g1 * i;
  y.J = x.J * g1i;
  return y;
}

EnhRep act(const GaugeElement& g, const EnhRep& x) {
  x.validate();
  if (g.g(1).rows() != x.c || g.g(2).rows() != x.c || g.g(3).rows() != x.quotient_dim() ||
      g.g(4).rows() != x.quotient_dim())
    throw Error(ErrorCode::ShapeMismatch, "gauge sizes do not match the representation");
  EnhRep y = x;
  y.left.A1 = g.g(2) * x.left.A1 * g.g_inv(1);
  y.left.A2 = g.g(2) * x.left.A2 * g.g_inv(1);
  for (auto& c : y.left.C) c = g.g(1) * c * g.g_inv(2);
  for (auto& i : y.left.I) i = g.g(1) * i;
  y.left.J = x.left.J * g.g_inv(1);
  y.Ap1 = g.g(4) * x.Ap1 * g.g_inv(3);
  y.Ap2 = g.g(4) * x.Ap2 * g.g_inv(3);
  for (auto& c : y.Cp) c = g.g(3) * c * g.g_inv(4);
  y.F1 = g.g(3) * x.F1 * g.g_inv(1);
  y.F2 = g.g(4) * x.F2 * g.g_inv(2);
  return y;
}

HirzRep direct_sum(const HirzRep& a, const HirzRep& b) {
  if (a.n != b.n) throw Error(ErrorCode::ShapeMismatch, "direct sum of different n");
  HirzRep s;
  s.n = a.n;
  s.c0 = a.c0 + b.c0;
  s.c1 = a.c1 + b.c1;
  s.A1 = block_diagonal(a.A1, b.A1);
  s.A2 = block_diagonal(a.A2, b.A2);
  for (int q = 0; q < a.n; ++q) s.C.push_back(block_diagonal(a.C[q], b.C[q]));
  for (int q = 0; q + 1 < a.n; ++q) s.I.push_back(vstack(a.I[q], b.I[q]));
  s.J = hstack(a.J, b.J);
  return s;
}

EnhRep direct_sum(const EnhRep& a, const EnhRep& b) {
  EnhRep s;
  s.n = a.n;
  s.c = a.c + b.c;
  s.cp = a.cp + b.cp;
  s.left = direct_sum(a.left, b.left);
  s.Ap1 = block_diagonal(a.Ap1, b.Ap1);
  s.Ap2 = block_diagonal(a.Ap2, b.Ap2);
  for (int t = 0; t < a.n; ++t) s.Cp.push_back(block_diagonal(a.Cp[t], b.Cp[t]));
  s.F1 = block_diagonal(a.F1, b.F1);
  s.F2 = block_diagonal(a.F2, b.F2);
  return s;
}

}  // namespace nq
