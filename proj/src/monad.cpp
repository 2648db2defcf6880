#include "nestedquiver/monad.hpp"

namespace nq {

CoxPoly::CoxPoly(const Rational& constant) { add({0, 0, 0, 0}, constant); }

CoxPoly CoxPoly::var(int index) {
  CoxExponents e{0, 0, 0, 0};
  e[static_cast<std::size_t>(index)] = 1;
  return term(e, 1);
}

CoxPoly CoxPoly::term(const CoxExponents& e, const Rational& coeff) {
  CoxPoly p;
  p.add(e, coeff);
  return p;
}

void CoxPoly::add(const CoxExponents& e, const Rational& v) {
  if (sgn(v) == 0) return;
  auto [it, fresh] = terms_.emplace(e, v);
  if (!fresh) {
    it->second += v;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::optional<Bidegree> CoxPoly::bidegree(int n) const {
  std::optional<Bidegree> out;
  for (const auto& [e, v] : terms_) {
    const Bidegree b{static_cast<long>(e[2] + e[3]),
                     static_cast<long>(e[0] + e[1]) - static_cast<long>(n) * static_cast<long>(e[2])};
    if (out && *out != b) throw Error(ErrorCode::DomainError, "polynomial is not bihomogeneous");
    out = b;
  }
  return out;
}

Rational CoxPoly::evaluate(const std::array<Rational, 4>& pt) const {
  Rational sum = 0;
  for (const auto& [e, v] : terms_) {
    Rational t = v;
    for (std::size_t k = 0; k < 4; ++k) t *= pow(pt[k], e[k]);
    sum += t;
  }
  return sum;
}

CoxPoly& CoxPoly::operator+=(const CoxPoly& o) {
  for (const auto& [e, v] : o.terms_) add(e, v);
  return *this;
}

CoxPoly operator*(const Rational& s, const CoxPoly& a) {
  CoxPoly out;
  for (const auto& [e, v] : a.terms_) out.add(e, s * v);
  return out;
}

CoxPoly cox_mul(const CoxPoly& f, const CoxPoly& g) {
  CoxPoly out;
  for (const auto& [ef, vf] : f.terms())
    for (const auto& [eg, vg] : g.terms())
      out += CoxPoly::term({ef[0] + eg[0], ef[1] + eg[1], ef[2] + eg[2], ef[3] + eg[3]}, vf * vg);
  return out;
}

CoxPoly cox_pow(const CoxPoly& f, unsigned k) {
  CoxPoly out(Rational(1));
  for (unsigned i = 0; i < k; ++i) out = cox_mul(out, f);
  return out;
}

std::string to_string(const CoxPoly& f) {
  if (f.is_zero()) return "0";
  static const char* names[4] = {"y1", "y2", "se", "sinf"};
  std::string out;
  for (const auto& [e, v] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(v);
    for (std::size_t k = 0; k < 4; ++k)
      if (e[k] > 0) out += std::string("*") + names[k] + (e[k] > 1 ? "^" + std::to_string(e[k]) : "");
  }
  return out;
}

bool CoxMatrix::is_zero() const {
  for (const auto& p : entries)
    if (!p.is_zero()) return false;
  return true;
}

Matrix CoxMatrix::evaluate(const std::array<Rational, 4>& pt) const {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*this)(i, j).evaluate(pt);
  return m;
}

CoxMatrix operator*(const CoxMatrix& a, const CoxMatrix& b) {
  if (a.cols != b.rows) throw Error(ErrorCode::ShapeMismatch, "Cox matrix product shape mismatch");
  CoxMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        if (!b(k, j).is_zero()) out(i, j) += cox_mul(a(i, k), b(k, j));
    }
  return out;
}

// ---------------------------------------------------------------------------

MonadComplex build_monad(const HirzRep& x, const NuPoint& nu) {
  if (x.c0 != x.c1) throw Error(ErrorCode::ShapeMismatch, "monad needs c0 = c1");
  const PencilCombos p = pencil_combos(x, nu);
  Matrix ainv;
  try {
    ainv = invert(p.Anu);
  } catch (const Error&) {
    throw Error(ErrorCode::SingularAnu, "A_nu is singular at nu = " + to_string(nu));
  }
  const std::size_t c = x.c0;
  const Matrix b1t = (ainv * p.Dnu).transpose();
  const Matrix b2t = (p.Cnu * p.Anu).transpose();
  const Matrix it = p.Inu.transpose();
  const Matrix jt = x.J.transpose();

  const CoxPoly y1 = CoxPoly::var(0), y2 = CoxPoly::var(1), se = CoxPoly::var(2), sinf = CoxPoly::var(3);
  const CoxPoly y1nu = nu.nu1() * y1 + nu.nu2() * y2;
  const CoxPoly y2nu = (-nu.nu2()) * y1 + nu.nu1() * y2;
  const CoxPoly top = cox_mul(cox_pow(y2nu, static_cast<unsigned>(x.n)), se);

  // First block entry (i, j) and second block entry (i, j).
  auto first = [&](std::size_t i, std::size_t j) {
    CoxPoly f = b2t(i, j) * sinf;
    if (i == j) f += top;
    return f;
  };
  auto second = [&](std::size_t i, std::size_t j) {
    CoxPoly f = b1t(i, j) * y2nu;
    if (i == j) f += y1nu;
    return f;
  };

  MonadComplex m;
  m.n = x.n;
  m.c = c;
  m.nu = nu;
  m.alpha = CoxMatrix(2 * c + 1, c);
  m.beta = CoxMatrix(c, 2 * c + 1);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      m.alpha(i, j) = first(i, j);
      m.alpha(c + i, j) = second(i, j);
      m.beta(i, j) = second(i, j);
      m.beta(i, c + j) = -first(i, j);
    }
  for (std::size_t j = 0; j < c; ++j) {
    m.alpha(2 * c, j) = (-it(0, j)) * y2nu;
    m.beta(j, 2 * c) = jt(j, 0) * sinf;
  }
  m.middle.assign(c, Bidegree{1, -1});
  m.middle.insert(m.middle.end(), c + 1, Bidegree{0, 0});
  return m;
}

bool bidegrees_consistent(const MonadComplex& m) {
  auto minus = [](const Bidegree& a, const Bidegree& b) { return Bidegree{a.first - b.first, a.second - b.second}; };
  try {
    for (std::size_t i = 0; i < m.alpha.rows; ++i)
      for (std::size_t j = 0; j < m.alpha.cols; ++j)
        if (auto b = m.alpha(i, j).bidegree(m.n); b && *b != minus(m.middle[i], m.source)) return false;
    for (std::size_t i = 0; i < m.beta.rows; ++i)
      for (std::size_t j = 0; j < m.beta.cols; ++j)
        if (auto b = m.beta(i, j).bidegree(m.n); b && *b != minus(m.target, m.middle[j])) return false;
  } catch (const Error&) {
    return false;
  }
  return true;
}

CoxMatrix check_complex(const MonadComplex& m) { return m.beta * m.alpha; }

std::pair<std::size_t, std::size_t> fiber_ranks(const MonadComplex& m, const std::array<Rational, 4>& pt) {
  if ((sgn(pt[0]) == 0 && sgn(pt[1]) == 0) || (sgn(pt[2]) == 0 && sgn(pt[3]) == 0))
    throw Error(ErrorCode::ExcludedLocus, "point lies on the excluded locus of Sigma_n");
  return {rank(m.alpha.evaluate(pt)), rank(m.beta.evaluate(pt))};
}

std::vector<std::array<Rational, 4>> monad_sample_points() {
  std::vector<std::array<Rational, 4>> pts;
  for (long k = 0; k < 15; ++k)
    pts.push_back({frac(3 * k + 7, 11), frac(5 * k + 13, 17), frac(2 * k + 19, 23), frac(k + 29, 31)});
  for (long k = 0; k < 5; ++k)
    pts.push_back({frac(4 * k + 37, 41), frac(6 * k + 43, 47), frac(k + 53, 59), Rational(0)});
  return pts;
}

}  // namespace nq
