#include "nestedquiver/ideals.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

namespace nq {

std::size_t monomial_count(std::size_t d) { return (d + 1) * (d + 2) / 2; }

std::size_t monomial_index(const Monomial& m) {
  const std::size_t k = m.first + m.second;
  return k * (k + 1) / 2 + m.second;
}

Monomial monomial_at(std::size_t index) {
  std::size_t k = 0;
  while (monomial_count(k) <= index) ++k;
  const auto b = static_cast<unsigned>(index - k * (k + 1) / 2);
  return {static_cast<unsigned>(k) - b, b};
}

// ---------------------------------------------------------------------------
// Poly2

Poly2::Poly2(const Rational& constant) { set({0, 0}, constant); }

Poly2 Poly2::monomial(unsigned a, unsigned b, const Rational& coeff) {
  Poly2 p;
  p.set({a, b}, coeff);
  return p;
}

void Poly2::set(const Monomial& m, const Rational& v) {
  if (sgn(v) == 0)
    terms_.erase(m);
  else
    terms_[m] = v;
}

int Poly2::degree() const {
  int d = -1;
  for (const auto& [m, v] : terms_) d = std::max(d, static_cast<int>(m.first + m.second));
  return d;
}

Rational Poly2::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Matrix Poly2::to_row(std::size_t d) const {
  if (degree() > static_cast<int>(d))
    throw Error(ErrorCode::DomainError, "polynomial degree exceeds the truncation bound");
  Matrix row(1, monomial_count(d));
  for (const auto& [m, v] : terms_) row(0, monomial_index(m)) = v;
  return row;
}

Poly2 Poly2::from_row(const Matrix& row) {
  Poly2 p;
  for (std::size_t j = 0; j < row.cols(); ++j) p.set(monomial_at(j), row(0, j));
  return p;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [m, v] : o.terms_) set(m, coeff(m) + v);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [m, v] : o.terms_) set(m, coeff(m) - v);
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 out;
  for (const auto& [ma, va] : a.terms_)
    for (const auto& [mb, vb] : b.terms_) {
      const Monomial m{ma.first + mb.first, ma.second + mb.second};
      out.set(m, out.coeff(m) + va * vb);
    }
  return out;
}

Poly2 operator*(const Rational& s, const Poly2& a) {
  Poly2 out;
  for (const auto& [m, v] : a.terms_) out.set(m, s * v);
  return out;
}

std::string to_string(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    return monomial_index(l.first) > monomial_index(r.first);
  });
  std::string out;
  for (const auto& [m, v] : terms) {
    const bool neg = sgn(v) < 0;
    const Rational mag = neg ? Rational(-v) : v;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono;
    auto var = [&](const char* name, unsigned e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    var("x", m.first);
    var("y", m.second);
    if (mono.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += to_string(mag) + "*" + mono;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  Poly2 parse() {
    Poly2 p = expression();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, "polynomial \"" + std::string(s_) + "\": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  unsigned exponent() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an exponent");
    return static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
  }
  Poly2 expression() {
    bool neg = eat('-');
    if (!neg) eat('+');
    Poly2 p = term();
    if (neg) p = Rational(-1) * p;
    for (;;) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        return p;
    }
  }
  Poly2 term() {
    Poly2 p = power();
    for (;;) {
      skip();
      if (eat('*')) {
        p = p * power();
      } else if (eat('/')) {
        Poly2 q = power();
        if (q.degree() != 0) fail("division by a non-constant");
        p = (1 / q.coeff({0, 0})) * p;
      } else if (pos_ < s_.size() && (s_[pos_] == 'x' || s_[pos_] == 'y' || s_[pos_] == '(')) {
        p = p * power();
      } else {
        return p;
      }
    }
  }
  Poly2 power() {
    Poly2 base = atom();
    if (eat('^')) {
      const unsigned e = exponent();
      Poly2 out(Rational(1));
      for (unsigned i = 0; i < e; ++i) out = out * base;
      return out;
    }
    return base;
  }
  Poly2 atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char ch = s_[pos_];
    if (ch == 'x' || ch == 'y') {
      ++pos_;
      return ch == 'x' ? Poly2::x() : Poly2::y();
    }
    if (ch == '(') {
      ++pos_;
      Poly2 p = expression();
      if (!eat(')')) fail("missing ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly2(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::size_t degree_of_index(std::size_t j) {
  const Monomial m = monomial_at(j);
  return m.first + m.second;
}

// Row span with pivots on the largest monomials, zero rows dropped.
std::pair<Matrix, std::vector<std::size_t>> leading_echelon(const Matrix& rows) {
  const std::size_t m = rows.cols();
  Matrix rev(rows.rows(), m);
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < m; ++j) rev(i, m - 1 - j) = rows(i, j);
  EchelonForm e = rref(std::move(rev));
  Matrix out(e.pivots.size(), m);
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) out(i, m - 1 - j) = e.reduced(i, j);
    pivots.push_back(m - 1 - e.pivots[i]);
  }
  return {out, pivots};
}

Matrix shift_row(const Matrix& row, const Monomial& by, std::size_t d) {
  Matrix out(1, monomial_count(d));
  for (std::size_t j = 0; j < row.cols(); ++j) {
    if (sgn(row(0, j)) == 0) continue;
    const Monomial m = monomial_at(j);
    const Monomial s{m.first + by.first, m.second + by.second};
    if (s.first + s.second > d) throw Error(ErrorCode::DomainError, "shift exceeds the degree bound");
    out(0, monomial_index(s)) = row(0, j);
  }
  return out;
}

}  // namespace

Poly2 Poly2::parse(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------------------
// ZeroCycleIdeal

ZeroCycleIdeal::ZeroCycleIdeal(std::size_t d, const Matrix& rows) : d_(d) {
  if (rows.cols() != monomial_count(d))
    throw Error(ErrorCode::ShapeMismatch, "ideal rows must have one column per monomial of degree <= d");
  std::tie(basis_, pivots_) = leading_echelon(rows);
  c_ = monomial_count(d) - pivots_.size();
  for (const Monomial& m : standard_monomials())
    if (m.first + m.second >= d) throw Error(ErrorCode::NotAnIdeal, "a standard monomial reaches the degree bound");
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    if (degree_of_index(pivots_[i]) >= d) continue;
    const Matrix row = basis_.row_at(i);
    for (const Monomial& by : {Monomial{1, 0}, Monomial{0, 1}})
      if (!normal_form(shift_row(row, by, d)).is_zero())
        throw Error(ErrorCode::NotAnIdeal, "span is not closed under multiplication by " +
                                               std::string(by.first ? "x" : "y"));
  }
}

ZeroCycleIdeal ZeroCycleIdeal::unit() { return ZeroCycleIdeal(0, Matrix{{1}}); }

ZeroCycleIdeal ZeroCycleIdeal::monomial(const std::vector<Monomial>& stairs) {
  std::size_t c = stairs.size();
  std::vector<bool> inside(monomial_count(c), false);
  for (const auto& m : stairs) {
    if (m.first + m.second >= c) throw Error(ErrorCode::NotAnIdeal, "staircase cell out of range");
    inside[monomial_index(m)] = true;
  }
  std::vector<std::size_t> outside;
  for (std::size_t j = 0; j < inside.size(); ++j)
    if (!inside[j]) outside.push_back(j);
  Matrix rows(outside.size(), inside.size());
  for (std::size_t i = 0; i < outside.size(); ++i) rows(i, outside[i]) = 1;
  ZeroCycleIdeal out(c, rows);
  if (out.c() != c) throw Error(ErrorCode::NotAnIdeal, "staircase has repeated cells");
  return out;
}

ZeroCycleIdeal ZeroCycleIdeal::from_generators(const std::vector<Poly2>& generators) {
  int top = 0;
  for (const auto& g : generators) top = std::max(top, g.degree());
  constexpr std::size_t kMaxDegree = 24;
  for (std::size_t d = std::max<std::size_t>(static_cast<std::size_t>(top), 1); d <= kMaxDegree; ++d) {
    std::vector<Matrix> rows;
    for (const auto& g : generators) {
      if (g.is_zero()) continue;
      const Matrix gr = g.to_row(d);
      const auto room = d - static_cast<std::size_t>(g.degree());
      for (std::size_t j = 0; j < monomial_count(room); ++j) rows.push_back(shift_row(gr, monomial_at(j), d));
    }
    Matrix all(rows.size(), monomial_count(d));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < all.cols(); ++j) all(i, j) = rows[i](0, j);
    auto [span, pivots] = leading_echelon(all);
    if (!pivots.empty() && pivots.back() == 0) return unit();
    // Candidate quotient: standard monomials must all sit below degree d.
    std::vector<bool> is_pivot(all.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> std_idx;
    for (std::size_t j = 0; j < all.cols(); ++j)
      if (!is_pivot[j]) std_idx.push_back(j);
    if (std_idx.empty() || degree_of_index(std_idx.back()) >= d) continue;
    auto nf = [&](Matrix r) {
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        const Rational f = r(0, pivots[i]);
        if (sgn(f) != 0) r -= f * span.row_at(i);
      }
      return r;
    };
    const std::size_t c = std_idx.size();
    Matrix mx(c, c), my(c, c);
    for (std::size_t k = 0; k < c; ++k) {
      Matrix unit_row(1, all.cols());
      unit_row(0, std_idx[k]) = 1;
      const Matrix rx = nf(shift_row(unit_row, {1, 0}, d));
      const Matrix ry = nf(shift_row(unit_row, {0, 1}, d));
      for (std::size_t i = 0; i < c; ++i) {
        mx(i, k) = rx(0, std_idx[i]);
        my(i, k) = ry(0, std_idx[i]);
      }
    }
    AdhmData a{c, mx.transpose(), my.transpose(), Matrix(1, c)};
    a.e(0, 0) = 1;
    if (!commutator(a.b1, a.b2).is_zero()) continue;
    bool kills = true;
    for (const auto& g : generators) {
      if (g.is_zero()) continue;
      const auto gd = static_cast<std::size_t>(g.degree());
      if (!(g.to_row(gd) * evaluation_matrix(a, gd)).is_zero()) {
        kills = false;
        break;
      }
    }
    if (!kills) continue;
    // The data define an ideal containing the generators whose colength is at
    // most that of the generated ideal, so the two coincide.
    return ideal_from_adhm(a);
  }
  throw Error(ErrorCode::NotAnIdeal, "generators do not define a zero-dimensional ideal of small degree");
}

std::vector<Monomial> ZeroCycleIdeal::standard_monomials() const {
  std::vector<bool> is_pivot(monomial_count(d_), false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<Monomial> out;
  for (std::size_t j = 0; j < is_pivot.size(); ++j)
    if (!is_pivot[j]) out.push_back(monomial_at(j));
  return out;
}

Matrix ZeroCycleIdeal::normal_form(const Matrix& row) const {
  if (row.rows() != 1 || row.cols() != monomial_count(d_))
    throw Error(ErrorCode::ShapeMismatch, "normal_form expects a coefficient row of degree <= d");
  Matrix r = row;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational f = r(0, pivots_[i]);
    if (sgn(f) != 0) r -= f * basis_.row_at(i);
  }
  return r;
}

bool ZeroCycleIdeal::contains(const Poly2& f) const {
  if (f.is_zero()) return true;
  if (f.degree() > static_cast<int>(d_)) {
    if (c_ == 0) return true;
    return with_degree_bound(static_cast<std::size_t>(f.degree())).contains(f);
  }
  return normal_form(f.to_row(d_)).is_zero();
}

std::vector<Poly2> ZeroCycleIdeal::polys() const {
  std::vector<Poly2> out;
  for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back(Poly2::from_row(basis_.row_at(i)));
  return out;
}

ZeroCycleIdeal ZeroCycleIdeal::with_degree_bound(std::size_t D) const {
  if (D == d_) return *this;
  if (D < c_) throw Error(ErrorCode::DomainError, "degree bound below the colength");
  return ideal_from_adhm(adhm_from_ideal(*this), D);
}

std::size_t colength(const ZeroCycleIdeal& i) { return i.c(); }

bool is_subideal(const ZeroCycleIdeal& i, const ZeroCycleIdeal& j) {
  const std::size_t d = std::max(i.d(), j.d());
  const ZeroCycleIdeal a = i.with_degree_bound(d), b = j.with_degree_bound(d);
  for (std::size_t r = 0; r < a.basis().rows(); ++r)
    if (!b.normal_form(a.basis().row_at(r)).is_zero()) return false;
  return true;
}

ZeroCycleIdeal ideal_from_adhm(const AdhmData& a) { return ideal_from_adhm(a, a.c); }

ZeroCycleIdeal ideal_from_adhm(const AdhmData& a, std::size_t d) {
  a.validate();
  if (!commutator(a.b1, a.b2).is_zero()) throw Error(ErrorCode::NotCommuting, "[b1,b2] != 0");
  const Matrix ev = evaluation_matrix(a, d);
  const std::size_t r = rank(ev);
  if (r < a.c)
    throw Error(ErrorCode::NotCostable,
                "closure of e has dimension " + std::to_string(r) + " < " + std::to_string(a.c));
  return ZeroCycleIdeal(d, kernel_basis(ev.transpose()).transpose());
}

AdhmData adhm_from_ideal(const ZeroCycleIdeal& ideal) {
  const std::size_t c = ideal.c();
  AdhmData a{c, Matrix(c, c), Matrix(c, c), Matrix(1, c)};
  if (c == 0) return a;
  const auto stds = ideal.standard_monomials();
  if (stds.front() != Monomial{0, 0}) throw Error(ErrorCode::NotAnIdeal, "1 lies in a proper ideal");
  for (const auto& m : stds)
    if (m.first + m.second >= ideal.d())
      throw Error(ErrorCode::NotAnIdeal, "standard monomial at the degree bound");
  std::vector<std::size_t> idx;
  for (const auto& m : stds) idx.push_back(monomial_index(m));
  for (std::size_t k = 0; k < c; ++k) {
    Matrix unit_row(1, monomial_count(ideal.d()));
    unit_row(0, idx[k]) = 1;
    const Matrix rx = ideal.normal_form(shift_row(unit_row, {1, 0}, ideal.d()));
    const Matrix ry = ideal.normal_form(shift_row(unit_row, {0, 1}, ideal.d()));
    for (std::size_t i = 0; i < c; ++i) {
      a.b1(k, i) = rx(0, idx[i]);
      a.b2(k, i) = ry(0, idx[i]);
    }
  }
  a.e(0, 0) = 1;
  if (!commutator(a.b1, a.b2).is_zero()) throw Error(ErrorCode::NotAnIdeal, "multiplication tables do not commute");
  if (ideal_from_adhm(a, ideal.d()) != ideal)
    throw Error(ErrorCode::NotAnIdeal, "span is not the truncation of an ideal");
  return a;
}

// ---------------------------------------------------------------------------
// Charts of Xi_n

NuPoint canonical_chart(const ZeroCycleIdeal& big, const NuPoint& nu, int n) {
  const HirzRep x = chart_embed(adhm_from_ideal(big), nu, n);
  return find_regular_nu(x.A1, x.A2);
}

NestedIdealPair transport(const NestedIdealPair& p, const NuPoint& to, int n) {
  if (p.nu == to) return p;
  auto move = [&](const ZeroCycleIdeal& i) {
    try {
      return ideal_from_adhm(nq::transport(adhm_from_ideal(i), p.nu, to, n));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularAnu) throw;
      throw Error(ErrorCode::ChartUnavailable, "cycle meets the fiber removed from chart " + to_string(to));
    }
  };
  return NestedIdealPair{to, move(p.big), move(p.small)};
}

NestedIdealPair normalize_chart(const NestedIdealPair& p, int n) {
  return transport(p, canonical_chart(p.big, p.nu, n), n);
}

// ---------------------------------------------------------------------------
// Partitions

std::vector<std::vector<unsigned>> partitions(unsigned m) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned left, unsigned max_part) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, m, m);
  return out;
}

std::vector<Monomial> staircase(const std::vector<unsigned>& lambda) {
  std::vector<Monomial> cells;
  for (unsigned i = 0; i < lambda.size(); ++i)
    for (unsigned j = 0; j < lambda[i]; ++j) cells.push_back({j, i});
  return cells;
}

bool partition_contains(const std::vector<unsigned>& outer, const std::vector<unsigned>& inner) {
  if (inner.size() > outer.size()) return false;
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

std::vector<MonomialPairSpec> enumerate_monomial_specs(unsigned cp, unsigned c, int charts) {
  if (cp >= c) throw Error(ErrorCode::DomainError, "need 0 <= cp < c");
  if (charts != 1 && charts != 2) throw Error(ErrorCode::DomainError, "charts must be 1 or 2");
  std::vector<MonomialPairSpec> out;
  auto nested = [](unsigned small, unsigned big) {
    std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>> pairs;
    for (const auto& lam : partitions(big))
      for (const auto& mu : partitions(small))
        if (partition_contains(lam, mu)) pairs.emplace_back(lam, mu);
    return pairs;
  };
  const unsigned lowest = charts == 1 ? c : 0;
  for (unsigned c0 = c + 1; c0-- > lowest;) {
    const unsigned cI = c - c0;
    for (unsigned cp0 = std::min(cp, c0) + 1; cp0-- > 0;) {
      const unsigned cpI = cp - cp0;
      if (cpI > cI) continue;
      for (const auto& [l0, m0] : nested(cp0, c0))
        for (const auto& [lI, mI] : nested(cpI, cI)) out.push_back({l0, m0, lI, mI});
    }
  }
  return out;
}

NestedIdealPair monomial_pair(const MonomialPairSpec& spec, int n) {
  auto ideal = [](const std::vector<unsigned>& lam) { return ZeroCycleIdeal::monomial(staircase(lam)); };
  const NuPoint p0{1, 0}, pinf{0, 1};
  if (spec.lambdaI.empty()) return NestedIdealPair{p0, ideal(spec.lambda0), ideal(spec.mu0)};
  if (spec.lambda0.empty()) return normalize_chart(NestedIdealPair{pinf, ideal(spec.lambdaI), ideal(spec.muI)}, n);
  const NuPoint both{1, 1};
  auto glue = [&](const std::vector<unsigned>& at0, const std::vector<unsigned>& atI) {
    const AdhmData a0 = nq::transport(adhm_from_ideal(ideal(at0)), p0, both, n);
    const AdhmData aI = nq::transport(adhm_from_ideal(ideal(atI)), pinf, both, n);
    return ideal_from_adhm(direct_sum(a0, aI));
  };
  return normalize_chart(NestedIdealPair{both, glue(spec.lambda0, spec.lambdaI), glue(spec.mu0, spec.muI)}, n);
}

std::vector<NestedIdealPair> enumerate_nested_monomial(unsigned cp, unsigned c, int charts, int n) {
  std::vector<NestedIdealPair> out;
  for (const auto& s : enumerate_monomial_specs(cp, c, charts)) out.push_back(monomial_pair(s, n));
  return out;
}

// ---------------------------------------------------------------------------
// Approximate support

std::vector<SupportPoint> support_approx(const AdhmData& a, double tol) {
  a.validate();
  if (!commutator(a.b1, a.b2).is_zero()) throw Error(ErrorCode::NotCommuting, "[b1,b2] != 0");
  if (!(tol > 0)) throw Error(ErrorCode::DomainError, "tolerance must be positive");
  const auto c = static_cast<Eigen::Index>(a.c);
  if (c == 0) return {};
  Eigen::MatrixXcd b1(c, c), b2(c, c);
  for (Eigen::Index i = 0; i < c; ++i)
    for (Eigen::Index j = 0; j < c; ++j) {
      b1(i, j) = a.b1(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
      b2(i, j) = a.b2(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
    }
  // A generic combination separates distinct joint eigenvalues.
  const std::complex<double> t(0.5772156649015329, 0.2309182716);
  const Eigen::MatrixXcd l = b1 + t * b2;
  const Eigen::VectorXcd ev = Eigen::ComplexEigenSolver<Eigen::MatrixXcd>(l, false).eigenvalues();

  // Single-linkage clusters at distance tol.
  std::vector<int> cluster(static_cast<std::size_t>(c), -1);
  int count = 0;
  for (Eigen::Index i = 0; i < c; ++i) {
    if (cluster[static_cast<std::size_t>(i)] >= 0) continue;
    std::vector<Eigen::Index> stack{i};
    cluster[static_cast<std::size_t>(i)] = count;
    while (!stack.empty()) {
      const Eigen::Index k = stack.back();
      stack.pop_back();
      for (Eigen::Index j = 0; j < c; ++j)
        if (cluster[static_cast<std::size_t>(j)] < 0 && std::abs(ev(j) - ev(k)) <= tol) {
          cluster[static_cast<std::size_t>(j)] = count;
          stack.push_back(j);
        }
    }
    ++count;
  }
  std::vector<std::complex<double>> centers(static_cast<std::size_t>(count));
  std::vector<std::size_t> mult(static_cast<std::size_t>(count), 0);
  for (Eigen::Index i = 0; i < c; ++i) {
    centers[static_cast<std::size_t>(cluster[static_cast<std::size_t>(i)])] += ev(i);
    ++mult[static_cast<std::size_t>(cluster[static_cast<std::size_t>(i)])];
  }
  for (int k = 0; k < count; ++k) centers[static_cast<std::size_t>(k)] /= static_cast<double>(mult[static_cast<std::size_t>(k)]);
  for (Eigen::Index i = 0; i < c; ++i)
    for (Eigen::Index j = 0; j < c; ++j)
      if (cluster[static_cast<std::size_t>(i)] != cluster[static_cast<std::size_t>(j)] &&
          std::abs(ev(i) - ev(j)) <= 4 * tol)
        throw Error(ErrorCode::IllConditioned, "eigenvalue clusters are not separated at this tolerance");

  std::vector<SupportPoint> out;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(c, c);
  for (int k = 0; k < count; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    double radius = 1.0;
    for (int m = 0; m < count; ++m)
      if (m != k) radius = std::min(radius, std::abs(centers[static_cast<std::size_t>(m)] - centers[ku]) / 2);
    // Riesz projector by the trapezoid rule on a circle.
    constexpr int kNodes = 64;
    Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(c, c);
    for (int q = 0; q < kNodes; ++q) {
      const std::complex<double> w = std::polar(1.0, 2 * std::numbers::pi * q / kNodes);
      const std::complex<double> z = centers[ku] + radius * w;
      proj += (z * id - l).inverse() * (radius * w) / static_cast<double>(kNodes);
    }
    const double m = static_cast<double>(mult[ku]);
    out.push_back({(b1 * proj).trace() / m, (b2 * proj).trace() / m, mult[ku]});
  }
  std::sort(out.begin(), out.end(), [](const SupportPoint& l, const SupportPoint& r) {
    if (l.x.real() != r.x.real()) return l.x.real() < r.x.real();
    return l.y.real() < r.y.real();
  });
  return out;
}

}  // namespace nq
