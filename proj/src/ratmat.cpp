#include "nestedquiver/ratmat.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace nq {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::ConeViolation: return "ConeViolation";
    case ErrorCode::NotWellDefined: return "NotWellDefined";
    case ErrorCode::NotFixedForm: return "NotFixedForm";
    case ErrorCode::IrregularPencil: return "IrregularPencil";
    case ErrorCode::SingularAnu: return "SingularAnu";
    case ErrorCode::RelationsViolated: return "RelationsViolated";
    case ErrorCode::NotCostable: return "NotCostable";
    case ErrorCode::NotIntertwining: return "NotIntertwining";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::NotStable: return "NotStable";
    case ErrorCode::BadPair: return "BadPair";
    case ErrorCode::ChartUnavailable: return "ChartUnavailable";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ExcludedLocus: return "ExcludedLocus";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  auto is_integer = [](std::string_view part) {
    if (part.empty()) return false;
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) return false;
    return std::all_of(part.begin() + static_cast<std::ptrdiff_t>(start), part.end(),
                       [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

Rational frac(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DomainError, "zero denominator");
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational r = 1;
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

// ---------------------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw Error(ErrorCode::ShapeMismatch, "entry count does not match rows x cols");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column(const std::vector<Rational>& values) {
  return Matrix(values.size(), 1, values);
}

Matrix Matrix::row(const std::vector<Rational>& values) {
  return Matrix(1, values.size(), values);
}

Matrix Matrix::diagonal(const std::vector<Rational>& values) {
  Matrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::col(std::size_t j) const { return cols_range(j, 1); }

Matrix Matrix::row_at(std::size_t i) const { return rows_range(i, 1); }

Matrix Matrix::cols_range(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw Error(ErrorCode::ShapeMismatch, "column range out of bounds");
  Matrix r(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) r(i, j) = (*this)(i, first + j);
  return r;
}

Matrix Matrix::rows_range(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw Error(ErrorCode::ShapeMismatch, "row range out of bounds");
  Matrix r(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(first + i, j);
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Rational Matrix::max_abs() const {
  Rational best = 0;
  for (const auto& q : data_) best = std::max(best, Rational(abs(q)));
  return best;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorCode::ShapeMismatch, "matrix sum of different shapes");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorCode::ShapeMismatch, "matrix difference of different shapes");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& q : data_) q *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorCode::ShapeMismatch, "product of " + std::to_string(a.rows_) + "x" +
                                              std::to_string(a.cols_) + " and " +
                                              std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows()) throw Error(ErrorCode::ShapeMismatch, "hstack row mismatch");
  Matrix r(left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) r(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j) r(i, left.cols() + j) = right(i, j);
  }
  return r;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) throw Error(ErrorCode::ShapeMismatch, "vstack column mismatch");
  Matrix r(top.rows() + bottom.rows(), top.cols());
  for (std::size_t j = 0; j < r.cols(); ++j) {
    for (std::size_t i = 0; i < top.rows(); ++i) r(i, j) = top(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i) r(top.rows() + i, j) = bottom(i, j);
  }
  return r;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix matrix_power(const Matrix& m, unsigned exponent) {
  if (!m.is_square()) throw Error(ErrorCode::ShapeMismatch, "power of a non-square matrix");
  Matrix r = Matrix::identity(m.rows());
  for (unsigned i = 0; i < exponent; ++i) r = r * m;
  return r;
}

// ---------------------------------------------------------------------------

EchelonForm rref(Matrix m) {
  EchelonForm out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

namespace {

// Rows scaled by the lcm of their denominators. Returns the integer matrix and
// the product of the scale factors.
std::vector<std::vector<Integer>> integer_rows(const Matrix& m, Integer* scale) {
  std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
  Integer total = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Integer d = m(i, j).get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    total *= l;
  }
  if (scale) *scale = total;
  return rows;
}

// Fraction-free elimination in place. Returns the rank; `swaps` counts row
// interchanges; on a square full-rank input the last pivot is the determinant
// of the integer matrix up to sign.
std::size_t bareiss(std::vector<std::vector<Integer>>& a, std::size_t cols, std::size_t* swaps,
                    Integer* last_pivot) {
  const std::size_t rows = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  std::size_t nswaps = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      ++nswaps;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (swaps) *swaps = nswaps;
  if (last_pivot) *last_pivot = prev;
  return r;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  auto rows = integer_rows(m, nullptr);
  return bareiss(rows, m.cols(), nullptr, nullptr);
}

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Integer scale;
  auto rows = integer_rows(m, &scale);
  std::size_t swaps = 0;
  Integer last;
  if (bareiss(rows, m.cols(), &swaps, &last) < m.rows()) return 0;
  Rational det(last, scale);
  det.canonicalize();
  return swaps % 2 == 0 ? det : Rational(-det);
}

Matrix kernel_basis(const Matrix& m) {
  EchelonForm e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix k(m.cols(), free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k(free_cols[f], f) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], f) = -e.reduced(r, free_cols[f]);
  }
  return k;
}

Matrix invert(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::Singular, "cannot invert a non-square matrix");
  const std::size_t n = m.rows();
  EchelonForm e = rref(hstack(m, Matrix::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw Error(ErrorCode::Singular, "matrix is not invertible");
  return e.reduced.cols_range(n, n);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "solve: row mismatch");
  EchelonForm e = rref(hstack(a, b));
  Matrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= a.cols()) return std::nullopt;  // pivot in the augmented block
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, a.cols() + j);
  }
  return x;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace nq
