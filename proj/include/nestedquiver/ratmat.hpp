#pragma once

// Exact dense linear algebra over Q.
//
// Matrix entries are GMP rationals (always canonical: lowest terms, positive
// denominator). Nothing in this header takes a tolerance.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nestedquiver/errors.hpp"

namespace nq {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);
/// Accepts "p", "-p", "p/q"; throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

/// num/den in lowest terms (mpq_class(num, den) alone does not reduce).
/// Throws Error(DomainError) for den = 0.
Rational frac(long num, long den);

Rational binomial(unsigned n, unsigned k);
Rational pow(const Rational& base, unsigned exponent);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix column(const std::vector<Rational>& values);
  static Matrix row(const std::vector<Rational>& values);
  static Matrix diagonal(const std::vector<Rational>& values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<Rational>& entries() const noexcept { return data_; }

  Matrix transpose() const;
  Matrix col(std::size_t j) const;
  Matrix row_at(std::size_t i) const;
  /// Columns [first, first + count).
  Matrix cols_range(std::size_t first, std::size_t count) const;
  Matrix rows_range(std::size_t first, std::size_t count) const;

  bool is_zero() const;
  /// Largest absolute value of an entry; 0 for empty matrices.
  Rational max_abs() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix hstack(const Matrix& left, const Matrix& right);
Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix block_diagonal(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix matrix_power(const Matrix& m, unsigned exponent);

struct EchelonForm {
  Matrix reduced;                     // reduced row echelon form
  std::vector<std::size_t> pivots;    // pivot column of each nonzero row
};

/// Gauss-Jordan reduction; pivot rows are normalized to 1.
EchelonForm rref(Matrix m);

/// Rank over Q, by fraction-free (Bareiss) elimination on the row-scaled
/// integer matrix.
std::size_t rank(const Matrix& m);

/// Columns span the right kernel. One column per free variable of the
/// reduced echelon form, with a 1 in that free position.
Matrix kernel_basis(const Matrix& m);

/// Throws Error(Singular) unless m is square and invertible.
Matrix invert(const Matrix& m);

/// Rational determinant (Bareiss). Requires a square matrix.
Rational determinant(const Matrix& m);

/// Some X with a * X = b, or nullopt when the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

std::string to_string(const Matrix& m);

}  // namespace nq
