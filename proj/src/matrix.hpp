#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace prl {

using Vec = std::vector<Rational>;

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec col(std::size_t j) const;
  Vec row(std::size_t i) const;
  void set_col(std::size_t j, const Vec& v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& c) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  /// Columns of `o` appended on the right.
  Matrix hstack(const Matrix& o) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

/// Reduced row echelon form; plain rational Gaussian elimination, first
/// nonzero pivot in column order (deterministic bases downstream).
Matrix rref(const Matrix& a, std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t rank(const Matrix& a);

/// One exact solution of A x = b (free variables set to zero), or nullopt
/// when the system is inconsistent. Unique when A is square nonsingular.
std::optional<Vec> solve_linear(const Matrix& a, const Vec& b);

/// Columns form a basis of the null space {x : A x = 0}.
Matrix kernel_basis(const Matrix& a);

std::optional<Matrix> inverse(const Matrix& a);

struct Congruence {
  Matrix p;  // invertible; p^T * g * p = diag(d)
  Vec d;
};

/// Diagonalizes a symmetric matrix by congruence. Zero diagonal pivots are
/// repaired by adding a row/column with nonzero coupling (char != 2).
/// Throws ContractError on non-symmetric input.
Congruence congruence_diagonalize(const Matrix& g);

}  // namespace prl
