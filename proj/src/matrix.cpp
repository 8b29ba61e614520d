#include "matrix.hpp"

#include "errors.hpp"

namespace prl {

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ContractError("vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ContractError("vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Rational& c, const Vec& v) {
  Vec r(v.size());
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw ContractError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Matrix::set_col(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw ContractError("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw ContractError("matrix product dimension mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rational& bkj = o.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Vec Matrix::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw ContractError("matrix-vector dimension mismatch");
  Vec r(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& aij = at(i, j);
      if (!aij.is_zero()) r[i] += aij * v[j];
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractError("matrix sum dimension mismatch");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ContractError("matrix difference dimension mismatch");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = c * e_[i];
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (rows_ != o.rows_) throw ContractError("hstack row mismatch");
  Matrix r(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

Matrix rref(const Matrix& a, std::vector<std::size_t>* pivot_cols) {
  Matrix m = a;
  const std::size_t rows = m.rows(), cols = m.cols();
  if (pivot_cols) pivot_cols->clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(pivot, j));
    const Rational inv = m.at(r, c).reciprocal();
    for (std::size_t j = c; j < cols; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      const Rational f = m.at(i, c);
      for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return m;
}

std::size_t rank(const Matrix& a) {
  std::vector<std::size_t> pivots;
  rref(a, &pivots);
  return pivots.size();
}

std::optional<Vec> solve_linear(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw ContractError("solve_linear: rhs length != rows");
  Matrix aug = a.hstack(Matrix::from_columns(a.rows(), {b}));
  std::vector<std::size_t> pivots;
  Matrix r = rref(aug, &pivots);
  // inconsistent iff the rhs column is a pivot column
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = r.at(k, a.cols());
  return x;
}

Matrix kernel_basis(const Matrix& a) {
  std::vector<std::size_t> pivots;
  Matrix r = rref(a, &pivots);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, f);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(n, basis);
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw ContractError("inverse of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<std::size_t> pivots;
  Matrix r = rref(a.hstack(Matrix::identity(n)), &pivots);
  // invertible iff all pivots sit in the left block, one per column
  if (pivots.size() < n) return std::nullopt;
  for (std::size_t k = 0; k < n; ++k)
    if (pivots[k] != k) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

Congruence congruence_diagonalize(const Matrix& g) {
  if (g.rows() != g.cols()) throw ContractError("congruence_diagonalize: non-square input");
  const std::size_t n = g.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.at(i, j) != g.at(j, i))
        throw ContractError("congruence_diagonalize: non-symmetric input");

  Matrix m = g;
  Matrix p = Matrix::identity(n);

  // col_j += f * col_k together with the mirrored row operation, P tracks cols
  auto add_col_row = [&](std::size_t j, std::size_t k, const Rational& f) {
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) += f * m.at(i, k);
    for (std::size_t i = 0; i < n; ++i) m.at(j, i) += f * m.at(k, i);
    for (std::size_t i = 0; i < n; ++i) p.at(i, j) += f * p.at(i, k);
  };
  auto swap_col_row = [&](std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < n; ++i) std::swap(m.at(i, j), m.at(i, k));
    for (std::size_t i = 0; i < n; ++i) std::swap(m.at(j, i), m.at(k, i));
    for (std::size_t i = 0; i < n; ++i) std::swap(p.at(i, j), p.at(i, k));
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t diag = n;
      for (std::size_t j = k + 1; j < n; ++j)
        if (!m.at(j, j).is_zero()) {
          diag = j;
          break;
        }
      if (diag < n) {
        swap_col_row(k, diag);
      } else {
        std::size_t partner = n;
        for (std::size_t j = k + 1; j < n; ++j)
          if (!m.at(k, j).is_zero()) {
            partner = j;
            break;
          }
        if (partner == n) continue;  // row/col k already clear: D_k = 0
        // all remaining diagonals vanish, so this lands 2*m(k,partner) != 0
        add_col_row(k, partner, 1);
      }
    }
    const Rational pivot = m.at(k, k);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (m.at(k, j).is_zero()) continue;
      add_col_row(j, k, -(m.at(k, j) / pivot));
    }
  }

  Congruence out;
  out.p = std::move(p);
  out.d.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.d[i] = m.at(i, i);
  return out;
}

}  // namespace prl
