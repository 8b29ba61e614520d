#include "subspace.hpp"

#include "errors.hpp"

namespace prl {

Subspace Subspace::span(std::size_t ambient_dim, const Matrix& columns) {
  if (columns.cols() > 0 && columns.rows() != ambient_dim)
    throw ContractError("subspace span: column length != ambient dimension");
  // reduced column echelon form = transposed rref of the transpose
  std::vector<std::size_t> pivots;
  Matrix r = rref(columns.transpose(), &pivots);
  Matrix basis(ambient_dim, pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t i = 0; i < ambient_dim; ++i) basis.at(i, k) = r.at(k, i);
  return Subspace(ambient_dim, std::move(basis));
}

Subspace Subspace::span_of(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  return span(ambient_dim, Matrix::from_columns(ambient_dim, vectors));
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  return Subspace(ambient_dim, Matrix(ambient_dim, 0));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return Subspace(ambient_dim, Matrix::identity(ambient_dim));
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw ContractError("subspace contains: length mismatch");
  if (vec_is_zero(v)) return true;
  if (dim() == 0) return false;
  return solve_linear(basis_, v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw ContractError("subspace contains: ambient mismatch");
  for (std::size_t j = 0; j < other.dim(); ++j)
    if (!contains(other.basis_.col(j))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw ContractError("subspace sum: ambient mismatch");
  return span(a.ambient_, a.basis_.hstack(b.basis_));
}

}  // namespace prl
