#pragma once

#include <cstddef>

#include "matrix.hpp"

namespace prl {

/// A subspace of Q^n held as the column span of a basis matrix. The basis is
/// canonicalized to reduced column echelon form, so subspace equality is
/// entrywise matrix comparison.
class Subspace {
 public:
  /// Span of the given columns (need not be independent).
  static Subspace span(std::size_t ambient_dim, const Matrix& columns);
  static Subspace span_of(std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool is_zero() const { return dim() == 0; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  static Subspace sum(const Subspace& a, const Subspace& b);

 private:
  Subspace(std::size_t ambient, Matrix canonical_basis)
      : ambient_(ambient), basis_(std::move(canonical_basis)) {}
  std::size_t ambient_;
  Matrix basis_;  // ambient x dim, reduced column echelon
};

}  // namespace prl
