#pragma once

#include "matrix.hpp"
#include "subspace.hpp"

namespace prl {

/// Symmetric bilinear form given by its Gram matrix. Degenerate forms are
/// representable (restriction tests need them) but refuse adjoints,
/// orthogonal complements and product construction.
class BilinearForm {
 public:
  explicit BilinearForm(Matrix gram);

  static BilinearForm identity(std::size_t n);
  static BilinearForm diagonal(const Vec& d);

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  std::size_t rank() const { return rank_; }
  bool nondegenerate() const { return rank_ == dim(); }
  /// Inverse Gram matrix; throws InvalidInput when degenerate.
  const Matrix& gram_inverse() const;

  Rational evaluate(const Vec& u, const Vec& v) const;

  /// {u : (u, v) = 0 for all v in V}. Requires a nondegenerate form.
  Subspace orthogonal_complement(const Subspace& v) const;

  /// True iff the Gram matrix of the restriction to V has full rank.
  bool restriction_nondegenerate(const Subspace& v) const;

  struct Signature {
    std::size_t positives = 0, negatives = 0, zeros = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
  };
  /// Inertia counts of any congruence diagonalization (Sylvester).
  Signature signature() const;
  bool is_positive_definite() const;

  /// phi^t with (phi(v), w) = (v, phi^t(w)): gram^{-1} * m^T * gram.
  Matrix adjoint(const Matrix& m) const;

  friend bool operator==(const BilinearForm& a, const BilinearForm& b) {
    return a.gram_ == b.gram_;
  }

 private:
  Matrix gram_;
  std::size_t rank_;
  std::optional<Matrix> inv_;  // present iff nondegenerate
};

}  // namespace prl
