#include "bilinear_form.hpp"

#include "errors.hpp"

namespace prl {

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw InvalidInput("Gram matrix must be square");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = i + 1; j < gram_.cols(); ++j)
      if (gram_.at(i, j) != gram_.at(j, i)) throw InvalidInput("Gram matrix must be symmetric");
  rank_ = prl::rank(gram_);
  if (rank_ == dim()) inv_ = *inverse(gram_);
}

BilinearForm BilinearForm::identity(std::size_t n) { return BilinearForm(Matrix::identity(n)); }

BilinearForm BilinearForm::diagonal(const Vec& d) {
  Matrix g(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) g.at(i, i) = d[i];
  return BilinearForm(std::move(g));
}

const Matrix& BilinearForm::gram_inverse() const {
  if (!inv_) throw InvalidInput("form is degenerate");
  return *inv_;
}

Rational BilinearForm::evaluate(const Vec& u, const Vec& v) const {
  if (u.size() != dim() || v.size() != dim())
    throw ContractError("form evaluate: vector length mismatch");
  Rational s;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      const Rational& g = gram_.at(i, j);
      if (!g.is_zero() && !v[j].is_zero()) s += u[i] * g * v[j];
    }
  }
  return s;
}

Subspace BilinearForm::orthogonal_complement(const Subspace& v) const {
  if (!nondegenerate()) throw InvalidInput("orthogonal complement requires a nondegenerate form");
  if (v.ambient_dim() != dim()) throw ContractError("orthogonal complement: ambient mismatch");
  // u orthogonal to V  <=>  (V^T G) u = 0
  return Subspace::span(dim(), kernel_basis(v.basis().transpose() * gram_));
}

bool BilinearForm::restriction_nondegenerate(const Subspace& v) const {
  if (v.ambient_dim() != dim()) throw ContractError("restriction: ambient mismatch");
  Matrix restricted = v.basis().transpose() * gram_ * v.basis();
  return prl::rank(restricted) == v.dim();
}

BilinearForm::Signature BilinearForm::signature() const {
  Congruence c = congruence_diagonalize(gram_);
  Signature s;
  for (const auto& d : c.d) {
    const int sg = d.sign();
    if (sg > 0)
      ++s.positives;
    else if (sg < 0)
      ++s.negatives;
    else
      ++s.zeros;
  }
  return s;
}

bool BilinearForm::is_positive_definite() const {
  const Signature s = signature();
  return s.positives == dim();
}

Matrix BilinearForm::adjoint(const Matrix& m) const {
  if (m.rows() != dim() || m.cols() != dim()) throw ContractError("adjoint: operator shape mismatch");
  return gram_inverse() * m.transpose() * gram_;
}

}  // namespace prl
