#pragma once

#include <array>
#include <cstddef>

#include "bilinear_form.hpp"
#include "lie_algebra.hpp"

namespace prl {

/// Bilinear product e_i * e_j = sum_k p[i][j][k] e_k.
class ProductTable {
 public:
  explicit ProductTable(std::size_t dim) : dim_(dim), p_(dim * dim * dim) {}
  ProductTable(std::size_t dim, std::vector<Rational> tensor);

  std::size_t dim() const { return dim_; }
  const Rational& p(std::size_t i, std::size_t j, std::size_t k) const {
    return p_[(i * dim_ + j) * dim_ + k];
  }
  Rational& p(std::size_t i, std::size_t j, std::size_t k) {
    return p_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Rational>& tensor() const { return p_; }

  /// e_i * e_j as a coordinate vector.
  Vec entry(std::size_t i, std::size_t j) const;
  /// Bilinear extension u * v.
  Vec apply(const Vec& u, const Vec& v) const;

  /// Matrix of l_u : v -> u * v.
  Matrix left_mult(const Vec& u) const;
  /// Matrix of r_u : v -> v * u.
  Matrix right_mult(const Vec& u) const;

  /// The same product in the basis given by the columns of q.
  ProductTable change_basis(const Matrix& q) const;

  friend bool operator==(const ProductTable& a, const ProductTable& b) {
    return a.dim_ == b.dim_ && a.p_ == b.p_;
  }

 private:
  std::size_t dim_;
  std::vector<Rational> p_;
};

/// Solves 2(A_u v, w) = ([u,v],w) + ([w,u],v) + ([w,v],u) for every basis
/// pair; the Gram inverse is computed once and reused for all n^2 pairs.
/// Throws InvalidInput when the form is degenerate.
ProductTable compute_product(const LieAlgebra& l, const BilinearForm& b);

// Per-triple defect evaluators; a condition holds iff its defect vanishes.
Vec pr1_defect(const ProductTable& p, const LieAlgebra& l, std::size_t i, std::size_t j);
Rational pr2_defect(const ProductTable& p, const BilinearForm& b, std::size_t i, std::size_t j,
                    std::size_t k);
Vec pr3_defect(const ProductTable& p, const LieAlgebra& l, std::size_t i, std::size_t j,
               std::size_t k);
Vec pr3_prime_defect(const ProductTable& p, std::size_t i, std::size_t j, std::size_t k);

struct Violation {
  std::array<std::size_t, 3> index;  // unused trailing slots are zero
  std::size_t arity;                 // 2 for PR1, 3 otherwise
  Vec defect;                        // scalar defects stored as a length-1 vector
};

struct ConditionReport {
  bool ok = true;
  std::vector<Violation> violations;  // lexicographic; first entry is the witness
  const Violation& witness() const { return violations.front(); }
};

ConditionReport check_pr1(const ProductTable& p, const LieAlgebra& l);
ConditionReport check_pr2(const ProductTable& p, const BilinearForm& b);
ConditionReport check_pr3(const ProductTable& p, const LieAlgebra& l);
ConditionReport check_pr3_prime(const ProductTable& p);

struct PRReport {
  ConditionReport pr1, pr2, pr3, pr3_prime;
  bool pass() const { return pr1.ok && pr2.ok && pr3.ok; }
};

struct PRCheck {
  ProductTable table;
  PRReport report;
  bool pass() const { return report.pass(); }
};

/// Computes the Eq.-(1) product and runs all four condition checks.
/// PR1/PR2 are forced by the construction but asserted anyway.
PRCheck is_pseudo_riemannian(const LieAlgebra& l, const BilinearForm& b);

/// Pseudo-Riemannian with positive definite form.
bool is_riemann_lie(const LieAlgebra& l, const BilinearForm& b);

}  // namespace prl
