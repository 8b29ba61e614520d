#pragma once

#include <string>
#include <vector>

#include "matrix.hpp"
#include "subspace.hpp"

namespace prl {

struct JacobiViolation {
  std::size_t i, j, k;
  Vec defect;  // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
};

/// Violations of the Jacobi identity in a raw antisymmetric bracket tensor,
/// one entry per violating triple i<j<k.
std::vector<JacobiViolation> jacobi_violations(std::size_t dim, const std::vector<Rational>& tensor);

/// Checks c[i][j][k] == -c[j][i][k] for a raw tensor; empty result means ok.
/// Each violation is reported as the triple (i, j, k) with defect c[i][j]+c[j][i] at k.
std::vector<JacobiViolation> antisymmetry_violations(std::size_t dim,
                                                     const std::vector<Rational>& tensor);

/// A finite-dimensional Lie algebra given by structure constants:
/// [e_i, e_j] = sum_k c[i][j][k] e_k. Antisymmetry and the Jacobi identity
/// are verified at construction; invalid algebras are unrepresentable.
class LieAlgebra {
 public:
  LieAlgebra(std::vector<std::string> basis_names, std::vector<Rational> bracket_tensor);

  static LieAlgebra abelian(std::size_t n);
  static LieAlgebra abelian(std::vector<std::string> basis_names);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  /// Index of a named basis element; throws ContractError if unknown.
  std::size_t index_of(const std::string& name) const;

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Rational>& tensor() const { return c_; }

  /// [e_i, e_j] as a coordinate vector.
  Vec bracket_basis(std::size_t i, std::size_t j) const;
  /// Bilinear antisymmetric extension to arbitrary vectors.
  Vec bracket(const Vec& u, const Vec& v) const;

  /// Matrix of ad_u : v -> [u, v].
  Matrix ad(const Vec& u) const;
  Matrix ad_basis(std::size_t i) const;

  /// Same algebra expressed in the basis given by the columns of q
  /// (q invertible, new_e_j = sum_i q[i][j] e_i). Names are kept.
  LieAlgebra change_basis(const Matrix& q) const;
  LieAlgebra renamed(std::vector<std::string> names) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.names_ == b.names_ && a.c_ == b.c_;
  }

 private:
  std::size_t dim_;
  std::vector<std::string> names_;
  std::vector<Rational> c_;  // n^3, row-major (i,j,k)
};

/// Direct sum; brackets between summands vanish.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Report of Jacobi violations; empty for every constructible LieAlgebra.
std::vector<JacobiViolation> check_jacobi(const LieAlgebra& l);

/// Span of [v, w] over basis pairs of the two subspaces.
Subspace subspace_bracket(const LieAlgebra& l, const Subspace& v, const Subspace& w);

/// D^0 = g, D^{i+1} = [D^i, D^i]; the list ends at the first stable term.
std::vector<Subspace> derived_series(const LieAlgebra& l);
/// C^1 = g, C^{i+1} = [g, C^i]; the list ends at the first stable term.
std::vector<Subspace> lower_central_series(const LieAlgebra& l);

bool is_solvable(const LieAlgebra& l);
bool is_nilpotent(const LieAlgebra& l);

/// {a : [a, x] = 0 for all x}.
Subspace lie_center(const LieAlgebra& l);

}  // namespace prl
