#include "lie_algebra.hpp"

#include <set>

#include "errors.hpp"

namespace prl {

namespace {

Vec raw_bracket(std::size_t n, const std::vector<Rational>& c, std::size_t i, std::size_t j) {
  Vec v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = c[(i * n + j) * n + k];
  return v;
}

Vec raw_bracket_vec(std::size_t n, const std::vector<Rational>& c, const Vec& u, const Vec& v) {
  Vec r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      const Rational f = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& cijk = c[(i * n + j) * n + k];
        if (!cijk.is_zero()) r[k] += f * cijk;
      }
    }
  }
  return r;
}

}  // namespace

std::vector<JacobiViolation> antisymmetry_violations(std::size_t dim,
                                                     const std::vector<Rational>& tensor) {
  std::vector<JacobiViolation> out;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      Vec defect(dim);
      bool bad = false;
      for (std::size_t k = 0; k < dim; ++k) {
        defect[k] = tensor[(i * dim + j) * dim + k] + tensor[(j * dim + i) * dim + k];
        if (!defect[k].is_zero()) bad = true;
      }
      if (bad) out.push_back({i, j, 0, std::move(defect)});
    }
  return out;
}

std::vector<JacobiViolation> jacobi_violations(std::size_t dim,
                                               const std::vector<Rational>& tensor) {
  std::vector<JacobiViolation> out;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = j + 1; k < dim; ++k) {
        // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
        Vec ei(dim), ej(dim), ek(dim);
        ei[i] = 1;
        ej[j] = 1;
        ek[k] = 1;
        Vec s = vec_add(raw_bracket_vec(dim, tensor, raw_bracket(dim, tensor, i, j), ek),
                        vec_add(raw_bracket_vec(dim, tensor, raw_bracket(dim, tensor, j, k), ei),
                                raw_bracket_vec(dim, tensor, raw_bracket(dim, tensor, k, i), ej)));
        if (!vec_is_zero(s)) out.push_back({i, j, k, std::move(s)});
      }
  return out;
}

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names, std::vector<Rational> bracket_tensor)
    : dim_(basis_names.size()), names_(std::move(basis_names)), c_(std::move(bracket_tensor)) {
  if (c_.size() != dim_ * dim_ * dim_)
    throw ContractError("bracket tensor size != dim^3");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw InvalidInput("duplicate basis names");
  auto anti = antisymmetry_violations(dim_, c_);
  if (!anti.empty())
    throw InvalidInput("bracket tensor not antisymmetric at (" + names_[anti[0].i] + ", " +
                       names_[anti[0].j] + ")");
  auto jac = jacobi_violations(dim_, c_);
  if (!jac.empty())
    throw InvalidInput("Jacobi identity fails at (" + names_[jac[0].i] + ", " + names_[jac[0].j] +
                       ", " + names_[jac[0].k] + ")");
}

LieAlgebra LieAlgebra::abelian(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  return abelian(std::move(names));
}

LieAlgebra LieAlgebra::abelian(std::vector<std::string> basis_names) {
  const std::size_t n = basis_names.size();
  return LieAlgebra(std::move(basis_names), std::vector<Rational>(n * n * n));
}

std::size_t LieAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw ContractError("unknown basis element '" + name + "'");
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  return raw_bracket(dim_, c_, i, j);
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
  if (u.size() != dim_ || v.size() != dim_) throw ContractError("bracket: vector length mismatch");
  return raw_bracket_vec(dim_, c_, u, v);
}

Matrix LieAlgebra::ad(const Vec& u) const {
  if (u.size() != dim_) throw ContractError("ad: vector length mismatch");
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& cijk = c(i, j, k);
        if (!cijk.is_zero()) m.at(k, j) += u[i] * cijk;
      }
  }
  return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = c(i, j, k);
  return m;
}

LieAlgebra LieAlgebra::change_basis(const Matrix& q) const {
  if (q.rows() != dim_ || q.cols() != dim_) throw ContractError("change_basis: bad matrix shape");
  auto qinv = inverse(q);
  if (!qinv) throw ContractError("change_basis: singular matrix");
  std::vector<Rational> t(dim_ * dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      // [f_i, f_j] = [Q e_i, Q e_j] expressed in the f basis
      Vec b = bracket(q.col(i), q.col(j));
      Vec coords = (*qinv) * b;
      for (std::size_t k = 0; k < dim_; ++k) t[(i * dim_ + j) * dim_ + k] = coords[k];
    }
  return LieAlgebra(names_, std::move(t));
}

LieAlgebra LieAlgebra::renamed(std::vector<std::string> names) const {
  if (names.size() != dim_) throw ContractError("renamed: wrong number of names");
  return LieAlgebra(std::move(names), c_);
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t n = a.dim() + b.dim();
  std::vector<std::string> names;
  for (const auto& s : a.basis_names()) names.push_back(s);
  for (const auto& s : b.basis_names()) names.push_back(s + "'");
  std::vector<Rational> t(n * n * n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) t[(i * n + j) * n + k] = a.c(i, j, k);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        t[((a.dim() + i) * n + (a.dim() + j)) * n + (a.dim() + k)] = b.c(i, j, k);
  return LieAlgebra(std::move(names), std::move(t));
}

std::vector<JacobiViolation> check_jacobi(const LieAlgebra& l) {
  return jacobi_violations(l.dim(), l.tensor());
}

Subspace subspace_bracket(const LieAlgebra& l, const Subspace& v, const Subspace& w) {
  if (v.ambient_dim() != l.dim() || w.ambient_dim() != l.dim())
    throw ContractError("subspace_bracket: ambient mismatch");
  std::vector<Vec> spanners;
  for (std::size_t a = 0; a < v.dim(); ++a)
    for (std::size_t b = 0; b < w.dim(); ++b)
      spanners.push_back(l.bracket(v.basis().col(a), w.basis().col(b)));
  return Subspace::span_of(l.dim(), spanners);
}

std::vector<Subspace> derived_series(const LieAlgebra& l) {
  std::vector<Subspace> series{Subspace::full(l.dim())};
  for (;;) {
    Subspace next = subspace_bracket(l, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& l) {
  const Subspace g = Subspace::full(l.dim());
  std::vector<Subspace> series{g};
  for (;;) {
    Subspace next = subspace_bracket(l, g, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const LieAlgebra& l) { return derived_series(l).back().is_zero(); }

bool is_nilpotent(const LieAlgebra& l) { return lower_central_series(l).back().is_zero(); }

Subspace lie_center(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  // stack the maps u -> [u, e_i] over all i; center = common kernel
  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) stacked.at(i * n + k, j) = l.c(j, i, k);
  return Subspace::span(n, kernel_basis(stacked));
}

}  // namespace prl
