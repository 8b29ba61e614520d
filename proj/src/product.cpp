#include "product.hpp"

#include "errors.hpp"

namespace prl {

ProductTable::ProductTable(std::size_t dim, std::vector<Rational> tensor)
    : dim_(dim), p_(std::move(tensor)) {
  if (p_.size() != dim_ * dim_ * dim_) throw ContractError("product tensor size != dim^3");
}

Vec ProductTable::entry(std::size_t i, std::size_t j) const {
  Vec v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = p(i, j, k);
  return v;
}

Vec ProductTable::apply(const Vec& u, const Vec& v) const {
  if (u.size() != dim_ || v.size() != dim_) throw ContractError("product apply: length mismatch");
  Vec r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j].is_zero()) continue;
      const Rational f = u[i] * v[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& pk = p(i, j, k);
        if (!pk.is_zero()) r[k] += f * pk;
      }
    }
  }
  return r;
}

Matrix ProductTable::left_mult(const Vec& u) const {
  if (u.size() != dim_) throw ContractError("left_mult: length mismatch");
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& pk = p(i, j, k);
        if (!pk.is_zero()) m.at(k, j) += u[i] * pk;
      }
  }
  return m;
}

Matrix ProductTable::right_mult(const Vec& u) const {
  if (u.size() != dim_) throw ContractError("right_mult: length mismatch");
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& pk = p(j, i, k);
        if (!pk.is_zero()) m.at(k, j) += u[i] * pk;
      }
  }
  return m;
}

ProductTable ProductTable::change_basis(const Matrix& q) const {
  if (q.rows() != dim_ || q.cols() != dim_) throw ContractError("change_basis: bad matrix shape");
  auto qinv = inverse(q);
  if (!qinv) throw ContractError("change_basis: singular matrix");
  ProductTable out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      Vec coords = (*qinv) * apply(q.col(i), q.col(j));
      for (std::size_t k = 0; k < dim_; ++k) out.p(i, j, k) = coords[k];
    }
  return out;
}

ProductTable compute_product(const LieAlgebra& l, const BilinearForm& b) {
  if (l.dim() != b.dim()) throw ContractError("compute_product: dimension mismatch");
  if (!b.nondegenerate())
    throw InvalidInput("compute_product requires a nondegenerate form");
  const std::size_t n = l.dim();
  const Matrix& g = b.gram();
  const Matrix& ginv = b.gram_inverse();  // the one factorization shared by all pairs
  const Rational half(1, 2);

  // cache Gram-pairings of bracket vectors: gb[i][j] = G * [e_i, e_j]
  std::vector<Vec> gb(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gb[i * n + j] = g * l.bracket_basis(i, j);

  ProductTable out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec rhs(n);
      for (std::size_t k = 0; k < n; ++k)
        rhs[k] = half * (gb[i * n + j][k] + gb[k * n + i][j] + gb[k * n + j][i]);
      Vec x = ginv * rhs;
      for (std::size_t k = 0; k < n; ++k) out.p(i, j, k) = x[k];
    }
  return out;
}

Vec pr1_defect(const ProductTable& p, const LieAlgebra& l, std::size_t i, std::size_t j) {
  Vec d = vec_sub(p.entry(i, j), p.entry(j, i));
  return vec_sub(d, l.bracket_basis(i, j));
}

Rational pr2_defect(const ProductTable& p, const BilinearForm& b, std::size_t i, std::size_t j,
                    std::size_t k) {
  Vec ej(p.dim()), ek(p.dim());
  ej[j] = 1;
  ek[k] = 1;
  return b.evaluate(p.entry(i, j), ek) + b.evaluate(ej, p.entry(i, k));
}

Vec pr3_defect(const ProductTable& p, const LieAlgebra& l, std::size_t i, std::size_t j,
               std::size_t k) {
  Vec ei(p.dim()), ek(p.dim());
  ei[i] = 1;
  ek[k] = 1;
  return vec_add(l.bracket(p.entry(i, j), ek), l.bracket(ei, p.entry(k, j)));
}

Vec pr3_prime_defect(const ProductTable& p, std::size_t i, std::size_t j, std::size_t k) {
  Vec ei(p.dim()), ek(p.dim());
  ei[i] = 1;
  ek[k] = 1;
  const Vec uv = p.entry(i, j);
  const Vec wv = p.entry(k, j);
  // (uv)w - w(uv) + u(wv) - (wv)u
  return vec_add(vec_sub(p.apply(uv, ek), p.apply(ek, uv)),
                 vec_sub(p.apply(ei, wv), p.apply(wv, ei)));
}

namespace {

void record(ConditionReport& rep, std::array<std::size_t, 3> index, std::size_t arity,
            Vec defect) {
  rep.ok = false;
  rep.violations.push_back({index, arity, std::move(defect)});
}

}  // namespace

ConditionReport check_pr1(const ProductTable& p, const LieAlgebra& l) {
  if (p.dim() != l.dim()) throw ContractError("check_pr1: dimension mismatch");
  ConditionReport rep;
  const std::size_t n = p.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool bad = false;
      for (std::size_t k = 0; k < n && !bad; ++k)
        bad = (p.p(i, j, k) - p.p(j, i, k) != l.c(i, j, k));
      if (bad) record(rep, {i, j, 0}, 2, pr1_defect(p, l, i, j));
    }
  return rep;
}

ConditionReport check_pr2(const ProductTable& p, const BilinearForm& b) {
  if (p.dim() != b.dim()) throw ContractError("check_pr2: dimension mismatch");
  ConditionReport rep;
  const std::size_t n = p.dim();
  const Matrix& g = b.gram();
  Vec ei(n);
  for (std::size_t i = 0; i < n; ++i) {
    // PR2 at fixed i says the matrix (e_i e_j, e_k) is antisymmetric in (j,k)
    ei[i] = 1;
    Matrix c = g * p.left_mult(ei);
    ei[i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational d = c.at(k, j) + c.at(j, k);
        if (!d.is_zero()) record(rep, {i, j, k}, 3, Vec{std::move(d)});
      }
  }
  return rep;
}

ConditionReport check_pr3(const ProductTable& p, const LieAlgebra& l) {
  if (p.dim() != l.dim()) throw ContractError("check_pr3: dimension mismatch");
  ConditionReport rep;
  const std::size_t n = p.dim();
  Vec d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // [e_i e_j, e_k] + [e_i, e_k e_j], accumulated in place
        bool touched = false;
        for (std::size_t l1 = 0; l1 < n; ++l1) {
          const Rational& a = p.p(i, j, l1);
          if (!a.is_zero())
            for (std::size_t t = 0; t < n; ++t) {
              const Rational& cl = l.c(l1, k, t);
              if (!cl.is_zero()) {
                d[t] += a * cl;
                touched = true;
              }
            }
          const Rational& w = p.p(k, j, l1);
          if (!w.is_zero())
            for (std::size_t t = 0; t < n; ++t) {
              const Rational& cl = l.c(i, l1, t);
              if (!cl.is_zero()) {
                d[t] += w * cl;
                touched = true;
              }
            }
        }
        if (touched) {
          if (!vec_is_zero(d)) record(rep, {i, j, k}, 3, d);
          for (auto& q : d) q = Rational();
        }
      }
  return rep;
}

ConditionReport check_pr3_prime(const ProductTable& p) {
  ConditionReport rep;
  const std::size_t n = p.dim();
  Vec d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // (uv)w - w(uv) + u(wv) - (wv)u with u = e_i, v = e_j, w = e_k
        bool touched = false;
        for (std::size_t l1 = 0; l1 < n; ++l1) {
          const Rational& uv = p.p(i, j, l1);
          if (!uv.is_zero())
            for (std::size_t t = 0; t < n; ++t) {
              const Rational diff = p.p(l1, k, t) - p.p(k, l1, t);
              if (!diff.is_zero()) {
                d[t] += uv * diff;
                touched = true;
              }
            }
          const Rational& wv = p.p(k, j, l1);
          if (!wv.is_zero())
            for (std::size_t t = 0; t < n; ++t) {
              const Rational diff = p.p(i, l1, t) - p.p(l1, i, t);
              if (!diff.is_zero()) {
                d[t] += wv * diff;
                touched = true;
              }
            }
        }
        if (touched) {
          if (!vec_is_zero(d)) record(rep, {i, j, k}, 3, d);
          for (auto& q : d) q = Rational();
        }
      }
  return rep;
}

PRCheck is_pseudo_riemannian(const LieAlgebra& l, const BilinearForm& b) {
  ProductTable table = compute_product(l, b);
  PRReport report;
  report.pr1 = check_pr1(table, l);
  report.pr2 = check_pr2(table, b);
  report.pr3 = check_pr3(table, l);
  report.pr3_prime = check_pr3_prime(table);
  return {std::move(table), std::move(report)};
}

bool is_riemann_lie(const LieAlgebra& l, const BilinearForm& b) {
  return is_pseudo_riemannian(l, b).pass() && b.is_positive_definite();
}

}  // namespace prl
