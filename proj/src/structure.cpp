#include "structure.hpp"

#include "errors.hpp"

namespace prl {

namespace {

/// Kernel of a linear map given column-by-column on basis vectors, each
/// image flattened into one tall column.
Subspace kernel_of_stacked(std::size_t n, const std::vector<Matrix>& images_per_basis) {
  const std::size_t m = images_per_basis.empty() ? 0 : images_per_basis[0].rows() *
                                                           images_per_basis[0].cols();
  Matrix stacked(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Matrix& im = images_per_basis[j];
    std::size_t r = 0;
    for (std::size_t a = 0; a < im.rows(); ++a)
      for (std::size_t b = 0; b < im.cols(); ++b) stacked.at(r++, j) = im.at(a, b);
  }
  return Subspace::span(n, kernel_basis(stacked));
}

Vec basis_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

}  // namespace

Subspace product_center(const ProductTable& p) {
  const std::size_t n = p.dim();
  // u -> (l_{e_i} - r_{e_i}) u stacked over all i
  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        stacked.at(i * n + k, j) = p.p(i, j, k) - p.p(j, i, k);
  return Subspace::span(n, kernel_basis(stacked));
}

Subspace product_span(const ProductTable& p) {
  std::vector<Vec> spanners;
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j) {
      Vec v = p.entry(i, j);
      if (!vec_is_zero(v)) spanners.push_back(std::move(v));
    }
  return Subspace::span_of(p.dim(), spanners);
}

Subspace right_annihilator(const ProductTable& p) {
  const std::size_t n = p.dim();
  // u -> e_i * u stacked over all i
  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) stacked.at(i * n + k, j) = p.p(i, j, k);
  return Subspace::span(n, kernel_basis(stacked));
}

Subspace skew_adjoint_part(const LieAlgebra& l, const BilinearForm& b) {
  if (l.dim() != b.dim()) throw ContractError("skew_adjoint_part: dimension mismatch");
  if (!b.nondegenerate()) throw InvalidInput("skew_adjoint_part requires a nondegenerate form");
  std::vector<Matrix> images;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    Matrix adm = l.ad_basis(i);
    images.push_back(adm + b.adjoint(adm));
  }
  return kernel_of_stacked(l.dim(), images);
}

Subspace self_adjoint_right_locus(const ProductTable& p, const BilinearForm& b) {
  if (p.dim() != b.dim()) throw ContractError("self_adjoint_right_locus: dimension mismatch");
  if (!b.nondegenerate())
    throw InvalidInput("self_adjoint_right_locus requires a nondegenerate form");
  std::vector<Matrix> images;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    Matrix r = p.right_mult(basis_vec(p.dim(), i));
    images.push_back(r - b.adjoint(r));
  }
  return kernel_of_stacked(p.dim(), images);
}

Decomposition riemann_decompose(const LieAlgebra& l, const BilinearForm& b) {
  return riemann_decompose(l, b, is_pseudo_riemannian(l, b));
}

Decomposition riemann_decompose(const LieAlgebra& l, const BilinearForm& b,
                                const PRCheck& check) {
  if (!check.pass()) {
    std::string which = !check.report.pr3.ok   ? "PR3"
                        : !check.report.pr1.ok ? "PR1"
                                               : "PR2";
    throw PreconditionError("not pseudo-Riemannian: " + which + " fails");
  }
  if (!b.is_positive_definite())
    throw PreconditionError("form is not positive definite");

  const std::size_t n = l.dim();
  const ProductTable& p = check.table;
  Decomposition d{skew_adjoint_part(l, b), subspace_bracket(l, Subspace::full(n), Subspace::full(n)),
                  {}};

  d.checks.s_is_right_annihilator = (d.s == right_annihilator(p));
  d.checks.u_is_product_span = (d.u == product_span(p));
  d.checks.s_perp_is_product_span = (b.orthogonal_complement(d.s) == product_span(p));
  d.checks.spans_whole =
      d.s.dim() + d.u.dim() == n && Subspace::sum(d.s, d.u) == Subspace::full(n);

  bool orth = true;
  for (std::size_t a = 0; a < d.s.dim() && orth; ++a)
    for (std::size_t c = 0; c < d.u.dim() && orth; ++c)
      orth = b.evaluate(d.s.basis().col(a), d.u.basis().col(c)).is_zero();
  d.checks.orthogonal = orth;

  d.checks.s_abelian = subspace_bracket(l, d.s, d.s).is_zero();
  const bool u_abelian = subspace_bracket(l, d.u, d.u).is_zero();
  const bool u_ideal = d.u.contains(subspace_bracket(l, Subspace::full(n), d.u));
  d.checks.u_abelian_lie_ideal = u_abelian && u_ideal;
  return d;
}

bool CenterLemmaReport::all_hold() const {
  return center_ideal && center_products_vanish && center_perp_ideal &&
         gg_perp_is_right_annihilator && bracket_in_center_perp && center_direct_sum;
}

std::vector<std::string> CenterLemmaReport::violated() const {
  std::vector<std::string> v;
  if (!center_ideal) v.push_back("center not closed under multiplication");
  if (!center_products_vanish) v.push_back("nonzero product inside the center");
  if (!center_perp_ideal) v.push_back("center-perp not closed under multiplication");
  if (!gg_perp_is_right_annihilator) v.push_back("(g*g)-perp != Z_r(g)");
  if (!bracket_in_center_perp) v.push_back("[g,g] not inside center-perp");
  if (!center_direct_sum) v.push_back("C(g) (+) C(g)-perp != g");
  return v;
}

CenterLemmaReport verify_center_lemmas(const LieAlgebra& l, const ProductTable& p,
                                       const BilinearForm& b) {
  if (l.dim() != p.dim() || l.dim() != b.dim())
    throw ContractError("verify_center_lemmas: dimension mismatch");
  const std::size_t n = l.dim();
  CenterLemmaReport rep;

  const Subspace center = product_center(p);
  const Subspace center_perp = b.orthogonal_complement(center);

  auto closed_under_mult = [&](const Subspace& v) {
    std::vector<Vec> products;
    for (std::size_t a = 0; a < v.dim(); ++a) {
      const Vec va = v.basis().col(a);
      for (std::size_t i = 0; i < n; ++i) {
        const Vec ei = basis_vec(n, i);
        products.push_back(p.apply(ei, va));
        products.push_back(p.apply(va, ei));
      }
    }
    return Subspace::sum(v, Subspace::span_of(n, products)) == v;
  };

  rep.center_ideal = closed_under_mult(center);

  rep.center_products_vanish = true;
  for (std::size_t a = 0; a < center.dim() && rep.center_products_vanish; ++a)
    for (std::size_t c = 0; c < center.dim() && rep.center_products_vanish; ++c)
      rep.center_products_vanish =
          vec_is_zero(p.apply(center.basis().col(a), center.basis().col(c)));

  rep.center_perp_ideal = closed_under_mult(center_perp);

  rep.gg_perp_is_right_annihilator =
      (b.orthogonal_complement(product_span(p)) == right_annihilator(p));

  rep.restriction_guard = b.restriction_nondegenerate(center);
  if (rep.restriction_guard) {
    const Subspace gg = subspace_bracket(l, Subspace::full(n), Subspace::full(n));
    rep.bracket_in_center_perp = center_perp.contains(gg);
    rep.center_direct_sum = center.dim() + center_perp.dim() == n &&
                            Subspace::sum(center, center_perp) == Subspace::full(n);
  }
  return rep;
}

}  // namespace prl
