#pragma once

#include <string>
#include <vector>

#include "product.hpp"

namespace prl {

/// {a : a*x = x*a for all x}; equals lie_center for PR1 tables.
Subspace product_center(const ProductTable& p);

/// g*g, the span of all products.
Subspace product_span(const ProductTable& p);

/// Z_r(g) = {u : v*u = 0 for all v}.
Subspace right_annihilator(const ProductTable& p);

/// S = {s : ad_s + ad_s^t = 0} relative to the form.
Subspace skew_adjoint_part(const LieAlgebra& l, const BilinearForm& b);

/// {u : r_u = r_u^t}; equals [g,g]-perp for pseudo-Riemannian instances.
Subspace self_adjoint_right_locus(const ProductTable& p, const BilinearForm& b);

struct DecompositionChecks {
  bool orthogonal = false;
  bool s_abelian = false;
  bool u_abelian_lie_ideal = false;
  bool spans_whole = false;
  bool s_is_right_annihilator = false;
  bool u_is_product_span = false;
  bool s_perp_is_product_span = false;
  bool all() const {
    return orthogonal && s_abelian && u_abelian_lie_ideal && spans_whole &&
           s_is_right_annihilator && u_is_product_span && s_perp_is_product_span;
  }
};

struct Decomposition {
  Subspace s;  // skew-adjoint subalgebra
  Subspace u;  // [g,g]
  DecompositionChecks checks;
};

/// Orthogonal splitting g = S (+) U of a Riemann-Lie algebra; throws
/// PreconditionError naming the failed check when the instance is not
/// Riemann-Lie (PR failure vs indefinite form).
Decomposition riemann_decompose(const LieAlgebra& l, const BilinearForm& b);
/// Same, reusing an already computed PR check for (l, b).
Decomposition riemann_decompose(const LieAlgebra& l, const BilinearForm& b, const PRCheck& check);

struct CenterLemmaReport {
  bool center_ideal = false;            // C(g) closed under both multiplications
  bool center_products_vanish = false;  // x*y = 0 on C(g)
  bool center_perp_ideal = false;       // C(g)-perp closed under both multiplications
  bool gg_perp_is_right_annihilator = false;  // (g*g)-perp = Z_r(g)
  bool restriction_guard = false;             // form restricted to C(g) nondegenerate?
  bool bracket_in_center_perp = true;         // [g,g] inside C(g)-perp (guarded)
  bool center_direct_sum = true;              // C(g) (+) C(g)-perp = g (guarded)
  bool all_hold() const;
  std::vector<std::string> violated() const;
};

/// Clause-by-clause verification of the center lemmas on a PR-certified
/// instance; any violation signals a bug, not bad input.
CenterLemmaReport verify_center_lemmas(const LieAlgebra& l, const ProductTable& p,
                                       const BilinearForm& b);

}  // namespace prl
