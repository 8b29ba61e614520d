#pragma once

#include <string>

#include "bilinear_form.hpp"
#include "lie_algebra.hpp"

namespace prl {

/// One parsed instance file: a Lie algebra plus a symmetric bilinear form
/// (possibly degenerate; consumers decide whether that is acceptable).
struct AlgebraDoc {
  std::string name;  // optional, may be empty
  LieAlgebra algebra;
  BilinearForm form;
};

/// Parses the instance text format:
///
///   # comment
///   name heisenberg3
///   dim 3
///   basis x y z
///   [x,y] = z
///   (x,z) = 1
///   (y,y) = -1/2
///
/// Unlisted bracket/form pairs are zero; bracket combos are sums of
/// `coef*name` terms; form values are rationals "p/q". Throws ParseError
/// (with a 1-based line) on syntax errors and InvalidInput on semantic ones
/// (Jacobi failure, duplicate entries, non-negated mirrored brackets).
AlgebraDoc parse_algebra_text(const std::string& text);

AlgebraDoc load_algebra_file(const std::string& path);

std::string emit_algebra_text(const LieAlgebra& l, const BilinearForm& b,
                              const std::string& name = "");

/// Renders a coordinate vector as a combination of named basis elements,
/// e.g. "2*x - 1/3*y"; the zero vector renders as "0".
std::string format_combination(const Vec& v, const std::vector<std::string>& names);

}  // namespace prl
