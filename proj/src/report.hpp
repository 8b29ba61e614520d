#pragma once

#include <string>

#include "algebra_file.hpp"
#include "search.hpp"
#include "structure.hpp"

namespace prl {

/// Everything cmd_check prints: the product table, the four condition
/// verdicts with witnesses, signature, solvability, center dimensions.
struct CheckReport {
  std::string name;
  LieAlgebra algebra;
  BilinearForm form;
  ProductTable table;
  PRReport pr;
  BilinearForm::Signature signature;
  bool positive_definite = false;
  bool pseudo_riemannian = false;
  bool riemann_lie = false;
  bool solvable = false;
  bool nilpotent = false;
  std::size_t center_dim = 0;          // Lie center
  std::size_t product_center_dim = 0;  // equal to center_dim on PR1 tables
  std::vector<std::size_t> derived_dims;

  std::string text() const;
  std::string json() const;
};

/// Requires a nondegenerate form (InvalidInput otherwise).
CheckReport make_check_report(const std::string& name, const LieAlgebra& l,
                              const BilinearForm& b);

struct DecomposeReport {
  std::string name;
  LieAlgebra algebra;
  BilinearForm form;
  Decomposition decomposition;

  std::string text() const;
  std::string json() const;
};

/// Throws PreconditionError (naming PR failure vs indefiniteness) when the
/// instance is not Riemann-Lie.
DecomposeReport make_decompose_report(const std::string& name, const LieAlgebra& l,
                                      const BilinearForm& b);

struct SearchReport {
  std::string name;
  LieAlgebra algebra;
  SearchSpec spec;
  std::uint64_t candidates = 0;  // grid mode only; random_count otherwise
  SearchResult result;

  std::string text() const;
  std::string json() const;
};

SearchReport make_search_report(const std::string& name, const LieAlgebra& l,
                                const SearchSpec& spec);

}  // namespace prl
