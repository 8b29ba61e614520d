#pragma once

#include <map>
#include <string>
#include <utility>

#include "product.hpp"

namespace prl {

/// Data for the orthonormal block construction: m one-dimensional abelian
/// generators h_1..h_m rotating n planes (x_j, y_j) at exact rates a_ij.
struct BlockSpec {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<Rational> rates;  // m*n row-major, a_ij = rates[i*n + j]

  const Rational& rate(std::size_t i, std::size_t j) const { return rates[i * n + j]; }
  /// Throws InvalidInput naming the violated invariant.
  void validate() const;
};

/// Builds the algebra [h_i, x_j] = a_ij y_j, [h_i, y_j] = -a_ij x_j with the
/// identity form on the basis h_1..h_m, x_1, y_1, ..., x_n, y_n.
std::pair<LieAlgebra, BilinearForm> build_block_algebra(const BlockSpec& spec);

struct CatalogFlags {
  bool pseudo_riemannian = false;
  bool riemann_lie = false;
  bool solvable = false;
  std::size_t center_dim = 0;
  friend bool operator==(const CatalogFlags&, const CatalogFlags&) = default;
};

struct CatalogEntry {
  std::string name;
  LieAlgebra algebra;
  BilinearForm form;
  ProductTable expected_product;
  CatalogFlags expected;
  std::string notes;
};

CatalogEntry catalog_abelian(std::size_t n);
/// Heisenberg [x,y]=z with (x,z)=1, (y,y)=b; b != 0.
CatalogEntry catalog_heisenberg3(const Rational& b);
/// Centerless [x,y]=z, [x,z]=c*y with diagonal form (a, b, -b*c); all nonzero.
CatalogEntry catalog_centerless3(const Rational& c, const Rational& a, const Rational& b);
/// [x,y]=y with the identity form; no compatible form exists at all.
CatalogEntry catalog_dim2_nonabelian();
/// Orthonormal basis s, x, y with [s,x]=a*y, [s,y]=-a*x; a != 0.
CatalogEntry catalog_cor411(const Rational& a);
/// sl2 and so3, each with its computed Killing form; both must fail PR3.
std::vector<CatalogEntry> catalog_semisimple();

LieAlgebra sl2();
LieAlgebra so3();

/// Trace form K(u, v) = tr(ad_u ad_v), computed from structure constants.
/// May be degenerate for non-semisimple algebras.
BilinearForm killing_form(const LieAlgebra& l);

/// Entry lookup for the CLI: name in {abelian, heisenberg3, centerless3,
/// dim2-nonabelian, sl2-killing, so3-killing, cor4.11}, params as text
/// rationals. Throws InvalidInput for unknown names or bad parameters.
CatalogEntry catalog_by_name(const std::string& name,
                             const std::map<std::string, std::string>& params);
std::vector<std::string> catalog_names();

}  // namespace prl
