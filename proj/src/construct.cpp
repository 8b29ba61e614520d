#include "construct.hpp"

#include "errors.hpp"

namespace prl {

namespace {

/// Convenience builder: dense tensor from sparse [e_i, e_j] = combo entries
/// (i < j), antisymmetric completion filled in.
std::vector<Rational> tensor_from_brackets(
    std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, Vec>>& brackets) {
  std::vector<Rational> t(n * n * n);
  for (const auto& [i, j, combo] : brackets) {
    for (std::size_t k = 0; k < n; ++k) {
      t[(i * n + j) * n + k] = combo[k];
      t[(j * n + i) * n + k] = -combo[k];
    }
  }
  return t;
}

Vec unit(std::size_t n, std::size_t k, const Rational& c = Rational(1)) {
  Vec v(n);
  v[k] = c;
  return v;
}

Rational parse_param(const std::map<std::string, std::string>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw InvalidInput("missing parameter '" + key + "'");
  return Rational::parse(it->second);
}

void reject_unknown_params(const std::map<std::string, std::string>& params,
                           std::initializer_list<const char*> known) {
  for (const auto& [k, v] : params) {
    bool ok = false;
    for (const char* name : known)
      if (k == name) ok = true;
    if (!ok) throw InvalidInput("unknown parameter '" + k + "'");
  }
}

}  // namespace

void BlockSpec::validate() const {
  if (rates.size() != m * n) throw InvalidInput("block spec: rates array must be m*n");
  for (std::size_t j = 0; j < n; ++j) {
    bool nonzero = false;
    for (std::size_t i = 0; i < m; ++i)
      if (!rate(i, j).is_zero()) nonzero = true;
    if (!nonzero)
      throw InvalidInput("block spec: plane L" + std::to_string(j + 1) +
                         " carries a trivial sub-representation (all rates zero)");
  }
}

std::pair<LieAlgebra, BilinearForm> build_block_algebra(const BlockSpec& spec) {
  spec.validate();
  const std::size_t dim = spec.m + 2 * spec.n;
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= spec.m; ++i) names.push_back("h" + std::to_string(i));
  for (std::size_t j = 1; j <= spec.n; ++j) {
    names.push_back("x" + std::to_string(j));
    names.push_back("y" + std::to_string(j));
  }
  std::vector<std::tuple<std::size_t, std::size_t, Vec>> brackets;
  for (std::size_t i = 0; i < spec.m; ++i)
    for (std::size_t j = 0; j < spec.n; ++j) {
      const Rational& a = spec.rate(i, j);
      if (a.is_zero()) continue;
      const std::size_t x = spec.m + 2 * j, y = x + 1;
      brackets.emplace_back(i, x, unit(dim, y, a));
      brackets.emplace_back(i, y, unit(dim, x, -a));
    }
  LieAlgebra l(std::move(names), tensor_from_brackets(dim, brackets));
  return {std::move(l), BilinearForm::identity(dim)};
}

CatalogEntry catalog_abelian(std::size_t n) {
  LieAlgebra l = LieAlgebra::abelian(n);
  return {"abelian",
          l,
          BilinearForm::identity(n),
          ProductTable(n),
          {true, true, true, n},
          ""};
}

CatalogEntry catalog_heisenberg3(const Rational& b) {
  if (b.is_zero()) throw InvalidInput("heisenberg3 requires b = (y,y) != 0");
  LieAlgebra l({"x", "y", "z"}, tensor_from_brackets(3, {{0, 1, unit(3, 2)}}));
  Matrix gram(3, 3);
  gram.at(0, 2) = gram.at(2, 0) = 1;
  gram.at(1, 1) = b;
  BilinearForm form{std::move(gram)};

  ProductTable table(3);
  table.p(0, 0, 1) = -b.reciprocal();  // xx = -(1/b) y
  table.p(0, 1, 2) = 1;                // xy = z; yx = 0 follows from PR1
  return {"heisenberg3", std::move(l), std::move(form), std::move(table),
          {true, false, true, 1},      ""};
}

CatalogEntry catalog_centerless3(const Rational& c, const Rational& a, const Rational& b) {
  if (c.is_zero() || a.is_zero() || b.is_zero())
    throw InvalidInput("centerless3 requires nonzero c, a, b");
  LieAlgebra l({"x", "y", "z"},
               tensor_from_brackets(3, {{0, 1, unit(3, 2)}, {0, 2, unit(3, 1, c)}}));
  BilinearForm form = BilinearForm::diagonal({a, b, -(b * c)});

  ProductTable table(3);
  table.p(0, 1, 2) = 1;  // xy = [x,y] = z
  table.p(0, 2, 1) = c;  // xz = [x,z] = cy
  const bool riemann = c.sign() < 0 && a.sign() > 0 && b.sign() > 0;
  return {"centerless3", std::move(l), std::move(form), std::move(table),
          {true, riemann, true, 0},    ""};
}

CatalogEntry catalog_dim2_nonabelian() {
  LieAlgebra l({"x", "y"}, tensor_from_brackets(2, {{0, 1, unit(2, 1)}}));
  ProductTable table(2);
  table.p(1, 0, 1) = -1;  // yx = -y
  table.p(1, 1, 0) = 1;   // yy = x
  return {"dim2-nonabelian",
          std::move(l),
          BilinearForm::identity(2),
          std::move(table),
          {false, false, true, 0},
          "no compatible form of any signature exists; the paper states the "
          "lemma for the Riemann case, its proof covers arbitrary signature"};
}

CatalogEntry catalog_cor411(const Rational& a) {
  if (a.is_zero()) throw InvalidInput("cor4.11 requires a nonzero rotation rate");
  BlockSpec spec{1, 1, {a}};
  auto [l, form] = build_block_algebra(spec);
  LieAlgebra named = l.renamed({"s", "x", "y"});
  ProductTable table(3);
  table.p(0, 1, 2) = a;   // sx = a y
  table.p(0, 2, 1) = -a;  // sy = -a x
  return {"cor4.11", std::move(named), std::move(form), std::move(table),
          {true, true, true, 0},       ""};
}

LieAlgebra sl2() {
  // [h,e] = 2e, [h,f] = -2f, [e,f] = h
  return LieAlgebra({"h", "e", "f"},
                    tensor_from_brackets(3, {{0, 1, unit(3, 1, 2)},
                                             {0, 2, unit(3, 2, -2)},
                                             {1, 2, unit(3, 0)}}));
}

LieAlgebra so3() {
  // [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2
  return LieAlgebra({"e1", "e2", "e3"},
                    tensor_from_brackets(3, {{0, 1, unit(3, 2)},
                                             {1, 2, unit(3, 0)},
                                             {0, 2, unit(3, 1, -1)}}));
}

BilinearForm killing_form(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(l.ad_basis(i));
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Matrix prod = ads[i] * ads[j];
      Rational tr;
      for (std::size_t k = 0; k < n; ++k) tr += prod.at(k, k);
      gram.at(i, j) = tr;
      gram.at(j, i) = std::move(tr);
    }
  return BilinearForm(std::move(gram));
}

namespace {

CatalogEntry semisimple_entry(const std::string& name, LieAlgebra l) {
  BilinearForm form = killing_form(l);
  // ad-invariance of the Killing form makes the Eq.-(1) product half the bracket
  ProductTable table(l.dim());
  const Rational half(1, 2);
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j)
      for (std::size_t k = 0; k < l.dim(); ++k) table.p(i, j, k) = half * l.c(i, j, k);
  return {name, std::move(l), std::move(form), std::move(table), {false, false, false, 0}, ""};
}

}  // namespace

std::vector<CatalogEntry> catalog_semisimple() {
  return {semisimple_entry("sl2-killing", sl2()), semisimple_entry("so3-killing", so3())};
}

std::vector<std::string> catalog_names() {
  return {"abelian",        "heisenberg3", "centerless3", "dim2-nonabelian",
          "sl2-killing",    "so3-killing", "cor4.11"};
}

CatalogEntry catalog_by_name(const std::string& name,
                             const std::map<std::string, std::string>& params) {
  if (name == "abelian") {
    reject_unknown_params(params, {"dim"});
    auto it = params.find("dim");
    std::size_t n = 3;
    if (it != params.end()) {
      Rational q = Rational::parse(it->second);
      if (q.denominator_str() != "1" || q.sign() < 0 || q.numerator_str().size() > 3)
        throw InvalidInput("abelian: dim must be a small nonnegative integer");
      n = static_cast<std::size_t>(std::stoul(q.numerator_str()));
      if (n > 64) throw InvalidInput("abelian: dim too large");
    }
    return catalog_abelian(n);
  }
  if (name == "heisenberg3") {
    reject_unknown_params(params, {"b"});
    return catalog_heisenberg3(params.count("b") ? parse_param(params, "b") : Rational(1));
  }
  if (name == "centerless3") {
    reject_unknown_params(params, {"c", "a", "b"});
    return catalog_centerless3(parse_param(params, "c"),
                               params.count("a") ? parse_param(params, "a") : Rational(1),
                               params.count("b") ? parse_param(params, "b") : Rational(1));
  }
  if (name == "dim2-nonabelian") {
    reject_unknown_params(params, {});
    return catalog_dim2_nonabelian();
  }
  if (name == "sl2-killing") {
    reject_unknown_params(params, {});
    return catalog_semisimple()[0];
  }
  if (name == "so3-killing") {
    reject_unknown_params(params, {});
    return catalog_semisimple()[1];
  }
  if (name == "cor4.11") {
    reject_unknown_params(params, {"a"});
    return catalog_cor411(params.count("a") ? parse_param(params, "a") : Rational(1));
  }
  throw InvalidInput("unknown catalog entry '" + name + "'");
}

}  // namespace prl
