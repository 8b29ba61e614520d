#include "report.hpp"

#include <json.hpp>

#include <sstream>

#include "errors.hpp"

namespace prl {

namespace {

using nlohmann::json;

json terms_json(const Vec& v, const std::vector<std::string>& names) {
  json terms = json::array();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) terms.push_back(json::array({names[k], v[k].str()}));
  return terms;
}

json form_json(const BilinearForm& b, const std::vector<std::string>& names) {
  json entries = json::array();
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i; j < b.dim(); ++j) {
      const Rational& g = b.gram().at(i, j);
      if (!g.is_zero())
        entries.push_back({{"u", names[i]}, {"v", names[j]}, {"value", g.str()}});
    }
  return entries;
}

json condition_json(const ConditionReport& rep, const std::vector<std::string>& names,
                    bool scalar_defect) {
  json j{{"ok", rep.ok}};
  if (!rep.ok) {
    j["violations"] = rep.violations.size();
    const Violation& w = rep.witness();
    json idx = json::array();
    for (std::size_t a = 0; a < w.arity; ++a) idx.push_back(names[w.index[a]]);
    j["witness"] = {{"at", idx},
                    {"defect", scalar_defect ? json(w.defect[0].str())
                                             : terms_json(w.defect, names)}};
  }
  return j;
}

std::string condition_text(const std::string& label, const ConditionReport& rep,
                           const std::vector<std::string>& names, bool scalar_defect) {
  std::ostringstream os;
  os << label << ": " << (rep.ok ? "PASS" : "FAIL");
  if (!rep.ok) {
    const Violation& w = rep.witness();
    os << " at (";
    for (std::size_t a = 0; a < w.arity; ++a) os << (a ? "," : "") << names[w.index[a]];
    os << "), defect = ";
    if (scalar_defect)
      os << w.defect[0].str();
    else
      os << format_combination(w.defect, names);
    os << " (" << rep.violations.size() << " violating "
       << (w.arity == 2 ? "pairs" : "triples") << ")";
  }
  os << "\n";
  return os.str();
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

CheckReport make_check_report(const std::string& name, const LieAlgebra& l,
                              const BilinearForm& b) {
  PRCheck check = is_pseudo_riemannian(l, b);
  CheckReport rep{name,
                  l,
                  b,
                  std::move(check.table),
                  std::move(check.report),
                  b.signature(),
                  b.is_positive_definite(),
                  false,
                  false,
                  is_solvable(l),
                  is_nilpotent(l),
                  lie_center(l).dim(),
                  0,
                  {}};
  rep.pseudo_riemannian = rep.pr.pass();
  rep.riemann_lie = rep.pseudo_riemannian && rep.positive_definite;
  rep.product_center_dim = product_center(rep.table).dim();
  for (const auto& s : derived_series(l)) rep.derived_dims.push_back(s.dim());
  return rep;
}

std::string CheckReport::text() const {
  const auto& names = algebra.basis_names();
  std::ostringstream os;
  os << "instance: " << (name.empty() ? "(unnamed)" : name) << ", dim " << algebra.dim()
     << ", basis";
  for (const auto& nm : names) os << " " << nm;
  os << "\n";
  os << "form: signature (+" << signature.positives << ", -" << signature.negatives << ", 0:"
     << signature.zeros << "), positive definite: " << yesno(positive_definite) << "\n";
  os << "product table (nonzero entries):\n";
  bool any = false;
  for (std::size_t i = 0; i < table.dim(); ++i)
    for (std::size_t j = 0; j < table.dim(); ++j) {
      Vec e = table.entry(i, j);
      if (vec_is_zero(e)) continue;
      os << "  " << names[i] << "*" << names[j] << " = " << format_combination(e, names) << "\n";
      any = true;
    }
  if (!any) os << "  (all products zero)\n";
  os << condition_text("PR1  (uv - vu = [u,v])", pr.pr1, names, false);
  os << condition_text("PR2  ((uv,w) + (v,uw) = 0)", pr.pr2, names, true);
  os << condition_text("PR3  ([uv,w] + [u,wv] = 0)", pr.pr3, names, false);
  os << condition_text("PR3' ((uv)w - w(uv) + u(wv) - (wv)u = 0)", pr.pr3_prime, names, false);
  os << "pseudo-Riemannian: " << yesno(pseudo_riemannian) << "\n";
  os << "Riemann-Lie: " << yesno(riemann_lie) << "\n";
  os << "solvable: " << yesno(solvable) << " (derived series dims";
  for (auto d : derived_dims) os << " " << d;
  os << "), nilpotent: " << yesno(nilpotent) << "\n";
  os << "center dim: " << center_dim << "\n";
  return os.str();
}

std::string CheckReport::json() const {
  const auto& names = algebra.basis_names();
  nlohmann::json j;
  j["schema"] = "prlie.check/1";
  j["name"] = name;
  j["dim"] = algebra.dim();
  j["basis"] = names;
  j["form"] = {{"entries", form_json(form, names)},
               {"nondegenerate", form.nondegenerate()},
               {"signature",
                {{"positive", signature.positives},
                 {"negative", signature.negatives},
                 {"zero", signature.zeros}}},
               {"positive_definite", positive_definite}};
  nlohmann::json products = nlohmann::json::array();
  for (std::size_t i = 0; i < table.dim(); ++i)
    for (std::size_t j2 = 0; j2 < table.dim(); ++j2) {
      Vec e = table.entry(i, j2);
      if (!vec_is_zero(e))
        products.push_back(
            {{"left", names[i]}, {"right", names[j2]}, {"terms", terms_json(e, names)}});
    }
  j["product"] = products;
  j["pr1"] = condition_json(pr.pr1, names, false);
  j["pr2"] = condition_json(pr.pr2, names, true);
  j["pr3"] = condition_json(pr.pr3, names, false);
  j["pr3_prime"] = condition_json(pr.pr3_prime, names, false);
  j["pseudo_riemannian"] = pseudo_riemannian;
  j["riemann_lie"] = riemann_lie;
  j["solvable"] = solvable;
  j["nilpotent"] = nilpotent;
  j["center_dim"] = center_dim;
  j["product_center_dim"] = product_center_dim;
  j["derived_series_dims"] = derived_dims;
  return j.dump(2);
}

DecomposeReport make_decompose_report(const std::string& name, const LieAlgebra& l,
                                      const BilinearForm& b) {
  return DecomposeReport{name, l, b, riemann_decompose(l, b)};
}

namespace {

json subspace_json(const Subspace& s, const std::vector<std::string>& names) {
  json basis = json::array();
  for (std::size_t c = 0; c < s.dim(); ++c) basis.push_back(terms_json(s.basis().col(c), names));
  return {{"dim", s.dim()}, {"basis", basis}};
}

std::string subspace_text(const Subspace& s, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "dim " << s.dim() << ": {";
  for (std::size_t c = 0; c < s.dim(); ++c)
    os << (c ? ", " : " ") << format_combination(s.basis().col(c), names);
  os << (s.dim() ? " }" : "}");
  return os.str();
}

}  // namespace

std::string DecomposeReport::text() const {
  const auto& names = algebra.basis_names();
  const auto& c = decomposition.checks;
  std::ostringstream os;
  os << "instance: " << (name.empty() ? "(unnamed)" : name) << ", dim " << algebra.dim() << "\n";
  os << "orthogonal splitting g = S (+) U\n";
  os << "S = " << subspace_text(decomposition.s, names) << "\n";
  os << "U = " << subspace_text(decomposition.u, names) << "\n";
  os << "checks: orthogonal=" << yesno(c.orthogonal) << " S_abelian=" << yesno(c.s_abelian)
     << " U_abelian_lie_ideal=" << yesno(c.u_abelian_lie_ideal)
     << " spans_whole=" << yesno(c.spans_whole) << "\n";
  os << "        S=Z_r(g)=" << yesno(c.s_is_right_annihilator)
     << " U=g*g=" << yesno(c.u_is_product_span)
     << " S_perp=g*g=" << yesno(c.s_perp_is_product_span) << "\n";
  return os.str();
}

std::string DecomposeReport::json() const {
  const auto& names = algebra.basis_names();
  const auto& c = decomposition.checks;
  nlohmann::json j;
  j["schema"] = "prlie.decompose/1";
  j["name"] = name;
  j["dim"] = algebra.dim();
  j["basis"] = names;
  j["S"] = subspace_json(decomposition.s, names);
  j["U"] = subspace_json(decomposition.u, names);
  j["checks"] = {{"orthogonal", c.orthogonal},
                 {"S_abelian", c.s_abelian},
                 {"U_abelian_lie_ideal", c.u_abelian_lie_ideal},
                 {"spans_whole", c.spans_whole},
                 {"S_is_right_annihilator", c.s_is_right_annihilator},
                 {"U_is_product_span", c.u_is_product_span},
                 {"S_perp_is_product_span", c.s_perp_is_product_span},
                 {"all", c.all()}};
  return j.dump(2);
}

SearchReport make_search_report(const std::string& name, const LieAlgebra& l,
                                const SearchSpec& spec) {
  SearchReport rep{name, l, spec, 0, {}};
  rep.candidates = spec.mode == SearchSpec::Mode::grid
                       ? grid_candidate_count(l.dim(), spec.values.size())
                       : spec.random_count;
  rep.result = search_forms(l, spec);
  return rep;
}

std::string SearchReport::text() const {
  std::ostringstream os;
  os << "search: " << (spec.mode == SearchSpec::Mode::grid ? "exhaustive grid" : "randomized")
     << " over " << spec.values.size() << " values, " << candidates << " candidates";
  if (spec.mode == SearchSpec::Mode::randomized) os << " (seed " << spec.seed << ")";
  os << "\n";
  os << "tested " << result.tested << ", degenerate " << result.degenerate << ", passed "
     << result.passed << "\n";
  const auto& names = algebra.basis_names();
  for (const auto& f : result.passes) {
    os << "pass:";
    bool any = false;
    for (std::size_t i = 0; i < f.dim(); ++i)
      for (std::size_t j = i; j < f.dim(); ++j)
        if (!f.gram().at(i, j).is_zero()) {
          os << " (" << names[i] << "," << names[j] << ")=" << f.gram().at(i, j).str();
          any = true;
        }
    if (!any) os << " (zero form)";
    os << "\n";
  }
  return os.str();
}

std::string SearchReport::json() const {
  const auto& names = algebra.basis_names();
  nlohmann::json j;
  j["schema"] = "prlie.search/1";
  j["name"] = name;
  j["dim"] = algebra.dim();
  j["basis"] = names;
  j["mode"] = spec.mode == SearchSpec::Mode::grid ? "grid" : "randomized";
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : spec.values) values.push_back(v.str());
  j["values"] = values;
  if (spec.mode == SearchSpec::Mode::randomized) {
    j["seed"] = spec.seed;
    j["count"] = spec.random_count;
  }
  j["candidates"] = candidates;
  j["tested"] = result.tested;
  j["degenerate"] = result.degenerate;
  j["passed"] = result.passed;
  j["algebra_solvable"] = result.algebra_solvable;
  nlohmann::json passes = nlohmann::json::array();
  for (const auto& f : result.passes) passes.push_back(form_json(f, names));
  j["passes"] = passes;
  return j.dump(2);
}

}  // namespace prl
