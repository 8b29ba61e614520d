#include "prlie.h"

#include <cstring>
#include <map>
#include <string>

#include "algebra_file.hpp"
#include "construct.hpp"
#include "errors.hpp"
#include "report.hpp"

using namespace prl;

struct prl_algebra {
  LieAlgebra impl;
  std::string name;  // from the file's name line, if any
};
struct prl_form {
  BilinearForm impl;
};
struct prl_report {
  CheckReport impl;
};
struct prl_decomp {
  DecomposeReport impl;
};
struct prl_search {
  SearchReport impl;
};

namespace {

thread_local std::string g_last_error = "ok";

prl_status fail(prl_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

/// Runs `fn`, translating C++ exceptions into status codes.
template <typename Fn>
prl_status guarded(Fn&& fn) {
  try {
    fn();
    return PRL_OK;
  } catch (const ParseError& e) {
    return fail(PRL_ERR_PARSE, e.what());
  } catch (const PreconditionError& e) {
    return fail(PRL_ERR_PRECONDITION, e.what());
  } catch (const LimitError& e) {
    return fail(PRL_ERR_LIMIT, e.what());
  } catch (const InternalBug& e) {
    return fail(PRL_ERR_BUG, e.what());
  } catch (const ContractError& e) {
    return fail(PRL_ERR_ARGUMENT, e.what());
  } catch (const InvalidInput& e) {
    return fail(PRL_ERR_INPUT, e.what());
  } catch (const std::exception& e) {
    return fail(PRL_ERR_BUG, std::string("unexpected exception: ") + e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

prl_status require(bool ok, const char* what) {
  return ok ? PRL_OK : fail(PRL_ERR_ARGUMENT, what);
}

}  // namespace

extern "C" {

const char* prl_version(void) { return "0.1.0"; }

const char* prl_last_error(void) { return g_last_error.c_str(); }

void prl_string_free(char* s) { delete[] s; }
void prl_algebra_free(prl_algebra* a) { delete a; }
void prl_form_free(prl_form* f) { delete f; }
void prl_report_free(prl_report* r) { delete r; }
void prl_decomp_free(prl_decomp* d) { delete d; }
void prl_search_free(prl_search* s) { delete s; }

prl_status prl_parse_text(const char* text, prl_algebra** algebra_out, prl_form** form_out) {
  if (auto st = require(text != nullptr, "prl_parse_text: null text")) return st;
  return guarded([&] {
    AlgebraDoc doc = parse_algebra_text(text);
    if (algebra_out) *algebra_out = new prl_algebra{std::move(doc.algebra), doc.name};
    if (form_out) *form_out = new prl_form{std::move(doc.form)};
  });
}

prl_status prl_parse_file(const char* path, prl_algebra** algebra_out, prl_form** form_out) {
  if (auto st = require(path != nullptr, "prl_parse_file: null path")) return st;
  return guarded([&] {
    AlgebraDoc doc = load_algebra_file(path);
    if (algebra_out) *algebra_out = new prl_algebra{std::move(doc.algebra), doc.name};
    if (form_out) *form_out = new prl_form{std::move(doc.form)};
  });
}

prl_status prl_emit_text(const prl_algebra* a, const prl_form* f, const char* name,
                         char** text_out) {
  if (auto st = require(a && f && text_out, "prl_emit_text: null argument")) return st;
  return guarded([&] {
    *text_out = dup_string(emit_algebra_text(a->impl, f->impl, name ? name : ""));
  });
}

int prl_algebra_dim(const prl_algebra* a) { return a ? static_cast<int>(a->impl.dim()) : -1; }

const char* prl_algebra_basis_name(const prl_algebra* a, int i) {
  if (!a || i < 0 || static_cast<std::size_t>(i) >= a->impl.dim()) return nullptr;
  return a->impl.basis_names()[static_cast<std::size_t>(i)].c_str();
}

int prl_algebra_solvable(const prl_algebra* a) { return a && is_solvable(a->impl) ? 1 : 0; }
int prl_algebra_nilpotent(const prl_algebra* a) { return a && is_nilpotent(a->impl) ? 1 : 0; }

int prl_form_dim(const prl_form* f) { return f ? static_cast<int>(f->impl.dim()) : -1; }
int prl_form_nondegenerate(const prl_form* f) { return f && f->impl.nondegenerate() ? 1 : 0; }
int prl_form_positive_definite(const prl_form* f) {
  return f && f->impl.is_positive_definite() ? 1 : 0;
}

prl_status prl_construct_block(int m, int n, const char* const* rates, prl_algebra** algebra_out,
                               prl_form** form_out) {
  if (auto st = require(m >= 0 && n >= 0, "prl_construct_block: negative size")) return st;
  if (auto st = require(m * n == 0 || rates != nullptr, "prl_construct_block: null rates"))
    return st;
  return guarded([&] {
    BlockSpec spec;
    spec.m = static_cast<std::size_t>(m);
    spec.n = static_cast<std::size_t>(n);
    for (int i = 0; i < m * n; ++i) {
      if (!rates[i]) throw ContractError("prl_construct_block: null rate string");
      spec.rates.push_back(Rational::parse(rates[i]));
    }
    auto [algebra, form] = build_block_algebra(spec);
    if (algebra_out) *algebra_out = new prl_algebra{std::move(algebra), "block"};
    if (form_out) *form_out = new prl_form{std::move(form)};
  });
}

prl_status prl_catalog(const char* name, int nparams, const char* const* keys,
                       const char* const* values, prl_algebra** algebra_out,
                       prl_form** form_out) {
  if (auto st = require(name != nullptr, "prl_catalog: null name")) return st;
  if (auto st = require(nparams == 0 || (keys && values), "prl_catalog: null params")) return st;
  return guarded([&] {
    std::map<std::string, std::string> params;
    for (int i = 0; i < nparams; ++i) {
      if (!keys[i] || !values[i]) throw ContractError("prl_catalog: null param string");
      if (!params.emplace(keys[i], values[i]).second)
        throw InvalidInput(std::string("duplicate parameter '") + keys[i] + "'");
    }
    CatalogEntry entry = catalog_by_name(name, params);
    if (algebra_out) *algebra_out = new prl_algebra{std::move(entry.algebra), entry.name};
    if (form_out) *form_out = new prl_form{std::move(entry.form)};
  });
}

prl_status prl_check(const prl_algebra* a, const prl_form* f, prl_report** report_out) {
  if (auto st = require(a && f && report_out, "prl_check: null argument")) return st;
  return guarded([&] {
    *report_out = new prl_report{make_check_report(a->name, a->impl, f->impl)};
  });
}

int prl_report_pr1_ok(const prl_report* r) { return r && r->impl.pr.pr1.ok ? 1 : 0; }
int prl_report_pr2_ok(const prl_report* r) { return r && r->impl.pr.pr2.ok ? 1 : 0; }
int prl_report_pr3_ok(const prl_report* r) { return r && r->impl.pr.pr3.ok ? 1 : 0; }
int prl_report_pr3_prime_ok(const prl_report* r) { return r && r->impl.pr.pr3_prime.ok ? 1 : 0; }
int prl_report_pseudo_riemannian(const prl_report* r) {
  return r && r->impl.pseudo_riemannian ? 1 : 0;
}
int prl_report_riemann_lie(const prl_report* r) { return r && r->impl.riemann_lie ? 1 : 0; }
int prl_report_solvable(const prl_report* r) { return r && r->impl.solvable ? 1 : 0; }
int prl_report_center_dim(const prl_report* r) {
  return r ? static_cast<int>(r->impl.center_dim) : -1;
}

prl_status prl_report_signature(const prl_report* r, int* positives, int* negatives, int* zeros) {
  if (auto st = require(r != nullptr, "prl_report_signature: null report")) return st;
  if (positives) *positives = static_cast<int>(r->impl.signature.positives);
  if (negatives) *negatives = static_cast<int>(r->impl.signature.negatives);
  if (zeros) *zeros = static_cast<int>(r->impl.signature.zeros);
  return PRL_OK;
}

prl_status prl_report_product_entry(const prl_report* r, int i, int j, int k, char** value_out) {
  if (auto st = require(r && value_out, "prl_report_product_entry: null argument")) return st;
  const int n = static_cast<int>(r->impl.table.dim());
  if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n)
    return fail(PRL_ERR_ARGUMENT, "prl_report_product_entry: index out of range");
  *value_out = dup_string(r->impl.table
                              .p(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                                 static_cast<std::size_t>(k))
                              .str());
  return PRL_OK;
}

prl_status prl_report_text(const prl_report* r, char** text_out) {
  if (auto st = require(r && text_out, "prl_report_text: null argument")) return st;
  return guarded([&] { *text_out = dup_string(r->impl.text()); });
}

prl_status prl_report_json(const prl_report* r, char** json_out) {
  if (auto st = require(r && json_out, "prl_report_json: null argument")) return st;
  return guarded([&] { *json_out = dup_string(r->impl.json()); });
}

prl_status prl_decompose(const prl_algebra* a, const prl_form* f, prl_decomp** decomp_out) {
  if (auto st = require(a && f && decomp_out, "prl_decompose: null argument")) return st;
  return guarded([&] {
    *decomp_out = new prl_decomp{make_decompose_report(a->name, a->impl, f->impl)};
  });
}

int prl_decomp_s_dim(const prl_decomp* d) {
  return d ? static_cast<int>(d->impl.decomposition.s.dim()) : -1;
}
int prl_decomp_u_dim(const prl_decomp* d) {
  return d ? static_cast<int>(d->impl.decomposition.u.dim()) : -1;
}
int prl_decomp_checks_ok(const prl_decomp* d) {
  return d && d->impl.decomposition.checks.all() ? 1 : 0;
}

prl_status prl_decomp_text(const prl_decomp* d, char** text_out) {
  if (auto st = require(d && text_out, "prl_decomp_text: null argument")) return st;
  return guarded([&] { *text_out = dup_string(d->impl.text()); });
}

prl_status prl_decomp_json(const prl_decomp* d, char** json_out) {
  if (auto st = require(d && json_out, "prl_decomp_json: null argument")) return st;
  return guarded([&] { *json_out = dup_string(d->impl.json()); });
}

prl_status prl_search_forms(const prl_algebra* a, const char* const* values, int nvalues,
                            int randomized, uint64_t count, uint64_t seed, uint64_t ceiling,
                            prl_search** search_out) {
  if (auto st = require(a && search_out, "prl_search_forms: null argument")) return st;
  if (auto st = require(values != nullptr && nvalues > 0, "prl_search_forms: empty value set"))
    return st;
  return guarded([&] {
    SearchSpec spec;
    spec.mode = randomized ? SearchSpec::Mode::randomized : SearchSpec::Mode::grid;
    for (int i = 0; i < nvalues; ++i) {
      if (!values[i]) throw ContractError("prl_search_forms: null value string");
      spec.values.push_back(Rational::parse(values[i]));
    }
    spec.random_count = count;
    spec.seed = seed;
    if (ceiling > 0) spec.ceiling = ceiling;
    *search_out = new prl_search{make_search_report(a->name, a->impl, spec)};
  });
}

uint64_t prl_search_tested(const prl_search* s) { return s ? s->impl.result.tested : 0; }
uint64_t prl_search_degenerate(const prl_search* s) { return s ? s->impl.result.degenerate : 0; }
uint64_t prl_search_passed(const prl_search* s) { return s ? s->impl.result.passed : 0; }

prl_status prl_search_pass_text(const prl_search* s, uint64_t index, char** text_out) {
  if (auto st = require(s && text_out, "prl_search_pass_text: null argument")) return st;
  if (index >= s->impl.result.passes.size())
    return fail(PRL_ERR_ARGUMENT, "prl_search_pass_text: index out of range");
  return guarded([&] {
    *text_out = dup_string(emit_algebra_text(
        s->impl.algebra, s->impl.result.passes[static_cast<std::size_t>(index)], "pass"));
  });
}

prl_status prl_search_text(const prl_search* s, char** text_out) {
  if (auto st = require(s && text_out, "prl_search_text: null argument")) return st;
  return guarded([&] { *text_out = dup_string(s->impl.text()); });
}

prl_status prl_search_json(const prl_search* s, char** json_out) {
  if (auto st = require(s && json_out, "prl_search_json: null argument")) return st;
  return guarded([&] { *json_out = dup_string(s->impl.json()); });
}

}  // extern "C"
