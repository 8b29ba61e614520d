// prlie command line front end. Talks to the core exclusively through the
// shared-library C API in prlie.h.

#include <prlie.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;   // honest mathematical failure
constexpr int kExitUsage = 2;  // bad input or usage
constexpr int kExitBug = 3;    // internal invariant violated

struct AlgebraHandle {
  prl_algebra* p = nullptr;
  ~AlgebraHandle() { prl_algebra_free(p); }
};
struct FormHandle {
  prl_form* p = nullptr;
  ~FormHandle() { prl_form_free(p); }
};

std::string take_string(char* s) {
  std::string out = s ? s : "";
  prl_string_free(s);
  return out;
}

int status_exit(prl_status st) {
  switch (st) {
    case PRL_OK:
      return kExitPass;
    case PRL_ERR_PRECONDITION:
      return kExitFail;
    case PRL_ERR_BUG:
      return kExitBug;
    default:
      return kExitUsage;
  }
}

int report_error(prl_status st) {
  std::cerr << (st == PRL_ERR_BUG ? "BUG: " : "error: ") << prl_last_error() << "\n";
  return status_exit(st);
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitPass;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return kExitUsage;
  }
  out << text;
  return kExitPass;
}

int load_instance(const std::string& path, AlgebraHandle& algebra, FormHandle& form) {
  prl_status st = prl_parse_file(path.c_str(), &algebra.p, &form.p);
  if (st != PRL_OK) return report_error(st);
  return kExitPass;
}

int cmd_check(const std::string& path, bool json) {
  AlgebraHandle algebra;
  FormHandle form;
  if (int rc = load_instance(path, algebra, form)) return rc;
  if (!prl_form_nondegenerate(form.p)) {
    std::cerr << "error: the bilinear form is degenerate\n";
    return kExitUsage;
  }
  prl_report* report = nullptr;
  prl_status st = prl_check(algebra.p, form.p, &report);
  if (st != PRL_OK) return report_error(st);
  char* rendered = nullptr;
  st = json ? prl_report_json(report, &rendered) : prl_report_text(report, &rendered);
  if (st != PRL_OK) {
    prl_report_free(report);
    return report_error(st);
  }
  std::cout << take_string(rendered);
  if (!json) std::cout.flush();
  const bool pass = prl_report_pseudo_riemannian(report) != 0;
  prl_report_free(report);
  return pass ? kExitPass : kExitFail;
}

int cmd_decompose(const std::string& path, bool json) {
  AlgebraHandle algebra;
  FormHandle form;
  if (int rc = load_instance(path, algebra, form)) return rc;
  prl_decomp* decomp = nullptr;
  prl_status st = prl_decompose(algebra.p, form.p, &decomp);
  if (st == PRL_ERR_PRECONDITION) {
    if (json)
      std::cout << "{\n  \"schema\": \"prlie.decompose/1\",\n  \"error\": \""
                << prl_last_error() << "\"\n}\n";
    std::cerr << "not Riemann-Lie: " << prl_last_error() << "\n";
    return kExitFail;
  }
  if (st != PRL_OK) return report_error(st);
  char* rendered = nullptr;
  st = json ? prl_decomp_json(decomp, &rendered) : prl_decomp_text(decomp, &rendered);
  if (st != PRL_OK) {
    prl_decomp_free(decomp);
    return report_error(st);
  }
  std::cout << take_string(rendered);
  prl_decomp_free(decomp);
  return kExitPass;
}

int cmd_construct(int m, int n, const std::string& rates_csv, const std::string& out_path) {
  std::vector<std::string> rates;
  if (!rates_csv.empty()) rates = split_csv(rates_csv);
  if (static_cast<int>(rates.size()) != m * n) {
    std::cerr << "error: expected " << m * n << " rates (m*n, row-major), got " << rates.size()
              << "\n";
    return kExitUsage;
  }
  std::vector<const char*> rate_ptrs;
  for (const auto& r : rates) rate_ptrs.push_back(r.c_str());
  AlgebraHandle algebra;
  FormHandle form;
  prl_status st = prl_construct_block(m, n, rate_ptrs.empty() ? nullptr : rate_ptrs.data(),
                                      &algebra.p, &form.p);
  if (st != PRL_OK) return report_error(st);
  char* text = nullptr;
  st = prl_emit_text(algebra.p, form.p, "block", &text);
  if (st != PRL_OK) return report_error(st);
  return write_output(take_string(text), out_path);
}

int cmd_search(const std::string& path, const std::string& values_csv, uint64_t random_count,
               bool randomized, uint64_t seed, uint64_t ceiling, bool json) {
  AlgebraHandle algebra;
  FormHandle form;  // the file's form is ignored; the search supplies its own
  if (int rc = load_instance(path, algebra, form)) return rc;
  std::vector<std::string> values = split_csv(values_csv);
  std::vector<const char*> value_ptrs;
  for (const auto& v : values) value_ptrs.push_back(v.c_str());
  prl_search* search = nullptr;
  prl_status st =
      prl_search_forms(algebra.p, value_ptrs.data(), static_cast<int>(value_ptrs.size()),
                       randomized ? 1 : 0, random_count, seed, ceiling, &search);
  if (st != PRL_OK) return report_error(st);
  char* rendered = nullptr;
  st = json ? prl_search_json(search, &rendered) : prl_search_text(search, &rendered);
  if (st != PRL_OK) {
    prl_search_free(search);
    return report_error(st);
  }
  std::cout << take_string(rendered);
  prl_search_free(search);
  return kExitPass;
}

int cmd_catalog(const std::string& name, const std::vector<std::string>& params,
                const std::string& out_path) {
  std::vector<std::string> keys, values;
  for (const auto& p : params) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::cerr << "error: catalog parameters are key=value, got '" << p << "'\n";
      return kExitUsage;
    }
    keys.push_back(p.substr(0, eq));
    values.push_back(p.substr(eq + 1));
  }
  std::vector<const char*> key_ptrs, value_ptrs;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    key_ptrs.push_back(keys[i].c_str());
    value_ptrs.push_back(values[i].c_str());
  }
  AlgebraHandle algebra;
  FormHandle form;
  prl_status st = prl_catalog(name.c_str(), static_cast<int>(keys.size()),
                              key_ptrs.empty() ? nullptr : key_ptrs.data(),
                              value_ptrs.empty() ? nullptr : value_ptrs.data(), &algebra.p,
                              &form.p);
  if (st != PRL_OK) return report_error(st);
  char* text = nullptr;
  st = prl_emit_text(algebra.p, form.p, name.c_str(), &text);
  if (st != PRL_OK) return report_error(st);
  return write_output(take_string(text), out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudo-Riemannian Lie algebra toolkit"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable JSON reports");

  std::string path, out_path, rates_csv, catalog_name;
  std::string values_csv = "-2,-1,-1/2,0,1/2,1,2";
  std::vector<std::string> catalog_params;
  int m = 0, n = 0;
  uint64_t random_count = 0, seed = 0, ceiling = 0;

  auto* check = app.add_subcommand("check", "verify the PR conditions for an instance file");
  check->add_option("file", path, "instance file")->required();
  check->add_flag("--json", json, "machine-readable JSON report");

  auto* decompose =
      app.add_subcommand("decompose", "orthogonal splitting g = S (+) U of a Riemann-Lie instance");
  decompose->add_option("file", path, "instance file")->required();
  decompose->add_flag("--json", json, "machine-readable JSON report");

  auto* construct = app.add_subcommand("construct", "build a block Riemann-Lie algebra");
  construct->add_option("-m", m, "number of rotation generators")->required();
  construct->add_option("-n", n, "number of planes")->required();
  construct->add_option("--rates", rates_csv, "m*n rotation rates, row-major, comma-separated");
  construct->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* search = app.add_subcommand("search", "search for compatible forms on an algebra");
  search->add_option("file", path, "algebra file (its form entries are ignored)")->required();
  search->add_option("--values", values_csv, "Gram entry candidates, comma-separated rationals");
  auto* random_opt =
      search->add_option("--random", random_count, "sample COUNT random forms instead of the grid");
  search->add_option("--seed", seed, "random seed (default 0)");
  search->add_option("--ceiling", ceiling, "grid candidate ceiling (default 1048576)");
  search->add_flag("--json", json, "machine-readable JSON report");

  auto* catalog = app.add_subcommand("catalog", "emit a named catalog instance file");
  catalog->add_option("name", catalog_name, "catalog entry name")->required();
  catalog->add_option("params", catalog_params, "key=value parameters");
  catalog->add_option("-o,--output", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // keep the exit-code contract: anything unusable is 2, --help is 0
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (check->parsed()) return cmd_check(path, json);
  if (decompose->parsed()) return cmd_decompose(path, json);
  if (construct->parsed()) return cmd_construct(m, n, rates_csv, out_path);
  if (search->parsed())
    return cmd_search(path, values_csv, random_count, !random_opt->empty(), seed, ceiling, json);
  if (catalog->parsed()) return cmd_catalog(catalog_name, catalog_params, out_path);
  return kExitUsage;
}
