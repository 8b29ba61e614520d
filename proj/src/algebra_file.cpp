#include "algebra_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "errors.hpp"

namespace prl {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

struct LineLexer {
  std::string s;
  std::size_t pos = 0;
  int line;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(line, std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip_ws();
    if (pos >= s.size() || !ident_start(s[pos]))
      throw ParseError(line, "expected a basis name");
    std::size_t start = pos;
    while (pos < s.size() && ident_char(s[pos])) ++pos;
    return s.substr(start, pos - start);
  }
  // any run of non-space characters (document names may contain '-', '.')
  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != ' ' && s[pos] != '\t') ++pos;
    if (pos == start) throw ParseError(line, "expected a word");
    return s.substr(start, pos - start);
  }
  Rational rational() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    if (pos == start) throw ParseError(line, "expected a rational number");
    try {
      return Rational::parse(s.substr(start, pos - start));
    } catch (const InvalidInput& e) {
      throw ParseError(line, e.what());
    }
  }
};

struct PairKey {
  std::size_t a, b;
  bool operator<(const PairKey& o) const { return a != o.a ? a < o.a : b < o.b; }
};

}  // namespace

std::string format_combination(const Vec& v, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    const bool neg = v[k].sign() < 0;
    const Rational mag = neg ? -v[k] : v[k];
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (!mag.is_one()) os << mag.str() << "*";
    os << names[k];
  }
  if (first) os << "0";
  return os.str();
}

AlgebraDoc parse_algebra_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;

  std::string doc_name;
  bool saw_name = false;
  long declared_dim = -1;
  std::vector<std::string> basis;
  std::map<std::string, std::size_t> index;
  // combos keyed by (i,j) as listed
  std::map<PairKey, std::pair<Vec, int>> brackets;  // value, line
  std::map<PairKey, std::pair<Rational, int>> form_entries;

  auto parse_combo = [&](LineLexer& lx) {
    Vec combo(basis.size());
    if (lx.peek() == '0') {
      // a lone "0" means the zero combination
      std::size_t save = lx.pos;
      ++lx.pos;
      if (lx.done()) return combo;
      lx.pos = save;
    }
    bool first = true;
    for (;;) {
      bool neg = false;
      if (lx.accept('-'))
        neg = true;
      else if (lx.accept('+')) {
        if (first) throw ParseError(lx.line, "unexpected leading '+'");
      } else if (!first) {
        break;
      }
      Rational coef(1);
      if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
        coef = lx.rational();
        if (lx.peek() == '*') {
          lx.expect('*');
        } else if (!ident_start(lx.peek())) {
          throw ParseError(lx.line, "bracket terms must reference a basis name");
        }
      }
      std::string nm = lx.ident();
      auto it = index.find(nm);
      if (it == index.end()) throw ParseError(lx.line, "unknown basis element '" + nm + "'");
      combo[it->second] += neg ? -coef : coef;
      first = false;
      if (lx.done()) break;
    }
    return combo;
  };

  while (std::getline(in, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    LineLexer lx{raw, 0, line_no};
    if (lx.done()) continue;

    const char c = lx.peek();
    if (c == '[') {
      if (basis.empty()) throw ParseError(line_no, "bracket before 'basis' line");
      lx.expect('[');
      std::string a = lx.ident();
      lx.expect(',');
      std::string b = lx.ident();
      lx.expect(']');
      lx.expect('=');
      auto ia = index.find(a), ib = index.find(b);
      if (ia == index.end()) throw ParseError(line_no, "unknown basis element '" + a + "'");
      if (ib == index.end()) throw ParseError(line_no, "unknown basis element '" + b + "'");
      Vec combo = parse_combo(lx);
      if (!lx.done()) throw ParseError(line_no, "trailing characters after bracket value");
      PairKey key{ia->second, ib->second};
      if (brackets.count(key)) throw ParseError(line_no, "duplicate bracket [" + a + "," + b + "]");
      brackets.emplace(key, std::make_pair(std::move(combo), line_no));
    } else if (c == '(') {
      if (basis.empty()) throw ParseError(line_no, "form entry before 'basis' line");
      lx.expect('(');
      std::string a = lx.ident();
      lx.expect(',');
      std::string b = lx.ident();
      lx.expect(')');
      lx.expect('=');
      auto ia = index.find(a), ib = index.find(b);
      if (ia == index.end()) throw ParseError(line_no, "unknown basis element '" + a + "'");
      if (ib == index.end()) throw ParseError(line_no, "unknown basis element '" + b + "'");
      Rational value = lx.rational();
      if (!lx.done()) throw ParseError(line_no, "trailing characters after form value");
      PairKey key{std::min(ia->second, ib->second), std::max(ia->second, ib->second)};
      if (form_entries.count(key))
        throw ParseError(line_no, "duplicate form entry (" + a + "," + b + ")");
      form_entries.emplace(key, std::make_pair(std::move(value), line_no));
    } else {
      std::string kw = lx.ident();
      if (kw == "name") {
        if (saw_name) throw ParseError(line_no, "duplicate 'name' line");
        doc_name = lx.word();
        saw_name = true;
        if (!lx.done()) throw ParseError(line_no, "trailing characters after name");
      } else if (kw == "dim") {
        if (declared_dim >= 0) throw ParseError(line_no, "duplicate 'dim' line");
        Rational q = lx.rational();
        if (q.sign() < 0 || q.denominator_str() != "1" || q.numerator_str().size() > 3)
          throw ParseError(line_no, "dim must be a small nonnegative integer");
        declared_dim = std::stol(q.numerator_str());
        if (!lx.done()) throw ParseError(line_no, "trailing characters after dim");
      } else if (kw == "basis") {
        if (!basis.empty()) throw ParseError(line_no, "duplicate 'basis' line");
        while (!lx.done()) {
          std::string nm = lx.ident();
          if (index.count(nm)) throw ParseError(line_no, "duplicate basis name '" + nm + "'");
          index[nm] = basis.size();
          basis.push_back(nm);
        }
        if (basis.empty()) throw ParseError(line_no, "empty basis");
      } else {
        throw ParseError(line_no, "unrecognized line '" + kw + "'");
      }
    }
  }

  if (basis.empty()) throw ParseError(0, "missing 'basis' line");
  const std::size_t n = basis.size();
  if (declared_dim >= 0 && static_cast<std::size_t>(declared_dim) != n)
    throw ParseError(0, "declared dim " + std::to_string(declared_dim) + " != basis size " +
                            std::to_string(n));

  // assemble the dense antisymmetric tensor
  std::vector<Rational> tensor(n * n * n);
  for (const auto& [key, value] : brackets) {
    const auto& [combo, ln] = value;
    if (key.a == key.b) {
      if (!vec_is_zero(combo))
        throw ParseError(ln, "bracket [" + basis[key.a] + "," + basis[key.a] + "] must be zero");
      continue;
    }
    auto mirror = brackets.find(PairKey{key.b, key.a});
    if (mirror != brackets.end() && key.a < key.b) {
      Vec sum = vec_add(combo, mirror->second.first);
      if (!vec_is_zero(sum))
        throw ParseError(mirror->second.second,
                         "brackets [" + basis[key.a] + "," + basis[key.b] + "] and [" +
                             basis[key.b] + "," + basis[key.a] + "] are not exactly negated");
    }
    for (std::size_t k = 0; k < n; ++k) {
      tensor[(key.a * n + key.b) * n + k] = combo[k];
      if (mirror == brackets.end()) tensor[(key.b * n + key.a) * n + k] = -combo[k];
    }
  }

  Matrix gram(n, n);
  for (const auto& [key, value] : form_entries) {
    gram.at(key.a, key.b) = value.first;
    gram.at(key.b, key.a) = value.first;
  }

  try {
    return AlgebraDoc{doc_name, LieAlgebra(basis, std::move(tensor)), BilinearForm(std::move(gram))};
  } catch (const InvalidInput& e) {
    throw ParseError(0, e.what());
  }
}

AlgebraDoc load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_text(buf.str());
}

std::string emit_algebra_text(const LieAlgebra& l, const BilinearForm& b,
                              const std::string& name) {
  if (l.dim() != b.dim()) throw ContractError("emit: dimension mismatch");
  const auto& names = l.basis_names();
  std::ostringstream os;
  if (!name.empty()) os << "name " << name << "\n";
  os << "dim " << l.dim() << "\n";
  os << "basis";
  for (const auto& nm : names) os << " " << nm;
  os << "\n";
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      Vec combo = l.bracket_basis(i, j);
      if (vec_is_zero(combo)) continue;
      os << "[" << names[i] << "," << names[j] << "] = " << format_combination(combo, names)
         << "\n";
    }
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i; j < l.dim(); ++j) {
      const Rational& g = b.gram().at(i, j);
      if (g.is_zero()) continue;
      os << "(" << names[i] << "," << names[j] << ") = " << g.str() << "\n";
    }
  return os.str();
}

}  // namespace prl
