#include "rational.hpp"

#include <cctype>
#include <ostream>

#include "errors.hpp"

namespace prl {

Rational::Rational(long num, long den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidInput("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw InvalidInput("reciprocal of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(r);
}

Rational Rational::parse(const std::string& text) {
  // ^[+-]?[0-9]+(/[0-9]+)?$
  std::size_t i = 0;
  const std::size_t n = text.size();
  if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t num_digits = 0;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++num_digits;
  if (num_digits == 0) throw InvalidInput("bad rational '" + text + "'");
  bool has_den = false;
  if (i < n && text[i] == '/') {
    has_den = true;
    ++i;
    std::size_t den_digits = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++den_digits;
    if (den_digits == 0) throw InvalidInput("bad rational '" + text + "'");
  }
  if (i != n) throw InvalidInput("bad rational '" + text + "'");

  mpq_class v(text[0] == '+' ? text.substr(1) : text, 10);
  if (has_den && sgn(v.get_den()) == 0)
    throw InvalidInput("rational with zero denominator '" + text + "'");
  v.canonicalize();
  return Rational(v);
}

std::string Rational::str() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace prl
