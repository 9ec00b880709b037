#include "octomaze/numeric.hpp"

#include "octomaze/errors.hpp"

#include <stdexcept>

namespace octomaze {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_mod(const Integer& a, const Integer& b) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer floor(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }

Integer ceil(const Rational& q) { return ceil_div(q.get_num(), q.get_den()); }

Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (!text.empty() && text[0] == '-') i = 1;
  if (i == text.size()) throw Error(ErrorCode::SyntaxError, "not an integer: '" + text + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') throw Error(ErrorCode::SyntaxError, "not an integer: '" + text + "'");
  }
  return Integer(text, 10);
}

std::string to_string(const Integer& v) { return v.get_str(10); }

std::string to_string(const Rational& v) {
  Rational c = v;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str(10);
  return c.get_num().get_str(10) + "/" + c.get_den().get_str(10);
}

}  // namespace octomaze
