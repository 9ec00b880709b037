#pragma once

#include <gmpxx.h>

#include <string>

namespace octomaze {

using Integer = mpz_class;
using Rational = mpq_class;

struct IntPoint {
  Integer x;
  Integer y;
};

struct RatPoint {
  Rational x;
  Rational y;
};

inline bool operator==(const IntPoint& a, const IntPoint& b) { return a.x == b.x && a.y == b.y; }
inline bool operator==(const RatPoint& a, const RatPoint& b) { return a.x == b.x && a.y == b.y; }

inline RatPoint to_rational(const IntPoint& p) { return {Rational(p.x), Rational(p.y)}; }

/// num/den in lowest terms; den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
/// Result in [0, |b|).
Integer floor_mod(const Integer& a, const Integer& b);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline int sign(const Integer& v) { return sgn(v); }
inline int sign(const Rational& v) { return sgn(v); }

/// Decimal integer with optional leading '-'. Throws std::invalid_argument otherwise.
Integer parse_integer(const std::string& text);

std::string to_string(const Integer& v);
/// "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& v);

}  // namespace octomaze
