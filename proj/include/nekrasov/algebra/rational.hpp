#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "nekrasov/algebra/errors.hpp"

namespace nek {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& x) { return x.get_str(); }
inline std::string to_string(const Integer& x) { return x.get_str(); }

inline Rational parse_rational(std::string_view text) {
  Rational r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0) {
    throw UsageError("not a rational number: '" + std::string(text) + "'");
  }
  r.canonicalize();
  return r;
}

// n/d in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational ratio(const Integer& n, const Integer& d) {
  if (d == 0) throw DomainError("zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}
inline Rational ratio(long n, long d) { return ratio(Integer(n), Integer(d)); }

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

inline Rational pow(const Rational& base, unsigned exp) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  return out;
}

// acc += x * y without a temporary.
inline void add_product(Integer& acc, const Integer& x, const Integer& y) {
  mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
}
inline void add_product(Rational& acc, const Rational& x, const Rational& y) { acc += x * y; }

inline Rational to_rational(const Integer& x) { return Rational(x); }
inline Rational to_rational(const Rational& x) { return x; }

// (-1)^e for integral e.
inline int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace nek
