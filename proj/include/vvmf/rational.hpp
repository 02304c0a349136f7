#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "vvmf/error.hpp"

namespace vvmf {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer floor_int(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline Rational floor_rat(const Rational& r) { return Rational(floor_int(r)); }

// Fractional part in [0, 1).
inline Rational frac_part(const Rational& r) { return r - floor_rat(r); }

inline long to_long(const Integer& z) {
  if (!z.fits_slong_p()) fail_internal("integer out of long range: " + z.get_str());
  return z.get_si();
}

inline long floor_long(const Rational& r) { return to_long(floor_int(r)); }

inline Rational pow_int(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational b = e > 0 ? base : Rational(1) / base;
  unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  Rational acc(1);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

// Exact n-th root, if the argument is a perfect n-th power in Q.
inline std::optional<Rational> exact_root(const Rational& x, unsigned long n) {
  if (n == 0) fail_pre("0-th root");
  if (n == 1) return x;
  if (sgn(x) < 0 && n % 2 == 0) return std::nullopt;
  Integer num = x.get_num(), den = x.get_den();
  Integer rn, rd;
  bool ok_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) != 0;
  bool ok_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n) != 0;
  if (!ok_n || !ok_d) return std::nullopt;
  return Rational(rn) / Rational(rd);
}

// Parses "p", "p/q" or "-p/q"; whitespace is not tolerated.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) fail_parse("empty rational literal");
  mpq_class r;
  if (r.set_str(s, 10) != 0) fail_parse("bad rational literal: '" + s + "'");
  if (r.get_den() == 0) fail_parse("zero denominator in rational literal: '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace vvmf
