#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vvmf/rational.hpp"

namespace vvmf {

// Element of the cyclotomic field Q(zeta_N), stored in the power basis
// {zeta_N^e : 0 <= e < phi(N)} reduced modulo the N-th cyclotomic polynomial.
// The representation at a fixed conductor is canonical, so equality is a
// coefficient comparison. Elements at different conductors are compared and
// combined after promotion to the lcm conductor. Rationals are the conductor-1
// elements; every constructor and operation keeps values exact.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_() {}
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}
  explicit Cyclotomic(const Rational& v);
  // Sum of terms coeff * zeta_N^expo; exponents may be arbitrary (reduced mod N
  // and then modulo the cyclotomic polynomial).
  Cyclotomic(unsigned conductor, const std::vector<std::pair<long, Rational>>& terms);

  static Cyclotomic zeta(unsigned conductor, long expo = 1);

  unsigned conductor() const { return n_; }
  bool is_zero() const { return c_.empty(); }
  // A canonical-basis element is rational iff only the e=0 coordinate is set.
  bool is_rational() const;
  Rational to_rational() const;  // precondition: is_rational()
  // Coefficient of zeta_N^e in the canonical basis, 0 <= e < phi(N).
  Rational coeff(unsigned e) const;
  // Nonzero canonical-basis coordinates, ascending exponent.
  std::vector<std::pair<unsigned, Rational>> terms() const;

  // Embedding Q(zeta_N) -> Q(zeta_M) for N | M.
  Cyclotomic raised_to_conductor(unsigned m) const;
  // Rewrites the element at the smallest divisor conductor that contains it.
  Cyclotomic reduced_conductor() const;

  // Galois automorphism zeta_N -> zeta_N^l, gcd(l, N) = 1.
  Cyclotomic galois(long l) const;
  Cyclotomic conj() const;  // complex conjugation (sigma_{-1})
  bool is_real() const { return *this == conj(); }
  Cyclotomic real_part() const;

  Cyclotomic pow(long e) const;
  Cyclotomic inverse() const;

  // If the element is a root of unity zeta_N^e, returns e in [0, N).
  std::optional<unsigned> as_root_of_unity() const;

  // Exact sign of a real cyclotomic number (-1, 0, +1). Precondition: is_real().
  int sign_real() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::string str() const;

 private:
  static Cyclotomic from_canonical(unsigned n, std::vector<Rational> canonical) {
    Cyclotomic c;
    c.n_ = n;
    c.c_ = std::move(canonical);
    c.trim();
    return c;
  }
  void trim();  // drops trailing zero coordinates (whole-vector zero => empty)

  unsigned n_;                // conductor
  std::vector<Rational> c_;   // canonical coordinates, length <= phi(n_)

  friend class CycloOps;
};

unsigned euler_phi(unsigned n);
unsigned gcd_u(unsigned a, unsigned b);
unsigned lcm_u(unsigned a, unsigned b);
long mod_inverse(long a, long n);  // inverse of a mod n, gcd(a, n) = 1

// Machin-formula enclosure of pi with exact rational endpoints; the width
// shrinks as `terms` grows.
std::pair<Rational, Rational> pi_enclosure(unsigned terms);

}  // namespace vvmf
