#include "vvmf/modular.hpp"

#include <algorithm>

namespace vvmf {

namespace {

void check_order(const SeriesQ& s, long order, const char* what) {
  if (!s.known_through(Rational(order)))
    fail_internal(std::string(what) + ": truncation bookkeeping fell short of the requested order");
}

}  // namespace

Integer sigma_divisors(unsigned k, unsigned long n) {
  Integer total(0);
  for (unsigned long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), d, k);
    total += p;
  }
  return total;
}

SeriesQ dedekind_eta(long order) {
  require_pre(order >= 0, "series order must be nonnegative");
  // q^{1/24} * sum_{k in Z} (-1)^k q^{k(3k-1)/2}
  long n = order + 2;
  std::vector<Rational> c(size_t(n), Rational(0));
  for (long k = 0;; ++k) {
    long g1 = k * (3 * k - 1) / 2;
    long g2 = k * (3 * k + 1) / 2;
    if (g1 >= n && g2 >= n) break;
    Rational s((k % 2 == 0) ? 1 : -1);
    if (g1 < n) c[size_t(g1)] += s;
    if (k > 0 && g2 < n) c[size_t(g2)] += s;
  }
  return SeriesQ::from_coeffs(Rational(1, 24), std::move(c));
}

SeriesQ discriminant(long order) {
  SeriesQ eta = dedekind_eta(order + 1);
  SeriesQ d = eta.pow(Rational(24));
  check_order(d, order, "discriminant");
  return d;
}

SeriesQ eisenstein(int weight, long order) {
  require_pre(order >= 0, "series order must be nonnegative");
  auto basic = [&](unsigned k, long factor, long upto) {
    std::vector<Rational> c(size_t(upto) + 1, Rational(0));
    c[0] = Rational(1);
    for (long m = 1; m <= upto; ++m)
      c[size_t(m)] = Rational(factor) * Rational(sigma_divisors(k, (unsigned long)m));
    return SeriesQ::from_coeffs(Rational(0), std::move(c));
  };
  switch (weight) {
    case 4:
      return basic(3, 240, order + 1);
    case 6:
      return basic(5, -504, order + 1);
    case 8:
      return eisenstein(4, order) * eisenstein(4, order);
    case 10:
      return eisenstein(4, order) * eisenstein(6, order);
    case 14:
      return eisenstein(8, order) * eisenstein(6, order);
    default:
      fail_pre("unsupported Eisenstein weight " + std::to_string(weight));
  }
}

SeriesQ hauptmodul_j(long order) {
  long m = order + 3;
  SeriesQ e4 = eisenstein(4, m);
  SeriesQ delta = discriminant(m);
  SeriesQ j = e4.pow(Rational(3)) * delta.inverted() - SeriesQ::constant(Rational(744));
  check_order(j, order, "hauptmodul");
  return j;
}

SeriesQ jprime(long order) {
  SeriesQ jp = hauptmodul_j(order + 2).derivative();
  check_order(jp, order, "jprime");
  return jp;
}

SeriesQ zmap(long order) {
  SeriesQ z = (SeriesQ::constant(Rational(984)) - hauptmodul_j(order)).scaled(Rational(1, 1728));
  check_order(z, order, "zmap");
  return z;
}

SeriesQ eseries(long order) {
  long m = order + 3;
  SeriesQ e = eisenstein(10, m) * discriminant(m).inverted();
  check_order(e, order, "eseries");
  return e;
}

SeriesQ nabla(const SeriesQ& f) {
  require_pre(!f.is_exact(), "nabla of an exact polynomial needs an explicit order");
  SeriesQ g = f.euler_derivative();
  if (g.is_zero() && !g.frontier()) return SeriesQ::zero();
  Rational fr = *g.frontier();
  long span = floor_long(fr - (g.is_zero() ? fr : g.base())) + 2;
  return eseries(std::max(span, 2L)) * g;
}

SeriesQ nabla(const SeriesQ& f, long order) {
  SeriesQ g = f.euler_derivative();
  if (g.is_zero() && g.is_exact()) return SeriesQ::zero();
  long lead = g.is_zero() ? 0 : floor_long(g.base());
  SeriesQ r = eseries(std::max(order - lead + 2, 2L)) * g;
  check_order(r, order, "nabla");
  return r;
}

}  // namespace vvmf
