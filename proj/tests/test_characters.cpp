#include <doctest.h>

#include "fixtures.hpp"
#include "vvmf/fundamental.hpp"

using namespace vvmf;

// Independent constructions of the character vectors that the first columns
// of the fundamental matrices must reproduce: infinite products and theta
// sums expanded directly, with no input from the coefficient recursion.

namespace {

// prod_{n >= 1} (1 + s * u^{step*n + shift}) truncated beyond u^order.
SeriesQ product_series(long order, long step, long shift, long sign) {
  SeriesQ acc = SeriesQ::from_coeffs(Rational(0), std::vector<Rational>{1}, true);
  acc = acc.truncated_to(Rational(order + 1));
  for (long n = 1; step * n + shift <= order; ++n) {
    std::vector<Rational> factor(size_t(step * n + shift) + 1, Rational(0));
    factor[0] = 1;
    factor[size_t(step * n + shift)] = sign;
    acc = acc * SeriesQ::from_coeffs(Rational(0), std::move(factor), true);
    acc = acc.truncated_to(Rational(order + 1));
  }
  return acc;
}

// 1/prod(1-q^n) = sum p(n) q^n
SeriesQ partition_series(long order) {
  return product_series(order, 1, 0, -1).inverted_to(size_t(order) + 1);
}

}  // namespace

TEST_CASE("Ising-type k=0 first column equals the minimal-model characters") {
  const long order = 24;
  FundamentalMatrix f = expand_fundamental(fixtures::ising(0), order + 2);

  // In the half-power variable u (u^2 = q): A = prod(1 + u^{2n-1}),
  // B = prod(1 - u^{2n-1}). The even part of (A+B)/2 resp. odd part of
  // (A-B)/2 collect the two Neveu-Schwarz characters.
  long uorder = 2 * order + 2;
  SeriesQ a = product_series(uorder, 2, -1, 1);
  SeriesQ b = product_series(uorder, 2, -1, -1);
  SeriesQ sum = (a + b).scaled(Rational(1, 2));
  SeriesQ dif = (a - b).scaled(Rational(1, 2));

  std::vector<Rational> even(size_t(order) + 1), odd(size_t(order) + 1);
  for (long m = 0; m <= order; ++m) {
    even[size_t(m)] = sum.coeff(Rational(2 * m));
    odd[size_t(m)] = dif.coeff(Rational(2 * m + 1));
  }
  // chi_0 = q^{-1/48} * even(q), chi_{1/2} = q^{23/48} * odd(q)
  SeriesQ chi0 = SeriesQ::from_coeffs(Rational(-1, 48), std::move(even));
  SeriesQ chi_eps = SeriesQ::from_coeffs(Rational(23, 48), std::move(odd));
  // chi_{1/16} = q^{1/24} prod(1 + q^n)
  SeriesQ chi_sigma = product_series(order + 1, 1, 0, 1).shifted(Rational(1, 24));

  CHECK(agree_through(f.entry(0, 0), chi0, Rational(-1, 48) + order));
  CHECK(agree_through(f.entry(1, 0), chi_eps, Rational(23, 48) + (order - 1)));
  CHECK(agree_through(f.entry(2, 0), chi_sigma, Rational(1, 24) + order));
}

TEST_CASE("A1 first column equals the level-1 affine characters") {
  const long order = 24;
  FundamentalMatrix f = expand_fundamental(fixtures::a1(), order + 2);
  SeriesQ parts = partition_series(order + 2);

  // theta sums over the root/weight lattice of rank 1
  std::vector<Rational> th0(size_t(order) + 3, Rational(0)), th1(size_t(order) + 3, Rational(0));
  for (long n = 0; n * n < long(th0.size()); ++n) th0[size_t(n * n)] += (n == 0) ? 1 : 2;
  for (long n = 0; n * n + n < long(th1.size()); ++n) th1[size_t(n * n + n)] += 2;

  SeriesQ chi0 =
      SeriesQ::from_coeffs(Rational(0), std::move(th0)) * parts;
  SeriesQ chi1 =
      SeriesQ::from_coeffs(Rational(0), std::move(th1)) * parts;
  chi0 = chi0.shifted(Rational(-1, 24));
  chi1 = chi1.shifted(Rational(5, 24));

  CHECK(agree_through(f.entry(0, 0), chi0, Rational(-1, 24) + order));
  CHECK(agree_through(f.entry(1, 0), chi1, Rational(5, 24) + order));
}
