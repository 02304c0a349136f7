#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "properties.hpp"
#include "vvmf/basis.hpp"

using namespace vvmf;
using fixtures::table1;

TEST_CASE("canonical vectors of the trivial representation") {
  FundamentalMatrix f = expand_fundamental(fixtures::one_dim(table1()[0]), 14);
  CanonicalBasis b = canonical_basis(f, 3, 10);
  // X^{(1;1)} = 1 (normalized: q^{-1} Psi = q^{-1})
  CHECK(b.at(0, 1).comp[0].leading_exponent() == Rational(-1));
  CHECK(b.at(0, 1).constant_part[0] == 0);
  // X^{(1;2)} = J and its constant term is c(1)
  SeriesQ j_norm = hauptmodul_j(11).shifted(Rational(-1));  // q^{-Lambda} J with Lambda = 1
  CHECK(agree_through(b.at(0, 2).comp[0], j_norm, Rational(9)));
  CHECK(b.at(0, 2).constant_part[0] == 196884);
}

TEST_CASE("constant parts at pole order one reproduce X") {
  for (auto& [name, rep] : fixtures::all_repdata()) {
    CAPTURE(name);
    FundamentalMatrix f = expand_fundamental(rep, 8);
    CanonicalBasis b = canonical_basis(f, 2, 6);
    for (size_t xi = 0; xi < rep.dim(); ++xi)
      for (size_t eta = 0; eta < rep.dim(); ++eta)
        CHECK(b.at(xi, 1).constant_part[eta] == rep.x(eta, xi));
  }
}

TEST_CASE("truncation insufficiency is detected") {
  FundamentalMatrix f = expand_fundamental(fixtures::e7(), 6);
  CHECK_THROWS_WITH_AS(canonical_basis(f, 4, 6), doctest::Contains("order"), error);
}

TEST_CASE("principal part extraction and inversion") {
  FundamentalMatrix f = expand_fundamental(fixtures::e7(), 16);
  CanonicalBasis b = canonical_basis(f, 6, 10);

  // P = {(xi,1) -> 1} reproduces column xi
  PrincipalPart p;
  p.terms[{1, 1}] = Rational(1);
  auto y = invert_principal_part(b, p);
  for (size_t eta = 0; eta < 2; ++eta)
    CHECK(agree_through(y[eta], b.at(1, 1).comp[eta], Rational(8)));

  // empty principal part gives the zero vector
  auto z = invert_principal_part(b, PrincipalPart{});
  for (const auto& s : z) CHECK(s.is_zero());

  // pole order beyond the prepared basis is refused
  PrincipalPart big;
  big.terms[{0, 7}] = Rational(1);
  CHECK_THROWS_WITH_AS(invert_principal_part(b, big), doctest::Contains("exceeds"), error);

  // random round trips + linearity
  std::mt19937 rng(321);
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::uniform_int_distribution<long> pole(1, 6);
  std::uniform_int_distribution<size_t> comp(0, 1);
  for (int iter = 0; iter < 30; ++iter) {
    PrincipalPart p1, p2;
    for (int t = 0; t < 3; ++t) {
      long c1 = coeff(rng), c2 = coeff(rng);
      if (c1 != 0) p1.terms[{comp(rng), pole(rng)}] += Rational(c1);
      if (c2 != 0) p2.terms[{comp(rng), pole(rng)}] += Rational(c2);
    }
    for (auto it = p1.terms.begin(); it != p1.terms.end();)
      it = it->second == 0 ? p1.terms.erase(it) : std::next(it);
    for (auto it = p2.terms.begin(); it != p2.terms.end();)
      it = it->second == 0 ? p2.terms.erase(it) : std::next(it);

    auto y1 = invert_principal_part(b, p1);
    CHECK(principal_part(y1) == p1);

    // linearity: invert(p1 + 2 p2) = invert(p1) + 2 invert(p2)
    PrincipalPart sum = p1;
    for (const auto& [key, c] : p2.terms) {
      sum.terms[key] += Rational(2) * c;
      if (sum.terms[key] == 0) sum.terms.erase(key);
    }
    auto ys = invert_principal_part(b, sum);
    auto y2 = invert_principal_part(b, p2);
    for (size_t eta = 0; eta < 2; ++eta) {
      SeriesQ rhs = y1[eta] + y2[eta].scaled(Rational(2));
      CHECK(agree_through(ys[eta], rhs, Rational(8)));
    }
  }
}

TEST_CASE("differential relations") {
  std::string why;
  CHECK_MESSAGE(properties::diff_relations_on_fixtures(&why), why);
}

TEST_CASE("inverting a second-order pole on the trivial representation gives J") {
  FundamentalMatrix f = expand_fundamental(fixtures::one_dim(table1()[0]), 14);
  CanonicalBasis b = canonical_basis(f, 3, 10);
  PrincipalPart p;
  p.terms[{0, 2}] = Rational(1);
  auto y = invert_principal_part(b, p);
  // component is Lambda-normalized: q^{-1} J
  SeriesQ ref = hauptmodul_j(11).shifted(Rational(-1));
  CHECK(agree_through(y[0], ref, Rational(9)));
}

TEST_CASE("differential relation m=1 equals the first-order compatibility equation") {
  RepData rep = fixtures::e7();
  FundamentalMatrix f = expand_fundamental(rep, 14);
  CHECK(compat1_check(f, rep, 10).all_pass());
  CanonicalBasis b = canonical_basis(f, 2, 10);
  CHECK(differential_relations_check(b, 1, 7).all_pass());
}

TEST_CASE("generating function identities") {
  for (auto& [name, rep] : std::vector<std::pair<std::string, RepData>>{
           {"trivial", fixtures::one_dim(table1()[0])},
           {"kappa2", fixtures::one_dim(table1()[1])},
           {"a1", fixtures::a1()}}) {
    CAPTURE(name);
    FundamentalMatrix f = expand_fundamental(rep, 14);
    Report rpt = generating_function_check(f, 5, 5);
    for (const auto& c : rpt.checks) {
      CAPTURE(c.name);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("trivial-representation generating function in closed form") {
  // X(z) - 1 = J'(z) z^2 for the trivial representation
  FundamentalMatrix f = expand_fundamental(fixtures::one_dim(table1()[0]), 14);
  CanonicalBasis b = canonical_basis(f, 9, 4);
  SeriesQ jp2 = jprime(10).shifted(Rational(2));
  // compare coefficients: z^m coefficient of X(z) is the constant part of
  // X^{(1;m)}
  for (long m = 1; m <= 8; ++m) {
    Rational lhs = b.at(0, m).constant_part[0];
    Rational rhs = jp2.coeff(Rational(m)) - (m == 0 ? Rational(1) : Rational(0));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("bivariate series plumbing") {
  SeriesQ j = hauptmodul_j(6);
  BiSeries a = BiSeries::from_q_series(j);
  BiSeries bz = BiSeries::from_z_series(j);
  BiSeries prod = a * bz;
  CHECK(prod.coeff(-1, -1) == 1);
  CHECK(prod.coeff(1, 1) == Rational(196884) * 196884);
  CHECK(prod.coeff(-1, 2) == 21493760);
  BiSeries diff = a - a;
  CHECK(!first_difference(diff, BiSeries::zero(), 4, 0).has_value());
  CHECK_THROWS_AS(prod.coeff(100, 0), error);
}
