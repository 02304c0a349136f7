#include <doctest.h>

#include "fixtures.hpp"
#include "vvmf/repdata.hpp"

using namespace vvmf;
using fixtures::table1;

namespace {

// Eigenvalue oracle for small matrices: factor the characteristic polynomial
// over the candidate roots by exact evaluation.
bool eigenvalues_within(const Matrix<Rational>& m, const std::vector<Rational>& allowed) {
  size_t d = m.rows();
  // deflate det(m - t) by checking that prod (m - a_i) over allowed roots with
  // multiplicities summing to d annihilates; cheap version: the minimal
  // polynomial over the allowed set kills the matrix.
  Matrix<Rational> acc = Matrix<Rational>::identity(d);
  for (const auto& a : allowed) acc = acc * (m - a * Matrix<Rational>::identity(d));
  return acc.is_zero();
}

}  // namespace

TEST_CASE("derive_AB on the one-dimensional rows") {
  for (const auto& row : table1()) {
    RepData rep = fixtures::one_dim(row);
    ABPair ab = derive_ab(rep);
    CHECK(ab.a(0, 0) == Rational(row.alpha > 0 ? 1 : 0));
    CHECK(ab.b(0, 0) == Rational(row.beta1 + 2 * row.beta2));
  }
  // trivial: A = B = 0; kappa: A = 1, B = 2
  CHECK(derive_ab(fixtures::one_dim(table1()[0])).a(0, 0) == 0);
  CHECK(derive_ab(fixtures::one_dim(table1()[5])).a(0, 0) == 1);
  CHECK(derive_ab(fixtures::one_dim(table1()[5])).b(0, 0) == 2);
}

TEST_CASE("E7 residue matrices satisfy the spectral condition") {
  ABPair ab = derive_ab(fixtures::e7());
  CHECK(eigenvalues_within(ab.a, {Rational(0), Rational(1)}));
  CHECK(eigenvalues_within(ab.b, {Rational(0), Rational(1), Rational(2)}));
  Report rpt;
  auto sig = spectral_signature(ab, &rpt);
  REQUIRE(sig.has_value());
  CHECK(sig->d == 2);
  CHECK(sig->alpha == 1);
  CHECK(sig->beta1 == 1);
  CHECK(sig->beta2 == 0);
}

TEST_CASE("spectral failure cases") {
  ABPair bad;
  bad.a = Matrix<Rational>(1, 1);
  bad.a(0, 0) = 2;
  bad.b = Matrix<Rational>(1, 1);
  Report rpt;
  CHECK(!spectral_signature(bad, &rpt).has_value());
}

TEST_CASE("spectral condition on every fixture") {
  for (auto& [name, rep] : fixtures::all_repdata()) {
    CAPTURE(name);
    auto sig = spectral_signature(derive_ab(rep));
    REQUIRE(sig.has_value());
    CHECK(monodromy_equation_check(rep.lambda, derive_ab(rep).a));
  }
}

TEST_CASE("monodromy equation rejects perturbed data") {
  RepData rep = fixtures::e7();
  rep.x(0, 1) += 1;
  ABPair ab = derive_ab(rep);
  CHECK(!monodromy_equation_check(rep.lambda, ab.a));
}

TEST_CASE("trace audit across the fixture battery") {
  for (auto& [name, rep] : fixtures::all_repdata()) {
    CAPTURE(name);
    auto sig = spectral_signature(derive_ab(rep));
    REQUIRE(sig.has_value());
    Report audit = trace_audit(rep, *sig);
    for (const auto& c : audit.checks) {
      CAPTURE(c.name);
      CAPTURE(c.lhs);
      CAPTURE(c.rhs);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("kappa row trace values") {
  RepData kap = fixtures::one_dim(table1()[5]);
  auto sig = spectral_signature(derive_ab(kap));
  REQUIRE(sig.has_value());
  // TrS = 1 - 2 alpha = -1, TrX = 4 with 4 = 4 alpha mod 248
  CHECK(sig->alpha == 1);
  CHECK(kap.x.trace() == 4);
  Report audit = trace_audit(kap, *sig);
  CHECK(audit.all_pass());
}

TEST_CASE("duality") {
  // dual of the kappa row is the trivial row
  RepData kap = fixtures::one_dim(table1()[5]);
  RepData d = dual(kap);
  CHECK(d.lambda[0] == Rational(1));
  CHECK(d.x(0, 0) == 0);

  // involution on E7
  RepData e7 = fixtures::e7();
  RepData dd = dual(dual(e7));
  CHECK(dd.lambda == e7.lambda);
  CHECK(dd.x == e7.x);

  // A1 dual exponents: 5/6 - diag(23/24, 5/24)
  RepData da = dual(fixtures::a1());
  CHECK(da.lambda[0] == Rational(-1, 8));
  CHECK(da.lambda[1] == Rational(5, 8));

  // duality acts on residue matrices as 1 - A^t, 2 - B^t
  ABPair ab = derive_ab(e7);
  ABPair abd = derive_ab(dual(e7));
  Matrix<Rational> id = Matrix<Rational>::identity(2);
  CHECK(abd.a == id - ab.a.transpose());
  CHECK(abd.b == Rational(2) * id - ab.b.transpose());

  // signature of the dual: alpha_dual = d - alpha
  auto sig = spectral_signature(ab);
  auto sigd = spectral_signature(abd);
  CHECK(sigd->alpha == long(sig->d) - sig->alpha);
}

TEST_CASE("direct sums") {
  RepData t2 = direct_sum(fixtures::one_dim(table1()[0]), fixtures::one_dim(table1()[0]));
  CHECK(t2.lambda == std::vector<Rational>{Rational(1), Rational(1)});
  CHECK(t2.x.is_zero());

  // kappa^2 + kappa^4 has signature (2, 0, 1, 1)
  RepData ds = direct_sum(fixtures::one_dim(table1()[1]), fixtures::one_dim(table1()[2]));
  auto sig = spectral_signature(derive_ab(ds));
  REQUIRE(sig.has_value());
  CHECK(*sig == Signature{2, 0, 1, 1});

  // E7 + A1 passes the spectral check blockwise
  RepData big = direct_sum(fixtures::e7(), fixtures::a1());
  auto sigb = spectral_signature(derive_ab(big));
  REQUIRE(sigb.has_value());
  CHECK(sigb->d == 4);
  Report audit = trace_audit(big, *sigb, {{0, 1}, {2, 3}});
  CHECK(audit.all_pass());

  // direct_sum commutes with dual
  RepData lhs = dual(big);
  RepData rhs = direct_sum(dual(fixtures::e7()), dual(fixtures::a1()));
  CHECK(lhs.lambda == rhs.lambda);
  CHECK(lhs.x == rhs.x);
}

TEST_CASE("recovering X from A") {
  for (auto& [name, rep] : fixtures::all_repdata()) {
    CAPTURE(name);
    ABPair ab = derive_ab(rep);
    CHECK(recover_x_from_a(rep.lambda, ab.a) == rep.x);
  }
  // refusal when two exponents differ by one
  std::vector<Rational> lam{Rational(3, 2), Rational(1, 2)};
  Matrix<Rational> a(2, 2);
  CHECK_THROWS_WITH_AS(recover_x_from_a(lam, a), doctest::Contains("differ by 1"), error);
}

TEST_CASE("T matrix from exponents") {
  Matrix<Cyclotomic> t = t_matrix({Rational(17, 24), Rational(11, 24)});
  CHECK(t(0, 0) == Cyclotomic::zeta(24, 17));
  CHECK(t(1, 1) == Cyclotomic::zeta(24, 11));
  // integer exponents give T = 1
  CHECK(t_matrix({Rational(3)})(0, 0) == Cyclotomic(1));
}
