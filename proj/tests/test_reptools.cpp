#include <doctest.h>

#include "fixtures.hpp"
#include "vvmf/reptools.hpp"

using namespace vvmf;

TEST_CASE("generator relations on the fixtures") {
  CHECK(fixtures::rep_trivial().relations_check(true).all_pass());
  CHECK(fixtures::rep_e7().relations_check(true).all_pass());
  CHECK(fixtures::rep_a1().relations_check(true).all_pass());
  for (long k = 0; k < 12; ++k) {
    CAPTURE(k);
    CHECK(fixtures::rep_ising(k).relations_check(true).all_pass());
  }
}

TEST_CASE("G_ell and the conjugation identity") {
  // trivial representation: G_ell = 1
  Report rpt;
  Matrix<Cyclotomic> g = g_ell(fixtures::rep_trivial(), 1, &rpt);
  CHECK(g(0, 0) == Cyclotomic(1));
  CHECK(rpt.all_pass());

  // kappa^3: G_1 must satisfy G T G^{-1} = T
  Report r1;
  g_ell(fixtures::rep_kappa3(), 1, &r1);
  CHECK(r1.all_pass());

  // Ising, ell = 5: G_5 T G_5^{-1} = T^25, checked exactly
  Report r5;
  g_ell(fixtures::rep_ising(0), 5, &r5);
  CHECK(r5.all_pass());

  // full transversal on E7 and Ising
  for (auto& rep : {fixtures::rep_e7(), fixtures::rep_ising(0)}) {
    Report rt;
    for (long ell = 1; ell <= long(rep.conductor); ++ell)
      if (gcd_u(unsigned(ell % rep.conductor == 0 ? rep.conductor : ell % rep.conductor),
                rep.conductor) == 1)
        g_ell(rep, ell, &rt);
    CHECK(rt.all_pass());
  }

  CHECK_THROWS_AS(g_ell(fixtures::rep_ising(0), 2, nullptr), error);
}

TEST_CASE("rationality test passes on the fixtures") {
  for (auto& [name, rep] : std::vector<std::pair<std::string, ModularRep>>{
           {"trivial", fixtures::rep_trivial()},
           {"e7", fixtures::rep_e7()},
           {"a1", fixtures::rep_a1()},
           {"ising0", fixtures::rep_ising(0)},
           {"ising7", fixtures::rep_ising(7)}}) {
    CAPTURE(name);
    Report rpt = rationality_test(rep);
    for (const auto& c : rpt.checks) {
      CAPTURE(c.name);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("rationality test fails with a witness on corrupted data") {
  ModularRep bad = fixtures::rep_ising(0);
  bad.s(2, 1) = -bad.s(2, 1);
  Report rpt = rationality_test(bad);
  CHECK(!rpt.all_pass());
  bool witnessed = false;
  for (const auto& c : rpt.checks)
    if (!c.pass && c.detail.find("witness l=") != std::string::npos) witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("galois composition across residues") {
  // On data passing the rationality test, G_{l'} G_l S = sigma_{l' l}(S).
  for (auto& rep : {fixtures::rep_ising(0), fixtures::rep_e7()}) {
    unsigned n = rep.conductor;
    const long pairs[][2] = {{5, 7}, {11, 13}, {7, 23}};
    for (auto& [lp, l] : pairs) {
      Matrix<Cyclotomic> lhs = g_ell(rep, lp) * g_ell(rep, l) * rep.s;
      Matrix<Cyclotomic> rhs(rep.dim(), rep.dim());
      long prod = (lp * l) % long(n);
      for (size_t i = 0; i < rep.dim(); ++i)
        for (size_t j = 0; j < rep.dim(); ++j) rhs(i, j) = rep.s(i, j).galois(prod);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("non-real eigenvector entries are reported indeterminate") {
  // S - 1 annihilates (1, i), whose entries cannot all be made positive.
  ModularRep rep;
  rep.conductor = 4;
  Cyclotomic iu = Cyclotomic::zeta(4, 1);
  Cyclotomic half(Rational(1, 2));
  rep.s = Matrix<Cyclotomic>(2, 2);
  rep.s(0, 0) = half;
  rep.s(0, 1) = -half * iu;
  rep.s(1, 0) = half * iu;
  rep.s(1, 1) = half;
  rep.t_diag = {Cyclotomic(1), Cyclotomic(1)};
  Report rpt = nonnegativity_test(rep);
  REQUIRE(!rpt.all_pass());
  bool indet = false;
  for (const auto& c : rpt.checks)
    if (c.detail.find("indeterminate") != std::string::npos) indet = true;
  CHECK(indet);
}

TEST_CASE("congruence heuristic") {
  // E7: squares of units mod 24 are all 1, so T^{l^2} = T on the nose
  CHECK(congruence_heuristic(fixtures::rep_e7()).all_pass());
  CHECK(congruence_heuristic(fixtures::rep_ising(0)).all_pass());
  CHECK(congruence_heuristic(fixtures::rep_trivial()).all_pass());

  // T = diag(zeta_5, zeta_5^3) fails at l = 2: T^4 has exponents {4, 2}
  ModularRep bad;
  bad.conductor = 5;
  bad.t_diag = {Cyclotomic::zeta(5, 1), Cyclotomic::zeta(5, 3)};
  bad.s = Matrix<Cyclotomic>::identity(2);
  Report rpt = congruence_heuristic(bad);
  CHECK(!rpt.all_pass());

  // invariance under reordering of the diagonal
  ModularRep perm = fixtures::rep_ising(0);
  std::swap(perm.t_diag[0], perm.t_diag[2]);
  // (S no longer matches T, but the heuristic only looks at T)
  CHECK(congruence_heuristic(perm).all_pass());
}

TEST_CASE("nonnegativity test") {
  // trivial representation: eigenvector 1 > 0
  CHECK(nonnegativity_test(fixtures::rep_trivial(), 0).all_pass());

  // kappa^3 row: S = -1 has no eigenvalue 1
  Report rk = nonnegativity_test(fixtures::rep_kappa3());
  CHECK(!rk.all_pass());

  // Ising: 1-dimensional kernel with positive representative, and the
  // distinguished column {1/2, 1/2, sqrt2/2} is nonnegative
  Report ri = nonnegativity_test(fixtures::rep_ising(0), 0);
  for (const auto& c : ri.checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
  }

  // a 2-dimensional eigenspace: S = identity, Fourier-Motzkin finds 1 > 0
  ModularRep id2;
  id2.conductor = 1;
  id2.s = Matrix<Cyclotomic>::identity(2);
  id2.t_diag = {Cyclotomic(1), Cyclotomic(1)};
  CHECK(nonnegativity_test(id2).all_pass());

  // S = diag(1, -1) restricted to its eigenvalue-1 space has a zero entry:
  // no strictly positive eigenvector exists
  ModularRep mixed;
  mixed.conductor = 1;
  mixed.s = Matrix<Cyclotomic>::identity(2);
  mixed.s(1, 1) = Cyclotomic(-1);
  mixed.t_diag = {Cyclotomic(1), Cyclotomic(1)};
  CHECK(!nonnegativity_test(mixed).all_pass());
}

namespace {

// Modular data of the su(3) level-1 model: three primaries, charge
// conjugation swaps the second and third.
ModularRep su3_level1() {
  ModularRep r;
  r.conductor = 12;
  Cyclotomic inv_s3 = (Cyclotomic::zeta(12, 1) + Cyclotomic::zeta(12, -1)).inverse();
  Cyclotomic w = Cyclotomic::zeta(3, 1);
  r.s = Matrix<Cyclotomic>(3, 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) r.s(i, j) = inv_s3 * w.pow(long(i * j) % 3);
  Cyclotomic phase = Cyclotomic::zeta(12, -1);  // e^{-2 pi i c/24}, c = 2
  r.t_diag = {phase, phase * Cyclotomic::zeta(3, 1), phase * Cyclotomic::zeta(3, 1)};
  return r;
}

}  // namespace

TEST_CASE("reduction: S^2 = 1 is the identity map") {
  Report r0;
  ModularRep same = reduce_representation(fixtures::rep_ising(0), &r0);
  CHECK(same.dim() == 3);
  CHECK(r0.all_pass());
  CHECK(same.s == fixtures::rep_ising(0).s);
}

TEST_CASE("reduction folds a genuine charge-conjugation orbit") {
  ModularRep su3 = su3_level1();
  // genuine SL2 data: S^2 is the (23) permutation, (ST)^3 = S^2, S^4 = 1
  Matrix<Cyclotomic> s2 = su3.s * su3.s;
  CHECK(s2(0, 0) == Cyclotomic(1));
  CHECK(s2(1, 2) == Cyclotomic(1));
  CHECK(s2(2, 1) == Cyclotomic(1));
  CHECK(s2(1, 1) == Cyclotomic(0));
  Matrix<Cyclotomic> st = su3.s * su3.t_matrix();
  CHECK(st * st * st == s2);

  // d = 3 with S^2 = (23): folds to two dimensions
  Report r1;
  ModularRep red = reduce_representation(su3, &r1);
  CHECK(red.dim() == 2);
  CHECK(r1.all_pass());
  // reduced S = (1/sqrt3) [[1, 2], [1, -1]], all entries real
  Cyclotomic inv_s3 = (Cyclotomic::zeta(12, 1) + Cyclotomic::zeta(12, -1)).inverse();
  CHECK(red.s(0, 1) == inv_s3 * Cyclotomic(2));
  CHECK(red.s(1, 1) == -inv_s3);

  // 4-dimensional rep with one 2-orbit: su(3)_1 plus a trivial summand
  ModularRep four;
  four.conductor = 12;
  four.s = Matrix<Cyclotomic>(4, 4);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) four.s(i, j) = su3.s(i, j);
  four.s(3, 3) = Cyclotomic(1);
  four.t_diag = su3.t_diag;
  four.t_diag.push_back(Cyclotomic(1));
  Report r2;
  ModularRep red4 = reduce_representation(four, &r2);
  CHECK(red4.dim() == 3);
  for (const auto& c : r2.checks) {
    CAPTURE(c.name);
    if (c.name == "rep.(ST)^3=S^2" || c.name == "rep.S^2=1" || c.name == "reduce.S-real")
      CHECK(c.pass);
  }
}

TEST_CASE("folding mechanics on a d=2 swap") {
  // S = (1/sqrt2) [[z8, z8^-1], [z8^-1, z8]] squares to the swap matrix;
  // the fold sends it to the 1x1 matrix S11 + S12 = 1.
  ModularRep two;
  two.conductor = 24;
  Cyclotomic inv_s2 = fixtures::sqrt2().inverse();
  two.s = Matrix<Cyclotomic>(2, 2);
  two.s(0, 0) = inv_s2 * Cyclotomic::zeta(8, 1);
  two.s(0, 1) = inv_s2 * Cyclotomic::zeta(8, -1);
  two.s(1, 0) = two.s(0, 1);
  two.s(1, 1) = two.s(0, 0);
  two.t_diag = {Cyclotomic::zeta(3, 1), Cyclotomic::zeta(3, 1)};
  Matrix<Cyclotomic> s2 = two.s * two.s;
  REQUIRE(s2(0, 1) == Cyclotomic(1));
  REQUIRE(s2(0, 0) == Cyclotomic(0));
  ModularRep red = reduce_representation(two, nullptr);
  CHECK(red.dim() == 1);
  CHECK(red.s(0, 0) == Cyclotomic(1));
  CHECK(red.t_diag[0] == Cyclotomic::zeta(3, 1));
}

TEST_CASE("reduction rejects non-permutation charge conjugation") {
  ModularRep orb;
  orb.conductor = 8;
  orb.s = Matrix<Cyclotomic>(2, 2);
  orb.s(0, 1) = Cyclotomic::zeta(8, 1);
  orb.s(1, 0) = Cyclotomic::zeta(8, 1);
  orb.t_diag = {Cyclotomic::zeta(8, 1), Cyclotomic::zeta(8, 1)};
  CHECK_THROWS_WITH_AS(reduce_representation(orb, nullptr), doctest::Contains("permutation"),
                       error);
}
