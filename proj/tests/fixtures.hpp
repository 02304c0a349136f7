#pragma once

// Shared test fixtures: the six one-dimensional rows, the two-dimensional
// level-1 WZW pairs, and the three-dimensional Ising-type family, together
// with their representation matrices.

#include <string>
#include <vector>

#include "vvmf/forms.hpp"
#include "vvmf/repdata.hpp"
#include "vvmf/reptools.hpp"

namespace fixtures {

using namespace vvmf;

inline Cyclotomic sqrt2() { return Cyclotomic::zeta(8, 1) + Cyclotomic::zeta(8, -1); }

inline Matrix<Cyclotomic> s_hadamard2() {
  Cyclotomic is2 = sqrt2().inverse();
  Matrix<Cyclotomic> s(2, 2);
  s(0, 0) = is2;
  s(0, 1) = is2;
  s(1, 0) = is2;
  s(1, 1) = -is2;
  return s;
}

inline Matrix<Cyclotomic> s_ising() {
  Cyclotomic half(Rational(1, 2));
  Cyclotomic r2h = sqrt2() * half;
  Matrix<Cyclotomic> s(3, 3);
  s(0, 0) = half;
  s(0, 1) = half;
  s(0, 2) = r2h;
  s(1, 0) = half;
  s(1, 1) = half;
  s(1, 2) = -r2h;
  s(2, 0) = r2h;
  s(2, 1) = -r2h;
  s(2, 2) = Cyclotomic(0);
  return s;
}

// One-dimensional rows: name, lambda, X, S.
struct OneDimRow {
  std::string name;
  Rational lambda;
  Rational x;
  int s;  // +1 or -1
  long alpha, beta1, beta2;
};

inline std::vector<OneDimRow> table1() {
  return {
      {"1", Rational(1), Rational(0), 1, 0, 0, 0},
      {"kappa2", Rational(2, 3), Rational(248), 1, 0, 1, 0},
      {"kappa4", Rational(1, 3), Rational(496), 1, 0, 0, 1},
      {"kappa3", Rational(1, 2), Rational(-492), -1, 1, 0, 0},
      {"kappabar", Rational(1, 6), Rational(-244), -1, 1, 1, 0},
      {"kappa", Rational(-1, 6), Rational(4), -1, 1, 0, 1},
  };
}

inline RepData one_dim(const OneDimRow& row) {
  RepData r;
  r.lambda = {row.lambda};
  r.x = Matrix<Rational>(1, 1);
  r.x(0, 0) = row.x;
  Matrix<Cyclotomic> s(1, 1);
  s(0, 0) = Cyclotomic(row.s);
  r.s = s;
  return r;
}

inline RepData e7() {
  RepData r;
  r.lambda = {Rational(17, 24), Rational(11, 24)};
  r.x = Matrix<Rational>(2, 2);
  r.x(0, 0) = 133;
  r.x(0, 1) = 1248;
  r.x(1, 0) = 56;
  r.x(1, 1) = -377;
  r.s = s_hadamard2();
  return r;
}

inline RepData a1() {
  RepData r;
  r.lambda = {Rational(23, 24), Rational(5, 24)};
  r.x = Matrix<Rational>(2, 2);
  r.x(0, 0) = 3;
  r.x(0, 1) = 26752;
  r.x(1, 0) = 2;
  r.x(1, 1) = -247;
  r.s = s_hadamard2();
  return r;
}

inline RepData ising(long k) {
  RepData r;
  r.lambda = {Rational(47 - 2 * k) / 48, Rational(23 - 2 * k) / 48, Rational(2 + 4 * k) / 48};
  r.x = Matrix<Rational>(3, 3);
  r.x(0, 0) = Rational(k * (2 * k + 1));
  r.x(0, 1) = Rational((31 - 2 * k) * (9 + 2 * k) * (25 + 2 * k)) / 3;
  r.x(0, 2) = pow_int(Rational(2), 12 - k) * Rational(23 - 2 * k);
  r.x(1, 0) = Rational(2 * k + 1);
  r.x(1, 1) = Rational((11 - k) * (25 + 2 * k));
  r.x(1, 2) = -pow_int(Rational(2), 12 - k);
  r.x(2, 0) = pow_int(Rational(2), k);
  r.x(2, 1) = -pow_int(Rational(2), k) * Rational(25 + 2 * k);
  r.x(2, 2) = Rational(2 * k - 23);
  r.s = s_ising();
  return r;
}

// All twenty representation-data fixtures, with names.
inline std::vector<std::pair<std::string, RepData>> all_repdata() {
  std::vector<std::pair<std::string, RepData>> out;
  for (const auto& row : table1()) out.emplace_back("table1_" + row.name, one_dim(row));
  out.emplace_back("e7", e7());
  out.emplace_back("a1", a1());
  for (long k = 0; k < 12; ++k) out.emplace_back("ising_k" + std::to_string(k), ising(k));
  return out;
}

// Matching modular representations (S, T) for the diagnostics.
inline ModularRep modrep_of(const RepData& rep, unsigned conductor) {
  ModularRep m;
  m.conductor = conductor;
  m.s = *rep.s;
  for (const auto& l : rep.lambda) {
    Rational f = frac_part(l);
    m.t_diag.push_back(
        Cyclotomic::zeta(unsigned(to_long(Integer(f.get_den()))), to_long(Integer(f.get_num())))
            .raised_to_conductor(conductor));
  }
  return m;
}

inline ModularRep rep_trivial() { return modrep_of(one_dim(table1()[0]), 1); }
inline ModularRep rep_kappa3() { return modrep_of(one_dim(table1()[3]), 2); }
inline ModularRep rep_e7() { return modrep_of(e7(), 24); }
inline ModularRep rep_a1() { return modrep_of(a1(), 24); }
inline ModularRep rep_ising(long k = 0) { return modrep_of(ising(k), 48); }

}  // namespace fixtures
