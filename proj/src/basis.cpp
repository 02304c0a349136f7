#include "vvmf/basis.hpp"

#include <sstream>

namespace vvmf {

namespace {

std::string vec_name(size_t xi, long n) {
  return "(" + std::to_string(xi) + ";" + std::to_string(n) + ")";
}

// Principal part of one normalized component against the expected q^{-n} delta.
void verify_principal(const CanonicalVector& v, size_t d) {
  for (size_t eta = 0; eta < d; ++eta) {
    const SeriesQ& s = v.comp[eta];
    if (s.is_zero()) {
      if (eta == v.xi) fail_internal("canonical vector " + vec_name(v.xi, v.pole) + " lost its pole");
      continue;
    }
    Rational lead = s.leading_exponent();
    if (eta == v.xi) {
      if (lead != Rational(-v.pole) || !(s.leading_coeff() == Rational(1)))
        fail_internal("canonical vector " + vec_name(v.xi, v.pole) +
                      " has wrong leading behaviour in its own component");
      for (long k = v.pole - 1; k >= 1; --k)
        if (s.coeff(Rational(-k)) != 0)
          fail_internal("canonical vector " + vec_name(v.xi, v.pole) +
                        " has a stray pole of order " + std::to_string(k));
    } else if (lead < 0) {
      fail_internal("canonical vector " + vec_name(v.xi, v.pole) + " has a stray pole in component " +
                    std::to_string(eta));
    }
  }
}

}  // namespace

CanonicalBasis canonical_basis(const FundamentalMatrix& f, long max_pole, long order) {
  require_pre(max_pole >= 1, "max pole order must be at least 1");
  require_pre(order >= 0, "series order must be nonnegative");
  require_pre(f.order() >= order + max_pole,
              "fundamental matrix must be expanded to order >= series order + max pole order (" +
                  std::to_string(order + max_pole) + ")");
  size_t d = f.dim();
  CanonicalBasis b;
  b.lambda = f.lambda;
  b.x = f.psi[1];
  b.max_pole = max_pole;
  b.order = order;
  b.vecs.assign(d, {});

  SeriesQ j = hauptmodul_j(f.order() + 2);
  std::vector<Rational> c(size_t(std::max(0L, max_pole)) + 2, Rational(0));
  for (size_t n = 1; n < c.size(); ++n) c[n] = j.coeff(Rational(long(n)));

  for (size_t xi = 0; xi < d; ++xi) {
    CanonicalVector v1;
    v1.xi = xi;
    v1.pole = 1;
    v1.comp.resize(d);
    v1.constant_part.resize(d);
    for (size_t eta = 0; eta < d; ++eta) {
      v1.comp[eta] = f.psi_entry(eta, xi).shifted(Rational(-1));
      v1.constant_part[eta] = v1.comp[eta].coeff(Rational(0));
      if (v1.constant_part[eta] != f.psi[1](eta, xi))
        fail_internal("constant part of a fundamental column disagrees with X");
    }
    verify_principal(v1, d);
    b.vecs[xi].push_back(std::move(v1));
  }

  for (long m = 1; m < max_pole; ++m) {
    for (size_t xi = 0; xi < d; ++xi) {
      const CanonicalVector& vm = b.vecs[xi][size_t(m - 1)];
      CanonicalVector next;
      next.xi = xi;
      next.pole = m + 1;
      next.comp.resize(d);
      next.constant_part.resize(d);
      for (size_t eta = 0; eta < d; ++eta) {
        SeriesQ acc = j * vm.comp[eta];
        for (long n = 1; n <= m - 1; ++n)
          acc = acc - b.vecs[xi][size_t(m - n - 1)].comp[eta].scaled(c[size_t(n)]);
        for (size_t rho = 0; rho < d; ++rho)
          acc = acc - b.vecs[rho][0].comp[eta].scaled(vm.constant_part[rho]);
        next.comp[eta] = acc;
      }
      for (size_t eta = 0; eta < d; ++eta) next.constant_part[eta] = next.comp[eta].coeff(Rational(0));
      verify_principal(next, d);
      for (size_t eta = 0; eta < d; ++eta)
        require_pre(next.comp[eta].known_through(Rational(order)),
                    "truncation insufficiency while building canonical vectors");
      b.vecs[xi].push_back(std::move(next));
    }
  }
  return b;
}

PrincipalPart principal_part(const std::vector<SeriesQ>& comps) {
  PrincipalPart p;
  for (size_t eta = 0; eta < comps.size(); ++eta) {
    const SeriesQ& s = comps[eta];
    if (s.is_zero()) continue;
    require_pre(is_integer(s.leading_exponent()), "principal part of a non-normalized series");
    for (long e = floor_long(s.leading_exponent()); e < 0; ++e) {
      Rational coeff = s.coeff(Rational(e));
      if (coeff != 0) p.terms[{eta, -e}] = coeff;
    }
  }
  return p;
}

std::vector<SeriesQ> invert_principal_part(const CanonicalBasis& basis, const PrincipalPart& p) {
  size_t d = basis.dim();
  std::vector<SeriesQ> out(d, SeriesQ::zero_through(Rational(basis.order + 1)));
  for (const auto& [key, coeff] : p.terms) {
    auto [xi, n] = key;
    require_pre(xi < d, "principal part component out of range");
    require_pre(n >= 1, "pole orders must be positive");
    require_pre(n <= basis.max_pole,
                "pole order " + std::to_string(n) + " exceeds the prepared basis (max " +
                    std::to_string(basis.max_pole) + ")");
    if (coeff == 0) continue;
    const CanonicalVector& v = basis.at(xi, n);
    for (size_t eta = 0; eta < d; ++eta) out[eta] = out[eta] + v.comp[eta].scaled(coeff);
  }
  return out;
}

namespace {

// RHS of the differential relation for X^{(xi;m)}, Lambda-normalized.
std::vector<SeriesQ> diff_relation_rhs(const CanonicalBasis& b, size_t xi, long m, const SeriesQ& e) {
  size_t d = b.dim();
  std::vector<SeriesQ> rhs(d, SeriesQ::zero());
  const CanonicalVector& vm = b.at(xi, m);
  for (size_t eta = 0; eta < d; ++eta) {
    SeriesQ acc;
    for (long n = -1; n <= m - 1; ++n) {
      Rational en = e.coeff(Rational(n));
      acc = acc + b.at(xi, m - n).comp[eta].scaled(en * (b.lambda[xi] - m));
    }
    for (size_t rho = 0; rho < d; ++rho)
      acc = acc + b.at(rho, 1).comp[eta].scaled(b.lambda[rho] * vm.constant_part[rho]);
    rhs[eta] = acc;
  }
  return rhs;
}

// Normalized nabla: q^{-Lambda_eta} nabla(q^{Lambda_eta} N) = E (Lambda_eta N + q N').
SeriesQ nabla_normalized(const SeriesQ& n, const Rational& lambda_eta, const SeriesQ& e) {
  return e * (n.scaled(lambda_eta) + n.euler_derivative());
}

}  // namespace

Report differential_relations_check(const CanonicalBasis& basis, long m_max, long through) {
  require_pre(m_max >= 1 && m_max + 1 <= basis.max_pole,
              "differential relations need basis pole orders through m_max + 1");
  Report rpt;
  size_t d = basis.dim();
  SeriesQ e = eseries(through + basis.max_pole + 3);
  for (long m = 1; m <= m_max; ++m) {
    for (size_t xi = 0; xi < d; ++xi) {
      std::vector<SeriesQ> rhs = diff_relation_rhs(basis, xi, m, e);
      for (size_t eta = 0; eta < d; ++eta) {
        SeriesQ lhs = nabla_normalized(basis.at(xi, m).comp[eta], basis.lambda[eta], e);
        check_series_identity(rpt,
                              "diff-relations.xi" + std::to_string(xi) + ".m" + std::to_string(m) +
                                  ".comp" + std::to_string(eta),
                              lhs, rhs[eta], Rational(through));
      }
    }
  }
  return rpt;
}

Report combination_ode_check(const CanonicalBasis& basis, const PrincipalPart& p, long through) {
  Report rpt;
  size_t d = basis.dim();
  long max_n = 0;
  for (const auto& [key, coeff] : p.terms) max_n = std::max(max_n, key.second);
  require_pre(max_n + 1 <= basis.max_pole,
              "combination check needs basis pole orders one beyond the principal part");
  SeriesQ e = eseries(through + basis.max_pole + 3);
  std::vector<SeriesQ> y = invert_principal_part(basis, p);
  std::vector<SeriesQ> rhs(d, SeriesQ::zero());
  for (const auto& [key, coeff] : p.terms) {
    if (coeff == 0) continue;
    std::vector<SeriesQ> part = diff_relation_rhs(basis, key.first, key.second, e);
    for (size_t eta = 0; eta < d; ++eta) rhs[eta] = rhs[eta] + part[eta].scaled(coeff);
  }
  for (size_t eta = 0; eta < d; ++eta) {
    SeriesQ lhs = nabla_normalized(y[eta], basis.lambda[eta], e);
    check_series_identity(rpt, "combination-ode.comp" + std::to_string(eta), lhs, rhs[eta],
                          Rational(through));
  }
  return rpt;
}

Report generating_function_check(const FundamentalMatrix& f, long q_order, long z_order) {
  Report rpt;
  size_t d = f.dim();
  long jq_order = q_order + z_order + 3;
  CanonicalBasis basis = canonical_basis(f, z_order + 1, q_order + 1);

  // scalar W(q, z) = z J(q) - z J(z)
  SeriesQ jq = hauptmodul_j(jq_order);
  BiSeries w = BiSeries::from_q_series(jq).z_shifted(1) - BiSeries::from_z_series(jq).z_shifted(1);

  // X(z) - 1 as a matrix of univariate series in z (constant parts).
  SeriesMat xz = smat_zero(d, d);
  for (size_t rho = 0; rho < d; ++rho)
    for (size_t eta = 0; eta < d; ++eta) {
      std::vector<Rational> cz(size_t(z_order) + 2, Rational(0));
      cz[0] = rho == eta ? Rational(-1) : Rational(0);
      for (long m = 1; m <= z_order + 1; ++m)
        cz[size_t(m)] = basis.at(eta, m).constant_part[rho];
      xz[rho][eta] = SeriesQ::from_coeffs(Rational(0), std::move(cz));
    }

  // z (J(q) - J(z)) X(q,z) = Xi(q) (X(z) - 1), normalized.
  for (size_t xi = 0; xi < d; ++xi)
    for (size_t eta = 0; eta < d; ++eta) {
      BiSeries gf;
      for (long n = 1; n <= z_order + 1; ++n)
        gf = gf + BiSeries::from_q_series(basis.at(eta, n).comp[xi]).z_shifted(n - 1);
      gf = gf.with_z_frontier(z_order + 1);
      BiSeries lhs = w * gf;
      BiSeries rhs;
      for (size_t rho = 0; rho < d; ++rho)
        rhs = rhs + BiSeries::from_q_series(f.psi_entry(xi, rho).shifted(Rational(-1))) *
                        BiSeries::from_z_series(xz[rho][eta]);
      auto diff = first_difference(lhs, rhs, q_order, z_order);
      std::string name = "gf.joint-series.entry(" + std::to_string(xi) + "," + std::to_string(eta) + ")";
      if (diff)
        rpt.add(name, false,
                "first differing coefficient at q^" + std::to_string(diff->first) + " z^" +
                    std::to_string(diff->second));
      else
        rpt.add(name, true, "verified through bi-order (" + std::to_string(q_order) + "," +
                                std::to_string(z_order) + ")");
    }

  // X(z) - 1 = J'(z) z^2 Psi(z)^{-1}, univariate in z.
  SeriesMat psi_z = smat_zero(d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) psi_z[i][j] = f.psi_entry(i, j);
  SeriesMat psi_inv = smat_inverse(psi_z);
  SeriesQ jp2 = jprime(z_order + 3).shifted(Rational(2));
  for (size_t rho = 0; rho < d; ++rho)
    for (size_t eta = 0; eta < d; ++eta) {
      SeriesQ rhs = jp2 * psi_inv[rho][eta];
      check_series_identity(rpt,
                            "gf.constant-series.entry(" + std::to_string(rho) + "," + std::to_string(eta) + ")",
                            xz[rho][eta], rhs, Rational(z_order));
    }
  return rpt;
}

}  // namespace vvmf
