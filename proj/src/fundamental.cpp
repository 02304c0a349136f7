#include "vvmf/fundamental.hpp"

#include <algorithm>
#include <sstream>

namespace vvmf {

namespace {

std::string pos_str(size_t xi, size_t eta) {
  return "(" + std::to_string(xi) + "," + std::to_string(eta) + ")";
}

}  // namespace

SeriesQ FundamentalMatrix::psi_entry(size_t xi, size_t eta) const {
  std::vector<Rational> c(psi.size());
  for (size_t n = 0; n < psi.size(); ++n) c[n] = psi[n](xi, eta);
  return SeriesQ::from_coeffs(Rational(0), std::move(c));
}

SeriesQ FundamentalMatrix::entry(size_t xi, size_t eta) const {
  return psi_entry(xi, eta).shifted(lambda[xi] - 1);
}

SeriesMat FundamentalMatrix::to_series() const {
  size_t d = dim();
  SeriesMat m = smat_zero(d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) m[i][j] = entry(i, j);
  return m;
}

void check_series_identity(Report& rpt, const std::string& name, const SeriesQ& lhs,
                           const SeriesQ& rhs, const Rational& through) {
  require_pre(lhs.known_through(through) && rhs.known_through(through),
              name + ": operands not tracked through q^" + to_string(through));
  auto diff = first_difference(lhs, rhs, through);
  if (diff)
    rpt.add(name, false, "first differing coefficient at q^" + to_string(*diff) + ": " +
                             to_string(lhs.coeff(*diff)) + " vs " + to_string(rhs.coeff(*diff)));
  else
    rpt.add(name, true, "verified through q^" + to_string(through));
}

std::vector<Matrix<Rational>> dmatrix_coefficients(const RepData& rep, long order) {
  rep.validate_shape();
  size_t d = rep.dim();
  SeriesQ j = hauptmodul_j(order + 2);
  SeriesQ e = eseries(order + 2);
  SeriesQ einv = e.inverted();
  SeriesQ p = (j - SeriesQ::constant(Rational(240))) * einv;
  Matrix<Rational> c = x_plus_bracket(rep.lambda, rep.x);
  std::vector<Matrix<Rational>> dm;
  dm.reserve(size_t(order) + 1);
  for (long m = 0; m <= order; ++m) {
    Matrix<Rational> dmat(d, d);
    Rational pm = p.coeff(Rational(m));
    Rational qm = einv.coeff(Rational(m));
    for (size_t xi = 0; xi < d; ++xi)
      for (size_t eta = 0; eta < d; ++eta) {
        Rational v = qm * c(xi, eta);
        if (xi == eta) v += pm * (rep.lambda[xi] - 1);
        dmat(xi, eta) = v;
      }
    dm.push_back(std::move(dmat));
  }
  // Sanity gate: the q^{-1} poles of J and E cancel, so D starts at Lambda-1.
  Matrix<Rational> expected = rep.lambda_matrix() - Matrix<Rational>::identity(d);
  if (!(dm[0] == expected)) fail_internal("D[0] != Lambda - 1");
  return dm;
}

FundamentalMatrix expand_fundamental(const RepData& rep, long order) {
  rep.validate_shape();
  require_pre(order >= 1, "expansion order must be at least 1");
  ABPair ab = derive_ab(rep);
  Report spectral_report;
  auto sig = spectral_signature(ab, &spectral_report);
  require_pre(sig.has_value(), "spectral condition fails; the data does not define a "
                               "holomorphic fundamental matrix");

  size_t d = rep.dim();
  std::vector<Matrix<Rational>> dm = dmatrix_coefficients(rep, order);

  FundamentalMatrix f;
  f.lambda = rep.lambda;
  f.psi.reserve(size_t(order) + 1);
  f.psi.push_back(Matrix<Rational>::identity(d));
  for (long n = 1; n <= order; ++n) {
    Matrix<Rational> rhs(d, d);
    for (long m = 1; m <= n; ++m) rhs += f.psi[size_t(n - m)] * dm[size_t(m)];
    Matrix<Rational> psin(d, d);
    for (size_t xi = 0; xi < d; ++xi)
      for (size_t eta = 0; eta < d; ++eta) {
        Rational div = Rational(n) + rep.lambda[xi] - rep.lambda[eta];
        if (div == 0) {
          if (rhs(xi, eta) != 0)
            fail_pre("resonance at n=" + std::to_string(n) + ", entry " + pos_str(xi, eta) +
                     ": divisor vanishes against right-hand side " + to_string(rhs(xi, eta)));
          f.resonances.emplace_back(n, xi, eta);
          psin(xi, eta) = Rational(0);
        } else {
          psin(xi, eta) = rhs(xi, eta) / div;
        }
      }
    f.psi.push_back(std::move(psin));
  }

  if (!(f.psi[1] == rep.x))
    fail_pre("recursion inconsistency: recovered Psi[1] differs from the characteristic matrix");

  if (order >= 3) {
    Report c1 = compat1_check(f, rep);
    if (!c1.all_pass()) {
      std::string why;
      for (const auto& c : c1.checks)
        if (!c.pass) why += c.name + " " + c.detail + "; ";
      fail_internal("first-order compatibility verification failed: " + why);
    }
  }
  return f;
}

Report compat1_check(const FundamentalMatrix& f, const RepData& rep, long through) {
  size_t d = f.dim();
  long m = f.order();
  if (through < 0) through = m - 2;
  Report rpt;
  SeriesQ j240 = hauptmodul_j(m + 2) - SeriesQ::constant(Rational(240));
  std::vector<std::vector<SeriesQ>> col(d, std::vector<SeriesQ>(d));
  for (size_t xi = 0; xi < d; ++xi)
    for (size_t eta = 0; eta < d; ++eta) col[eta][xi] = f.entry(xi, eta);
  for (size_t c = 0; c < d; ++c) {
    for (size_t xi = 0; xi < d; ++xi) {
      SeriesQ lhs = nabla(col[c][xi], floor_long(rep.lambda[xi] - 1) + through + 1);
      SeriesQ rhs = j240.scaled(rep.lambda[c] - 1) * col[c][xi];
      for (size_t eta = 0; eta < d; ++eta) {
        Rational coeff = (Rational(1) + rep.lambda[eta] - rep.lambda[c]) * rep.x(eta, c);
        rhs = rhs + col[eta][xi].scaled(coeff);
      }
      check_series_identity(rpt, "compat1.col" + std::to_string(c) + ".row" + std::to_string(xi),
                            lhs, rhs, rep.lambda[xi] - 1 + through);
    }
  }
  return rpt;
}

Report det_check(const FundamentalMatrix& f, const Signature& sig) {
  Report rpt;
  size_t d = f.dim();
  long m = f.order();
  SeriesQ det = smat_det(f.to_series());
  Rational lead_expected(0);
  for (const auto& l : f.lambda) lead_expected += l - 1;
  bool lead_ok = !det.is_zero() && det.leading_exponent() == lead_expected &&
                 det.leading_coeff() == Rational(1);
  rpt.add_sides("det.leading-term", lead_ok,
                det.is_zero() ? "0" : "q^" + to_string(det.leading_exponent()),
                "q^" + to_string(lead_expected));

  long e4_pow = sig.beta1 + 2 * sig.beta2;
  long margin = std::max(0L, floor_long(lead_expected)) + m + 4;
  SeriesQ e4 = eisenstein(4, margin);
  SeriesQ e6 = eisenstein(6, margin);
  SeriesQ delta = discriminant(margin);
  SeriesQ rhs = SeriesQ::constant(Rational(1));
  if (e4_pow != 0) rhs = rhs * (e4 * delta.pow(Rational(-1, 3))).pow(Rational(e4_pow));
  if (sig.alpha != 0) rhs = rhs * (e6 * delta.pow(Rational(-1, 2))).pow(Rational(sig.alpha));
  check_series_identity(rpt, "det.eta-quotient-identity", det, rhs,
                        lead_expected + (m - long(d)));
  return rpt;
}

Report hypergeometric_check(const FundamentalMatrix& f, const ABPair& ab) {
  Report rpt;
  size_t d = f.dim();
  long m = f.order();
  SeriesQ z = zmap(m + 2);
  SeriesMat xi = f.to_series();
  // G = 864 (z-1) A + 576 z B, entrywise scalar series times constants.
  SeriesMat g = smat_zero(d, d);
  SeriesQ z864 = z.scaled(Rational(864)) - SeriesQ::constant(Rational(864));
  SeriesQ z576 = z.scaled(Rational(576));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      g[i][j] = z864.scaled(ab.a(i, j)) + z576.scaled(ab.b(i, j));
  SeriesMat rhs = smat_mul(xi, g);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      SeriesQ lhs = nabla(xi[i][j], floor_long(f.lambda[i] - 1) + (m - 2) + 1);
      check_series_identity(rpt, "hyper.entry" + pos_str(i, j), lhs, rhs[i][j],
                            f.lambda[i] - 1 + (m - 2));
    }
  return rpt;
}

Report determinant_ode_check(const FundamentalMatrix& f, const RepData& rep) {
  Report rpt;
  long m = f.order();
  SeriesQ det = smat_det(f.to_series());
  std::vector<Matrix<Rational>> dm = dmatrix_coefficients(rep, m);
  std::vector<Rational> trc(dm.size());
  for (size_t i = 0; i < dm.size(); ++i) trc[i] = dm[i].trace();
  SeriesQ tr_d = SeriesQ::from_coeffs(Rational(0), std::move(trc));
  SeriesQ lhs = det.euler_derivative();
  SeriesQ rhs = det * tr_d;
  Rational lead(0);
  for (const auto& l : f.lambda) lead += l - 1;
  check_series_identity(rpt, "det.liouville-ode", lhs, rhs, lead + (m - 2 - long(f.dim())));
  return rpt;
}

FundamentalMatrix dual_fundamental(const FundamentalMatrix& f) {
  size_t d = f.dim();
  long m = f.order();
  require_pre(m >= long(d) + 2, "dual needs a few more expansion orders than the dimension");
  SeriesMat inv_t = smat_inverse(smat_transpose(f.to_series()));
  long margin = m + 4;
  SeriesQ w = eisenstein(14, margin) * discriminant(margin).pow(Rational(-7, 6));
  std::vector<Rational> lambda_dual(d);
  for (size_t i = 0; i < d; ++i) lambda_dual[i] = Rational(5, 6) - f.lambda[i];

  // Read Psi' off the series, verifying the boundary structure as we go.
  long out_order = -1;
  std::vector<std::vector<SeriesQ>> ent(d, std::vector<SeriesQ>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      ent[i][j] = w * inv_t[i][j];
      Rational base = lambda_dual[i] - 1;
      if (!ent[i][j].is_zero()) {
        Rational off = ent[i][j].leading_exponent() - base;
        require_pre(is_integer(off) && off >= 0,
                    "dual fundamental matrix violates the expected exponent structure at " +
                        pos_str(i, j));
      }
      auto fr = ent[i][j].frontier();
      long avail = fr ? floor_long(*fr - base) - 1 : m;
      out_order = out_order < 0 ? avail : std::min(out_order, avail);
    }
  require_pre(out_order >= 1, "insufficient order survives the dual construction");

  FundamentalMatrix out;
  out.lambda = std::move(lambda_dual);
  out.psi.reserve(size_t(out_order) + 1);
  for (long n = 0; n <= out_order; ++n) {
    Matrix<Rational> pn(d, d);
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) pn(i, j) = ent[i][j].coeff(out.lambda[i] - 1 + n);
    out.psi.push_back(std::move(pn));
  }
  if (!(out.psi[0] == Matrix<Rational>::identity(d)))
    fail_pre("dual fundamental matrix violates the boundary condition Psi[0] = 1");
  return out;
}

ShiftResult lambda_shift(const FundamentalMatrix& f, const RepData& rep, size_t i, size_t j) {
  size_t d = f.dim();
  require_pre(i < d && j < d && i != j, "shift indices out of range");
  require_pre(rep.x(i, j) != 0, "shift requires X_{ij} != 0 at the chosen indices");
  long m = f.order();
  require_pre(m >= 3, "shift needs expansion order >= 3");
  SeriesQ jser = hauptmodul_j(m + 2);

  std::vector<std::vector<SeriesQ>> col(d, std::vector<SeriesQ>(d));  // col[eta][xi]
  for (size_t eta = 0; eta < d; ++eta)
    for (size_t xi = 0; xi < d; ++xi) col[eta][xi] = f.entry(xi, eta);

  // Column j of Xi*M before fixing C: N_xi = J*Xi_{xi j} - sum_{m != j} X_{mj} Xi_{xi m}.
  std::vector<SeriesQ> ncol(d);
  for (size_t xi = 0; xi < d; ++xi) {
    SeriesQ acc = jser * col[j][xi];
    for (size_t r = 0; r < d; ++r) {
      if (r == j) continue;
      acc = acc - col[r][xi].scaled(rep.x(r, j));
    }
    ncol[xi] = acc;
  }
  // Boundary condition on row i of the new column j fixes C.
  Rational c_const = ncol[i].coeff(rep.lambda[i]) / rep.x(i, j);

  std::vector<Rational> lambda_new = rep.lambda;
  lambda_new[i] += 1;
  lambda_new[j] -= 1;

  std::vector<std::vector<SeriesQ>> ncols(d, std::vector<SeriesQ>(d));  // [eta][xi]
  for (size_t xi = 0; xi < d; ++xi) {
    ncols[i][xi] = col[j][xi].scaled(Rational(1) / rep.x(i, j));
    ncols[j][xi] = ncol[xi] - col[j][xi].scaled(c_const);
    for (size_t r = 0; r < d; ++r) {
      if (r == i || r == j) continue;
      ncols[r][xi] = col[r][xi] - col[j][xi].scaled(rep.x(i, r) / rep.x(i, j));
    }
  }

  long out_order = -1;
  for (size_t eta = 0; eta < d; ++eta)
    for (size_t xi = 0; xi < d; ++xi) {
      const SeriesQ& s = ncols[eta][xi];
      Rational base = lambda_new[xi] - 1;
      if (!s.is_zero()) {
        Rational off = s.leading_exponent() - base;
        if (!(is_integer(off) && off >= 0))
          fail_pre("shift violates the boundary condition at entry " + pos_str(xi, eta) +
                   ": obstructing coefficient " + to_string(s.leading_coeff()) + " at q^" +
                   to_string(s.leading_exponent()));
      }
      auto fr = s.frontier();
      long avail = fr ? floor_long(*fr - base) - 1 : m;
      out_order = out_order < 0 ? avail : std::min(out_order, avail);
    }
  require_pre(out_order >= 1, "insufficient order survives the shift");

  ShiftResult res;
  res.constant = c_const;
  res.rep.lambda = lambda_new;
  FundamentalMatrix& nf = res.fundamental;
  nf.lambda = lambda_new;
  for (long n = 0; n <= out_order; ++n) {
    Matrix<Rational> pn(d, d);
    for (size_t xi = 0; xi < d; ++xi)
      for (size_t eta = 0; eta < d; ++eta)
        pn(xi, eta) = ncols[eta][xi].coeff(lambda_new[xi] - 1 + n);
    nf.psi.push_back(std::move(pn));
  }
  if (!(nf.psi[0] == Matrix<Rational>::identity(d)))
    fail_pre("shift violates the boundary condition Psi[0] = 1");
  res.rep.x = nf.psi[1];
  res.rep.s = rep.s;
  return res;
}

}  // namespace vvmf
