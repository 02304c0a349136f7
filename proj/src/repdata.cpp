#include "vvmf/repdata.hpp"

#include <sstream>

namespace vvmf {

namespace {

std::string rat_str(const Rational& r) { return to_string(r); }

Matrix<Rational> scalar_matrix(size_t d, const Rational& v) {
  Matrix<Rational> m(d, d);
  for (size_t i = 0; i < d; ++i) m(i, i) = v;
  return m;
}

}  // namespace

void RepData::validate_shape() const {
  require_pre(!lambda.empty(), "empty exponent matrix");
  require_pre(x.rows() == lambda.size() && x.cols() == lambda.size(),
              "characteristic matrix dimension does not match the exponent matrix");
  if (s) {
    require_pre(s->rows() == lambda.size() && s->cols() == lambda.size(),
                "S matrix dimension does not match the exponent matrix");
  }
}

Matrix<Rational> x_plus_bracket(const std::vector<Rational>& lambda, const Matrix<Rational>& x) {
  size_t d = lambda.size();
  require_pre(x.rows() == d && x.cols() == d, "dimension mismatch in X + [Lambda, X]");
  Matrix<Rational> m(d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) m(i, j) = (Rational(1) + lambda[i] - lambda[j]) * x(i, j);
  return m;
}

ABPair derive_ab(const RepData& rep) {
  rep.validate_shape();
  size_t d = rep.dim();
  Matrix<Rational> one_minus_lambda = scalar_matrix(d, Rational(1)) - rep.lambda_matrix();
  Matrix<Rational> xb = x_plus_bracket(rep.lambda, rep.x);
  ABPair ab;
  ab.a = Rational(31, 36) * one_minus_lambda - Rational(1, 864) * xb;
  ab.b = Rational(41, 24) * one_minus_lambda + Rational(1, 576) * xb;
  // Linear relation the two formulas must satisfy identically.
  Matrix<Rational> lhs = ab.b;
  Matrix<Rational> rhs = Rational(3) * (one_minus_lambda - Rational(1, 2) * ab.a);
  if (!(lhs == rhs)) fail_internal("derive_ab: B != 3(1 - Lambda - A/2)");
  return ab;
}

Matrix<Rational> recover_x_from_a(const std::vector<Rational>& lambda, const Matrix<Rational>& a) {
  size_t d = lambda.size();
  require_pre(a.rows() == d && a.cols() == d, "dimension mismatch recovering X from A");
  // X + [Lambda, X] = 744 (1 - Lambda) - 864 A, then divide entry (i,j) by
  // 1 + Lambda_i - Lambda_j.
  Matrix<Rational> m = Rational(744) * (scalar_matrix(d, Rational(1)) - Matrix<Rational>::diagonal(lambda)) -
                       Rational(864) * a;
  Matrix<Rational> x(d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      Rational div = Rational(1) + lambda[i] - lambda[j];
      if (div == 0)
        fail_pre("X is not determined by A: exponents at indices (" + std::to_string(i) + "," +
                 std::to_string(j) + ") differ by 1; apply an exponent shift first");
      x(i, j) = m(i, j) / div;
    }
  return x;
}

std::optional<Signature> spectral_signature(const ABPair& ab, Report* report) {
  size_t d = ab.a.rows();
  Matrix<Rational> id = Matrix<Rational>::identity(d);
  Matrix<Rational> pa = ab.a * (ab.a - id);
  Matrix<Rational> pb = ab.b * (ab.b - id) * (ab.b - Rational(2) * id);
  bool ok_a = pa.is_zero();
  bool ok_b = pb.is_zero();
  if (report) {
    report->add("spectral.A(A-1)=0", ok_a);
    report->add("spectral.B(B-1)(B-2)=0", ok_b);
  }
  if (!ok_a || !ok_b) return std::nullopt;
  Rational tr_a = ab.a.trace();
  Rational tr_b = ab.b.trace();
  Rational tr_b2 = (ab.b * ab.b).trace();
  Rational alpha = tr_a;
  Rational beta1 = Rational(2) * tr_b - tr_b2;
  Rational beta2 = (tr_b2 - tr_b) / 2;
  bool integral = is_integer(alpha) && is_integer(beta1) && is_integer(beta2);
  if (!integral) {
    if (report) report->add("spectral.multiplicities-integral", false,
                            "alpha=" + rat_str(alpha) + " beta1=" + rat_str(beta1) +
                                " beta2=" + rat_str(beta2));
    return std::nullopt;
  }
  Signature sig{d, floor_long(alpha), floor_long(beta1), floor_long(beta2)};
  bool ranges = sig.alpha >= 0 && sig.alpha <= long(d) && sig.beta1 >= 0 && sig.beta2 >= 0 &&
                sig.beta1 + sig.beta2 <= long(d);
  if (report)
    report->add("spectral.signature-range", ranges,
                "(d,alpha,beta1,beta2)=(" + std::to_string(d) + "," + std::to_string(sig.alpha) +
                    "," + std::to_string(sig.beta1) + "," + std::to_string(sig.beta2) + ")");
  if (!ranges) return std::nullopt;
  return sig;
}

bool monodromy_equation_check(const std::vector<Rational>& lambda, const Matrix<Rational>& a,
                              Report* report) {
  size_t d = lambda.size();
  Matrix<Rational> lam = Matrix<Rational>::diagonal(lambda);
  Matrix<Rational> id = Matrix<Rational>::identity(d);
  bool idem = (a * a) == a;
  Matrix<Rational> lam2 = lam * lam;
  Matrix<Rational> lam3 = lam2 * lam;
  Matrix<Rational> lhs = a * lam * a;
  Matrix<Rational> rhs = Rational(-17, 18) * a -
                         Rational(2) * (a * lam2 + lam * a * lam + lam2 * a) +
                         Rational(3) * (a * lam + lam * a) - Rational(4) * lam3 +
                         Rational(8) * lam2 - Rational(44, 9) * lam + Rational(8, 9) * id;
  bool quad = lhs == rhs;
  if (report) {
    report->add("monodromy.A^2=A", idem);
    report->add("monodromy.ALA-cubic", quad);
  }
  return idem && quad;
}

Matrix<Cyclotomic> t_matrix(const std::vector<Rational>& lambda) {
  size_t d = lambda.size();
  Matrix<Cyclotomic> t(d, d);
  for (size_t i = 0; i < d; ++i) {
    Rational f = frac_part(lambda[i]);
    unsigned den = unsigned(to_long(Integer(f.get_den())));
    long num = to_long(Integer(f.get_num()));
    t(i, i) = Cyclotomic::zeta(den, num);
  }
  return t;
}

Report trace_audit(const RepData& rep, const Signature& sig,
                   const std::vector<std::vector<size_t>>& blocks) {
  rep.validate_shape();
  Report rpt;
  size_t d = rep.dim();

  Rational tr_x = rep.x.trace();
  Rational rhs_x = Rational(4) * (Rational(62) * sig.beta1 + Rational(124) * sig.beta2 -
                                  Rational(123) * sig.alpha);
  rpt.add_sides("trace.X", tr_x == rhs_x, rat_str(tr_x), rat_str(rhs_x));

  Rational tr_l = rep.trace_lambda();
  Rational rhs_l = Rational(long(d)) - Rational(sig.alpha) / 2 -
                   (Rational(sig.beta1) + Rational(2) * sig.beta2) / 3;
  rpt.add_sides("trace.Lambda", tr_l == rhs_l, rat_str(tr_l), rat_str(rhs_l));

  bool congruent = false;
  if (is_integer(tr_x)) {
    Integer diff = floor_int(tr_x) - Integer(4 * sig.alpha);
    congruent = mpz_divisible_ui_p(diff.get_mpz_t(), 248) != 0;
  }
  rpt.add_sides("trace.X-mod-248", congruent, rat_str(tr_x),
                "4*alpha=" + std::to_string(4 * sig.alpha) + " (mod 248)");

  if (!rep.s) return rpt;

  const Matrix<Cyclotomic>& s = *rep.s;
  Matrix<Cyclotomic> t = t_matrix(rep.lambda);
  Matrix<Cyclotomic> u = s * t.inverse();

  Cyclotomic tr_s(0);
  for (size_t i = 0; i < d; ++i) tr_s += s(i, i);
  Cyclotomic rhs_s(Rational(long(d) - 2 * sig.alpha));
  rpt.add_sides("trace.S", tr_s == rhs_s, tr_s.str(), rhs_s.str());

  Cyclotomic tr_u(0);
  for (size_t i = 0; i < d; ++i) tr_u += u(i, i);
  // d - (3/2)(b1+b2) + i (sqrt3/2)(b1-b2), built inside Q(zeta_12).
  Cyclotomic sqrt3 = Cyclotomic::zeta(12, 1) + Cyclotomic::zeta(12, -1);
  Cyclotomic iunit = Cyclotomic::zeta(4, 1);
  Cyclotomic rhs_u = Cyclotomic(Rational(long(d)) - Rational(3, 2) * (sig.beta1 + sig.beta2)) +
                     iunit * sqrt3 * Cyclotomic((Rational(sig.beta1) - Rational(sig.beta2)) / 2);
  rpt.add_sides("trace.U", tr_u == rhs_u, tr_u.str(), rhs_u.str());

  // Riemann-Roch trace relation per indecomposable block.
  std::vector<std::vector<size_t>> effective_blocks = blocks;
  if (effective_blocks.empty()) {
    std::vector<size_t> all(d);
    for (size_t i = 0; i < d; ++i) all[i] = i;
    effective_blocks.push_back(std::move(all));
  }
  for (size_t bi = 0; bi < effective_blocks.size(); ++bi) {
    const auto& blk = effective_blocks[bi];
    Rational tr_l_blk(0);
    Cyclotomic tr_s_blk(0), tr_u_blk(0);
    for (size_t i : blk) {
      require_pre(i < d, "block index out of range");
      tr_l_blk += rep.lambda[i];
      tr_s_blk += s(i, i);
      tr_u_blk += u(i, i);
    }
    // 5 d_blk/12 + TrS/4 + (2/(3 sqrt3)) Re(e^{-pi i/6} TrU)
    Cyclotomic phase = Cyclotomic::zeta(12, -1);
    Cyclotomic re_term = (phase * tr_u_blk).real_part();
    Cyclotomic rhs = Cyclotomic(Rational(5 * long(blk.size())) / 12) +
                     tr_s_blk * Cyclotomic(Rational(1, 4)) +
                     Cyclotomic(Rational(2, 9)) * sqrt3 * re_term;
    std::string name = effective_blocks.size() == 1
                           ? std::string("trace.Riemann-Roch")
                           : "trace.Riemann-Roch.block" + std::to_string(bi);
    bool ok = rhs.is_rational() && Cyclotomic(tr_l_blk) == rhs;
    rpt.add_sides(name, ok, rat_str(tr_l_blk), rhs.str());
  }
  return rpt;
}

RepData dual(const RepData& rep) {
  rep.validate_shape();
  size_t d = rep.dim();
  RepData out;
  out.lambda.reserve(d);
  for (const auto& l : rep.lambda) out.lambda.push_back(Rational(5, 6) - l);
  Matrix<Rational> xt = rep.x.transpose();
  out.x = Matrix<Rational>(d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) out.x(i, j) = (i == j ? Rational(4) : Rational(0)) - xt(i, j);
  return out;
}

RepData direct_sum(const RepData& r1, const RepData& r2) {
  r1.validate_shape();
  r2.validate_shape();
  RepData out;
  out.lambda = r1.lambda;
  out.lambda.insert(out.lambda.end(), r2.lambda.begin(), r2.lambda.end());
  size_t d1 = r1.dim(), d2 = r2.dim();
  out.x = Matrix<Rational>(d1 + d2, d1 + d2);
  for (size_t i = 0; i < d1; ++i)
    for (size_t j = 0; j < d1; ++j) out.x(i, j) = r1.x(i, j);
  for (size_t i = 0; i < d2; ++i)
    for (size_t j = 0; j < d2; ++j) out.x(d1 + i, d1 + j) = r2.x(i, j);
  if (r1.s && r2.s) {
    Matrix<Cyclotomic> s(d1 + d2, d1 + d2);
    for (size_t i = 0; i < d1; ++i)
      for (size_t j = 0; j < d1; ++j) s(i, j) = (*r1.s)(i, j);
    for (size_t i = 0; i < d2; ++i)
      for (size_t j = 0; j < d2; ++j) s(d1 + i, d1 + j) = (*r2.s)(i, j);
    out.s = std::move(s);
  }
  return out;
}

}  // namespace vvmf
