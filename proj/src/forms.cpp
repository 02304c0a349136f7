#include "vvmf/forms.hpp"

#include <algorithm>
#include <numeric>

namespace vvmf {

namespace {

void require_half_integer(const Rational& k) {
  require_pre(k.get_den() == 1 || k.get_den() == 2,
              "weight must be a half-integer, got " + to_string(k));
}

long two_k(const Rational& k) { return floor_long(k * 2); }

}  // namespace

InducedRep induce_rep(const ModularRep& rep, const Rational& weight) {
  require_half_integer(weight);
  long tk = two_k(weight);
  // mu^{-2k}(T) = e^{-pi i k/6} = zeta_24^{-2k}, mu^{-2k}(S) = e^{pi i k/2} = zeta_8^{2k}.
  Cyclotomic mt = Cyclotomic::zeta(24, -tk);
  Cyclotomic ms = Cyclotomic::zeta(8, tk);
  InducedRep out;
  out.weight = weight;
  out.rep.conductor = lcm_u(rep.conductor, 24);
  out.rep.t_diag.reserve(rep.dim());
  for (const auto& t : rep.t_diag) out.rep.t_diag.push_back(t * mt);
  out.rep.s = Matrix<Cyclotomic>(rep.dim(), rep.dim());
  for (size_t i = 0; i < rep.dim(); ++i)
    for (size_t j = 0; j < rep.dim(); ++j) out.rep.s(i, j) = rep.s(i, j) * ms;
  Report rel = out.rep.relations_check(/*require_psl2=*/true);
  out.genuine = rel.all_pass();
  return out;
}

std::vector<Rational> fractional_exponents(const ModularRep& rep) {
  std::vector<Rational> out;
  out.reserve(rep.dim());
  for (const auto& t : rep.t_diag) {
    // Entries may be stored at a smaller conductor (e.g. -1 collapses to the
    // rationals); search for the exponent at the ambient conductor.
    unsigned n = lcm_u(rep.conductor, t.conductor());
    auto e = t.raised_to_conductor(n).as_root_of_unity();
    require_pre(e.has_value(), "T entry is not a root of unity of the stated conductor");
    out.push_back(frac_part(Rational(long(*e)) / Rational(long(n))));
  }
  return out;
}

Rational riemann_roch_trace(const ModularRep& rep) {
  size_t d = rep.dim();
  Matrix<Cyclotomic> u = rep.s * rep.t_matrix().inverse();
  Cyclotomic tr_s(0), tr_u(0);
  for (size_t i = 0; i < d; ++i) {
    tr_s += rep.s(i, i);
    tr_u += u(i, i);
  }
  Cyclotomic sqrt3 = Cyclotomic::zeta(12, 1) + Cyclotomic::zeta(12, -1);
  Cyclotomic re_term = (Cyclotomic::zeta(12, -1) * tr_u).real_part();
  Cyclotomic rhs = Cyclotomic(Rational(5 * long(d)) / 12) + tr_s * Cyclotomic(Rational(1, 4)) +
                   Cyclotomic(Rational(2, 9)) * sqrt3 * re_term;
  require_pre(rhs.is_rational(),
              "trace relation did not evaluate to a rational number: " + rhs.str());
  return rhs.to_rational();
}

std::vector<Rational> choose_exponents(const ModularRep& rep) {
  std::vector<Rational> lambda = fractional_exponents(rep);
  Rational target = riemann_roch_trace(rep);
  Rational deficit = target;
  for (const auto& l : lambda) deficit -= l;
  require_pre(is_integer(deficit),
              "trace relation is incompatible with the fractional exponents (deficit " +
                  to_string(deficit) + ")");
  long m = floor_long(deficit);
  size_t d = lambda.size();
  // Indices by descending fractional part (ties broken by index for
  // determinism); positive shifts go to the largest fractional parts first,
  // negative shifts to the smallest first.
  std::vector<size_t> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](size_t a, size_t b) { return lambda[a] > lambda[b]; });
  long per = m / long(d);
  long rem = m % long(d);
  if (rem < 0) {
    per -= 1;
    rem += long(d);
  }
  for (auto& l : lambda) l += per;
  for (long r = 0; r < rem; ++r) lambda[idx[size_t(r)]] += 1;
  return lambda;
}

FormDimensions dim_forms(const ModularRep& rep, const Rational& weight) {
  require_half_integer(weight);
  InducedRep ind = induce_rep(rep, weight);
  FormDimensions out;
  out.genuine = ind.genuine;
  if (!ind.genuine) return out;  // the form space is trivial
  out.lambda = choose_exponents(ind.rep);
  Rational k12 = weight / 12;
  Integer tr_m(0), tr_s(0);
  for (const auto& l : out.lambda) {
    tr_m += floor_int(l + k12);
    tr_s += floor_int(Rational(1) - k12 - l);
  }
  out.dim_forms = std::max(0L, to_long(tr_m));
  out.dim_cusp = std::max(0L, -to_long(tr_s));
  return out;
}

ModularRep contragredient(const ModularRep& rep) {
  ModularRep out;
  out.conductor = rep.conductor;
  out.t_diag.reserve(rep.dim());
  for (const auto& t : rep.t_diag) out.t_diag.push_back(t.conj());
  out.s = Matrix<Cyclotomic>(rep.dim(), rep.dim());
  for (size_t i = 0; i < rep.dim(); ++i)
    for (size_t j = 0; j < rep.dim(); ++j) out.s(i, j) = rep.s(j, i).conj();
  return out;
}

Report trace_integer_part_checks(const ModularRep& rep) {
  Report rpt;
  std::vector<Rational> lambda = choose_exponents(rep);
  ModularRep bar = contragredient(rep);

  Integer lhs1(0);
  for (const auto& l : lambda) lhs1 += floor_int(Rational(1) - l);
  FormDimensions m2 = dim_forms(bar, Rational(2));
  rpt.add_sides("trace.floor(1-Lambda)=dimM2(contragredient)", lhs1 == Integer(m2.dim_forms),
                lhs1.get_str(), std::to_string(m2.dim_forms));

  Integer lhs2(0);
  for (const auto& l : lambda) lhs2 += floor_int(l);
  FormDimensions m0 = dim_forms(rep, Rational(0));
  FormDimensions s2 = dim_forms(bar, Rational(2));
  long rhs2 = m0.dim_forms - s2.dim_cusp;
  rpt.add_sides("trace.floor(Lambda)=dimM0-dimS2(contragredient)", lhs2 == Integer(rhs2),
                lhs2.get_str(), std::to_string(rhs2));
  return rpt;
}

RepData one_dimensional_repdata(const Rational& lambda) {
  // Specializing the quadratic matrix system to scalars factors it into two
  // cubics, one per idempotent value of A.
  Rational cubic0 = (lambda - 1) * (lambda - Rational(1, 3)) * (lambda - Rational(2, 3));
  Rational cubic1 = (lambda - Rational(1, 2)) * (lambda - Rational(1, 6)) * (lambda + Rational(1, 6));
  Rational a;
  if (cubic0 == 0)
    a = 0;
  else if (cubic1 == 0)
    a = 1;
  else
    fail_pre("exponent " + to_string(lambda) + " does not belong to a 1-dimensional solution");
  RepData rep;
  rep.lambda = {lambda};
  rep.x = Matrix<Rational>(1, 1);
  rep.x(0, 0) = Rational(744) * (Rational(1) - lambda) - Rational(864) * a;
  return rep;
}

FormBasis form_basis(const RepData& induced, const Rational& weight, long order) {
  require_half_integer(weight);
  induced.validate_shape();
  size_t d = induced.dim();
  Rational k12 = weight / 12;

  FormBasis out;
  out.weight = weight;
  out.lambda = induced.lambda;
  std::vector<long> per_comp(d, 0);
  Integer tr(0);
  for (size_t xi = 0; xi < d; ++xi) {
    Integer fl = floor_int(induced.lambda[xi] + k12);
    tr += fl;
    per_comp[xi] = std::max(0L, to_long(fl));
  }
  out.dim_by_trace = std::max(0L, to_long(tr));
  out.cardinality = std::accumulate(per_comp.begin(), per_comp.end(), 0L);

  long max_pole = *std::max_element(per_comp.begin(), per_comp.end());
  if (max_pole == 0) return out;  // empty basis

  FundamentalMatrix f = expand_fundamental(induced, order + max_pole + 1);
  CanonicalBasis basis = canonical_basis(f, max_pole, order + 1);
  long tk = two_k(weight);
  SeriesQ eta_pow = dedekind_eta(order + max_pole + 2).pow(Rational(tk));

  for (size_t xi = 0; xi < d; ++xi) {
    for (long n = 1; n <= per_comp[xi]; ++n) {
      const CanonicalVector& v = basis.at(xi, n);
      std::vector<SeriesQ> vec(d);
      for (size_t eta = 0; eta < d; ++eta) {
        vec[eta] = eta_pow * v.component(eta, induced.lambda);
        if (!vec[eta].is_zero() && vec[eta].leading_exponent() < 0)
          fail_internal("form basis vector fails holomorphy at infinity (component " +
                        std::to_string(eta) + ", leading exponent " +
                        to_string(vec[eta].leading_exponent()) + ")");
      }
      out.vectors.push_back(std::move(vec));
    }
  }
  if (long(out.vectors.size()) != out.cardinality)
    fail_internal("form basis cardinality bookkeeping mismatch");
  return out;
}

}  // namespace vvmf
