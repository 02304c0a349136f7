#include "vvmf/reptools.hpp"

#include <algorithm>

namespace vvmf {

namespace {

std::string entry_str(size_t i, size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

bool matrix_is_rational(const Matrix<Cyclotomic>& m) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_rational()) return false;
  return true;
}

bool matrix_is_real(const Matrix<Cyclotomic>& m) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_real()) return false;
  return true;
}

}  // namespace

Matrix<Cyclotomic> ModularRep::t_power(long e) const {
  Matrix<Cyclotomic> t(dim(), dim());
  for (size_t i = 0; i < dim(); ++i) t(i, i) = t_diag[i].pow(e);
  return t;
}

Report ModularRep::relations_check(bool require_psl2) const {
  Report rpt;
  size_t d = dim();
  require_pre(s.rows() == d && s.cols() == d, "S dimension does not match T");
  Matrix<Cyclotomic> id = Matrix<Cyclotomic>::identity(d);
  Matrix<Cyclotomic> st = s * t_matrix();
  Matrix<Cyclotomic> s2 = s * s;
  rpt.add("rep.(ST)^3=S^2", (st * st * st) == s2);
  rpt.add("rep.S^4=1", (s2 * s2) == id);
  if (require_psl2) rpt.add("rep.S^2=1", s2 == id);
  for (size_t i = 0; i < d; ++i) {
    if (!t_diag[i].pow(long(conductor)).is_rational() ||
        t_diag[i].pow(long(conductor)) != Cyclotomic(1)) {
      rpt.add("rep.T-order-divides-N", false, "entry " + std::to_string(i));
      return rpt;
    }
  }
  rpt.add("rep.T-order-divides-N", true);
  return rpt;
}

Matrix<Cyclotomic> g_ell(const ModularRep& rep, long ell, Report* report) {
  unsigned n = rep.conductor;
  require_pre(gcd_u(unsigned(((ell % long(n)) + long(n)) % long(n)), n) == 1,
              "ell must be coprime to the conductor");
  long inv = mod_inverse(ell, long(n));
  Matrix<Cyclotomic> g = rep.s * rep.t_power(inv) * rep.s * rep.t_power(ell) * rep.s * rep.t_power(inv);
  if (report) {
    Matrix<Cyclotomic> lhs = g * rep.t_matrix();
    Matrix<Cyclotomic> rhs = rep.t_power((ell * ell) % long(n)) * g;
    report->add("gell.conjugation.l" + std::to_string(ell), lhs == rhs);
  }
  return g;
}

namespace {

std::vector<long> transversal(unsigned n) {
  std::vector<long> out;
  for (unsigned l = 1; l <= n; ++l)
    if (gcd_u(l % n == 0 ? n : l % n, n) == 1) out.push_back(long(l));
  return out;
}

}  // namespace

Report rationality_test(const ModularRep& rep) {
  Report rpt;
  unsigned n = rep.conductor;
  bool all_ok = true;
  for (long ell : transversal(n)) {
    Matrix<Cyclotomic> g = g_ell(rep, ell, &rpt);
    Matrix<Cyclotomic> lhs(rep.dim(), rep.dim());
    for (size_t i = 0; i < rep.dim(); ++i)
      for (size_t j = 0; j < rep.dim(); ++j) lhs(i, j) = rep.s(i, j).galois(ell);
    Matrix<Cyclotomic> rhs = g * rep.s;
    if (lhs == rhs) continue;
    all_ok = false;
    bool reported = false;
    for (size_t i = 0; i < rep.dim() && !reported; ++i)
      for (size_t j = 0; j < rep.dim() && !reported; ++j)
        if (!(lhs(i, j) == rhs(i, j))) {
          rpt.add_sides("rationality.sigma_l(S)=G_l*S", false, lhs(i, j).str(), rhs(i, j).str(),
                        "witness l=" + std::to_string(ell) + " entry " + entry_str(i, j));
          reported = true;
        }
    break;
  }
  if (all_ok) {
    rpt.add("rationality.sigma_l(S)=G_l*S", true,
            "all " + std::to_string(transversal(n).size()) + " residues verified");
    rpt.add("rationality.S-real", matrix_is_real(rep.s));
    bool g_rational = true;
    for (long ell : transversal(n))
      if (!matrix_is_rational(g_ell(rep, ell))) {
        g_rational = false;
        break;
      }
    rpt.add("rationality.G_l-rational", g_rational);
  }
  return rpt;
}

Report congruence_heuristic(const ModularRep& rep) {
  Report rpt;
  unsigned n = rep.conductor;
  for (long ell : transversal(n)) {
    std::vector<Cyclotomic> a, b;
    for (const auto& t : rep.t_diag) {
      a.push_back(t.pow((ell * ell) % long(n)));
      b.push_back(t);
    }
    // exact multiset equality
    std::vector<bool> used(b.size(), false);
    bool match = true;
    for (const auto& va : a) {
      bool found = false;
      for (size_t i = 0; i < b.size(); ++i) {
        if (used[i]) continue;
        if (va == b[i]) {
          used[i] = true;
          found = true;
          break;
        }
      }
      if (!found) {
        match = false;
        break;
      }
    }
    if (!match) {
      rpt.add("congruence.T-spectrum", false,
              "diag(T^{l^2}) is not a permutation of diag(T) for l=" + std::to_string(ell) +
                  "; kernel is certainly noncongruence");
      return rpt;
    }
  }
  rpt.add("congruence.T-spectrum", true,
          "spectrum preserved for all residues mod " + std::to_string(n));
  return rpt;
}

namespace {

// Strictly-positive-combination feasibility for span{v_1..v_k}: does some
// sum t_i v_i have every entry > 0?  Homogeneous strict Fourier-Motzkin over
// exact real cyclotomics.
bool positive_vector_in_span(const std::vector<std::vector<Cyclotomic>>& basis, size_t d) {
  size_t k = basis.size();
  // rows: one strict inequality per component.
  std::vector<std::vector<Cyclotomic>> rows(d, std::vector<Cyclotomic>(k));
  for (size_t eta = 0; eta < d; ++eta)
    for (size_t i = 0; i < k; ++i) rows[eta][i] = basis[i][eta];
  for (size_t var = 0; var < k; ++var) {
    std::vector<std::vector<Cyclotomic>> pos, neg, zero;
    for (auto& r : rows) {
      int sgn_c = r[var].is_zero() ? 0 : r[var].sign_real();
      if (sgn_c > 0)
        pos.push_back(r);
      else if (sgn_c < 0)
        neg.push_back(r);
      else
        zero.push_back(r);
    }
    std::vector<std::vector<Cyclotomic>> next = zero;
    for (const auto& p : pos)
      for (const auto& q : neg) {
        // |q_var| * p + p_var * q eliminates var; keeps strictness.
        std::vector<Cyclotomic> comb(k);
        Cyclotomic a = p[var];
        Cyclotomic b = Cyclotomic(0) - q[var];
        for (size_t i = 0; i < k; ++i) comb[i] = b * p[i] + a * q[i];
        comb[var] = Cyclotomic(0);
        next.push_back(std::move(comb));
      }
    rows = std::move(next);
    // rows with all-zero coefficients read "0 > 0": infeasible.
    for (const auto& r : rows) {
      bool allzero = true;
      for (const auto& c : r)
        if (!c.is_zero()) {
          allzero = false;
          break;
        }
      if (allzero) return false;
    }
  }
  return true;  // no contradictory row survived
}

}  // namespace

Report nonnegativity_test(const ModularRep& rep, std::optional<size_t> distinguished) {
  Report rpt;
  size_t d = rep.dim();
  Matrix<Cyclotomic> m = rep.s - Matrix<Cyclotomic>::identity(d);
  auto kernel = m.nullspace();
  if (kernel.empty()) {
    rpt.add("nonneg.positive-eigenvector", false, "S has no eigenvalue 1");
  } else {
    bool real_entries = true;
    for (const auto& v : kernel)
      for (const auto& c : v)
        if (!c.is_real()) real_entries = false;
    if (!real_entries) {
      rpt.add("nonneg.positive-eigenvector", false,
              "indeterminate: kernel basis has non-real entries");
    } else if (kernel.size() == 1) {
      // One basis vector: a positive multiple exists iff all entries are
      // nonzero and share a sign.
      int sign = 0;
      bool ok = true;
      for (const auto& c : kernel[0]) {
        if (c.is_zero()) {
          ok = false;
          break;
        }
        int s = c.sign_real();
        if (sign == 0)
          sign = s;
        else if (s != sign) {
          ok = false;
          break;
        }
      }
      rpt.add("nonneg.positive-eigenvector", ok,
              ok ? "1-dimensional eigenspace with strictly positive representative"
                 : "eigenspace has no strictly positive representative");
    } else {
      bool ok = positive_vector_in_span(kernel, d);
      rpt.add("nonneg.positive-eigenvector", ok,
              std::string(ok ? "found" : "no") + " strictly positive vector in the " +
                  std::to_string(kernel.size()) + "-dimensional eigenspace (Fourier-Motzkin)");
    }
  }
  if (distinguished) {
    size_t c0 = *distinguished;
    require_pre(c0 < d, "distinguished component out of range");
    bool ok = true;
    std::string why;
    for (size_t i = 0; i < d; ++i) {
      const Cyclotomic& v = rep.s(i, c0);
      if (!v.is_real()) {
        ok = false;
        why = "indeterminate: entry " + std::to_string(i) + " is not real";
        break;
      }
      if (!v.is_zero() && v.sign_real() < 0) {
        ok = false;
        why = "entry " + std::to_string(i) + " = " + v.str() + " is negative";
        break;
      }
    }
    rpt.add("nonneg.distinguished-column", ok, why);
  }
  return rpt;
}

ModularRep reduce_representation(const ModularRep& rep, Report* report) {
  size_t d = rep.dim();
  Matrix<Cyclotomic> s2 = rep.s * rep.s;
  // S^2 must be a permutation matrix of order <= 2 (charge conjugation).
  std::vector<size_t> perm(d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      const Cyclotomic& v = s2(i, j);
      if (v.is_zero()) continue;
      if (!(v == Cyclotomic(1)) || perm[i] != d)
        fail_pre("S^2 is not a permutation matrix");
      perm[i] = j;
    }
  for (size_t i = 0; i < d; ++i) {
    require_pre(perm[i] != d, "S^2 is not a permutation matrix");
    require_pre(perm[perm[i]] == i, "charge conjugation must have order <= 2");
  }

  // Orbits, represented by their smallest index.
  std::vector<size_t> reps;
  std::vector<long> orbit_of(d, -1);
  for (size_t i = 0; i < d; ++i) {
    if (orbit_of[i] >= 0) continue;
    long id = long(reps.size());
    orbit_of[i] = id;
    orbit_of[perm[i]] = id;
    reps.push_back(std::min(i, perm[i]));
  }
  size_t dr = reps.size();

  // Charge-conjugate components must share T-eigenvalues for the reduction
  // to be well defined on T.
  for (size_t i = 0; i < d; ++i)
    require_pre(rep.t_diag[i] == rep.t_diag[perm[i]],
                "T is not constant on charge-conjugation orbits");

  ModularRep out;
  out.conductor = rep.conductor;
  out.t_diag.resize(dr);
  out.s = Matrix<Cyclotomic>(dr, dr);
  for (size_t a = 0; a < dr; ++a) {
    out.t_diag[a] = rep.t_diag[reps[a]];
    for (size_t b = 0; b < dr; ++b) {
      Cyclotomic acc = rep.s(reps[a], reps[b]);
      if (perm[reps[b]] != reps[b]) acc += rep.s(reps[a], perm[reps[b]]);
      out.s(a, b) = acc;
    }
  }

  // Well-definedness: the row sums must not depend on the representative.
  for (size_t a = 0; a < dr; ++a) {
    size_t alt = perm[reps[a]];
    if (alt == reps[a]) continue;
    for (size_t b = 0; b < dr; ++b) {
      Cyclotomic acc = rep.s(alt, reps[b]);
      if (perm[reps[b]] != reps[b]) acc += rep.s(alt, perm[reps[b]]);
      if (!(acc == out.s(a, b)))
        fail_pre("reduction is not well defined: representative choice changes S (corrupt input)");
    }
  }

  if (report) {
    report->merge(out.relations_check(/*require_psl2=*/true));
    report->add("reduce.S-real", matrix_is_real(out.s));
    report->add("reduce.orbit-count", true, std::to_string(dr) + " orbits");
  }
  return out;
}

}  // namespace vvmf
