#pragma once

#include <map>

#include "vvmf/bivariate.hpp"
#include "vvmf/fundamental.hpp"

namespace vvmf {

// Coefficients of the negative-power tail of the Lambda-normalized expansion:
// (component, pole order n >= 1) -> coefficient of q^{-n}.
struct PrincipalPart {
  std::map<std::pair<size_t, long>, Rational> terms;

  bool operator==(const PrincipalPart&) const = default;
};

// One canonical basis vector, stored Lambda-normalized: comp[eta] is
// q^{-Lambda_eta} times component eta, an integer-power series. The constant
// parts (q^0 coefficients) are kept alongside since the recursion needs them.
struct CanonicalVector {
  size_t xi = 0;
  long pole = 1;
  std::vector<SeriesQ> comp;
  std::vector<Rational> constant_part;

  // Component as an actual function (offset reattached).
  SeriesQ component(size_t eta, const std::vector<Rational>& lambda) const {
    return comp[eta].shifted(lambda[eta]);
  }
};

struct CanonicalBasis {
  std::vector<Rational> lambda;
  Matrix<Rational> x;
  long max_pole = 0;
  long order = 0;                                  // components reliable through q^order (normalized)
  std::vector<std::vector<CanonicalVector>> vecs;  // [xi][n-1]

  size_t dim() const { return lambda.size(); }
  const CanonicalVector& at(size_t xi, long n) const {
    require_pre(xi < dim() && n >= 1 && n <= max_pole, "canonical vector index out of range");
    return vecs[xi][size_t(n - 1)];
  }
};

// Builds X^{(xi;n)} for all components and 1 <= n <= max_pole via the J-
// recursion, verifying each principal part is exactly q^{-n} delta. Requires
// f.order() >= order + max_pole.
CanonicalBasis canonical_basis(const FundamentalMatrix& f, long max_pole, long order);

// Lambda-normalized principal part of a component vector.
PrincipalPart principal_part(const std::vector<SeriesQ>& normalized_components);

// X = sum_{(xi,n)} P[xi,n] X^{(xi;n)}; returns normalized components.
std::vector<SeriesQ> invert_principal_part(const CanonicalBasis& basis, const PrincipalPart& p);

// nabla X^{(xi;m)} = (Lambda_xi - m) sum_{n=-1}^{m-1} E_n X^{(xi;m-n)}
//                    + sum_eta Lambda_eta X_eta^{(xi;m)} X^{(eta;1)},
// checked for all 1 <= m <= m_max (needs basis pole orders through m_max+1).
Report differential_relations_check(const CanonicalBasis& basis, long m_max, long through);

// The same differential relation applied to an arbitrary combination given by
// a principal part (linearity); verifies nabla(reconstruction) termwise.
Report combination_ode_check(const CanonicalBasis& basis, const PrincipalPart& p, long through);

// z (J(q) - J(z)) X(q,z) = Xi(q) (X(z) - 1)  and  X(z) - 1 = J'(z) z^2 Psi(z)^{-1},
// both Lambda-normalized, through bi-order (q_order, z_order).
Report generating_function_check(const FundamentalMatrix& f, long q_order, long z_order);

}  // namespace vvmf
