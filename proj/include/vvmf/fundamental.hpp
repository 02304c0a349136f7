#pragma once

#include <tuple>
#include <vector>

#include "vvmf/modular.hpp"
#include "vvmf/repdata.hpp"
#include "vvmf/series_matrix.hpp"

namespace vvmf {

// Xi(q) = q^{Lambda - 1} Psi(q) with Psi a matrix of integer-power series,
// Psi[0] = identity, Psi[1] = X. Storing the integer-power part keeps the
// coefficient recursion free of fractional exponents; entry() reattaches the
// exponent offsets.
struct FundamentalMatrix {
  std::vector<Rational> lambda;
  std::vector<Matrix<Rational>> psi;  // psi[n], 0 <= n <= order()
  // (n, xi, eta) positions where a resonant coefficient was set to zero.
  std::vector<std::tuple<long, size_t, size_t>> resonances;

  size_t dim() const { return lambda.size(); }
  long order() const { return long(psi.size()) - 1; }

  SeriesQ psi_entry(size_t xi, size_t eta) const;
  SeriesQ entry(size_t xi, size_t eta) const;  // q^{lambda_xi - 1} * psi_entry
  SeriesMat to_series() const;
};

// Solves the compatibility recursion for Psi up to q^order. Validates the
// spectral condition, the D-series sanity gate D[0] = Lambda - 1, the
// boundary consistency Psi[1] = X, and the first-order form of the equation.
FundamentalMatrix expand_fundamental(const RepData& rep, long order);

// The D(q) coefficient matrices, D[m] for 0 <= m <= order.
std::vector<Matrix<Rational>> dmatrix_coefficients(const RepData& rep, long order);

// First-order compatibility equation on the columns, verified through
// relative order `through` (defaults to order()-2).
Report compat1_check(const FundamentalMatrix& f, const RepData& rep, long through = -1);

// det Xi = (E4/Delta^{1/3})^{beta1+2beta2} (E6/Delta^{1/2})^{alpha}, compared
// through relative order order()-dim; also checks the leading exponent
// Tr(Lambda-1).
Report det_check(const FundamentalMatrix& f, const Signature& sig);

// nabla Xi = Xi (864 (z-1) A + 576 z B): the hypergeometric form pulled back
// to q, exercising z, A, B independently of the recursion.
Report hypergeometric_check(const FundamentalMatrix& f, const ABPair& ab);

// Liouville: q d/dq log det Xi = Tr D(q).
Report determinant_ode_check(const FundamentalMatrix& f, const RepData& rep);

// Xi_dual = (E14/Delta^{7/6}) (Xi^t)^{-1}; the result satisfies the boundary
// condition for dual(rep) and double application returns the original.
FundamentalMatrix dual_fundamental(const FundamentalMatrix& f);

struct ShiftResult {
  RepData rep;
  FundamentalMatrix fundamental;
  Rational constant;  // the constant C of the unimodular shift matrix
};

// Moves one unit of exponent from index j to index i (Lambda' = Lambda + e_i -
// e_j) through the unimodular polynomial matrix with X_{ij} != 0.
ShiftResult lambda_shift(const FundamentalMatrix& f, const RepData& rep, size_t i, size_t j);

// Shared helper: compare two series through the given exponent and append a
// report entry carrying the first differing exponent on failure.
void check_series_identity(Report& rpt, const std::string& name, const SeriesQ& lhs,
                           const SeriesQ& rhs, const Rational& through);

}  // namespace vvmf
