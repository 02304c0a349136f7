#pragma once

#include <optional>

#include "vvmf/basis.hpp"
#include "vvmf/reptools.hpp"

namespace vvmf {

// Result of tensoring a representation with the eta-multiplier power mu^{-2k}:
// the weight-k form space embeds into the weight-0 module of the result, which
// is usable only when it is a genuine PSL2 representation.
struct InducedRep {
  ModularRep rep;
  bool genuine = false;  // (S'T')^3 = S'^2 = 1 holds
  Rational weight;
};

// Multiplier convention: mu(T) = e^{pi i/12}, mu(S) = e^{-pi i/4}, so
// mu^{-2k}(T) = e^{-pi i k/6} and mu^{-2k}(S) = e^{pi i k/2} (both in
// Q(zeta_24) for half-integer k).
InducedRep induce_rep(const ModularRep& rep, const Rational& weight);

// Fractional exponents in [0,1) read off the diagonal of T.
std::vector<Rational> fractional_exponents(const ModularRep& rep);

// Right-hand side of the trace relation fixing Tr(Lambda), as an exact
// rational (fails if the cyclotomic expression does not collapse to one).
Rational riemann_roch_trace(const ModularRep& rep);

// Exponents satisfying the trace relation: fractional parts from T, integer
// parts distributed greedily (largest fractional parts receive the positive
// shifts first).
std::vector<Rational> choose_exponents(const ModularRep& rep);

struct FormDimensions {
  long dim_forms = 0;  // dim M_k
  long dim_cusp = 0;   // dim S_k
  std::vector<Rational> lambda;  // exponents of the induced representation
  bool genuine = true;           // false => both dimensions are 0 by fiat
};

// dim M_k = max(0, Tr floor(Lambda + k/12)), dim S_k = max(0, -Tr floor(1 -
// k/12 - Lambda)) for the induced representation.
FormDimensions dim_forms(const ModularRep& rep, const Rational& weight);

// Contragredient of a unitary representation: entrywise conjugate (S is then
// transposed as well).
ModularRep contragredient(const ModularRep& rep);

// Tr floor(1 - Lambda) = dim M_2(contragredient) and
// Tr floor(Lambda) = dim M_0 - dim S_2(contragredient).
Report trace_integer_part_checks(const ModularRep& rep);

// Fundamental data (Lambda, X) of a one-dimensional representation with the
// given exponent (the exponent determines everything in dimension 1).
RepData one_dimensional_repdata(const Rational& lambda);

struct FormBasis {
  Rational weight;
  std::vector<Rational> lambda;          // induced exponents used
  long dim_by_trace = 0;                 // max(0, Tr floor(Lambda + k/12))
  long cardinality = 0;                  // sum_xi max(0, floor(lambda_xi + k/12))
  std::vector<std::vector<SeriesQ>> vectors;  // each: d component series, actual offsets
};

// Basis {eta^{2k} X^{(xi;n)} : 1 <= n <= floor(lambda_xi + k/12)} for the
// induced representation whose fundamental data is supplied; every vector is
// verified holomorphic at infinity. When the trace-formula dimension and the
// per-component cardinality disagree, both are reported.
FormBasis form_basis(const RepData& induced, const Rational& weight, long order);

}  // namespace vvmf
