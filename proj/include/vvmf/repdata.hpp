#pragma once

#include <optional>
#include <vector>

#include "vvmf/cyclotomic.hpp"
#include "vvmf/matrix.hpp"
#include "vvmf/report.hpp"

namespace vvmf {

// Eigenvalue multiplicities of the residue matrices at the two elliptic
// points, together with the dimension: the discrete invariant of the data.
struct Signature {
  size_t d = 0;
  long alpha = 0;
  long beta1 = 0;
  long beta2 = 0;

  bool operator==(const Signature&) const = default;
};

// The fundamental data: diagonal exponent matrix (stored as its diagonal) and
// the characteristic matrix. An optional S matrix rides along for the trace
// audits that need representation matrices.
struct RepData {
  std::vector<Rational> lambda;
  Matrix<Rational> x;
  std::optional<Matrix<Cyclotomic>> s;

  size_t dim() const { return lambda.size(); }
  Rational trace_lambda() const {
    Rational t(0);
    for (const auto& v : lambda) t += v;
    return t;
  }
  Matrix<Rational> lambda_matrix() const { return Matrix<Rational>::diagonal(lambda); }

  void validate_shape() const;
};

// Residue matrices of the hypergeometric form: A at z=0, B at z=1.
struct ABPair {
  Matrix<Rational> a;
  Matrix<Rational> b;
};

// X + [Lambda, X], the combination entering both residue formulas.
Matrix<Rational> x_plus_bracket(const std::vector<Rational>& lambda, const Matrix<Rational>& x);

ABPair derive_ab(const RepData& rep);

// Inverts derive_ab: recovers X from A (refuses when two exponents differ by
// exactly one, reporting the offending index pair).
Matrix<Rational> recover_x_from_a(const std::vector<Rational>& lambda, const Matrix<Rational>& a);

// Matrix polynomial identities A(A-1) = B(B-1)(B-2) = 0; on success the
// multiplicities are read off the traces.
std::optional<Signature> spectral_signature(const ABPair& ab, Report* report = nullptr);

// The algebraic system on (Lambda, A) obtained by eliminating B.
bool monodromy_equation_check(const std::vector<Rational>& lambda, const Matrix<Rational>& a,
                              Report* report = nullptr);

// T = exp(2 pi i Lambda) as exact roots of unity.
Matrix<Cyclotomic> t_matrix(const std::vector<Rational>& lambda);

// Trace identities: TrX, TrLambda, TrX mod 248 from the signature alone; and
// with S supplied also TrS, TrU and the Riemann-Roch trace relation (evaluated
// per indecomposable block when a block structure is given).
Report trace_audit(const RepData& rep, const Signature& sig,
                   const std::vector<std::vector<size_t>>& blocks = {});

RepData dual(const RepData& rep);

RepData direct_sum(const RepData& r1, const RepData& r2);

}  // namespace vvmf
