#pragma once

#include <optional>
#include <vector>

#include "vvmf/cyclotomic.hpp"
#include "vvmf/matrix.hpp"
#include "vvmf/report.hpp"

namespace vvmf {

// A modular-group representation given by its generator images: S and a
// diagonal T of finite order, with entries in Q(zeta_N).
struct ModularRep {
  unsigned conductor = 1;
  Matrix<Cyclotomic> s;
  std::vector<Cyclotomic> t_diag;

  size_t dim() const { return t_diag.size(); }
  Matrix<Cyclotomic> t_matrix() const {
    Matrix<Cyclotomic> t(dim(), dim());
    for (size_t i = 0; i < dim(); ++i) t(i, i) = t_diag[i];
    return t;
  }
  Matrix<Cyclotomic> t_power(long e) const;  // T^e (diagonal powers)

  // (S T)^3 = S^2, S^4 = 1; psl2 additionally demands S^2 = 1.
  Report relations_check(bool require_psl2) const;
};

// G_ell = S T^{1/ell} S T^{ell} S T^{1/ell}; verifies G T G^{-1} = T^{ell^2}.
Matrix<Cyclotomic> g_ell(const ModularRep& rep, long ell, Report* report = nullptr);

// Galois rationality criterion: sigma_ell(S) = G_ell S over a full transversal
// of (Z/N)^x; on pass also asserts S real and every G_ell rational. On fail
// reports the witnessing ell and the first differing entry.
Report rationality_test(const ModularRep& rep);

// Necessary congruence condition: diag(T^{ell^2}) is a permutation of diag(T)
// for every ell coprime to N.
Report congruence_heuristic(const ModularRep& rep);

// Positive eigenvector of S with eigenvalue 1 (exact, via kernel of S-1 and
// Fourier-Motzkin for kernels of dimension > 1); optional nonnegativity of a
// distinguished column of S.
Report nonnegativity_test(const ModularRep& rep, std::optional<size_t> distinguished = {});

// Appendix-style reduction of an SL2 representation (S^2 a permutation of
// order <= 2) to a PSL2 one by folding charge-conjugation orbits.
ModularRep reduce_representation(const ModularRep& rep, Report* report = nullptr);

}  // namespace vvmf
