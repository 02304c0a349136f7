#pragma once

#include "vvmf/qseries.hpp"

namespace vvmf {

// Classical q-expansions, exact to the requested order: every function returns
// a series whose coefficients are reliable for all exponents <= order.

// eta = q^{1/24} prod (1-q^n), expanded via the pentagonal number theorem.
SeriesQ dedekind_eta(long order);

// Discriminant form Delta = eta^24 = q - 24q^2 + ...
SeriesQ discriminant(long order);

// Normalized Eisenstein series, weights 4, 6, 8, 10, 14 (the higher ones as
// the unique normalized forms E4^2, E4*E6, E4^2*E6).
SeriesQ eisenstein(int weight, long order);

// Hauptmodul J = E4^3/Delta - 744 = q^{-1} + 0 + 196884 q + ...
SeriesQ hauptmodul_j(long order);

// Termwise q-derivative of J: -q^{-2} + sum n c(n) q^{n-1}.
SeriesQ jprime(long order);

// z(tau) = (984 - J)/1728, the Hauptmodul rescaled to send the elliptic
// points to 0 and 1.
SeriesQ zmap(long order);

// E(tau) = E10/Delta = q^{-1} - 240 - 141444q - ...
SeriesQ eseries(long order);

// nabla f = E * (q df/dq). The result keeps one order less than f (the q^{-1}
// of E); the overload with an explicit order expands E as needed.
SeriesQ nabla(const SeriesQ& f);
SeriesQ nabla(const SeriesQ& f, long order);

// Divisor power sum sigma_k(n).
Integer sigma_divisors(unsigned k, unsigned long n);

}  // namespace vvmf
