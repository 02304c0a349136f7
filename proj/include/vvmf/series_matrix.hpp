#pragma once

#include <vector>

#include "vvmf/qseries.hpp"

namespace vvmf {

// Small dense matrices whose entries are exact truncated series. Dimensions
// stay tiny (d <= a handful), so determinants and adjugates go through minor
// expansion; precision propagates through the series arithmetic itself.
using SeriesMat = std::vector<std::vector<SeriesQ>>;

inline SeriesMat smat_zero(size_t r, size_t c) {
  return SeriesMat(r, std::vector<SeriesQ>(c));
}

inline SeriesMat smat_identity(size_t n) {
  SeriesMat m = smat_zero(n, n);
  for (size_t i = 0; i < n; ++i) m[i][i] = SeriesQ::constant(Rational(1));
  return m;
}

inline SeriesMat smat_transpose(const SeriesMat& a) {
  SeriesMat m = smat_zero(a.empty() ? 0 : a[0].size(), a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) m[j][i] = a[i][j];
  return m;
}

inline SeriesMat smat_mul(const SeriesMat& a, const SeriesMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  require_pre(!a.empty() && a[0].size() == k, "series matrix product dimension mismatch");
  SeriesMat r = smat_zero(n, m);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) {
      SeriesQ acc;
      for (size_t t = 0; t < k; ++t) acc = acc + a[i][t] * b[t][j];
      r[i][j] = acc;
    }
  return r;
}

inline SeriesQ smat_det(const SeriesMat& a) {
  size_t n = a.size();
  if (n == 0) return SeriesQ::constant(Rational(1));
  if (n == 1) return a[0][0];
  // Expansion along the first row.
  SeriesQ det;
  for (size_t j = 0; j < n; ++j) {
    SeriesMat minor = smat_zero(n - 1, n - 1);
    for (size_t r = 1; r < n; ++r) {
      size_t cc = 0;
      for (size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = a[r][c];
      }
    }
    SeriesQ term = a[0][j] * smat_det(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

// Inverse via adjugate over the series field; entries must make the leading
// determinant coefficient nonzero.
inline SeriesMat smat_inverse(const SeriesMat& a) {
  size_t n = a.size();
  SeriesQ det = smat_det(a);
  require_pre(!det.is_zero(), "series matrix inverse: determinant vanishes to tracked order");
  SeriesQ det_inv = det.inverted();
  SeriesMat inv = smat_zero(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      SeriesMat minor = smat_zero(n - 1, n - 1);
      size_t rr = 0;
      for (size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        size_t cc = 0;
        for (size_t c = 0; c < n; ++c) {
          if (c == i) continue;
          minor[rr][cc++] = a[r][c];
        }
        ++rr;
      }
      SeriesQ cof = smat_det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      inv[i][j] = cof * det_inv;
    }
  return inv;
}

}  // namespace vvmf
