#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vvmf/qseries.hpp"

namespace vvmf {

// Truncated bivariate series over Q with integer exponents in both variables
// (everything here is Lambda-normalized before entering 2D algebra). Each axis
// tracks its own reliability frontier; an "exact" axis means the stored data
// is complete in that direction.
class BiSeries {
 public:
  BiSeries() : qmin_(0), zmin_(0), nq_(0), nz_(0), qexact_(true), zexact_(true) {}

  static BiSeries zero() { return BiSeries(); }

  static BiSeries from_q_series(const SeriesQ& s) { return embed(s, true); }
  static BiSeries from_z_series(const SeriesQ& s) { return embed(s, false); }

  std::optional<long> q_frontier() const {
    if (qexact_) return std::nullopt;
    return qmin_ + long(nq_);
  }
  std::optional<long> z_frontier() const {
    if (zexact_) return std::nullopt;
    return zmin_ + long(nz_);
  }

  Rational coeff(long eq, long ez) const {
    require_pre(known_through(eq, ez), "bivariate coefficient beyond tracked box");
    if (eq < qmin_ || ez < zmin_) return Rational(0);
    size_t iq = size_t(eq - qmin_), iz = size_t(ez - zmin_);
    if (iq >= nq_ || iz >= nz_) return Rational(0);
    return c_[iq * nz_ + iz];
  }

  bool known_through(long eq, long ez) const {
    auto qf = q_frontier();
    auto zf = z_frontier();
    return (!qf || *qf > eq) && (!zf || *zf > ez);
  }

  friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    BiSeries r;
    r.qexact_ = a.qexact_ && b.qexact_;
    r.zexact_ = a.zexact_ && b.zexact_;
    if (a.empty() && b.empty()) {
      r.qmin_ = fold_min_frontier(a.q_frontier(), b.q_frontier()).value_or(0);
      r.zmin_ = fold_min_frontier(a.z_frontier(), b.z_frontier()).value_or(0);
      return r;
    }
    long qlo = std::min(a.low_q(), b.low_q());
    long zlo = std::min(a.low_z(), b.low_z());
    auto qf = fold_min_frontier(a.q_frontier(), b.q_frontier());
    auto zf = fold_min_frontier(a.z_frontier(), b.z_frontier());
    long qhi = qf ? *qf : std::max(a.high_q(), b.high_q());
    long zhi = zf ? *zf : std::max(a.high_z(), b.high_z());
    if (qhi <= qlo || zhi <= zlo) {
      r.qmin_ = qhi;
      r.zmin_ = zhi;
      return r;
    }
    r.alloc(qlo, zlo, size_t(qhi - qlo), size_t(zhi - zlo));
    r.accumulate(a, Rational(1));
    r.accumulate(b, Rational(1));
    return r;
  }

  friend BiSeries operator-(const BiSeries& a, const BiSeries& b) { return a + b.scaled(Rational(-1)); }

  friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    BiSeries r;
    auto qf = fold_min_frontier(shift_frontier(a.q_frontier(), b.qmin_),
                                shift_frontier(b.q_frontier(), a.qmin_));
    auto zf = fold_min_frontier(shift_frontier(a.z_frontier(), b.zmin_),
                                shift_frontier(b.z_frontier(), a.zmin_));
    r.qexact_ = !qf.has_value();
    r.zexact_ = !zf.has_value();
    if (a.empty() || b.empty()) {
      r.qmin_ = qf.value_or(0);
      r.zmin_ = zf.value_or(0);
      return r;
    }
    long qlo = a.qmin_ + b.qmin_, zlo = a.zmin_ + b.zmin_;
    long qhi = qf ? *qf : a.high_q() + b.high_q() - 1;
    long zhi = zf ? *zf : a.high_z() + b.high_z() - 1;
    if (qhi <= qlo || zhi <= zlo) {
      r.qmin_ = qhi;
      r.zmin_ = zhi;
      return r;
    }
    r.alloc(qlo, zlo, size_t(qhi - qlo), size_t(zhi - zlo));
    for (size_t ia = 0; ia < a.nq_; ++ia)
      for (size_t ja = 0; ja < a.nz_; ++ja) {
        const Rational& va = a.c_[ia * a.nz_ + ja];
        if (va == 0) continue;
        for (size_t ib = 0; ib < b.nq_; ++ib) {
          long eq = a.qmin_ + long(ia) + b.qmin_ + long(ib);
          if (eq >= qhi) break;
          for (size_t jb = 0; jb < b.nz_; ++jb) {
            long ez = a.zmin_ + long(ja) + b.zmin_ + long(jb);
            if (ez >= zhi) break;
            const Rational& vb = b.c_[ib * b.nz_ + jb];
            if (vb == 0) continue;
            r.c_[size_t(eq - r.qmin_) * r.nz_ + size_t(ez - r.zmin_)] += va * vb;
          }
        }
      }
    return r;
  }

  BiSeries scaled(const Rational& s) const {
    BiSeries r = *this;
    if (s == 0) {
      r.c_.assign(r.c_.size(), Rational(0));
      return r;
    }
    for (auto& v : r.c_) v *= s;
    return r;
  }

  // Multiply by z^k.
  BiSeries z_shifted(long k) const {
    BiSeries r = *this;
    r.zmin_ += k;
    return r;
  }

  // Clamp the claimed reliability (used after assembling finitely many terms
  // of a genuinely infinite sum).
  BiSeries with_z_frontier(long f) const {
    BiSeries r = *this;
    r.zexact_ = false;
    if (r.empty()) {
      r.zmin_ = std::min(r.zmin_, f);
      return r;
    }
    long keep = f - r.zmin_;
    if (keep < long(r.nz_)) {
      if (keep <= 0) {
        r.c_.clear();
        r.nq_ = r.nz_ = 0;
        r.zmin_ = f;
        return r;
      }
      std::vector<Rational> nc(r.nq_ * size_t(keep), Rational(0));
      for (size_t i = 0; i < r.nq_; ++i)
        for (size_t j = 0; j < size_t(keep); ++j) nc[i * size_t(keep) + j] = r.c_[i * r.nz_ + j];
      r.c_ = std::move(nc);
      r.nz_ = size_t(keep);
    }
    return r;
  }

  friend std::optional<std::pair<long, long>> first_difference(const BiSeries& a, const BiSeries& b,
                                                               long q_hi, long z_hi) {
    BiSeries d = a - b;
    require_pre(d.known_through(q_hi, z_hi), "bivariate comparison beyond tracked box");
    long qlo = d.empty() ? q_hi + 1 : d.qmin_;
    long zlo = d.empty() ? z_hi + 1 : d.zmin_;
    for (long eq = qlo; eq <= q_hi; ++eq)
      for (long ez = zlo; ez <= z_hi; ++ez)
        if (eq - d.qmin_ < long(d.nq_) && ez - d.zmin_ < long(d.nz_) &&
            !(d.c_[size_t(eq - d.qmin_) * d.nz_ + size_t(ez - d.zmin_)] == 0))
          return std::make_pair(eq, ez);
    return std::nullopt;
  }

 private:
  bool empty() const { return c_.empty(); }
  long low_q() const { return qmin_; }
  long low_z() const { return zmin_; }
  long high_q() const { return qmin_ + long(nq_); }
  long high_z() const { return zmin_ + long(nz_); }

  void alloc(long qlo, long zlo, size_t nq, size_t nz) {
    qmin_ = qlo;
    zmin_ = zlo;
    nq_ = nq;
    nz_ = nz;
    c_.assign(nq * nz, Rational(0));
  }

  void accumulate(const BiSeries& s, const Rational& factor) {
    for (size_t i = 0; i < s.nq_; ++i)
      for (size_t j = 0; j < s.nz_; ++j) {
        long eq = s.qmin_ + long(i), ez = s.zmin_ + long(j);
        if (eq < qmin_ || ez < zmin_) continue;
        size_t iq = size_t(eq - qmin_), iz = size_t(ez - zmin_);
        if (iq >= nq_ || iz >= nz_) continue;
        c_[iq * nz_ + iz] += factor * s.c_[i * s.nz_ + j];
      }
  }

  static std::optional<long> fold_min_frontier(std::optional<long> a, std::optional<long> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
  }
  static std::optional<long> shift_frontier(std::optional<long> f, long by) {
    if (!f) return std::nullopt;
    return *f + by;
  }

  static BiSeries embed(const SeriesQ& s, bool as_q) {
    require_pre(s.is_zero() || is_integer(s.base()),
                "bivariate embedding requires integer exponents");
    BiSeries r;
    long base = s.is_zero() ? floor_long(s.base()) : floor_long(s.leading_exponent());
    auto fr = s.frontier();
    size_t n = s.coeff_count();
    if (as_q) {
      r.qexact_ = !fr.has_value();
      r.zexact_ = true;
      if (n == 0) {
        r.qmin_ = fr ? floor_long(*fr) : 0;
        return r;
      }
      r.alloc(base, 0, n, 1);
      for (size_t i = 0; i < n; ++i) r.c_[i] = s.coeff(Rational(base + long(i)));
    } else {
      r.zexact_ = !fr.has_value();
      r.qexact_ = true;
      if (n == 0) {
        r.zmin_ = fr ? floor_long(*fr) : 0;
        return r;
      }
      r.alloc(0, base, 1, n);
      for (size_t i = 0; i < n; ++i) r.c_[i] = s.coeff(Rational(base + long(i)));
    }
    return r;
  }

  long qmin_, zmin_;
  size_t nq_, nz_;
  std::vector<Rational> c_;
  bool qexact_, zexact_;
};

}  // namespace vvmf
