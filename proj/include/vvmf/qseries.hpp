#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "vvmf/error.hpp"
#include "vvmf/rational.hpp"

namespace vvmf {

// Truncated exact power series q^{base} * sum_i c[i] q^i with a rational base
// exponent and exact coefficients. A series carries its own reliability
// information: coefficients are exact for every exponent below frontier(), and
// nothing is claimed beyond it. Polynomial-like values built from finitely
// many exact terms are flagged `exact` (frontier = infinity), so multiplying a
// truncated series by a constant does not lose precision.
//
// Invariants: a nonzero series has c[0] != 0; the canonical zero series has an
// empty coefficient vector and base_ holding its frontier. Sums require both
// operands to live in the same fractional-exponent sector (offsets congruent
// mod 1); the zero series belongs to every sector.
template <typename T>
class QSeries {
 public:
  QSeries() : base_(0), exact_(true) {}  // exact zero

  static QSeries zero() { return QSeries(); }
  static QSeries zero_through(const Rational& frontier) {
    QSeries s;
    s.base_ = frontier;
    s.exact_ = false;
    return s;
  }
  static QSeries constant(const T& v) { return monomial(v, Rational(0)); }
  static QSeries monomial(const T& v, const Rational& expo) {
    QSeries s;
    if (!(v == T(0))) {
      s.base_ = expo;
      s.c_.push_back(v);
    }
    return s;
  }
  static QSeries from_coeffs(const Rational& base, std::vector<T> coeffs, bool exact = false) {
    QSeries s;
    s.base_ = base;
    s.c_ = std::move(coeffs);
    s.exact_ = exact;
    s.normalize();
    return s;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_exact() const { return exact_; }
  size_t coeff_count() const { return c_.size(); }
  // Exponent of the first stored coefficient (the frontier for a zero series).
  const Rational& base() const { return base_; }
  const Rational& leading_exponent() const {
    require_pre(!is_zero(), "leading exponent of the zero series");
    return base_;
  }
  const T& leading_coeff() const {
    require_pre(!is_zero(), "leading coefficient of the zero series");
    return c_[0];
  }
  std::optional<Rational> frontier() const {
    if (exact_) return std::nullopt;
    return base_ + Rational(long(c_.size()));
  }
  bool known_through(const Rational& expo) const {
    auto f = frontier();
    return !f || *f > expo;
  }

  // Coefficient of q^expo. Exact zero off the stored grid; refuses to answer
  // beyond the frontier.
  T coeff(const Rational& expo) const {
    require_pre(known_through(expo), "coefficient beyond tracked truncation order (q^" +
                                         to_string(expo) + ")");
    if (is_zero()) return T(0);
    Rational sh = expo - base_;
    if (!is_integer(sh) || sh < 0) return T(0);
    long i = floor_long(sh);
    return size_t(i) < c_.size() ? c_[size_t(i)] : T(0);
  }

  QSeries operator-() const {
    QSeries r = *this;
    for (auto& v : r.c_) v = T(0) - v;
    return r;
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    if (a.is_zero() && b.is_zero()) {
      if (a.exact_ && b.exact_) return zero();
      Rational f = a.exact_ ? *b.frontier()
                            : (b.exact_ ? *a.frontier() : std::min(*a.frontier(), *b.frontier()));
      return zero_through(f);
    }
    if (a.is_zero()) return b.truncated_to(a.frontier());
    if (b.is_zero()) return a.truncated_to(b.frontier());
    require_pre(frac_part(a.base_) == frac_part(b.base_),
                "sum of series from different fractional-power sectors (offsets " +
                    to_string(a.base_) + " and " + to_string(b.base_) + ")");
    Rational base = std::min(a.base_, b.base_);
    std::optional<Rational> fr;
    if (!a.exact_ || !b.exact_) {
      if (a.exact_)
        fr = b.frontier();
      else if (b.exact_)
        fr = a.frontier();
      else
        fr = std::min(*a.frontier(), *b.frontier());
    }
    Rational top = fr ? *fr : std::max(*a.pseudo_frontier(), *b.pseudo_frontier());
    long len = floor_long(top - base);
    if (len <= 0) return zero_through(top);
    std::vector<T> c(size_t(len), T(0));
    auto accumulate = [&](const QSeries& s, bool negate) {
      long off = floor_long(s.base_ - base);
      for (size_t i = 0; i < s.c_.size(); ++i) {
        size_t k = size_t(off) + i;
        if (k >= c.size()) break;
        if (negate)
          c[k] -= s.c_[i];
        else
          c[k] += s.c_[i];
      }
    };
    accumulate(a, false);
    accumulate(b, false);
    return from_coeffs(base, std::move(c), !fr.has_value());
  }

  friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    if ((a.is_zero() && a.exact_) || (b.is_zero() && b.exact_)) return zero();
    // Product coefficients are reliable below min over inexact operands of
    // (frontier of one) + (leading exponent of the other).
    std::optional<Rational> fr;
    auto fold = [&](const std::optional<Rational>& f, const Rational& lead) {
      if (!f) return;
      Rational v = *f + lead;
      fr = fr ? std::min(*fr, v) : v;
    };
    fold(a.frontier(), b.base_);
    fold(b.frontier(), a.base_);
    if (a.is_zero() || b.is_zero()) return zero_through(*fr);
    Rational base = a.base_ + b.base_;
    size_t len;
    if (fr) {
      long n = floor_long(*fr - base);
      if (n <= 0) return zero_through(*fr);
      len = size_t(n);
    } else {
      len = a.c_.size() + b.c_.size() - 1;
    }
    std::vector<T> c(len, T(0));
    for (size_t i = 0; i < a.c_.size() && i < len; ++i) {
      if (a.c_[i] == T(0)) continue;
      size_t jmax = std::min(b.c_.size(), len - i);
      for (size_t j = 0; j < jmax; ++j) {
        if (b.c_[j] == T(0)) continue;
        c[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return from_coeffs(base, std::move(c), !fr.has_value());
  }

  QSeries scaled(const T& s) const {
    if (s == T(0)) return exact_ ? zero() : zero_through(*frontier());
    QSeries r = *this;
    for (auto& v : r.c_) v = s * v;
    r.normalize();
    return r;
  }

  QSeries shifted(const Rational& e) const {  // multiply by q^e
    QSeries r = *this;
    r.base_ += e;
    return r;
  }

  // d/dq: s * q^{s-1} termwise.
  QSeries derivative() const {
    QSeries r;
    r.exact_ = exact_;
    r.base_ = base_ - 1;
    r.c_.reserve(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_.push_back(c_[i] * T(base_ + Rational(long(i))));
    r.normalize();
    return r;
  }

  // q d/dq: multiplies the coefficient of q^s by s (s includes the offset).
  QSeries euler_derivative() const {
    QSeries r;
    r.exact_ = exact_;
    r.base_ = base_;
    r.c_.reserve(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_.push_back(c_[i] * T(base_ + Rational(long(i))));
    r.normalize();
    return r;
  }

  // Multiplicative inverse carrying as many coefficients as the input tracks.
  QSeries inverted() const {
    require_pre(!is_zero(), "division by the zero series");
    if (exact_)
      require_pre(c_.size() == 1, "inverse of an exact polynomial needs an explicit order");
    return inverted_to(c_.size());
  }

  QSeries inverted_to(size_t nterms) const {
    require_pre(!is_zero(), "division by the zero series");
    require_pre(exact_ || nterms <= c_.size(), "inverse order exceeds tracked coefficients");
    std::vector<T> w(nterms, T(0));
    T inv0 = T(1) / c_[0];
    if (nterms > 0) w[0] = inv0;
    for (size_t n = 1; n < nterms; ++n) {
      T acc(0);
      for (size_t j = 1; j <= n && j < c_.size(); ++j) acc += c_[j] * w[n - j];
      w[n] = T(0) - acc * inv0;
    }
    bool out_exact = exact_ && c_.size() == 1;
    return from_coeffs(-base_, std::move(w), out_exact);
  }

  friend QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverted(); }

  // f^r for rational r. The base exponent becomes base*r. Non-integer r
  // requires the leading coefficient to possess an exact r-th root (leading
  // coefficient 1 always works).
  QSeries pow(const Rational& r) const {
    if (is_integer(r)) return pow_integer(floor_long(r));
    require_pre(!exact_ || c_.size() == 1, "fractional power of an exact polynomial needs an explicit order");
    return pow_to(r, c_.size());
  }

  QSeries pow_to(const Rational& r, size_t nterms) const {
    if (is_integer(r)) return pow_integer(floor_long(r));
    require_pre(!is_zero(), "power of the zero series with nonpositive/fractional exponent");
    require_pre(exact_ || nterms <= c_.size(), "power order exceeds tracked coefficients");
    T lead_root = root_of_leading(r);
    if (exact_ && c_.size() == 1) return monomial(lead_root, base_ * r);
    // Normalize u = f / (c0 q^base); compute u^r by the logarithmic-derivative
    // recursion, exact over any field containing the coefficients.
    std::vector<T> w(nterms, T(0));
    T inv0 = T(1) / c_[0];
    std::vector<T> u(std::min(nterms, exact_ ? nterms : c_.size()), T(0));
    for (size_t i = 0; i < u.size() && i < c_.size(); ++i) u[i] = c_[i] * inv0;
    if (nterms > 0) w[0] = T(1);
    for (size_t n = 1; n < nterms; ++n) {
      T acc(0);
      for (size_t j = 1; j <= n && j < u.size(); ++j)
        acc += u[j] * w[n - j] * T(r * Rational(long(j)) - Rational(long(n - j)));
      w[n] = acc * (T(1) / T(Rational(long(n))));
    }
    for (auto& v : w) v = lead_root * v;
    bool out_exact = false;  // fractional powers are genuinely infinite series
    return from_coeffs(base_ * r, std::move(w), out_exact);
  }

  // All coefficients for exponents <= expo vanish (requires them tracked).
  bool is_zero_through(const Rational& expo) const {
    require_pre(known_through(expo), "zero test beyond tracked truncation order");
    if (is_zero()) return true;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (base_ + Rational(long(i)) > expo) break;
      if (!(c_[i] == T(0))) return false;
    }
    return true;
  }

  // First exponent <= expo where the two series differ, if any.
  friend std::optional<Rational> first_difference(const QSeries& a, const QSeries& b,
                                                  const Rational& expo) {
    QSeries d = a - b;
    require_pre(d.known_through(expo), "comparison beyond tracked truncation order");
    if (d.is_zero()) return std::nullopt;
    for (size_t i = 0; i < d.c_.size(); ++i) {
      Rational e = d.base_ + Rational(long(i));
      if (e > expo) break;
      if (!(d.c_[i] == T(0))) return e;
    }
    return std::nullopt;
  }

  friend bool agree_through(const QSeries& a, const QSeries& b, const Rational& expo) {
    return !first_difference(a, b, expo).has_value();
  }

  // Forgets everything at or above new_frontier (no-op for an unbounded
  // request); the result is always inexact.
  QSeries truncated_to(const std::optional<Rational>& new_frontier) const {
    if (!new_frontier) return *this;
    auto f = frontier();
    Rational nf = f ? std::min(*f, *new_frontier) : *new_frontier;
    QSeries r;
    r.exact_ = false;
    if (is_zero()) {
      r.base_ = nf;
      return r;
    }
    if (nf <= base_) {
      r.base_ = nf;
      return r;
    }
    // keep stored exponents base_ + i < nf, i.e. i < ceil(nf - base_)
    Rational span = nf - base_;
    long keep = floor_long(span) + (frac_part(span) > 0 ? 1 : 0);
    r.base_ = base_;
    r.c_.assign(c_.begin(), c_.begin() + std::min(size_t(keep), c_.size()));
    if (exact_ && size_t(keep) > c_.size()) r.c_.resize(size_t(keep), T(0));
    r.normalize();
    if (r.is_zero()) r.base_ = nf;
    return r;
  }

  std::string str(size_t max_terms = 8) const {
    if (is_zero()) return "0 + O(q^" + to_string(base_) + ")";
    std::ostringstream os;
    size_t shown = 0;
    for (size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
      if (c_[i] == T(0)) continue;
      if (shown) os << " + ";
      os << "(" << scalar_str(c_[i]) << ")q^" << to_string(base_ + Rational(long(i)));
      ++shown;
    }
    if (exact_)
      os << " (exact)";
    else
      os << " + O(q^" << to_string(*frontier()) << ")";
    return os.str();
  }

 private:
  void normalize() {
    while (!c_.empty() && c_[0] == T(0)) {
      c_.erase(c_.begin());
      base_ += 1;
    }
    if (c_.empty() && exact_) base_ = Rational(0);
  }

  std::optional<Rational> pseudo_frontier() const {  // exact: end of stored data
    return base_ + Rational(long(c_.size()));
  }

  QSeries pow_integer(long e) const {
    if (e == 0) return constant(T(1));
    const QSeries b = e > 0 ? *this : inverted();
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    QSeries acc = b;
    --n;
    QSeries sq = b;
    while (n) {
      if (n & 1) acc = acc * sq;
      n >>= 1;
      if (n) sq = sq * sq;
    }
    return acc;
  }

  static std::string scalar_str(const T& v) {
    if constexpr (std::is_same_v<T, Rational>)
      return to_string(v);
    else
      return v.str();
  }

  T root_of_leading(const Rational& r) const {
    if (c_[0] == T(1)) return T(1);
    if constexpr (std::is_same_v<T, Rational>) {
      // c0^{p/q}: exact q-th root of c0^p, if it exists.
      long p = to_long(Integer(r.get_num()));
      unsigned long q = static_cast<unsigned long>(to_long(Integer(r.get_den())));
      Rational powed = pow_int(c_[0], p);
      auto root = exact_root(powed, q);
      require_pre(root.has_value(), "leading coefficient " + to_string(c_[0]) +
                                        " has no exact " + to_string(r) + " power");
      return *root;
    } else {
      fail_pre("fractional power requires leading coefficient 1 over this scalar type");
    }
  }

  Rational base_;
  std::vector<T> c_;
  bool exact_;
};

using SeriesQ = QSeries<Rational>;

}  // namespace vvmf
