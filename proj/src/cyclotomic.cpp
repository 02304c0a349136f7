#include "vvmf/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace vvmf {

unsigned gcd_u(unsigned a, unsigned b) { return std::gcd(a, b); }
unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

long mod_inverse(long a, long n) {
  long t = 0, newt = 1, r = n, newr = ((a % n) + n) % n;
  while (newr != 0) {
    long q = r / newr;
    std::swap(t, newt);
    newt -= q * t;
    std::swap(r, newr);
    newr -= q * r;
  }
  if (r != 1) fail_pre("mod_inverse: " + std::to_string(a) + " not invertible mod " + std::to_string(n));
  return ((t % n) + n) % n;
}

namespace {

// Dense polynomials over Q, coefficient of x^i at index i.
using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

// Quotient of exact division (remainder must vanish when exact=true).
Poly poly_divmod(Poly num, const Poly& den, Poly* rem_out) {
  if (den.empty()) fail_internal("polynomial division by zero");
  Poly q(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, Rational(0));
  const Rational& lead = den.back();
  while (num.size() >= den.size()) {
    Rational f = num.back() / lead;
    size_t shift = num.size() - den.size();
    q[shift] = f;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
    poly_trim(num);
    if (num.size() >= den.size() && num.back() == 0) poly_trim(num);
  }
  if (rem_out) *rem_out = std::move(num);
  return q;
}

// Per-conductor reduction data, computed once and shared.
struct CycloTable {
  unsigned n = 1;
  unsigned phi = 1;
  Poly cyclo;                           // Phi_n, monic of degree phi
  std::vector<std::vector<Rational>> powrow;  // x^k mod Phi_n for k in [phi, n + 2*phi)
};

Poly cyclotomic_poly(unsigned n, const std::map<unsigned, Poly>& lower) {
  // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
  Poly num(n + 1, Rational(0));
  num[0] = Rational(-1);
  num[n] = Rational(1);
  Poly den{Rational(1)};
  for (auto& [d, pd] : lower)
    if (d < n && n % d == 0) den = poly_mul(den, pd);
  Poly rem;
  Poly q = poly_divmod(num, den, &rem);
  if (!rem.empty()) fail_internal("cyclotomic polynomial division left a remainder");
  return q;
}

const CycloTable& table_for(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, CycloTable> cache;
  static std::map<unsigned, Poly> polys;  // Phi_d for every conductor seen so far
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Make sure Phi_d is known for all divisors d of n.
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0 || polys.count(d)) continue;
    polys[d] = cyclotomic_poly(d, polys);
  }

  CycloTable t;
  t.n = n;
  t.phi = euler_phi(n);
  t.cyclo = polys[n];
  if (t.cyclo.size() != t.phi + 1) fail_internal("cyclotomic polynomial degree mismatch");

  // Reduction rows: x^k = x^{k-1} * x, folding the top term with
  // x^phi = -(Phi_n - x^phi).
  size_t maxpow = n + 2 * t.phi;
  std::vector<Rational> cur(t.phi, Rational(0));
  if (t.phi >= 1) cur[t.phi - 1] = Rational(1);  // x^{phi-1}
  for (size_t k = t.phi; k < maxpow; ++k) {
    std::vector<Rational> next(t.phi, Rational(0));
    Rational top = cur[t.phi - 1];
    for (size_t i = t.phi - 1; i > 0; --i) next[i] = cur[i - 1];
    next[0] = Rational(0);
    if (top != 0)
      for (size_t i = 0; i < t.phi; ++i) next[i] -= top * t.cyclo[i];
    t.powrow.push_back(next);
    cur = std::move(next);
  }
  return cache.emplace(n, std::move(t)).first->second;
}

// Reduces an arbitrary-degree coefficient vector into the canonical basis.
std::vector<Rational> reduce_mod_cyclo(unsigned n, const std::vector<Rational>& raw) {
  const CycloTable& t = table_for(n);
  std::vector<Rational> out(t.phi, Rational(0));
  for (size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] == 0) continue;
    if (k < t.phi) {
      out[k] += raw[k];
    } else {
      size_t idx = k - t.phi;
      if (idx >= t.powrow.size()) fail_internal("cyclotomic reduction row out of range");
      const auto& row = t.powrow[idx];
      for (size_t i = 0; i < t.phi; ++i)
        if (row[i] != 0) out[i] += raw[k] * row[i];
    }
  }
  return out;
}

}  // namespace

void Cyclotomic::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Cyclotomic::Cyclotomic(const Rational& v) : n_(1), c_() {
  if (v != 0) c_.push_back(v);
}

Cyclotomic::Cyclotomic(unsigned conductor, const std::vector<std::pair<long, Rational>>& terms)
    : n_(conductor), c_() {
  require_pre(conductor >= 1, "conductor must be positive");
  std::vector<Rational> raw(conductor, Rational(0));
  for (auto& [e, coeff] : terms) {
    long r = ((e % long(conductor)) + long(conductor)) % long(conductor);
    raw[size_t(r)] += coeff;
  }
  c_ = reduce_mod_cyclo(conductor, raw);
  trim();
}

Cyclotomic Cyclotomic::zeta(unsigned conductor, long expo) {
  return Cyclotomic(conductor, {{expo, Rational(1)}});
}

bool Cyclotomic::is_rational() const {
  return c_.size() <= 1;
}

Rational Cyclotomic::to_rational() const {
  require_pre(is_rational(), "cyclotomic value is not rational: " + str());
  return c_.empty() ? Rational(0) : c_[0];
}

Rational Cyclotomic::coeff(unsigned e) const {
  return e < c_.size() ? c_[e] : Rational(0);
}

std::vector<std::pair<unsigned, Rational>> Cyclotomic::terms() const {
  std::vector<std::pair<unsigned, Rational>> out;
  for (unsigned e = 0; e < c_.size(); ++e)
    if (c_[e] != 0) out.emplace_back(e, c_[e]);
  return out;
}

Cyclotomic Cyclotomic::raised_to_conductor(unsigned m) const {
  require_pre(m % n_ == 0, "conductor raise requires divisibility");
  if (m == n_) return *this;
  unsigned stride = m / n_;
  std::vector<Rational> raw(m, Rational(0));
  for (unsigned e = 0; e < c_.size(); ++e) raw[size_t(e) * stride] = c_[e];
  return from_canonical(m, reduce_mod_cyclo(m, raw));
}

Cyclotomic Cyclotomic::reduced_conductor() const {
  if (is_rational()) return Cyclotomic(to_rational());
  for (unsigned m = 1; m < n_; ++m) {
    if (n_ % m != 0) continue;
    // Galois test: fixed by every sigma_l with l = 1 mod m iff in Q(zeta_m).
    bool fixed = true;
    for (unsigned l = 1; l < n_ && fixed; l += m)
      if (gcd_u(l, n_) == 1 && galois(l) != *this) fixed = false;
    if (!fixed) continue;
    // Solve for coordinates in the zeta_m power basis.
    unsigned phim = euler_phi(m);
    unsigned stride = n_ / m;
    const CycloTable& t = table_for(n_);
    std::vector<std::vector<Rational>> basis(phim);
    for (unsigned e = 0; e < phim; ++e) {
      std::vector<Rational> raw(n_, Rational(0));
      raw[size_t(e) * stride % n_] = Rational(1);
      basis[e] = reduce_mod_cyclo(n_, raw);
    }
    // Gaussian elimination on the phi(n) x phim system basis * x = c_.
    std::vector<std::vector<Rational>> aug(t.phi, std::vector<Rational>(phim + 1, Rational(0)));
    for (unsigned row = 0; row < t.phi; ++row) {
      for (unsigned e = 0; e < phim; ++e) aug[row][e] = basis[e][row];
      aug[row][phim] = row < c_.size() ? c_[row] : Rational(0);
    }
    std::vector<long> pivot_of_col(phim, -1);
    unsigned r = 0;
    for (unsigned col = 0; col < phim && r < t.phi; ++col) {
      unsigned p = r;
      while (p < t.phi && aug[p][col] == 0) ++p;
      if (p == t.phi) continue;
      std::swap(aug[p], aug[r]);
      Rational inv = Rational(1) / aug[r][col];
      for (auto& v : aug[r]) v *= inv;
      for (unsigned i = 0; i < t.phi; ++i) {
        if (i == r || aug[i][col] == 0) continue;
        Rational f = aug[i][col];
        for (unsigned j = 0; j <= phim; ++j) aug[i][j] -= f * aug[r][j];
      }
      pivot_of_col[col] = r;
      ++r;
    }
    bool consistent = true;
    for (unsigned i = r; i < t.phi && consistent; ++i)
      if (aug[i][phim] != 0) consistent = false;
    if (!consistent) continue;
    std::vector<std::pair<long, Rational>> terms;
    for (unsigned col = 0; col < phim; ++col)
      if (pivot_of_col[col] >= 0 && aug[size_t(pivot_of_col[col])][phim] != 0)
        terms.emplace_back(long(col), aug[size_t(pivot_of_col[col])][phim]);
    Cyclotomic candidate(m, terms);
    if (candidate.raised_to_conductor(n_) == *this) return candidate;
  }
  return *this;
}

Cyclotomic Cyclotomic::galois(long l) const {
  require_pre(gcd_u(unsigned(((l % long(n_)) + long(n_)) % long(n_)), n_) == 1,
              "galois automorphism index must be coprime to the conductor");
  long lr = ((l % long(n_)) + long(n_)) % long(n_);
  std::vector<Rational> raw(n_, Rational(0));
  for (unsigned e = 0; e < c_.size(); ++e) {
    if (c_[e] == 0) continue;
    raw[size_t(e) * size_t(lr) % n_] += c_[e];
  }
  return from_canonical(n_, reduce_mod_cyclo(n_, raw));
}

Cyclotomic Cyclotomic::conj() const {
  if (n_ <= 2) return *this;
  return galois(long(n_) - 1);
}

Cyclotomic Cyclotomic::real_part() const {
  Cyclotomic s = *this + conj();
  s *= Cyclotomic(Rational(1, 2));
  return s;
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic acc(1), base = *this;
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

Cyclotomic Cyclotomic::inverse() const {
  require_pre(!is_zero(), "division by zero cyclotomic");
  if (is_rational()) return Cyclotomic(Rational(1) / c_[0]);
  // Extended Euclid in Q[x]: u * f + v * Phi_n = 1, inverse = u mod Phi_n.
  const CycloTable& t = table_for(n_);
  Poly r0 = t.cyclo, r1(c_.begin(), c_.end());
  poly_trim(r1);
  Poly s0{}, s1{Rational(1)};  // coefficients of f
  while (!r1.empty()) {
    Poly rem;
    Poly q = poly_divmod(r0, r1, &rem);
    Poly s2 = s0;
    Poly qs = poly_mul(q, s1);
    if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    poly_trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) fail_internal("cyclotomic inverse: gcd not constant");
  Rational inv_g = Rational(1) / r0[0];
  std::vector<Rational> raw(s0.size(), Rational(0));
  for (size_t i = 0; i < s0.size(); ++i) raw[i] = s0[i] * inv_g;
  return from_canonical(n_, reduce_mod_cyclo(n_, raw));
}

std::optional<unsigned> Cyclotomic::as_root_of_unity() const {
  for (unsigned e = 0; e < n_; ++e)
    if (*this == zeta(n_, long(e))) return e;
  return std::nullopt;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (n_ != o.n_) {
    unsigned m = lcm_u(n_, o.n_);
    *this = raised_to_conductor(m);
    return *this += o.raised_to_conductor(m);
  }
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (n_ != o.n_) {
    unsigned m = lcm_u(n_, o.n_);
    *this = raised_to_conductor(m);
    return *this *= o.raised_to_conductor(m);
  }
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> raw(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j] != 0) raw[i + j] += c_[i] * o.c_[j];
  }
  c_ = reduce_mod_cyclo(n_, raw);
  trim();
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  unsigned m = lcm_u(a.n_, b.n_);
  return a.raised_to_conductor(m).c_ == b.raised_to_conductor(m).c_;
}

std::string Cyclotomic::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (unsigned e = 0; e < c_.size(); ++e) {
    if (c_[e] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << to_string(c_[e]);
    if (e > 0) os << "*z" << n_ << "^" << e;
  }
  return os.str();
}

std::pair<Rational, Rational> pi_enclosure(unsigned terms) {
  // pi = 16*atan(1/5) - 4*atan(1/239); alternating series give exact bounds.
  auto atan_bounds = [&](const Rational& x) {
    Rational lo(0), hi(0), term = x;
    Rational x2 = x * x;
    Rational sum(0);
    for (unsigned k = 0; k < terms; ++k) {
      Rational t = term / Rational(2 * k + 1);
      if (k % 2 == 0)
        sum += t;
      else
        sum -= t;
      term *= x2;
    }
    Rational tail = term / Rational(2 * terms + 1);
    if (terms % 2 == 0) {  // next term would be added
      lo = sum;
      hi = sum + tail;
    } else {
      lo = sum - tail;
      hi = sum;
    }
    return std::make_pair(lo, hi);
  };
  auto [a_lo, a_hi] = atan_bounds(Rational(1, 5));
  auto [b_lo, b_hi] = atan_bounds(Rational(1, 239));
  return {Rational(16) * a_lo - Rational(4) * b_hi, Rational(16) * a_hi - Rational(4) * b_lo};
}

namespace {

// Enclosure of cos on [lo, hi] (0 <= lo <= hi < 7): Taylor partial sum at the
// midpoint with alternating-tail remainder, widened by the interval radius
// (|cos'| <= 1).
std::pair<Rational, Rational> cos_enclosure(const Rational& lo, const Rational& hi, unsigned K) {
  Rational m = (lo + hi) / 2;
  Rational rad = (hi - lo) / 2;
  Rational m2 = m * m;
  Rational term(1), sum(0);
  for (unsigned k = 0; k <= K; ++k) {
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
    term *= m2 / Rational((2 * k + 1) * (2 * k + 2));
  }
  // Tail is bounded by the first omitted term once terms decrease; K is kept
  // large enough for m < 7 by the caller.
  Rational tail = term;
  return {sum - tail - rad, sum + tail + rad};
}

}  // namespace

int Cyclotomic::sign_real() const {
  require_pre(is_real(), "sign requested for a non-real cyclotomic: " + str());
  if (is_zero()) return 0;
  if (is_rational()) return sgn(c_[0]);
  // x = sum c_e zeta^e is real, hence equals sum c_e cos(2 pi e / n).
  for (unsigned pi_terms = 12, K = 16; pi_terms <= 1u << 14; pi_terms *= 2, K += 16) {
    auto [pi_lo, pi_hi] = pi_enclosure(pi_terms);
    Rational lo(0), hi(0);
    for (unsigned e = 0; e < c_.size(); ++e) {
      if (c_[e] == 0) continue;
      if (e == 0) {
        lo += c_[e];
        hi += c_[e];
        continue;
      }
      Rational th_lo = Rational(2 * long(e)) * pi_lo / Rational(long(n_));
      Rational th_hi = Rational(2 * long(e)) * pi_hi / Rational(long(n_));
      auto [c_lo, c_hi] = cos_enclosure(th_lo, th_hi, K);
      if (c_[e] > 0) {
        lo += c_[e] * c_lo;
        hi += c_[e] * c_hi;
      } else {
        lo += c_[e] * c_hi;
        hi += c_[e] * c_lo;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
  fail_internal("sign refinement did not separate from zero for " + str());
}

}  // namespace vvmf
