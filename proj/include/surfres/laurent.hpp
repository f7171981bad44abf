#pragma once

#include <algorithm>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "surfres/bipoly.hpp"

namespace surfres {

// Certification windows.  A window value h means "all coefficients with
// exponent <= h are known correct"; kInfCert marks an exact object whose
// every coefficient is known.  Window arithmetic saturates at kInfCert.
constexpr long kInfCert = std::numeric_limits<long>::max() / 4;

inline long cert_add(long a, long b) {
  if (a >= kInfCert || b >= kInfCert) return kInfCert;
  return a + b;
}

// Univariate Laurent series in u with a certification window.  Stored
// coefficients cover exponents [lo, lo+size); exponents between the stored
// range and hi_cert are exactly zero; beyond hi_cert nothing is known.
// An empty coefficient vector with a finite window means "zero as far as
// certified" (the series may or may not vanish); an empty vector with an
// infinite window is the exact zero.  When nonempty, the first and last
// stored coefficients are nonzero, so lo is the exact valuation.
class UniLaurent {
public:
  explicit UniLaurent(const Field* f) : f_(f) {}  // exact zero
  UniLaurent(const Field* f, long lo, std::vector<FieldElement> c, long hi_cert);

  static UniLaurent zero_certified(const Field* f, long hi_cert);
  static UniLaurent from_poly(const Poly& p);
  static UniLaurent monomial(FieldElement c, long e);
  // Laurent expansion of r at u = 0, certified through hi_cert.
  static UniLaurent expand(const UniRat& r, long hi_cert);

  const Field& field() const { return *f_; }
  const Field* fptr() const { return f_; }
  long lo() const { return lo_; }
  long hi_cert() const { return hi_; }
  long stored_top() const { return lo_ + long(c_.size()) - 1; }
  bool stored_empty() const { return c_.empty(); }
  bool known_nonzero() const { return !c_.empty(); }
  bool is_exact_zero() const { return c_.empty() && hi_ >= kInfCert; }
  // Lower bound for the valuation (infinite for the exact zero).
  long val_lb() const { return c_.empty() ? cert_add(hi_, 1) : lo_; }

  // errc::precision when e lies beyond the certification window.
  FieldElement coeff(long e) const;

  UniLaurent operator-() const;
  UniLaurent operator+(const UniLaurent& o) const;
  UniLaurent operator-(const UniLaurent& o) const;
  UniLaurent operator*(const UniLaurent& o) const;
  UniLaurent operator*(FieldElement s) const;
  UniLaurent& operator+=(const UniLaurent& o) { return *this = *this + o; }
  UniLaurent& operator-=(const UniLaurent& o) { return *this = *this - o; }
  UniLaurent& operator*=(const UniLaurent& o) { return *this = *this * o; }
  bool operator==(const UniLaurent& o) const {
    return f_ == o.f_ && lo_ == o.lo_ && c_ == o.c_ && hi_ == o.hi_;
  }

  UniLaurent shifted(long k) const;  // multiply by u^k
  // Inverse of a series with certified nonzero leading coefficient
  // (errc::precision otherwise).  The result window is hi - 2 lo, further
  // capped at max_hi; an exact monomial inverts exactly.
  UniLaurent invert(long max_hi = kInfCert) const;
  UniLaurent pow(long e, long max_hi = kInfCert) const;
  UniLaurent derivative() const;
  UniLaurent truncated(long hi) const;

  std::string str(const std::string& var = "u") const;

private:
  const Field* f_;
  long lo_ = 0;
  std::vector<FieldElement> c_;
  long hi_ = kInfCert;
  void trim();
};

namespace detail {

template <typename T>
struct SeriesTraits;

template <>
struct SeriesTraits<UniRat> {
  static UniRat zero(const Field* f) { return UniRat(f); }
  static bool exact_zero(const UniRat& r) { return r.is_zero(); }
  static bool invertible(const UniRat& r) { return !r.is_zero(); }
  static UniRat invert(const UniRat& r, long) { return r.inv(); }
  static UniRat truncated(const UniRat& r, long) { return r; }
  static UniRat scale(const UniRat& r, FieldElement s) {
    return r * UniRat::constant(s);
  }
  static std::string print(const UniRat& r) { return r.str("u"); }
};

template <>
struct SeriesTraits<UniLaurent> {
  static UniLaurent zero(const Field* f) { return UniLaurent(f); }
  static bool exact_zero(const UniLaurent& r) { return r.is_exact_zero(); }
  static bool invertible(const UniLaurent& r) { return r.known_nonzero(); }
  static UniLaurent invert(const UniLaurent& r, long cap) { return r.invert(cap); }
  static UniLaurent truncated(const UniLaurent& r, long h) { return r.truncated(h); }
  static UniLaurent scale(const UniLaurent& r, FieldElement s) { return r * s; }
  static std::string print(const UniLaurent& r) { return r.str("u"); }
};

}  // namespace detail

// Laurent series in v whose coefficients live in T: exact rational
// functions of u (T = UniRat) or certified Laurent expansions in u
// (T = UniLaurent).  The window scheme mirrors UniLaurent: stored
// coefficients cover [lo, lo+size), coefficients from there through
// hi_cert are exactly zero, beyond hi_cert unknown.  Stored entries are
// trimmed only when exactly zero, so an uncertain coefficient (zero as
// far as its own u-window certifies) stays stored and keeps its record.
template <typename T>
class Series {
  using Tr = detail::SeriesTraits<T>;

public:
  explicit Series(const Field* f) : f_(f) {}  // exact zero
  Series(const Field* f, long lo, std::vector<T> c, long hi_cert)
      : f_(f), lo_(lo), c_(std::move(c)), hi_(hi_cert) {
    if (!c_.empty() && lo_ + long(c_.size()) - 1 > hi_)
      fail(errc::domain, "series stores coefficients beyond its window");
    trim();
  }

  static Series zero_certified(const Field* f, long hi_cert) {
    Series s(f);
    s.hi_ = hi_cert;
    return s;
  }

  const Field& field() const { return *f_; }
  const Field* fptr() const { return f_; }
  long lo() const { return lo_; }
  long hi_cert() const { return hi_; }
  long stored_top() const { return lo_ + long(c_.size()) - 1; }
  bool stored_empty() const { return c_.empty(); }
  bool is_exact_zero() const { return c_.empty() && hi_ >= kInfCert; }
  long val_lb() const { return c_.empty() ? cert_add(hi_, 1) : lo_; }

  T coeff(long j) const {
    if (j > hi_) fail(errc::precision, "series coefficient beyond certified window");
    if (j < lo_ || j > stored_top()) return Tr::zero(f_);
    return c_[size_t(j - lo_)];
  }

  Series operator-() const {
    Series r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Series operator+(const Series& o) const {
    if (f_ != o.f_) fail(errc::domain, "field mismatch in series +");
    long h = std::min(hi_, o.hi_);
    if (c_.empty() && o.c_.empty()) return zero_certified(f_, h);
    long nlo = std::min(val_lb(), o.val_lb());
    long ntop = std::min(std::max(stored_top(), o.stored_top()), h);
    std::vector<T> c;
    for (long j = nlo; j <= ntop; ++j) {
      T a = (j >= lo_ && j <= stored_top()) ? c_[size_t(j - lo_)] : Tr::zero(f_);
      T b = (j >= o.lo_ && j <= o.stored_top()) ? o.c_[size_t(j - o.lo_)]
                                                : Tr::zero(f_);
      c.push_back(a + b);
    }
    return Series(f_, nlo, std::move(c), h);
  }

  Series operator-(const Series& o) const { return *this + (-o); }

  Series operator*(const Series& o) const {
    if (f_ != o.f_) fail(errc::domain, "field mismatch in series *");
    long h = std::min(cert_add(hi_, o.val_lb()), cert_add(o.hi_, val_lb()));
    if (c_.empty() || o.c_.empty()) return zero_certified(f_, h);
    long nlo = lo_ + o.lo_;
    long ntop = std::min(stored_top() + o.stored_top(), h);
    std::vector<T> c(size_t(std::max<long>(ntop - nlo + 1, 0)), Tr::zero(f_));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) {
        long e = lo_ + long(i) + o.lo_ + long(j);
        if (e > ntop) continue;
        c[size_t(e - nlo)] = c[size_t(e - nlo)] + c_[i] * o.c_[j];
      }
    return Series(f_, nlo, std::move(c), h);
  }

  Series operator*(const T& s) const {
    Series r = *this;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }

  Series operator*(FieldElement s) const;

  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  Series shifted(long k) const {  // multiply by v^k
    Series r = *this;
    r.lo_ += k;
    r.hi_ = cert_add(r.hi_, k);
    return r;
  }

  // Inverse of a series whose leading coefficient is stored and
  // invertible in T; errc::precision otherwise.  Result window is
  // hi - 2 lo capped at max_hi; a single-term exact series inverts
  // exactly (when its coefficient inverts exactly).  coeff_cap bounds the
  // windows of coefficient-level inversions, for T whose own inverses are
  // series again.
  Series invert(long max_hi = kInfCert, long coeff_cap = kInfCert) const {
    if (c_.empty())
      fail(errc::precision, "cannot certify a unit leading coefficient");
    if (!Tr::invertible(c_[0]))
      fail(errc::precision, "leading series coefficient is not invertible");
    if (hi_ >= kInfCert && c_.size() == 1) {
      T c0i = Tr::invert(c_[0], coeff_cap);
      return Series(f_, -lo_, {c0i}, kInfCert);
    }
    long h = std::min(cert_add(hi_, -2 * lo_), max_hi);
    long n = h - (-lo_);  // number of coefficients after the leading one
    if (n < 0) fail(errc::precision, "inverse series has an empty window");
    if (n > 4096) fail(errc::out_of_scope, "inverse series window too large");
    long ucap = std::min(uniform_cap(), coeff_cap);
    T c0i = Tr::invert(c_[0], ucap);
    std::vector<T> b{c0i};
    for (long k = 1; k <= n; ++k) {
      T acc = Tr::zero(f_);
      for (long i = 1; i <= k; ++i) {
        T a = (i <= long(c_.size()) - 1) ? c_[size_t(i)] : Tr::zero(f_);
        if (Tr::exact_zero(a)) continue;
        acc = acc + a * b[size_t(k - i)];
      }
      b.push_back(-(c0i * acc));
    }
    return Series(f_, -lo_, std::move(b), h);
  }

  Series derivative_v() const {
    const Field* f = f_;
    std::vector<T> c;
    for (size_t i = 0; i < c_.size(); ++i) {
      long e = lo_ + long(i);
      c.push_back(Tr::scale(c_[i], f->from_int(e % int64_t(f->p()))));
    }
    Series r(f, lo_ - 1, std::move(c), cert_add(hi_, -1));
    return r;
  }

  Series derivative_u() const;

  Series truncated_v(long h) const {
    Series r = *this;
    if (h >= r.hi_) return r;
    r.hi_ = h;
    if (!r.c_.empty() && r.stored_top() > h) {
      long keep = std::max<long>(h - r.lo_ + 1, 0);
      r.c_.erase(r.c_.begin() + keep, r.c_.end());
    }
    r.trim();
    return r;
  }

  // Coefficient of v^{-1}: the first-level residue along the curve.
  T res1() const { return coeff(-1); }

  std::string str(const std::string& var = "v") const {
    std::ostringstream os;
    bool first = true;
    for (long j = val_lb(); j <= stored_top(); ++j) {
      T c = coeff(j);
      if (Tr::exact_zero(c)) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << Tr::print(c) << ")";
      if (j != 0) os << "*" << var << "^" << j;
    }
    if (first) os << "0";
    if (hi_ < kInfCert) os << " + O(" << var << "^" << (hi_ + 1) << ")";
    return os.str();
  }

private:
  const Field* f_;
  long lo_ = 0;
  std::vector<T> c_;
  long hi_ = kInfCert;

  void trim() {
    while (!c_.empty() && Tr::exact_zero(c_.front())) {
      c_.erase(c_.begin());
      ++lo_;
    }
    while (!c_.empty() && Tr::exact_zero(c_.back())) c_.pop_back();
    if (c_.empty()) lo_ = 0;
  }

  // Cap used when inverting coefficients that need their own window.
  long uniform_cap() const;

  template <typename U>
  friend class Series;
};

using ExactSeries = Series<UniRat>;
using TruncSeries = Series<UniLaurent>;

template <>
inline ExactSeries ExactSeries::operator*(FieldElement s) const {
  return *this * UniRat::constant(s);
}

template <>
inline TruncSeries TruncSeries::operator*(FieldElement s) const {
  return *this * UniLaurent::monomial(s, 0);
}

template <>
inline ExactSeries ExactSeries::derivative_u() const {
  ExactSeries r = *this;
  for (auto& c : r.c_) c = c.derivative();
  r.trim();
  return r;
}

template <>
inline TruncSeries TruncSeries::derivative_u() const {
  TruncSeries r = *this;
  for (auto& c : r.c_) c = c.derivative();
  r.trim();
  return r;
}

template <>
inline long ExactSeries::uniform_cap() const {
  return kInfCert;
}

template <>
inline long TruncSeries::uniform_cap() const {
  long cap = kInfCert;
  for (auto& c : c_)
    if (!c.is_exact_zero()) cap = std::min(cap, cert_add(c.hi_cert(), -2 * c.lo()));
  return cap;
}

// Expansion of a bivariate rational function around v = 0 (x plays u and
// y plays v) with exact rational coefficients, certified through v_prec.
ExactSeries expand_rational(const BiRat& h, long v_prec);

// Coefficientwise Laurent expansion at u = 0 through u_prec.
TruncSeries to_truncated(const ExactSeries& s, long u_prec);

// Coefficient of u^{-1} v^{-1}: the two-dimensional residue of
// (series) du dv at the origin.  errc::precision when a window is too
// small to pin the coefficient down.
FieldElement res2(const ExactSeries& s);
FieldElement res2(const TruncSeries& s);

// Substitution of an admissible change of variables (u, v) -> (f, g):
// f must have v-order 0 with its v^0 coefficient of exact u-valuation 1,
// g must have exact v-valuation 1 with a certified-nonzero leading
// coefficient.  Returns s(f, g) with soundly clamped windows.
TruncSeries substitute_cv(const TruncSeries& s, const TruncSeries& f,
                          const TruncSeries& g);

// Jacobian determinant d(a, b)/d(u, v) in series arithmetic.
template <typename T>
Series<T> jacobian(const Series<T>& a, const Series<T>& b) {
  return a.derivative_u() * b.derivative_v() - a.derivative_v() * b.derivative_u();
}

}  // namespace surfres
