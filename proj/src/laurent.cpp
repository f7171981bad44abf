#include "surfres/laurent.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace surfres {

UniLaurent::UniLaurent(const Field* f, long lo, std::vector<FieldElement> c,
                       long hi_cert)
    : f_(f), lo_(lo), c_(std::move(c)), hi_(hi_cert) {
  if (!c_.empty() && lo_ + long(c_.size()) - 1 > hi_)
    fail(errc::domain, "laurent series stores coefficients beyond its window");
  trim();
}

void UniLaurent::trim() {
  while (!c_.empty() && c_.front().is_zero()) {
    c_.erase(c_.begin());
    ++lo_;
  }
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  if (c_.empty()) lo_ = 0;
}

UniLaurent UniLaurent::zero_certified(const Field* f, long hi_cert) {
  UniLaurent r(f);
  r.hi_ = hi_cert;
  return r;
}

UniLaurent UniLaurent::from_poly(const Poly& p) {
  std::vector<FieldElement> c;
  for (int i = 0; i <= p.deg(); ++i) c.push_back(p.coeff(i));
  return UniLaurent(p.fptr(), 0, std::move(c), kInfCert);
}

UniLaurent UniLaurent::monomial(FieldElement c, long e) {
  if (c.is_zero()) return UniLaurent(&c.field());
  return UniLaurent(&c.field(), e, {c}, kInfCert);
}

UniLaurent UniLaurent::expand(const UniRat& r, long hi_cert) {
  const Field* f = r.fptr();
  if (r.is_zero()) return UniLaurent(f);
  const Poly &num = r.num(), &den = r.den();
  int a = den.val0(), b = num.val0();
  long v0 = long(b) - long(a);
  // Denominator a pure power of u: the expansion terminates and is exact.
  if (den.deg() == a) {
    FieldElement dinv = den.coeff(a).inv();
    std::vector<FieldElement> c;
    for (int i = b; i <= num.deg(); ++i) c.push_back(num.coeff(i) * dinv);
    return UniLaurent(f, v0, std::move(c), kInfCert);
  }
  long n = hi_cert - v0;
  if (n < 0) return zero_certified(f, hi_cert);
  std::vector<FieldElement> s(size_t(n + 1), f->zero());
  FieldElement d0inv = den.coeff(a).inv();
  for (long k = 0; k <= n; ++k) {
    FieldElement acc = num.coeff(b + int(k));
    for (long i = 0; i < k; ++i) acc -= s[size_t(i)] * den.coeff(a + int(k - i));
    s[size_t(k)] = acc * d0inv;
  }
  return UniLaurent(f, v0, std::move(s), hi_cert);
}

FieldElement UniLaurent::coeff(long e) const {
  if (e > hi_)
    fail(errc::precision, "laurent coefficient beyond certified window");
  if (c_.empty() || e < lo_ || e > lo_ + long(c_.size()) - 1) return f_->zero();
  return c_[size_t(e - lo_)];
}

UniLaurent UniLaurent::operator-() const {
  UniLaurent r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniLaurent UniLaurent::operator+(const UniLaurent& o) const {
  if (f_ != o.f_) fail(errc::domain, "field mismatch in laurent +");
  long h = std::min(hi_, o.hi_);
  if (c_.empty() && o.c_.empty()) return zero_certified(f_, h);
  long top1 = lo_ + long(c_.size()) - 1, top2 = o.lo_ + long(o.c_.size()) - 1;
  long nlo = std::min(val_lb(), o.val_lb());
  long ntop = std::min(std::max(c_.empty() ? nlo - 1 : top1,
                                o.c_.empty() ? nlo - 1 : top2),
                       h);
  std::vector<FieldElement> c;
  for (long e = nlo; e <= ntop; ++e) {
    FieldElement a = (!c_.empty() && e >= lo_ && e <= top1) ? c_[size_t(e - lo_)]
                                                            : f_->zero();
    FieldElement b = (!o.c_.empty() && e >= o.lo_ && e <= top2)
                         ? o.c_[size_t(e - o.lo_)]
                         : f_->zero();
    c.push_back(a + b);
  }
  return UniLaurent(f_, nlo, std::move(c), h);
}

UniLaurent UniLaurent::operator-(const UniLaurent& o) const { return *this + (-o); }

UniLaurent UniLaurent::operator*(const UniLaurent& o) const {
  if (f_ != o.f_) fail(errc::domain, "field mismatch in laurent *");
  long h = std::min(cert_add(hi_, o.val_lb()), cert_add(o.hi_, val_lb()));
  if (c_.empty() || o.c_.empty()) return zero_certified(f_, h);
  long nlo = lo_ + o.lo_;
  long ntop = std::min(nlo + long(c_.size() + o.c_.size()) - 2, h);
  if (ntop < nlo) return zero_certified(f_, h);
  std::vector<FieldElement> c(size_t(ntop - nlo + 1), f_->zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      long e = nlo + long(i + j);
      if (e > ntop) break;
      c[size_t(e - nlo)] += c_[i] * o.c_[j];
    }
  }
  return UniLaurent(f_, nlo, std::move(c), h);
}

UniLaurent UniLaurent::operator*(FieldElement s) const {
  if (s.is_zero()) return UniLaurent(f_);
  UniLaurent r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

UniLaurent UniLaurent::shifted(long k) const {
  UniLaurent r = *this;
  r.lo_ += k;
  r.hi_ = cert_add(r.hi_, k);
  if (r.c_.empty()) r.lo_ = 0;
  return r;
}

UniLaurent UniLaurent::invert(long max_hi) const {
  if (c_.empty())
    fail(errc::precision, "cannot certify a unit leading coefficient");
  if (hi_ >= kInfCert && c_.size() == 1)
    return monomial(c_[0].inv(), -lo_);
  long h = std::min(cert_add(hi_, -2 * lo_), max_hi);
  long n = h + lo_;
  if (n < 0) fail(errc::precision, "inverse series has an empty window");
  if (n > 4096) fail(errc::out_of_scope, "inverse series window too large");
  long top = lo_ + long(c_.size()) - 1;
  FieldElement c0i = c_[0].inv();
  std::vector<FieldElement> b{c0i};
  for (long k = 1; k <= n; ++k) {
    FieldElement acc = f_->zero();
    for (long i = 1; i <= k; ++i) {
      FieldElement a =
          (lo_ + i <= top) ? c_[size_t(i)] : f_->zero();
      if (!a.is_zero()) acc += a * b[size_t(k - i)];
    }
    b.push_back(-(c0i * acc));
  }
  return UniLaurent(f_, -lo_, std::move(b), h);
}

UniLaurent UniLaurent::pow(long e, long max_hi) const {
  if (e < 0) return invert(max_hi).pow(-e, max_hi);
  UniLaurent r = monomial(f_->one(), 0), base = *this;
  uint64_t k = uint64_t(e);
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

UniLaurent UniLaurent::derivative() const {
  std::vector<FieldElement> c;
  for (size_t i = 0; i < c_.size(); ++i) {
    long e = lo_ + long(i);
    c.push_back(c_[i] * f_->from_int(e % int64_t(f_->p())));
  }
  return UniLaurent(f_, lo_ - 1, std::move(c), cert_add(hi_, -1));
}

UniLaurent UniLaurent::truncated(long hi) const {
  UniLaurent r = *this;
  if (hi >= r.hi_) return r;
  r.hi_ = hi;
  long keep = hi - r.lo_ + 1;
  if (long(r.c_.size()) > keep)
    r.c_.resize(size_t(std::max<long>(keep, 0)));
  r.trim();
  return r;
}

std::string UniLaurent::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = c_[i].str();
    if (cs.find('+') != std::string::npos) os << "(" << cs << ")";
    else os << cs;
    long e = lo_ + long(i);
    if (e != 0) os << "*" << var << "^" << e;
  }
  if (first) os << "0";
  if (hi_ < kInfCert) os << " + O(" << var << "^" << (hi_ + 1) << ")";
  return os.str();
}

ExactSeries expand_rational(const BiRat& h, long v_prec) {
  const Field* f = h.fptr();
  if (h.is_zero()) return ExactSeries(f);
  const BiPoly &num = h.num(), &den = h.den();
  auto vval = [](const BiPoly& p) {
    for (int j = 0; j <= p.deg_y(); ++j)
      if (!p.ycoeff(j).is_zero()) return long(j);
    return long(0);
  };
  long k = vval(den), m = vval(num);
  if (v_prec < m - k) return ExactSeries::zero_certified(f, v_prec);
  std::vector<UniRat> dc, nc;
  for (int j = int(k); j <= den.deg_y(); ++j) dc.push_back(UniRat::of(den.ycoeff(j)));
  for (int j = int(m); j <= num.deg_y(); ++j) nc.push_back(UniRat::of(num.ycoeff(j)));
  ExactSeries ds(f, 0, std::move(dc), kInfCert);
  ExactSeries ns(f, long(m), std::move(nc), kInfCert);
  ExactSeries inv = ds.invert(v_prec + k - m);
  return (ns * inv).shifted(-k).truncated_v(v_prec);
}

TruncSeries to_truncated(const ExactSeries& s, long u_prec) {
  std::vector<UniLaurent> c;
  for (long j = s.lo(); j <= s.stored_top(); ++j)
    c.push_back(UniLaurent::expand(s.coeff(j), u_prec));
  return TruncSeries(s.fptr(), s.lo(), std::move(c), s.hi_cert());
}

FieldElement res2(const ExactSeries& s) { return s.res1().residue0(); }

FieldElement res2(const TruncSeries& s) { return s.res1().coeff(-1); }

namespace {

// Powers of a series cached in both directions; negative powers go
// through a precomputed inverse.
class PowerCache {
public:
  PowerCache(const TruncSeries& base, long inv_cap)
      : base_(base), inv_cap_(inv_cap) {
    pos_.emplace(0, TruncSeries(base.fptr(), 0,
                                {UniLaurent::monomial(base.field().one(), 0)},
                                kInfCert));
  }

  const TruncSeries& get(long e) {
    auto& side = pos_;
    auto it = side.find(e);
    if (it != side.end()) return it->second;
    if (e > 0) {
      TruncSeries v = get(e - 1) * base_;
      return side.emplace(e, std::move(v)).first->second;
    }
    if (!inv_) inv_ = base_.invert(inv_cap_, inv_cap_);
    TruncSeries v = get(e + 1) * *inv_;
    return side.emplace(e, std::move(v)).first->second;
  }

private:
  TruncSeries base_;
  long inv_cap_;
  std::optional<TruncSeries> inv_;
  std::map<long, TruncSeries> pos_;
};

// c(f) for a coefficient series c in u: sum the stored terms of c over
// powers of f, then account for the unknown tail of c by clamping the
// u-window of the v^i coefficient to K - i (N+1).  The clamped result
// stores every coefficient up to its v-window so that no "exactly zero"
// claim sneaks in above the stored range.
TruncSeries compose_u(const UniLaurent& c, PowerCache& fpows, long f_vhi,
                      long N, long vcap) {
  const Field* f = c.fptr();
  if (c.is_exact_zero()) return TruncSeries(f);
  TruncSeries acc(f);
  for (long e = c.lo(); e <= c.stored_top(); ++e) {
    FieldElement a = c.coeff(e);
    if (a.is_zero()) continue;
    acc += fpows.get(e) * a;
  }
  if (c.hi_cert() >= kInfCert) return acc;
  long K = c.hi_cert();
  long H = std::min({acc.hi_cert(), f_vhi, vcap});
  if (H >= kInfCert) H = std::max(K, acc.stored_top()) + 8;
  std::vector<UniLaurent> out;
  for (long i = 0; i <= H; ++i) {
    UniLaurent ci = (i >= acc.lo() && i <= acc.stored_top()) ? acc.coeff(i)
                                                             : UniLaurent(f);
    out.push_back(ci.truncated(K - i * (N + 1)));
  }
  return TruncSeries(f, 0, std::move(out), H);
}

}  // namespace

TruncSeries substitute_cv(const TruncSeries& s, const TruncSeries& f,
                          const TruncSeries& g) {
  const Field* F = s.fptr();
  if (f.fptr() != F || g.fptr() != F)
    fail(errc::domain, "field mismatch in change of variables");
  if (f.lo() != 0 || f.stored_empty())
    fail(errc::domain, "u-image must have v-order 0");
  UniLaurent f0 = f.coeff(0);
  if (!f0.known_nonzero() || f0.lo() != 1)
    fail(errc::domain, "u-image must restrict to u-valuation exactly 1 on the curve");
  if (g.lo() != 1 || g.stored_empty() || !g.coeff(1).known_nonzero())
    fail(errc::domain, "v-image must have v-valuation exactly 1 with a unit leading coefficient");

  long N = 0;
  for (long j = f.lo(); j <= f.stored_top(); ++j) {
    const UniLaurent cj = f.coeff(j);
    if (!cj.is_exact_zero()) N = std::max(N, -std::min(cj.val_lb(), long(0)));
  }

  long capv = (s.hi_cert() >= kInfCert)
                  ? kInfCert
                  : s.hi_cert() + 2 * std::max<long>(0, -s.lo()) + 8;
  PowerCache fpows(f, capv), gpows(g, capv);

  TruncSeries out(F);
  for (long j = s.lo(); j <= s.stored_top(); ++j) {
    UniLaurent cj = s.coeff(j);
    if (cj.is_exact_zero()) continue;
    TruncSeries term = compose_u(cj, fpows, f.hi_cert(), N, capv);
    out += term * gpows.get(j);
  }
  return out.truncated_v(s.hi_cert());
}

}  // namespace surfres
