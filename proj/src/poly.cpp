#include "surfres/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace surfres {

Poly::Poly(const Field* f, std::vector<FieldElement> c)
    : f_(f), c_(std::move(c)) {
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(FieldElement c) {
  Poly r(&c.field());
  if (!c.is_zero()) r.c_ = {c};
  return r;
}

Poly Poly::x(const Field* f) {
  return Poly(f, {f->zero(), f->one()});
}

Poly Poly::from_ints(const Field* f, const std::vector<int64_t>& c) {
  std::vector<FieldElement> v;
  v.reserve(c.size());
  for (auto n : c) v.push_back(f->from_int(n));
  return Poly(f, std::move(v));
}

FieldElement Poly::coeff(int i) const {
  if (i < 0 || i >= int(c_.size())) return f_->zero();
  return c_[i];
}

FieldElement Poly::lead() const {
  if (c_.empty()) return f_->zero();
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  if (f_ != o.f_) fail(errc::domain, "field mismatch in poly +");
  Poly r(f_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), f_->zero());
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(int(i)) + o.coeff(int(i));
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (f_ != o.f_) fail(errc::domain, "field mismatch in poly *");
  if (is_zero() || o.is_zero()) return Poly(f_);
  Poly r(f_);
  r.c_.assign(c_.size() + o.c_.size() - 1, f_->zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

Poly Poly::operator*(FieldElement s) const {
  Poly r = *this;
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
  if (d.is_zero()) fail(errc::domain, "polynomial division by zero");
  Poly q(f_), r = *this;
  FieldElement linv = d.lead().inv();
  if (r.deg() >= d.deg()) q.c_.assign(r.deg() - d.deg() + 1, f_->zero());
  while (r.deg() >= d.deg()) {
    int shift = r.deg() - d.deg();
    FieldElement c = r.lead() * linv;
    q.c_[shift] = c;
    for (int i = 0; i <= d.deg(); ++i)
      r.c_[shift + i] -= c * d.c_[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

Poly Poly::operator/(const Poly& d) const {
  auto [q, r] = divrem(d);
  if (!r.is_zero()) fail(errc::domain, "inexact polynomial division");
  return q;
}

std::optional<Poly> Poly::divided_exactly(const Poly& d) const {
  auto [q, r] = divrem(d);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inv();
}

Poly Poly::derivative() const {
  Poly r(f_);
  if (deg() < 1) return r;
  r.c_.resize(c_.size() - 1, f_->zero());
  for (size_t i = 1; i < c_.size(); ++i)
    r.c_[i - 1] = c_[i] * f_->from_int(int64_t(i));
  r.trim();
  return r;
}

Poly Poly::pow(uint32_t e) const {
  Poly r = Poly::constant(f_->one()), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

FieldElement Poly::eval(FieldElement a) const {
  FieldElement r = f_->zero();
  for (size_t i = c_.size(); i-- > 0;) r = r * a + c_[i];
  return r;
}

Poly Poly::shifted(FieldElement a) const {
  // Horner form of p(x + a).
  Poly r(f_);
  Poly xa(f_, {a, f_->one()});
  for (size_t i = c_.size(); i-- > 0;) r = r * xa + Poly::constant(c_[i]);
  return r;
}

Poly Poly::reversed() const {
  Poly r = *this;
  std::reverse(r.c_.begin(), r.c_.end());
  r.trim();
  return r;
}

int Poly::val0() const {
  if (is_zero()) fail(errc::domain, "valuation of the zero polynomial");
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return int(i);
  return 0;  // unreachable
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << "+";
    first = false;
    bool unit = c_[i] == f_->one();
    if (i == 0 || !unit) {
      if (f_->m() > 1 && i > 0) os << "(" << c_[i].str() << ")";
      else if (f_->m() > 1 && i == 0 && c_[i].str().find('+') != std::string::npos)
        os << "(" << c_[i].str() << ")";
      else
        os << c_[i].str();
      if (i > 0) os << "*";
    }
    if (i == 1) os << var;
    else if (i > 1) os << var << "^" << i;
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<FieldElement> roots_in_field(const Poly& f) {
  if (f.is_zero()) fail(errc::domain, "roots of the zero polynomial");
  std::vector<FieldElement> roots;
  const Field& F = f.field();
  Poly g = f;
  for (uint64_t i = 0; i < F.q() && g.deg() > 0; ++i) {
    FieldElement a = F.element(i);
    while (g.deg() > 0 && g.eval(a).is_zero()) {
      roots.push_back(a);
      Poly lin(&F, {-a, F.one()});
      g = g / lin;
    }
  }
  return roots;
}

namespace {

Poly powmod(const Poly& base, uint64_t e, const Poly& mod) {
  Poly r = Poly::constant(base.field().one());
  Poly b = base % mod;
  while (e) {
    if (e & 1) r = (r * b) % mod;
    b = (b * b) % mod;
    e >>= 1;
  }
  return r;
}

Poly pth_root(const Poly& f) {
  const Field& F = f.field();
  uint32_t p = F.p();
  uint64_t root_exp = 1;
  for (uint32_t i = 0; i + 1 < F.m(); ++i) root_exp *= p;  // p^{m-1}
  std::vector<FieldElement> c;
  for (int i = 0; i <= f.deg(); ++i) {
    if (i % int(p) != 0) {
      if (!f.coeff(i).is_zero())
        fail(errc::domain, "not a p-th power polynomial");
      continue;
    }
    c.push_back(f.coeff(i).pow(root_exp));
  }
  return Poly(f.fptr(), std::move(c));
}

// Product of the distinct monic irreducible factors of f.
Poly radical(const Poly& f) {
  const Field& F = f.field();
  if (f.deg() <= 0) return Poly::constant(F.one());
  Poly d = gcd(f, f.derivative());
  if (d.deg() == 0) return f.monic();
  if (f.derivative().is_zero()) return radical(pth_root(f.monic()));
  Poly w = (f / d).monic();  // distinct factors with mult not divisible by p
  // Strip every w-factor from d, leaving the part with p | multiplicity.
  Poly y = d;
  for (Poly g = gcd(y, w); g.deg() > 0; g = gcd(y, w)) y = y / g;
  if (y.deg() == 0) return w;
  Poly z = radical(pth_root(y.monic()));
  return (w * (z / gcd(w, z))).monic();
}

}  // namespace

std::vector<uint32_t> irreducible_factor_degrees(const Poly& f) {
  if (f.is_zero()) fail(errc::domain, "factor degrees of the zero polynomial");
  std::vector<uint32_t> degs;
  Poly r = radical(f);
  if (r.deg() <= 0) return degs;
  const Field& F = f.field();
  Poly h = Poly::x(&F) % r;
  for (uint32_t d = 1; 2 * d <= uint32_t(r.deg()); ++d) {
    h = powmod(h, F.q(), r);
    Poly g = gcd(h - Poly::x(&F), r);
    if (g.deg() > 0) {
      degs.push_back(d);
      r = (r / g).monic();
      if (r.deg() == 0) break;
      h = h % r;
    }
  }
  if (r.deg() > 0) degs.push_back(uint32_t(r.deg()));
  return degs;
}

ExtensionRoots roots_in_extension(const Poly& f, uint32_t ext_degree) {
  if (ext_degree == 0) fail(errc::usage, "extension degree must be >= 1");
  const Field& F = f.field();
  auto ext = make_field(F.p(), F.m() * ext_degree);
  Embedding emb(F, *ext);
  Poly fe = embed(emb, f);
  auto roots = roots_in_field(fe);
  return {ext, emb, std::move(roots)};
}

std::vector<PolyFactor> factor_poly(const Poly& f) {
  if (f.is_zero()) fail(errc::domain, "factoring the zero polynomial");
  std::vector<PolyFactor> out;
  if (f.deg() == 0) return out;
  auto degs = irreducible_factor_degrees(f);
  uint32_t D = 1;
  for (auto d : degs) D = uint32_t(std::lcm(D, d));
  auto er = roots_in_extension(radical(f), D);
  const Field& E = *er.ext;
  Poly rest = f.monic();
  std::vector<bool> used(er.roots.size(), false);
  for (size_t i = 0; i < er.roots.size(); ++i) {
    if (used[i]) continue;
    // Frobenius orbit of the root, then its minimal polynomial over F_q.
    std::vector<FieldElement> orbit;
    FieldElement r = er.roots[i];
    do {
      orbit.push_back(r);
      for (size_t j = i; j < er.roots.size(); ++j)
        if (!used[j] && er.roots[j] == r) used[j] = true;
      r = r.pow(f.field().q());
    } while (r != er.roots[i]);
    Poly min = Poly::constant(E.one());
    for (auto& a : orbit) min = min * Poly(&E, {-a, E.one()});
    std::vector<FieldElement> down;
    for (int k = 0; k <= min.deg(); ++k) down.push_back(er.emb.down(min.coeff(k)));
    Poly irred(f.fptr(), std::move(down));
    uint32_t mult = 0;
    while (true) {
      auto q = rest.divided_exactly(irred);
      if (!q) break;
      rest = *q;
      ++mult;
    }
    out.push_back({irred, mult});
  }
  if (rest.deg() != 0) fail(errc::domain, "incomplete factorization");
  return out;
}

UniRat::UniRat(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(errc::domain, "rational function with zero denominator");
  reduce();
}

UniRat UniRat::of(Poly p) {
  const Field* f = p.fptr();
  return UniRat(std::move(p), Poly::constant(f->one()));
}

UniRat UniRat::constant(FieldElement c) { return of(Poly::constant(c)); }

void UniRat::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.field().one());
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.deg() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  FieldElement linv = den_.lead().inv();
  num_ = num_ * linv;
  den_ = den_ * linv;
}

UniRat UniRat::operator-() const {
  UniRat r = *this;
  r.num_ = -r.num_;
  return r;
}

UniRat UniRat::operator+(const UniRat& o) const {
  return UniRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

UniRat UniRat::operator-(const UniRat& o) const { return *this + (-o); }

UniRat UniRat::operator*(const UniRat& o) const {
  return UniRat(num_ * o.num_, den_ * o.den_);
}

UniRat UniRat::operator/(const UniRat& o) const { return *this * o.inv(); }

UniRat UniRat::inv() const {
  if (is_zero()) fail(errc::domain, "inverting the zero rational function");
  return UniRat(den_, num_);
}

UniRat UniRat::derivative() const {
  return UniRat(num_.derivative() * den_ - num_ * den_.derivative(),
                den_ * den_);
}

FieldElement UniRat::eval(FieldElement a) const {
  FieldElement d = den_.eval(a);
  if (d.is_zero()) fail(errc::domain, "evaluating a rational function at a pole");
  return num_.eval(a) / d;
}

long UniRat::val0() const {
  if (is_zero()) fail(errc::domain, "valuation of the zero function");
  return long(num_.val0()) - long(den_.val0());
}

FieldElement UniRat::residue0() const {
  const Field& F = field();
  if (is_zero()) return F.zero();
  int a = den_.val0(), b = num_.val0();
  int want = a - b - 1;  // coefficient index of (num/u^b)/(den/u^a) needed
  if (want < 0) return F.zero();
  // Power series division of the unit parts up to index `want`.
  std::vector<FieldElement> n(want + 1), d(want + 1), s(want + 1);
  for (int i = 0; i <= want; ++i) {
    n[i] = num_.coeff(b + i);
    d[i] = den_.coeff(a + i);
  }
  FieldElement d0inv = d[0].inv();
  for (int k = 0; k <= want; ++k) {
    FieldElement acc = n[k];
    for (int i = 0; i < k; ++i) acc -= s[i] * d[k - i];
    s[k] = acc * d0inv;
  }
  return s[want];
}

FieldElement UniRat::residue0_simple() const {
  const Field& F = field();
  if (is_zero()) return F.zero();
  if (val0() != -1 || den_.val0() != 1)
    fail(errc::domain, "residue0_simple needs exactly a simple pole at 0");
  return num_.eval(F.zero()) / den_.derivative().eval(F.zero());
}

FieldElement UniRat::residue_at(FieldElement a) const {
  return composed_with_shift(a).residue0();
}

FieldElement UniRat::residue_at_infinity() const {
  // u = 1/t turns (this du) into -R(1/t)/t^2 dt; take the residue at t=0.
  const Field& F = field();
  if (is_zero()) return F.zero();
  int dn = num_.deg(), dd = den_.deg();
  Poly n = -num_.reversed(), d = den_.reversed();
  Poly t = Poly::x(&F);
  if (dd > dn) n = n * t.pow(uint32_t(dd - dn));
  else d = d * t.pow(uint32_t(dn - dd));
  d = d * t.pow(2);
  return UniRat(n, d).residue0();
}

UniRat UniRat::composed_with_shift(FieldElement a) const {
  return UniRat(num_.shifted(a), den_.shifted(a));
}

std::string UniRat::str(const std::string& var) const {
  if (is_poly()) {
    if (den_.coeff(0) == field().one()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

Poly embed(const Embedding& e, const Poly& p) {
  std::vector<FieldElement> c;
  c.reserve(size_t(p.deg() + 1));
  for (int i = 0; i <= p.deg(); ++i) c.push_back(e(p.coeff(i)));
  return Poly(&e.to(), std::move(c));
}

UniRat embed(const Embedding& e, const UniRat& r) {
  return UniRat(embed(e, r.num()), embed(e, r.den()));
}

}  // namespace surfres
