#include "surfres/bipoly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

namespace surfres {

namespace {

BiPoly mul_ypow(const BiPoly& p, int k) {
  if (p.is_zero() || k == 0) return p;
  std::vector<Poly> c;
  c.reserve(size_t(p.deg_y() + 1 + k));
  for (int i = 0; i < k; ++i) c.emplace_back(p.fptr());
  for (int j = 0; j <= p.deg_y(); ++j) c.push_back(p.ycoeff(j));
  return BiPoly(p.fptr(), std::move(c));
}

}  // namespace

BiPoly::BiPoly(const Field* f, std::vector<Poly> ycoeffs)
    : f_(f), c_(std::move(ycoeffs)) {
  for (auto& p : c_)
    if (p.fptr() != f_) fail(errc::domain, "field mismatch in bipoly coefficients");
  trim();
}

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::constant(FieldElement c) { return of_x(Poly::constant(c)); }

BiPoly BiPoly::x(const Field* f) { return of_x(Poly::x(f)); }

BiPoly BiPoly::y(const Field* f) {
  return BiPoly(f, {Poly(f), Poly::constant(f->one())});
}

BiPoly BiPoly::of_x(const Poly& p) {
  if (p.is_zero()) return BiPoly(p.fptr());
  return BiPoly(p.fptr(), {p});
}

BiPoly BiPoly::of_y(const Poly& p) {
  std::vector<Poly> c;
  for (int j = 0; j <= p.deg(); ++j) c.push_back(Poly::constant(p.coeff(j)));
  return BiPoly(p.fptr(), std::move(c));
}

BiPoly BiPoly::from_ints(const Field* f,
                         const std::vector<std::vector<int64_t>>& rows) {
  std::vector<Poly> c;
  for (auto& row : rows) c.push_back(Poly::from_ints(f, row));
  return BiPoly(f, std::move(c));
}

int BiPoly::deg_x() const {
  int d = -1;
  for (auto& p : c_) d = std::max(d, p.deg());
  return d;
}

int BiPoly::total_deg() const {
  int d = -1;
  for (int j = 0; j < int(c_.size()); ++j)
    if (!c_[j].is_zero()) d = std::max(d, c_[j].deg() + j);
  return d;
}

Poly BiPoly::ycoeff(int j) const {
  if (j < 0 || j >= int(c_.size())) return Poly(f_);
  return c_[j];
}

FieldElement BiPoly::coeff(int i, int j) const { return ycoeff(j).coeff(i); }

Poly BiPoly::lead_y() const {
  if (c_.empty()) return Poly(f_);
  return c_.back();
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& p : r.c_) p = -p;
  return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  if (f_ != o.f_) fail(errc::domain, "field mismatch in bipoly +");
  std::vector<Poly> c;
  size_t n = std::max(c_.size(), o.c_.size());
  c.reserve(n);
  for (size_t j = 0; j < n; ++j) c.push_back(ycoeff(int(j)) + o.ycoeff(int(j)));
  return BiPoly(f_, std::move(c));
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
  if (f_ != o.f_) fail(errc::domain, "field mismatch in bipoly *");
  if (is_zero() || o.is_zero()) return BiPoly(f_);
  std::vector<Poly> c(c_.size() + o.c_.size() - 1, Poly(f_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      c[i + j] += c_[i] * o.c_[j];
  }
  return BiPoly(f_, std::move(c));
}

BiPoly BiPoly::operator*(FieldElement s) const {
  BiPoly r = *this;
  for (auto& p : r.c_) p = p * s;
  r.trim();
  return r;
}

BiPoly BiPoly::pow(uint32_t e) const {
  BiPoly r = BiPoly::constant(f_->one()), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

FieldElement BiPoly::eval(FieldElement a, FieldElement b) const {
  FieldElement r = f_->zero();
  for (size_t j = c_.size(); j-- > 0;) r = r * b + c_[j].eval(a);
  return r;
}

Poly BiPoly::at_x(FieldElement a) const {
  std::vector<FieldElement> c;
  c.reserve(c_.size());
  for (auto& p : c_) c.push_back(p.eval(a));
  return Poly(f_, std::move(c));
}

Poly BiPoly::at_y(FieldElement b) const {
  Poly r(f_);
  for (size_t j = c_.size(); j-- > 0;) r = r * Poly::constant(b) + c_[j];
  return r;
}

BiPoly BiPoly::partial_x() const {
  std::vector<Poly> c;
  c.reserve(c_.size());
  for (auto& p : c_) c.push_back(p.derivative());
  return BiPoly(f_, std::move(c));
}

BiPoly BiPoly::partial_y() const {
  if (c_.size() <= 1) return BiPoly(f_);
  std::vector<Poly> c;
  c.reserve(c_.size() - 1);
  for (size_t j = 1; j < c_.size(); ++j)
    c.push_back(c_[j] * f_->from_int(int64_t(j)));
  return BiPoly(f_, std::move(c));
}

BiPoly BiPoly::shifted(FieldElement a, FieldElement b) const {
  // First x -> x+a coefficientwise, then Horner in y with y -> y+b.
  BiPoly yb = BiPoly::y(f_) + BiPoly::constant(b);
  BiPoly r(f_);
  for (size_t j = c_.size(); j-- > 0;) r = r * yb + BiPoly::of_x(c_[j].shifted(a));
  return r;
}

BiPoly BiPoly::swapped() const {
  std::vector<Poly> c;
  int dx = deg_x();
  for (int j = 0; j <= dx; ++j) {
    std::vector<FieldElement> row;
    for (int i = 0; i <= deg_y(); ++i) row.push_back(coeff(j, i));
    c.emplace_back(f_, std::move(row));
  }
  return BiPoly(f_, std::move(c));
}

namespace {

BiRat poly_subst(const Poly& p, const BiRat& s) {
  BiRat r(p.fptr());
  for (int i = p.deg(); i >= 0; --i)
    r = r * s + BiRat::constant(p.coeff(i));
  return r;
}

}  // namespace

BiRat BiPoly::subst(const BiRat& xe, const BiRat& ye) const {
  BiRat r(f_);
  for (size_t j = c_.size(); j-- > 0;) r = r * ye + poly_subst(c_[j], xe);
  return r;
}

std::optional<BiPoly> BiPoly::divided_exactly(const BiPoly& d) const {
  if (d.is_zero()) fail(errc::domain, "bipoly division by zero");
  if (is_zero()) return BiPoly(f_);
  if (d.deg_y() == 0) {
    std::vector<Poly> c;
    c.reserve(c_.size());
    for (auto& p : c_) {
      auto q = p.divided_exactly(d.c_[0]);
      if (!q) return std::nullopt;
      c.push_back(std::move(*q));
    }
    return BiPoly(f_, std::move(c));
  }
  BiPoly r = *this;
  if (r.deg_y() < d.deg_y()) return std::nullopt;
  std::vector<Poly> q(size_t(r.deg_y() - d.deg_y() + 1), Poly(f_));
  while (!r.is_zero() && r.deg_y() >= d.deg_y()) {
    auto qc = r.lead_y().divided_exactly(d.lead_y());
    if (!qc) return std::nullopt;
    int sh = r.deg_y() - d.deg_y();
    q[size_t(sh)] = *qc;
    r -= mul_ypow(BiPoly::of_x(*qc) * d, sh);
  }
  if (!r.is_zero()) return std::nullopt;
  return BiPoly(f_, std::move(q));
}

BiPoly BiPoly::operator/(const BiPoly& d) const {
  auto q = divided_exactly(d);
  if (!q) fail(errc::domain, "inexact bipoly division");
  return *q;
}

Poly BiPoly::content_x() const {
  Poly g(f_);
  for (auto& p : c_) g = gcd(g, p);
  return g;
}

BiPoly BiPoly::primitive_part() const {
  if (is_zero()) return *this;
  Poly ct = content_x();
  std::vector<Poly> c;
  c.reserve(c_.size());
  for (auto& p : c_) c.push_back(p / ct);
  return BiPoly(f_, std::move(c));
}

FieldElement BiPoly::grlex_lead() const {
  if (is_zero()) fail(errc::domain, "leading coefficient of the zero bipoly");
  int d = total_deg();
  for (int j = deg_y(); j >= 0; --j) {
    if (j > d) continue;
    FieldElement c = coeff(d - j, j);
    if (!c.is_zero()) return c;
  }
  fail(errc::domain, "inconsistent bipoly degree");
}

BiPoly BiPoly::normalized() const {
  if (is_zero()) return *this;
  return *this * grlex_lead().inv();
}

std::vector<uint32_t> BiPoly::key() const {
  std::vector<uint32_t> k;
  k.push_back(uint32_t(c_.size()));
  for (auto& p : c_) {
    k.push_back(uint32_t(p.deg() + 1));
    for (int i = 0; i <= p.deg(); ++i) k.push_back(p.coeff(i).code());
  }
  return k;
}

std::string BiPoly::str(const std::string& vx, const std::string& vy) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j <= deg_y(); ++j)
    for (int i = 0; i <= c_[size_t(j)].deg(); ++i) {
      FieldElement c = coeff(i, j);
      if (c.is_zero()) continue;
      if (!first) os << "+";
      first = false;
      bool unit = c == f_->one();
      bool has_var = i > 0 || j > 0;
      if (!unit || !has_var) {
        std::string cs = c.str();
        if (cs.find('+') != std::string::npos) os << "(" << cs << ")";
        else os << cs;
        if (has_var) os << "*";
      }
      if (i == 1) os << vx;
      else if (i > 1) os << vx << "^" << i;
      if (i > 0 && j > 0) os << "*";
      if (j == 1) os << vy;
      else if (j > 1) os << vy << "^" << j;
    }
  return os.str();
}

namespace {

// Pseudo-remainder of a by b in y: lead_y(b)^(deg difference + 1) * a mod b,
// computed without coefficient division.
BiPoly prem_y(const BiPoly& a, const BiPoly& b) {
  Poly ell = b.lead_y();
  BiPoly r = a;
  int e = a.deg_y() - b.deg_y() + 1;
  while (!r.is_zero() && r.deg_y() >= b.deg_y()) {
    BiPoly t = mul_ypow(BiPoly::of_x(r.lead_y()) * b, r.deg_y() - b.deg_y());
    r = BiPoly::of_x(ell) * r - t;
    --e;
  }
  if (e > 0) r = BiPoly::of_x(ell.pow(uint32_t(e))) * r;
  return r;
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.normalized();
  if (b.is_zero()) return a.normalized();
  const Field* f = a.fptr();
  Poly cont = gcd(a.content_x(), b.content_x());
  BiPoly A = a.primitive_part(), B = b.primitive_part();
  if (A.deg_y() < B.deg_y()) std::swap(A, B);
  while (!B.is_zero()) {
    if (B.deg_y() == 0) {
      // Primitive with no y: a unit, so the y-parts are coprime.
      A = BiPoly::constant(f->one());
      break;
    }
    BiPoly R = prem_y(A, B);
    A = B;
    B = R.is_zero() ? R : R.primitive_part();
  }
  return (BiPoly::of_x(cont) * A.primitive_part()).normalized();
}

namespace {

Poly det_minor(const std::vector<std::vector<Poly>>& S, uint32_t used,
               std::unordered_map<uint32_t, Poly>& memo, const Field* f) {
  size_t n = S.size();
  size_t r = size_t(std::popcount(used));
  if (r == n) return Poly::constant(f->one());
  auto it = memo.find(used);
  if (it != memo.end()) return it->second;
  Poly acc(f);
  int k = 0;
  for (size_t j = 0; j < n; ++j) {
    if (used & (uint32_t(1) << j)) continue;
    if (!S[r][j].is_zero()) {
      Poly term = S[r][j] * det_minor(S, used | (uint32_t(1) << j), memo, f);
      if (k % 2) term = -term;
      acc += term;
    }
    ++k;
  }
  memo.emplace(used, acc);
  return acc;
}

}  // namespace

Poly resultant_y(const BiPoly& a, const BiPoly& b) {
  const Field* f = a.fptr();
  if (a.is_zero() || b.is_zero()) return Poly(f);
  int m = a.deg_y(), n = b.deg_y();
  if (m == 0 && n == 0) return Poly::constant(f->one());
  if (m == 0) return a.ycoeff(0).pow(uint32_t(n));
  if (n == 0) return b.ycoeff(0).pow(uint32_t(m));
  if (m + n > 12) fail(errc::out_of_scope, "resultant matrix too large");
  size_t N = size_t(m + n);
  std::vector<std::vector<Poly>> S(N, std::vector<Poly>(N, Poly(f)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) S[size_t(i)][size_t(i + m - k)] = a.ycoeff(k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) S[size_t(n + i)][size_t(i + n - k)] = b.ycoeff(k);
  std::unordered_map<uint32_t, Poly> memo;
  return det_minor(S, 0, memo, f);
}

Poly resultant_x(const BiPoly& a, const BiPoly& b) {
  return resultant_y(a.swapped(), b.swapped());
}

namespace {

constexpr uint64_t kFactorBudget = uint64_t(1) << 22;

// Monomials of total degree <= d in grlex order (degree, then y power).
std::vector<std::pair<int, int>> monomials_upto(int d) {
  std::vector<std::pair<int, int>> ms;
  for (int t = 0; t <= d; ++t)
    for (int j = 0; j <= t; ++j) ms.emplace_back(t - j, j);
  return ms;
}

// Enumerate normalized candidates of total degree exactly d, calling
// visit(cand); stop early if visit returns false.
template <typename Visit>
void enumerate_candidates(const Field& F, int d, int max_dx, int max_dy,
                          Visit visit) {
  auto ms = monomials_upto(d);
  size_t block = ms.size() - size_t(d + 1);  // index of (d, 0)
  for (size_t lead = block; lead < ms.size(); ++lead) {
    auto [li, lj] = ms[lead];
    if (li > max_dx || lj > max_dy) continue;
    // Free coefficients at every monomial strictly below the lead.
    size_t nfree = lead;
    std::vector<uint64_t> digits(nfree, 0);
    while (true) {
      std::vector<std::vector<FieldElement>> cr(size_t(d + 1));
      for (size_t k = 0; k < nfree; ++k) {
        auto [i, j] = ms[k];
        if (digits[k] == 0) continue;
        if (cr[size_t(j)].empty())
          cr[size_t(j)].assign(size_t(d + 1), F.zero());
        cr[size_t(j)][size_t(i)] = F.element(digits[k]);
      }
      if (cr[size_t(lj)].empty()) cr[size_t(lj)].assign(size_t(d + 1), F.zero());
      cr[size_t(lj)][size_t(li)] = F.one();
      std::vector<Poly> coeffs;
      for (auto& row : cr)
        coeffs.push_back(row.empty() ? Poly(&F) : Poly(&F, std::move(row)));
      BiPoly cand(&F, std::move(coeffs));
      if (cand.deg_x() <= max_dx && cand.deg_y() <= max_dy)
        if (!visit(cand)) return;
      // Odometer.
      size_t k = 0;
      while (k < nfree && ++digits[k] == F.q()) digits[k++] = 0;
      if (k == nfree) break;
    }
  }
}

uint64_t candidate_count(uint64_t q, int d) {
  // Sum over lead positions of q^(free coefficients), saturating.
  auto ms = monomials_upto(d);
  size_t block = ms.size() - size_t(d + 1);
  uint64_t total = 0;
  for (size_t lead = block; lead < ms.size(); ++lead) {
    uint64_t c = 1;
    for (size_t k = 0; k < lead; ++k) {
      if (c > kFactorBudget) return c;
      c *= q;
    }
    total += c;
    if (total > kFactorBudget) return total;
  }
  return total;
}

}  // namespace

BiFactorization factor_bipoly(const BiPoly& f) {
  if (f.is_zero()) fail(errc::domain, "factoring the zero bipoly");
  const Field& F = f.field();
  BiFactorization out{f.grlex_lead(), {}};
  if (f.is_constant()) return out;

  // Univariate-in-x content first; the rest is primitive.
  Poly cont = f.content_x();
  if (cont.deg() > 0)
    for (auto& [p, mult] : factor_poly(cont))
      out.factors.push_back({BiPoly::of_x(p), mult});
  BiPoly rest = f.primitive_part().normalized();

  for (int d = 1; 2 * d <= rest.total_deg(); ++d) {
    if (candidate_count(F.q(), d) > kFactorBudget)
      fail(errc::out_of_scope,
           "factor certification needs too many degree-" + std::to_string(d) +
               " candidates over F_" + std::to_string(F.q()));
    enumerate_candidates(
        F, d, rest.deg_x(), rest.deg_y(), [&](const BiPoly& cand) {
          uint32_t mult = 0;
          while (true) {
            auto q = rest.divided_exactly(cand);
            if (!q) break;
            rest = q->normalized();
            ++mult;
          }
          if (mult) out.factors.push_back({cand, mult});
          return 2 * d <= rest.total_deg();
        });
  }
  if (rest.total_deg() >= 1) out.factors.push_back({rest.normalized(), 1});
  std::sort(out.factors.begin(), out.factors.end(),
            [](const BiPolyFactor& a, const BiPolyFactor& b) {
              return a.p.key() < b.p.key();
            });
  return out;
}

bool is_irreducible(const BiPoly& f) {
  if (f.is_zero() || f.is_constant()) return false;
  auto fac = factor_bipoly(f);
  return fac.factors.size() == 1 && fac.factors[0].mult == 1;
}

BiRat::BiRat(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(errc::domain, "bivariate rational with zero denominator");
  reduce();
}

BiRat BiRat::of(BiPoly p) {
  const Field* f = p.fptr();
  return BiRat(std::move(p), BiPoly::constant(f->one()));
}

BiRat BiRat::constant(FieldElement c) { return of(BiPoly::constant(c)); }

void BiRat::reduce() {
  if (num_.is_zero()) {
    den_ = BiPoly::constant(num_.field().one());
    return;
  }
  BiPoly g = gcd(num_, den_);
  if (g.total_deg() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  FieldElement u = den_.grlex_lead().inv();
  num_ = num_ * u;
  den_ = den_ * u;
}

BiRat BiRat::operator-() const {
  BiRat r = *this;
  r.num_ = -r.num_;
  return r;
}

BiRat BiRat::operator+(const BiRat& o) const {
  return BiRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

BiRat BiRat::operator-(const BiRat& o) const { return *this + (-o); }

BiRat BiRat::operator*(const BiRat& o) const {
  return BiRat(num_ * o.num_, den_ * o.den_);
}

BiRat BiRat::operator/(const BiRat& o) const { return *this * o.inv(); }

BiRat BiRat::inv() const {
  if (is_zero()) fail(errc::domain, "inverting the zero rational function");
  return BiRat(den_, num_);
}

FieldElement BiRat::eval(FieldElement a, FieldElement b) const {
  FieldElement d = den_.eval(a, b);
  if (d.is_zero()) fail(errc::domain, "evaluating a rational function on its pole locus");
  return num_.eval(a, b) / d;
}

BiRat BiRat::subst(const BiRat& xe, const BiRat& ye) const {
  BiRat n = num_.subst(xe, ye), d = den_.subst(xe, ye);
  if (d.is_zero()) fail(errc::domain, "substitution lands in the pole locus");
  return n / d;
}

UniRat BiRat::at_x(FieldElement a) const {
  const Field* f = fptr();
  BiPoly lin = BiPoly::x(f) - BiPoly::constant(a);
  BiPoly n = num_, d = den_;
  while (true) {
    auto dn = n.divided_exactly(lin);
    auto dd = d.divided_exactly(lin);
    if (!dn || !dd) break;
    n = *dn;
    d = *dd;
  }
  Poly dr = d.at_x(a);
  if (dr.is_zero())
    fail(errc::domain, "denominator vanishes identically on the line");
  return UniRat(n.at_x(a), dr);
}

UniRat BiRat::at_y(FieldElement b) const {
  return BiRat(num_.swapped(), den_.swapped()).at_x(b);
}

std::string BiRat::str(const std::string& vx, const std::string& vy) const {
  if (is_poly() && den_.grlex_lead() == field().one()) return num_.str(vx, vy);
  return "(" + num_.str(vx, vy) + ")/(" + den_.str(vx, vy) + ")";
}

BiPoly embed(const Embedding& e, const BiPoly& p) {
  std::vector<Poly> c;
  c.reserve(size_t(p.deg_y() + 1));
  for (int j = 0; j <= p.deg_y(); ++j) c.push_back(embed(e, p.ycoeff(j)));
  return BiPoly(&e.to(), std::move(c));
}

BiRat embed(const Embedding& e, const BiRat& r) {
  return BiRat(embed(e, r.num()), embed(e, r.den()));
}

}  // namespace surfres
