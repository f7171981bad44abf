#include "surfres/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace surfres {
namespace {

constexpr uint64_t kMaxQ = uint64_t(1) << 20;

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over F_p as digit vectors, lowest degree first,
// trailing zeros trimmed.  Used only for modulus bookkeeping.
using FpPoly = std::vector<uint32_t>;

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly mul(const FpPoly& a, const FpPoly& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = uint32_t((r[i + j] + uint64_t(a[i]) * b[j]) % p);
  trim(r);
  return r;
}

uint32_t inv_mod_p(uint32_t a, uint32_t p) {
  int64_t t0 = 0, t1 = 1, r0 = p, r1 = a;
  while (r1 != 0) {
    int64_t k = r0 / r1;
    int64_t r2 = r0 - k * r1, t2 = t0 - k * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  return uint32_t(((t0 % p) + p) % p);
}

// a mod b, b nonzero.
FpPoly mod(FpPoly a, const FpPoly& b, uint32_t p) {
  uint32_t binv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    uint64_t c = (uint64_t(a.back()) * binv) % p;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      uint64_t sub = (c * b[i]) % p;
      a[shift + i] = uint32_t((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

FpPoly decode_poly(uint64_t code, uint32_t p) {
  FpPoly d;
  while (code) {
    d.push_back(uint32_t(code % p));
    code /= p;
  }
  return d;
}

bool is_irreducible(const FpPoly& f, uint32_t p) {
  size_t deg = f.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (size_t d = 1; 2 * d <= deg; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code) {
      FpPoly g = decode_poly(code, p);
      g.resize(d + 1, 0);
      g[d] = 1;
      if (mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

const Field& FieldElement::field() const {
  if (!f_) fail(errc::domain, "use of a null field element");
  return *f_;
}

FieldElement FieldElement::operator-() const {
  return {&field(), field().neg_code(code_)};
}

FieldElement FieldElement::operator+(FieldElement o) const {
  if (f_ != o.f_) fail(errc::domain, "field mismatch in +");
  return {&field(), field().add_code(code_, o.code_)};
}

FieldElement FieldElement::operator-(FieldElement o) const {
  if (f_ != o.f_) fail(errc::domain, "field mismatch in -");
  return {&field(), field().sub_code(code_, o.code_)};
}

FieldElement FieldElement::operator*(FieldElement o) const {
  if (f_ != o.f_) fail(errc::domain, "field mismatch in *");
  return {&field(), field().mul_code(code_, o.code_)};
}

FieldElement FieldElement::operator/(FieldElement o) const {
  if (f_ != o.f_) fail(errc::domain, "field mismatch in /");
  return {&field(), field().mul_code(code_, field().inv_code(o.code_))};
}

FieldElement FieldElement::inv() const {
  return {&field(), field().inv_code(code_)};
}

FieldElement FieldElement::pow(uint64_t e) const {
  FieldElement r = field().one(), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string FieldElement::str() const { return field().to_string(*this); }

Field::Field(uint32_t p, uint32_t m, std::vector<uint32_t> modulus)
    : p_(p), m_(m) {
  if (!is_prime(p)) fail(errc::usage, "p = " + std::to_string(p) + " is not prime");
  if (m == 0) fail(errc::usage, "extension degree must be >= 1");
  q_ = 1;
  for (uint32_t i = 0; i < m; ++i) {
    q_ *= p;
    if (q_ > kMaxQ) fail(errc::out_of_scope, "field size exceeds 2^20");
  }
  if (modulus.empty()) {
    if (m == 1) {
      mod_ = {0, 1};  // t
    } else {
      // First monic irreducible of degree m in enumeration order.
      for (uint64_t code = 0;; ++code) {
        if (code >= q_) fail(errc::domain, "no irreducible modulus found");
        FpPoly f = decode_poly(code, p);
        f.resize(m + 1, 0);
        f[m] = 1;
        if (is_irreducible(f, p)) {
          mod_ = f;
          break;
        }
      }
    }
  } else {
    for (auto& c : modulus) c %= p;
    if (modulus.size() != m + 1 || modulus[m] != 1)
      fail(errc::usage, "modulus must be monic of degree m");
    if (m > 1 && !is_irreducible(modulus, p))
      fail(errc::usage, "modulus is reducible");
    mod_ = modulus;
  }
}

FieldElement Field::gen() const {
  if (m_ == 1) fail(errc::domain, "prime field has no generator t");
  return {this, p_};
}

FieldElement Field::from_int(int64_t n) const {
  int64_t r = n % int64_t(p_);
  if (r < 0) r += p_;
  return {this, uint32_t(r)};
}

FieldElement Field::element(uint64_t index) const {
  if (index >= q_) fail(errc::usage, "element index out of range");
  return {this, uint32_t(index)};
}

FieldElement Field::from_coeffs(const std::vector<uint32_t>& c) const {
  if (c.size() > m_) fail(errc::usage, "too many coefficients");
  uint64_t code = 0;
  for (size_t i = c.size(); i-- > 0;) code = code * p_ + (c[i] % p_);
  return {this, uint32_t(code)};
}

std::vector<uint32_t> Field::coeffs(FieldElement x) const {
  auto d = decode(x.code());
  d.resize(m_, 0);
  return d;
}

std::vector<uint32_t> Field::decode(uint32_t code) const {
  std::vector<uint32_t> d;
  d.reserve(m_);
  while (code) {
    d.push_back(code % p_);
    code /= p_;
  }
  return d;
}

uint32_t Field::encode(const std::vector<uint32_t>& digits) const {
  uint64_t code = 0;
  for (size_t i = digits.size(); i-- > 0;) code = code * p_ + digits[i];
  return uint32_t(code);
}

uint32_t Field::add_code(uint32_t a, uint32_t b) const {
  if (m_ == 1) return (a + b) % p_;
  auto da = decode(a), db = decode(b);
  if (da.size() < db.size()) da.swap(db);
  for (size_t i = 0; i < db.size(); ++i) da[i] = (da[i] + db[i]) % p_;
  return encode(da);
}

uint32_t Field::neg_code(uint32_t a) const {
  if (m_ == 1) return a ? p_ - a : 0;
  auto d = decode(a);
  for (auto& c : d) c = c ? p_ - c : 0;
  return encode(d);
}

uint32_t Field::sub_code(uint32_t a, uint32_t b) const {
  return add_code(a, neg_code(b));
}

uint32_t Field::mul_code(uint32_t a, uint32_t b) const {
  if (m_ == 1) return uint32_t((uint64_t(a) * b) % p_);
  auto prod = mul(decode(a), decode(b), p_);
  return encode(mod(std::move(prod), mod_, p_));
}

uint32_t Field::inv_code(uint32_t a) const {
  if (a == 0) fail(errc::domain, "division by zero in F_q");
  if (m_ == 1) return inv_mod_p(a, p_);
  // Extended Euclid on (a, modulus) over F_p[t].
  FpPoly r0 = mod_, r1 = decode(a), t0, t1 = {1};
  while (!r1.empty()) {
    // r0 = qq*r1 + r2, and carry t along.
    FpPoly r2 = r0;
    FpPoly qq;
    uint32_t linv = inv_mod_p(r1.back(), p_);
    while (r2.size() >= r1.size() && !r2.empty()) {
      uint64_t c = (uint64_t(r2.back()) * linv) % p_;
      size_t shift = r2.size() - r1.size();
      if (qq.size() < shift + 1) qq.resize(shift + 1, 0);
      qq[shift] = uint32_t((qq[shift] + c) % p_);
      for (size_t i = 0; i < r1.size(); ++i) {
        uint64_t sub = (c * r1[i]) % p_;
        r2[shift + i] = uint32_t((r2[shift + i] + p_ - sub) % p_);
      }
      trim(r2);
    }
    FpPoly t2 = t0;  // t2 = t0 - qq*t1
    FpPoly qt = mul(qq, t1, p_);
    if (t2.size() < qt.size()) t2.resize(qt.size(), 0);
    for (size_t i = 0; i < qt.size(); ++i)
      t2[i] = (t2[i] + p_ - qt[i]) % p_;
    trim(t2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 = gcd, a unit constant since the modulus is irreducible.
  uint32_t scale = inv_mod_p(r0[0], p_);
  for (auto& c : t0) c = uint32_t((uint64_t(c) * scale) % p_);
  return encode(t0);
}

std::string Field::to_string(FieldElement x) const {
  if (m_ == 1) return std::to_string(x.code());
  auto c = coeffs(x);
  std::ostringstream os;
  os << c[0];
  for (uint32_t i = 1; i < m_; ++i) {
    os << "+" << c[i] << "*t";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

FieldElement Field::parse(const std::string& s) const {
  std::vector<uint32_t> c(m_, 0);
  size_t i = 0;
  auto skipws = [&] {
    while (i < s.size() && isspace(uint8_t(s[i]))) ++i;
  };
  skipws();
  if (i == s.size()) fail(errc::usage, "empty field element");
  bool first = true;
  while (true) {
    skipws();
    int sign = 1;
    if (!first || (i < s.size() && (s[i] == '+' || s[i] == '-'))) {
      if (i >= s.size() || (s[i] != '+' && s[i] != '-'))
        fail(errc::usage, "bad field element: " + s);
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skipws();
    }
    first = false;
    uint64_t k = 1;
    bool have_num = false;
    if (i < s.size() && isdigit(uint8_t(s[i]))) {
      k = 0;
      while (i < s.size() && isdigit(uint8_t(s[i]))) k = k * 10 + (s[i++] - '0');
      have_num = true;
      skipws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skipws();
      }
    }
    uint32_t pow = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      pow = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        pow = 0;
        if (i >= s.size() || !isdigit(uint8_t(s[i])))
          fail(errc::usage, "bad exponent in: " + s);
        while (i < s.size() && isdigit(uint8_t(s[i]))) pow = pow * 10 + (s[i++] - '0');
      }
    } else if (!have_num) {
      fail(errc::usage, "bad field element: " + s);
    }
    if (pow >= m_ && k % p_ != 0)
      fail(errc::usage, "t^" + std::to_string(pow) + " out of range for this field");
    if (pow < m_) {
      uint64_t v = (k % p_) * (sign < 0 ? p_ - 1 : 1) % p_;
      c[pow] = uint32_t((c[pow] + v) % p_);
    }
    skipws();
    if (i == s.size()) break;
  }
  return from_coeffs(c);
}

std::shared_ptr<const Field> make_field(uint32_t p, uint32_t m,
                                        std::vector<uint32_t> modulus) {
  static std::mutex mu;
  static std::map<std::tuple<uint32_t, uint32_t, std::vector<uint32_t>>,
                  std::shared_ptr<const Field>>
      cache;
  auto f = std::make_shared<const Field>(p, m, modulus);
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(p, m, f->modulus());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  cache[key] = f;
  return f;
}

std::shared_ptr<const Field> make_field_q(uint64_t q) {
  if (q < 2 || q > kMaxQ) fail(errc::usage, "q out of range");
  for (uint32_t p = 2; uint64_t(p) * p <= q; ++p) {
    if (q % p == 0) {
      uint32_t m = 0;
      uint64_t r = q;
      while (r % p == 0) {
        r /= p;
        ++m;
      }
      if (r != 1) fail(errc::usage, std::to_string(q) + " is not a prime power");
      return make_field(p, m);
    }
  }
  return make_field(uint32_t(q), 1);  // q itself prime
}

Embedding::Embedding(const Field& from, const Field& to)
    : from_(&from), to_(&to) {
  if (from.p() != to.p() || to.m() % from.m() != 0)
    fail(errc::domain, "no embedding: target is not an extension of source");
  uint32_t p = from.p(), a = from.m();
  // Image of t: first root of the source modulus in the target field.
  FieldElement root = to.zero();
  bool found = false;
  if (a == 1) {
    root = to.zero();  // unused: prime subfield maps by code
    found = true;
  } else {
    for (uint64_t i = 0; i < to.q(); ++i) {
      FieldElement x = to.element(i);
      FieldElement acc = to.zero(), xp = to.one();
      for (uint32_t d = 0; d <= a; ++d) {
        acc += to.from_int(from.modulus()[d]) * xp;
        xp *= x;
      }
      if (acc.is_zero()) {
        root = x;
        found = true;
        break;
      }
    }
  }
  if (!found) fail(errc::domain, "source modulus has no root in target");
  gen_pows_.resize(a);
  FieldElement acc = to.one();
  for (uint32_t i = 0; i < a; ++i) {
    gen_pows_[i] = acc.code();
    acc *= root;
  }
  // Build the F_p-linear solver for down(): digits(map(t^j)) form the
  // columns of an (b x a) matrix; row-reduce [M | I] once.
  uint32_t b = to.m();
  std::vector<std::vector<uint32_t>> rows(b, std::vector<uint32_t>(a + b, 0));
  for (uint32_t j = 0; j < a; ++j) {
    auto digits = to.coeffs(FieldElement(&to, gen_pows_[j]));
    for (uint32_t i = 0; i < b; ++i) rows[i][j] = digits[i];
  }
  for (uint32_t i = 0; i < b; ++i) rows[i][a + i] = 1;
  pivot_col_.assign(b, -1);
  uint32_t rank = 0;
  for (uint32_t col = 0; col < a && rank < b; ++col) {
    uint32_t piv = rank;
    while (piv < b && rows[piv][col] == 0) ++piv;
    if (piv == b) continue;
    std::swap(rows[rank], rows[piv]);
    uint32_t scale = inv_mod_p(rows[rank][col], p);
    for (auto& v : rows[rank]) v = uint32_t((uint64_t(v) * scale) % p);
    for (uint32_t r = 0; r < b; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      uint64_t c = rows[r][col];
      for (uint32_t k = 0; k < a + b; ++k)
        rows[r][k] = uint32_t((rows[r][k] + (p - c) * rows[rank][k]) % p);
    }
    pivot_col_[rank] = int(col);
    ++rank;
  }
  solve_rows_ = std::move(rows);
}

FieldElement Embedding::map_code(uint32_t code) const {
  if (from_->m() == 1) return to_->from_int(int64_t(code));
  auto digits = from_->coeffs(FieldElement(from_, code));
  FieldElement r = to_->zero();
  for (uint32_t i = 0; i < from_->m(); ++i)
    r += to_->from_int(digits[i]) * FieldElement(to_, gen_pows_[i]);
  return r;
}

FieldElement Embedding::operator()(FieldElement x) const {
  if (&x.field() != from_) fail(errc::domain, "embedding source mismatch");
  return map_code(x.code());
}

bool Embedding::in_image(FieldElement y) const {
  if (&y.field() != to_) return false;
  if (from_->m() == 1) return y.code() < from_->p();
  // Consistency of M c = digits(y) under the stored reduction.
  uint32_t p = to_->p(), a = from_->m(), b = to_->m();
  auto digits = to_->coeffs(y);
  for (uint32_t r = 0; r < b; ++r) {
    if (pivot_col_[r] >= 0) continue;
    uint64_t acc = 0;
    for (uint32_t i = 0; i < b; ++i)
      acc += uint64_t(solve_rows_[r][a + i]) * digits[i];
    if (acc % p != 0) return false;
  }
  return true;
}

FieldElement Embedding::down(FieldElement y) const {
  if (&y.field() != to_) fail(errc::domain, "embedding target mismatch");
  if (from_->m() == 1) {
    if (y.code() >= from_->p())
      fail(errc::domain, "element not in prime subfield: " + y.str());
    return from_->element(y.code());
  }
  if (!in_image(y)) fail(errc::domain, "element not in embedded subfield: " + y.str());
  uint32_t p = to_->p(), a = from_->m(), b = to_->m();
  auto digits = to_->coeffs(y);
  std::vector<uint32_t> c(a, 0);
  for (uint32_t r = 0; r < b; ++r) {
    if (pivot_col_[r] < 0) continue;
    uint64_t acc = 0;
    for (uint32_t i = 0; i < b; ++i)
      acc += uint64_t(solve_rows_[r][a + i]) * digits[i];
    c[pivot_col_[r]] = uint32_t(acc % p);
  }
  return from_->from_coeffs(c);
}

}  // namespace surfres
