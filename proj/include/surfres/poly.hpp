#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "surfres/field.hpp"

namespace surfres {

// Dense univariate polynomial over F_q.  Coefficients are stored lowest
// degree first with no trailing zeros; the zero polynomial has an empty
// coefficient vector and degree -1.
class Poly {
public:
  explicit Poly(const Field* f) : f_(f) {}
  Poly(const Field* f, std::vector<FieldElement> c);

  static Poly constant(FieldElement c);
  static Poly x(const Field* f);
  // Coefficients given as integers mod p (prime-subfield shorthand).
  static Poly from_ints(const Field* f, const std::vector<int64_t>& c);

  const Field& field() const { return *f_; }
  const Field* fptr() const { return f_; }
  int deg() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  FieldElement coeff(int i) const;
  FieldElement lead() const;
  bool is_monic() const { return !c_.empty() && lead() == f_->one(); }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(FieldElement s) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Quotient and remainder; errc::domain on zero divisor.
  std::pair<Poly, Poly> divrem(const Poly& d) const;
  Poly operator/(const Poly& d) const;  // errc::domain if not exact
  Poly operator%(const Poly& d) const { return divrem(d).second; }
  std::optional<Poly> divided_exactly(const Poly& d) const;

  Poly monic() const;
  Poly derivative() const;
  Poly pow(uint32_t e) const;
  FieldElement eval(FieldElement a) const;
  Poly shifted(FieldElement a) const;    // p(x + a)
  Poly reversed() const;                 // x^deg * p(1/x)
  int val0() const;                      // multiplicity of the root 0; errc::domain on zero poly

  std::string str(const std::string& var = "x") const;

private:
  const Field* f_;
  std::vector<FieldElement> c_;
  void trim();
};

Poly gcd(const Poly& a, const Poly& b);  // monic gcd (zero if both zero)

// All roots of f in the field of definition, with multiplicity, in
// enumeration order (exhaustive scan; desk scale).
std::vector<FieldElement> roots_in_field(const Poly& f);

// Distinct-degree splitting of the squarefree part: the degrees d for
// which f has an irreducible factor of degree d, ascending.
std::vector<uint32_t> irreducible_factor_degrees(const Poly& f);

// Roots of f over F_{q^d} (d = ext_degree >= 1) with multiplicity, in
// enumeration order of the extension, together with the extension field
// (interned) and the embedding used.  errc::out_of_scope if q^d > 2^20.
struct ExtensionRoots {
  std::shared_ptr<const Field> ext;
  Embedding emb;  // base -> ext
  std::vector<FieldElement> roots;
};
ExtensionRoots roots_in_extension(const Poly& f, uint32_t ext_degree);

// Factorization into monic irreducibles with multiplicity (desk scale:
// via splitting-field roots and Frobenius orbits).  Constant factored out.
struct PolyFactor {
  Poly p;
  uint32_t mult;
};
std::vector<PolyFactor> factor_poly(const Poly& f);

// Reduced rational function num/den over F_q[u]: den monic, gcd(num,den)=1.
class UniRat {
public:
  explicit UniRat(const Field* f) : num_(f), den_(Poly::constant(f->one())) {}
  UniRat(Poly num, Poly den);  // reduces; errc::domain if den = 0
  static UniRat of(Poly p);
  static UniRat constant(FieldElement c);

  const Field& field() const { return num_.field(); }
  const Field* fptr() const { return num_.fptr(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.deg() == 0; }

  UniRat operator-() const;
  UniRat operator+(const UniRat& o) const;
  UniRat operator-(const UniRat& o) const;
  UniRat operator*(const UniRat& o) const;
  UniRat operator/(const UniRat& o) const;
  UniRat& operator+=(const UniRat& o) { return *this = *this + o; }
  UniRat& operator-=(const UniRat& o) { return *this = *this - o; }
  UniRat& operator*=(const UniRat& o) { return *this = *this * o; }
  bool operator==(const UniRat& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const UniRat& o) const { return !(*this == o); }

  UniRat inv() const;
  UniRat derivative() const;
  FieldElement eval(FieldElement a) const;  // errc::domain on a pole
  long val0() const;  // valuation at u = 0; errc::domain for the zero function

  // Exact coefficient of u^{-1} in the Laurent expansion at u = 0.
  FieldElement residue0() const;
  // Classical simple-pole shortcut num(0)/den'(0); errc::domain unless the
  // pole at 0 is exactly simple.  Kept as an independent cross-check path.
  FieldElement residue0_simple() const;
  // Residue of (this du) at u = a, and at u = infinity.
  FieldElement residue_at(FieldElement a) const;
  FieldElement residue_at_infinity() const;

  UniRat composed_with_shift(FieldElement a) const;  // r(u + a)

  std::string str(const std::string& var = "u") const;

private:
  Poly num_, den_;
  void reduce();
};

Poly embed(const Embedding& e, const Poly& p);
UniRat embed(const Embedding& e, const UniRat& r);

}  // namespace surfres
