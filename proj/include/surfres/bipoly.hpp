#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfres/poly.hpp"

namespace surfres {

class BiRat;

// Dense bivariate polynomial over F_q, stored as y-coefficients: c_[j] is
// the Poly in x multiplying y^j, with no trailing zero coefficients.
class BiPoly {
public:
  explicit BiPoly(const Field* f) : f_(f) {}
  BiPoly(const Field* f, std::vector<Poly> ycoeffs);

  static BiPoly constant(FieldElement c);
  static BiPoly x(const Field* f);
  static BiPoly y(const Field* f);
  static BiPoly of_x(const Poly& p);  // p(x)
  static BiPoly of_y(const Poly& p);  // p(y)
  // rows[j][i] is the integer coefficient of x^i y^j mod p.
  static BiPoly from_ints(const Field* f,
                          const std::vector<std::vector<int64_t>>& rows);

  const Field& field() const { return *f_; }
  const Field* fptr() const { return f_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_[0].deg() <= 0); }
  int deg_y() const { return int(c_.size()) - 1; }
  int deg_x() const;
  int total_deg() const;  // -1 for the zero polynomial
  Poly ycoeff(int j) const;
  FieldElement coeff(int i, int j) const;
  Poly lead_y() const;  // ycoeff(deg_y())

  BiPoly operator-() const;
  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator*(FieldElement s) const;
  BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
  BiPoly& operator-=(const BiPoly& o) { return *this = *this - o; }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  bool operator==(const BiPoly& o) const { return f_ == o.f_ && c_ == o.c_; }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  BiPoly pow(uint32_t e) const;
  FieldElement eval(FieldElement a, FieldElement b) const;
  Poly at_x(FieldElement a) const;  // univariate in y
  Poly at_y(FieldElement b) const;  // univariate in x
  BiPoly partial_x() const;
  BiPoly partial_y() const;
  BiPoly shifted(FieldElement a, FieldElement b) const;  // p(x+a, y+b)
  BiPoly swapped() const;                                // p(y, x)
  BiRat subst(const BiRat& xe, const BiRat& ye) const;

  std::optional<BiPoly> divided_exactly(const BiPoly& d) const;
  BiPoly operator/(const BiPoly& d) const;  // errc::domain if not exact

  Poly content_x() const;  // monic gcd of the y-coefficients
  BiPoly primitive_part() const;

  // Graded-lex leading monomial (total degree first, then higher y power)
  // and the canonical form with that coefficient scaled to 1.
  FieldElement grlex_lead() const;  // errc::domain on zero
  BiPoly normalized() const;

  // Flat encoding usable as an ordering/dictionary key.
  std::vector<uint32_t> key() const;

  std::string str(const std::string& vx = "x", const std::string& vy = "y") const;

private:
  const Field* f_;
  std::vector<Poly> c_;
  void trim();
};

BiPoly gcd(const BiPoly& a, const BiPoly& b);  // normalized

// Resultant with respect to y: a polynomial in x, zero iff a and b share a
// component.  Sizes are desk scale; errc::out_of_scope beyond deg 12.
Poly resultant_y(const BiPoly& a, const BiPoly& b);
Poly resultant_x(const BiPoly& a, const BiPoly& b);

// Factorization over F_q into normalized irreducibles by exhaustive search
// over candidate divisors of increasing total degree.  The search space is
// bounded; errc::out_of_scope when certification would need more than ~4M
// candidates (large q with half-degree >= 3).
struct BiPolyFactor {
  BiPoly p;
  uint32_t mult;
};
struct BiFactorization {
  FieldElement unit;
  std::vector<BiPolyFactor> factors;
};
BiFactorization factor_bipoly(const BiPoly& f);
bool is_irreducible(const BiPoly& f);

// Reduced bivariate rational function: gcd(num, den) constant and den
// normalized to grlex-leading coefficient 1.
class BiRat {
public:
  explicit BiRat(const Field* f)
      : num_(f), den_(BiPoly::constant(f->one())) {}
  BiRat(BiPoly num, BiPoly den);  // reduces; errc::domain if den = 0
  static BiRat of(BiPoly p);
  static BiRat constant(FieldElement c);

  const Field& field() const { return num_.field(); }
  const Field* fptr() const { return num_.fptr(); }
  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_constant(); }

  BiRat operator-() const;
  BiRat operator+(const BiRat& o) const;
  BiRat operator-(const BiRat& o) const;
  BiRat operator*(const BiRat& o) const;
  BiRat operator/(const BiRat& o) const;
  BiRat& operator+=(const BiRat& o) { return *this = *this + o; }
  BiRat& operator-=(const BiRat& o) { return *this = *this - o; }
  BiRat& operator*=(const BiRat& o) { return *this = *this * o; }
  bool operator==(const BiRat& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const BiRat& o) const { return !(*this == o); }

  BiRat inv() const;
  FieldElement eval(FieldElement a, FieldElement b) const;  // errc on pole
  BiRat subst(const BiRat& xe, const BiRat& ye) const;

  // Restriction to a line x = a (resp. y = b) as a univariate rational
  // function, cancelling shared (x - a) powers first.  errc::domain if the
  // denominator vanishes identically on the line after cancellation.
  UniRat at_x(FieldElement a) const;
  UniRat at_y(FieldElement b) const;

  std::string str(const std::string& vx = "x", const std::string& vy = "y") const;

private:
  BiPoly num_, den_;
  void reduce();
};

BiPoly embed(const Embedding& e, const BiPoly& p);
BiRat embed(const Embedding& e, const BiRat& r);

}  // namespace surfres
