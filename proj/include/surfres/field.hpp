#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "surfres/errors.hpp"

namespace surfres {

class Field;

// An element of F_q referencing its field.  The coefficient vector
// (c_0,...,c_{m-1}) over F_p is packed as the integer code sum c_i p^i,
// so q <= 2^20 always fits in 32 bits.  Elements are cheap values; the
// Field they point at must outlive them (make_field() interns fields for
// the lifetime of the process, which is how every dynamic caller gets one).
class FieldElement {
public:
  FieldElement() = default;
  FieldElement(const Field* f, uint32_t code) : f_(f), code_(code) {}

  const Field& field() const;
  uint32_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }

  FieldElement operator-() const;
  FieldElement operator+(FieldElement o) const;
  FieldElement operator-(FieldElement o) const;
  FieldElement operator*(FieldElement o) const;
  FieldElement operator/(FieldElement o) const;  // errc::domain on /0
  FieldElement& operator+=(FieldElement o) { return *this = *this + o; }
  FieldElement& operator-=(FieldElement o) { return *this = *this - o; }
  FieldElement& operator*=(FieldElement o) { return *this = *this * o; }
  FieldElement& operator/=(FieldElement o) { return *this = *this / o; }

  FieldElement inv() const;
  FieldElement pow(uint64_t e) const;

  bool operator==(FieldElement o) const {
    return f_ == o.f_ && code_ == o.code_;
  }
  bool operator!=(FieldElement o) const { return !(*this == o); }

  std::string str() const;

private:
  const Field* f_ = nullptr;
  uint32_t code_ = 0;
};

// F_q = F_p[t]/(modulus), q = p^m <= 2^20.  The modulus is monic of degree
// m and verified irreducible at construction by trial division against all
// monic polynomials of degree <= m/2.  Elements are enumerated by
// increasing packed code, i.e. lexicographically on the coefficient tuple
// read most-significant-first; elements 0..p-1 are the prime subfield.
class Field {
public:
  // modulus: coefficients c_0..c_m with c_m = 1, entries reduced mod p.
  // Empty selects the default modulus: the first monic irreducible of
  // degree m in the enumeration above (for m = 1 the modulus is just t).
  Field(uint32_t p, uint32_t m, std::vector<uint32_t> modulus = {});

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  uint32_t p() const { return p_; }
  uint32_t m() const { return m_; }
  uint64_t q() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return mod_; }

  FieldElement zero() const { return {this, 0}; }
  FieldElement one() const { return {this, 1}; }
  FieldElement gen() const;  // t itself (errc::domain if m == 1)
  FieldElement from_int(int64_t n) const;
  FieldElement element(uint64_t index) const;  // canonical enumeration
  FieldElement from_coeffs(const std::vector<uint32_t>& c) const;
  std::vector<uint32_t> coeffs(FieldElement x) const;

  // Text form: plain integer for m = 1, else "c0+c1*t+...+c_{m-1}*t^{m-1}"
  // with every position printed.  parse() also accepts partial sums,
  // bare "t", "t^i" and "k*t^i" in any order.
  std::string to_string(FieldElement x) const;
  FieldElement parse(const std::string& s) const;

  uint32_t add_code(uint32_t a, uint32_t b) const;
  uint32_t sub_code(uint32_t a, uint32_t b) const;
  uint32_t neg_code(uint32_t a) const;
  uint32_t mul_code(uint32_t a, uint32_t b) const;
  uint32_t inv_code(uint32_t a) const;

private:
  uint32_t p_, m_;
  uint64_t q_;
  std::vector<uint32_t> mod_;

  std::vector<uint32_t> decode(uint32_t code) const;
  uint32_t encode(const std::vector<uint32_t>& digits) const;
};

// Interned field factory: one Field instance per (p, m, modulus) for the
// process lifetime, so FieldElement's raw pointer can never dangle.
std::shared_ptr<const Field> make_field(uint32_t p, uint32_t m,
                                        std::vector<uint32_t> modulus = {});

// Convenience: q = p^m decomposed (errc::usage if q is not a prime power).
std::shared_ptr<const Field> make_field_q(uint64_t q);

// Ring embedding F_{p^a} -> F_{p^b} for a | b, sending t to the first root
// (in enumeration order) of the source modulus in the target field.
class Embedding {
public:
  Embedding(const Field& from, const Field& to);

  const Field& from() const { return *from_; }
  const Field& to() const { return *to_; }

  FieldElement operator()(FieldElement x) const;
  // Partial inverse; errc::domain if y is not in the image.
  FieldElement down(FieldElement y) const;
  bool in_image(FieldElement y) const;

private:
  const Field *from_, *to_;
  std::vector<uint32_t> gen_pows_;  // codes of image(t)^0..^{a-1}
  // Row-reduced solver for  M c = digits(y)  over F_p, built once.
  std::vector<std::vector<uint32_t>> solve_rows_;
  std::vector<int> pivot_col_;

  FieldElement map_code(uint32_t code) const;
};

}  // namespace surfres
