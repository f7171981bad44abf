#include "surfres/poly.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"

using namespace surfres;

namespace {

Poly random_poly(const Field& F, int max_deg, std::mt19937& rng) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  std::uniform_int_distribution<uint64_t> dc(0, F.q() - 1);
  int d = dd(rng);
  std::vector<FieldElement> c;
  for (int i = 0; i <= d; ++i) c.push_back(F.element(dc(rng)));
  return Poly(&F, std::move(c));
}

}  // namespace

TEST_CASE("divrem reconstructs and bounds the remainder") {
  auto F = make_field(7, 1);
  std::mt19937 rng(20260822);
  for (int it = 0; it < 200; ++it) {
    Poly f = random_poly(*F, 8, rng);
    Poly d = random_poly(*F, 4, rng);
    if (d.is_zero()) {
      CHECK_THROWS_AS(f.divrem(d), error);
      continue;
    }
    auto [q, r] = f.divrem(d);
    CHECK(q * d + r == f);
    CHECK(r.deg() < d.deg());
  }
}

TEST_CASE("gcd of constructed products recovers the common part") {
  auto F = make_field(5, 1);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> de(0, 2);
  for (int it = 0; it < 100; ++it) {
    Poly a = Poly::constant(F->from_int(2)), b = Poly::constant(F->from_int(3));
    Poly expect = Poly::constant(F->one());
    for (int64_t root = 0; root < 5; ++root) {
      Poly lin = Poly::from_ints(F.get(), {-root, 1});
      int e = de(rng), f = de(rng);
      a *= lin.pow(uint32_t(e));
      b *= lin.pow(uint32_t(f));
      expect *= lin.pow(uint32_t(std::min(e, f)));
    }
    CHECK(gcd(a, b) == expect);
  }
}

TEST_CASE("roots_in_field finds every root with multiplicity") {
  auto F = make_field(7, 1);
  // (x-2)^2 (x-5) (x^2+1): x^2+1 has no root mod 7 (squares are 0,1,2,4).
  Poly f = Poly::from_ints(F.get(), {-2, 1}).pow(2) *
           Poly::from_ints(F.get(), {-5, 1}) *
           Poly::from_ints(F.get(), {1, 0, 1});
  auto r = roots_in_field(f);
  REQUIRE(r.size() == 3);
  CHECK(r[0] == F->from_int(2));
  CHECK(r[1] == F->from_int(2));
  CHECK(r[2] == F->from_int(5));

  // x^q - x splits completely over F_q.
  auto F8 = make_field(2, 3);
  Poly xq = Poly::x(F8.get()).pow(8) - Poly::x(F8.get());
  CHECK(roots_in_field(xq).size() == 8);
}

TEST_CASE("shifted and reversed behave as substitutions") {
  auto F = make_field(11, 1);
  std::mt19937 rng(99);
  for (int it = 0; it < 50; ++it) {
    Poly f = random_poly(*F, 6, rng);
    FieldElement a = F->element(std::uniform_int_distribution<uint64_t>(0, 10)(rng));
    for (int64_t b = 0; b < 11; ++b)
      CHECK(f.shifted(a).eval(F->from_int(b)) == f.eval(a + F->from_int(b)));
  }
  Poly g = Poly::from_ints(F.get(), {3, 0, 1});  // x^2 + 3
  CHECK(g.reversed() == Poly::from_ints(F.get(), {1, 0, 3}));
  Poly h = Poly::from_ints(F.get(), {0, 2, 1});  // x^2 + 2x
  CHECK(h.reversed() == Poly::from_ints(F.get(), {1, 2}));
}

TEST_CASE("irreducible factor degrees via distinct-degree splitting") {
  auto F = make_field(3, 1);
  Poly x = Poly::x(F.get());
  // x^9 - x is the product of all monic irreducibles of degree dividing 2.
  CHECK(irreducible_factor_degrees(x.pow(9) - x) == std::vector<uint32_t>{1, 2});
  // x^2+1 is irreducible over F_3; its square has the same radical.
  Poly q = Poly::from_ints(F.get(), {1, 0, 1});
  CHECK(irreducible_factor_degrees(q) == std::vector<uint32_t>{2});
  CHECK(irreducible_factor_degrees(q * q) == std::vector<uint32_t>{2});
  // Cube of a linear (multiplicity = char) still reports the factor.
  Poly lin = Poly::from_ints(F.get(), {-1, 1});
  CHECK(irreducible_factor_degrees(lin.pow(3)) == std::vector<uint32_t>{1});
  CHECK(irreducible_factor_degrees(lin.pow(3) * q) == std::vector<uint32_t>{1, 2});
  // x^27 - x adds the degree-3 irreducibles.
  CHECK(irreducible_factor_degrees(x.pow(27) - x) == std::vector<uint32_t>{1, 3});
}

TEST_CASE("roots in a quadratic extension are Frobenius conjugates") {
  auto F3 = make_field(3, 1);
  Poly q = Poly::from_ints(F3.get(), {1, 0, 1});  // x^2 + 1
  auto er = roots_in_extension(q, 2);
  REQUIRE(er.roots.size() == 2);
  CHECK(er.ext->q() == 9);
  CHECK(er.roots[0].pow(3) == er.roots[1]);
  Poly qe = embed(er.emb, q);
  for (auto& r : er.roots) CHECK(qe.eval(r).is_zero());
}

TEST_CASE("factor_poly reassembles and finds known factors") {
  auto F = make_field(5, 1);
  Poly q = Poly::from_ints(F.get(), {2, 0, 1});   // x^2+2, no root mod 5
  Poly lin = Poly::from_ints(F.get(), {1, 1});    // x+1
  Poly f = q * lin.pow(2) * Poly::constant(F->from_int(3));
  auto fac = factor_poly(f);
  REQUIRE(fac.size() == 2);
  Poly prod = Poly::constant(f.lead());
  for (auto& [p, mult] : fac) {
    CHECK(p.is_monic());
    prod *= p.pow(mult);
    if (p.deg() == 2) {
      CHECK(p == q);
      CHECK(mult == 1);
    } else {
      CHECK(p == lin);
      CHECK(mult == 2);
    }
  }
  CHECK(prod == f);

  // Degree-3 irreducible over F_2 recovered intact.
  auto F2 = make_field(2, 1);
  Poly c = Poly::from_ints(F2.get(), {1, 1, 0, 1});  // x^3+x+1
  auto fc = factor_poly(c * c);
  REQUIRE(fc.size() == 1);
  CHECK(fc[0].p == c);
  CHECK(fc[0].mult == 2);
}

TEST_CASE("rational functions stay reduced and evaluate consistently") {
  auto F = make_field(7, 1);
  std::mt19937 rng(424242);
  for (int it = 0; it < 100; ++it) {
    Poly n1 = random_poly(*F, 4, rng), d1 = random_poly(*F, 3, rng);
    Poly n2 = random_poly(*F, 4, rng), d2 = random_poly(*F, 3, rng);
    if (d1.is_zero() || d2.is_zero()) continue;
    UniRat r1(n1, d1), r2(n2, d2);
    CHECK(r1.den().is_monic());
    CHECK(gcd(r1.num(), r1.den()).deg() <= 0);
    UniRat s = r1 + r2, p = r1 * r2;
    for (int64_t a = 0; a < 7; ++a) {
      FieldElement x = F->from_int(a);
      if (r1.den().eval(x).is_zero() || r2.den().eval(x).is_zero()) continue;
      CHECK(s.eval(x) == r1.eval(x) + r2.eval(x));
      CHECK(p.eval(x) == r1.eval(x) * r2.eval(x));
    }
    if (!r2.is_zero()) {
      UniRat q = r1 / r2;
      CHECK(q * r2 == r1);
    }
  }
}

TEST_CASE("residue at 0 matches partial fractions") {
  auto F = make_field(7, 1);
  // (3u+2)/(u^2(u+1)) = 1/u + 2/u^2 - 1/(u+1), so the residue is 1.
  UniRat r(Poly::from_ints(F.get(), {2, 3}),
           Poly::from_ints(F.get(), {0, 0, 1}) * Poly::from_ints(F.get(), {1, 1}));
  CHECK(r.residue0() == F->one());
  CHECK(r.val0() == -2);
  // 1/u and a regular function.
  UniRat inv_u(Poly::constant(F->one()), Poly::x(F.get()));
  CHECK(inv_u.residue0() == F->one());
  UniRat reg(Poly::from_ints(F.get(), {1, 2}), Poly::from_ints(F.get(), {1, 1}));
  CHECK(reg.residue0() == F->zero());
  // Shifting moves the pole: residue of 1/(u-3) at 3 is 1.
  UniRat shifted(Poly::constant(F->one()), Poly::from_ints(F.get(), {-3, 1}));
  CHECK(shifted.residue_at(F->from_int(3)) == F->one());
  CHECK(shifted.residue0() == F->zero());
}

TEST_CASE("derivatives have zero residue everywhere") {
  auto F = make_field(5, 1);
  std::mt19937 rng(1331);
  int tested = 0;
  for (int it = 0; it < 100; ++it) {
    Poly n = random_poly(*F, 4, rng), d = random_poly(*F, 3, rng);
    if (d.is_zero() || n.is_zero()) continue;
    UniRat f(n, d);
    UniRat df = f.derivative();
    for (int64_t a = 0; a < 5; ++a)
      CHECK(df.residue_at(F->from_int(a)) == F->zero());
    CHECK(df.residue_at_infinity() == F->zero());
    ++tested;
  }
  CHECK(tested > 50);
}

TEST_CASE("residues over all of P^1 sum to zero") {
  auto F = make_field(11, 1);
  std::mt19937 rng(60221023);
  std::uniform_int_distribution<int> dmult(1, 3);
  int tested = 0;
  for (int it = 0; it < 100; ++it) {
    // Denominator split over F_11 so every pole is rational.
    Poly den = Poly::constant(F->one());
    for (int64_t a = 0; a < 11; a += 2 + dmult(rng))
      den *= Poly::from_ints(F.get(), {-a, 1}).pow(uint32_t(dmult(rng)));
    if (den.deg() == 0) continue;
    Poly num = random_poly(*F, den.deg() + 2, rng);
    if (num.is_zero()) continue;
    UniRat f(num, den);
    FieldElement total = f.residue_at_infinity();
    for (int64_t a = 0; a < 11; ++a)
      total += f.residue_at(F->from_int(a));
    CHECK(total == F->zero());
    ++tested;
  }
  CHECK(tested > 50);
}

TEST_CASE("residue at infinity on closed forms") {
  auto F = make_field(7, 1);
  // du/u has residue 1 at 0 and -1 at infinity.
  UniRat inv_u(Poly::constant(F->one()), Poly::x(F.get()));
  CHECK(inv_u.residue_at_infinity() == -F->one());
  // u du is regular at every finite point and has no residue at infinity.
  UniRat u = UniRat::of(Poly::x(F.get()));
  CHECK(u.residue_at_infinity() == F->zero());
  // (u^2+1)/u: residue 1 at zero, -1 at infinity.
  UniRat g(Poly::from_ints(F.get(), {1, 0, 1}), Poly::x(F.get()));
  CHECK(g.residue_at_infinity() == -F->one());
}

TEST_CASE("simple-pole residue shortcut agrees and rejects higher order") {
  auto F = make_field(13, 1);
  std::mt19937 rng(5);
  int tested = 0;
  for (int it = 0; it < 100; ++it) {
    Poly num = random_poly(*F, 3, rng);
    if (num.is_zero()) continue;
    Poly den = Poly::x(F.get()) * Poly::from_ints(F.get(), {1, 1}) *
               Poly::from_ints(F.get(), {5, 1});
    UniRat f(num, den);
    if (f.val0() != -1) continue;  // num divisible by u: pole cancelled
    CHECK(f.residue0_simple() == f.residue0());
    ++tested;
  }
  CHECK(tested > 50);
  UniRat dbl(Poly::constant(F->one()), Poly::x(F.get()).pow(2));
  CHECK_THROWS_AS(dbl.residue0_simple(), error);
  UniRat reg(Poly::x(F.get()), Poly::from_ints(F.get(), {1, 1}));
  CHECK_THROWS_AS(reg.residue0_simple(), error);
}

TEST_CASE("embedding a rational function commutes with evaluation") {
  auto F3 = make_field(3, 1);
  auto F9 = make_field(3, 2);
  Embedding e(*F3, *F9);
  UniRat f(Poly::from_ints(F3.get(), {1, 2, 1}), Poly::from_ints(F3.get(), {2, 1}));
  UniRat fe = embed(e, f);
  for (int64_t a = 0; a < 3; ++a) {
    FieldElement x = F3->from_int(a);
    if (f.den().eval(x).is_zero()) continue;
    CHECK(fe.eval(e(x)) == e(f.eval(x)));
  }
  // Residues computed upstairs restrict to the base-field answer.
  CHECK(fe.residue_at(e(F3->one())) == e(f.residue_at(F3->one())));
}

TEST_CASE("printing uses caret powers and explicit coefficients") {
  auto F = make_field(5, 1);
  Poly f = Poly::from_ints(F.get(), {3, 0, 1});
  CHECK(f.str() == "3+x^2");
  CHECK(Poly(F.get()).str() == "0");
  CHECK(Poly::x(F.get()).str("u") == "u");
  UniRat r(Poly::constant(F->one()), Poly::x(F.get()));
  CHECK(r.str() == "(1)/(u)");
}
