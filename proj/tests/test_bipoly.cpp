#include "surfres/bipoly.hpp"

#include <random>

#include "doctest.h"

using namespace surfres;

namespace {

BiPoly random_bipoly(const Field& F, int dx, int dy, std::mt19937& rng) {
  std::uniform_int_distribution<uint64_t> dc(0, F.q() - 1);
  std::vector<std::vector<int64_t>> rows(size_t(dy + 1),
                                         std::vector<int64_t>(size_t(dx + 1)));
  for (auto& row : rows)
    for (auto& v : row) v = int64_t(dc(rng));
  return BiPoly::from_ints(&F, rows);
}

}  // namespace

TEST_CASE("arithmetic agrees with pointwise evaluation on the full grid") {
  auto F = make_field(5, 1);
  std::mt19937 rng(11);
  for (int it = 0; it < 50; ++it) {
    BiPoly f = random_bipoly(*F, 3, 2, rng), g = random_bipoly(*F, 2, 3, rng);
    BiPoly s = f + g, p = f * g;
    for (int64_t a = 0; a < 5; ++a)
      for (int64_t b = 0; b < 5; ++b) {
        FieldElement xa = F->from_int(a), yb = F->from_int(b);
        CHECK(s.eval(xa, yb) == f.eval(xa, yb) + g.eval(xa, yb));
        CHECK(p.eval(xa, yb) == f.eval(xa, yb) * g.eval(xa, yb));
      }
  }
}

TEST_CASE("degree bookkeeping") {
  auto F = make_field(7, 1);
  BiPoly f = BiPoly::from_ints(F.get(), {{1, 0, 3}, {0, 2}});  // 1+3x^2+2xy
  CHECK(f.deg_x() == 2);
  CHECK(f.deg_y() == 1);
  CHECK(f.total_deg() == 2);
  CHECK(f.coeff(2, 0) == F->from_int(3));
  CHECK(f.coeff(1, 1) == F->from_int(2));
  CHECK(BiPoly(F.get()).total_deg() == -1);
  CHECK(BiPoly::constant(F->one()).total_deg() == 0);
  // grlex prefers the higher y power among equal total degrees.
  CHECK(f.grlex_lead() == F->from_int(2));
  CHECK((BiPoly::x(F.get()) * BiPoly::y(F.get())).swapped() ==
        BiPoly::x(F.get()) * BiPoly::y(F.get()));
  BiPoly g = BiPoly::x(F.get()).pow(2) + BiPoly::y(F.get());
  CHECK(g.swapped() == BiPoly::y(F.get()).pow(2) + BiPoly::x(F.get()));
}

TEST_CASE("restrictions and partial derivatives") {
  auto F = make_field(7, 1);
  // f = x^2 y + 3y^2 + x
  BiPoly f = BiPoly::from_ints(F.get(), {{0, 1}, {0, 0, 1}, {3}});
  CHECK(f.partial_x() == BiPoly::from_ints(F.get(), {{1}, {0, 2}}));
  CHECK(f.partial_y() == BiPoly::from_ints(F.get(), {{0, 0, 1}, {6}}));
  for (int64_t a = 0; a < 7; ++a)
    for (int64_t b = 0; b < 7; ++b) {
      FieldElement xa = F->from_int(a), yb = F->from_int(b);
      CHECK(f.at_x(xa).eval(yb) == f.eval(xa, yb));
      CHECK(f.at_y(yb).eval(xa) == f.eval(xa, yb));
      CHECK(f.shifted(xa, yb).eval(F->zero(), F->zero()) == f.eval(xa, yb));
    }
}

TEST_CASE("exact division round trips and rejects non-divisors") {
  auto F = make_field(5, 1);
  std::mt19937 rng(23);
  for (int it = 0; it < 50; ++it) {
    BiPoly a = random_bipoly(*F, 2, 2, rng), b = random_bipoly(*F, 1, 2, rng);
    if (a.is_zero() || b.is_zero()) continue;
    BiPoly prod = a * b;
    auto q = prod.divided_exactly(b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
    BiPoly off = prod + BiPoly::constant(F->one());
    auto bad = off.divided_exactly(b);
    if (bad.has_value()) CHECK(*bad * b == off);
  }
}

TEST_CASE("bivariate gcd of constructed products") {
  auto F = make_field(5, 1);
  BiPoly x = BiPoly::x(F.get()), y = BiPoly::y(F.get());
  BiPoly common = x * y - BiPoly::constant(F->one());       // xy - 1
  BiPoly a = common * (x + y);
  BiPoly b = common * (x - y + BiPoly::constant(F->from_int(2)));
  CHECK(gcd(a, b) == common.normalized());
  // Coprime pair.
  CHECK(gcd(x + y, x - y).is_constant());
  // Content is shared through the x part.
  Poly px = Poly::from_ints(F.get(), {1, 1});
  BiPoly c = BiPoly::of_x(px) * a;
  BiPoly d = BiPoly::of_x(px * px) * (x - y + BiPoly::constant(F->from_int(2)));
  CHECK(gcd(c, d) == BiPoly::of_x(px).normalized());
}

TEST_CASE("resultant_y vanishes exactly on shared components") {
  auto F = make_field(7, 1);
  BiPoly x = BiPoly::x(F.get()), y = BiPoly::y(F.get());
  // Two curves meeting at points: y - x^2 and y - x - 2.
  BiPoly f = y - x.pow(2), g = y - x - BiPoly::constant(F->from_int(2));
  Poly r = resultant_y(f, g);
  // Roots of the resultant are the x-coordinates of intersections:
  // x^2 = x + 2 has roots 2 and -1 = 6 mod 7.
  auto roots = roots_in_field(r);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == F->from_int(2));
  CHECK(roots[1] == F->from_int(6));
  // Shared component forces a zero resultant.
  CHECK(resultant_y(f * g, g).is_zero());
  // Classical formula against a degree-1 elimination by hand:
  // res_y(y - a(x), b(x, y)) = b(x, a(x)).
  std::mt19937 rng(3);
  for (int it = 0; it < 30; ++it) {
    BiPoly b = random_bipoly(*F, 2, 2, rng);
    if (b.is_zero()) continue;
    Poly a = Poly::from_ints(F.get(), {int64_t(it % 7), 1, 2});
    BiPoly f1 = y - BiPoly::of_x(a);
    Poly direct(F.get());
    for (int j = 0; j <= b.deg_y(); ++j) direct += b.ycoeff(j) * a.pow(uint32_t(j));
    Poly viares = resultant_y(f1, b);
    // Equal up to a sign convention; both vanish on the same set.
    CHECK((viares == direct || viares == -direct));
  }
}

TEST_CASE("factoring splits content, low degree parts, and the leftover") {
  auto F = make_field(5, 1);
  BiPoly x = BiPoly::x(F.get()), y = BiPoly::y(F.get());
  BiPoly conic = x.pow(2) + y.pow(2) + BiPoly::constant(F->one());
  BiPoly line = x + y + BiPoly::constant(F->from_int(3));
  Poly xfac = Poly::from_ints(F.get(), {4, 1});  // x + 4
  BiPoly f = BiPoly::of_x(xfac) * line.pow(2) * conic * BiPoly::constant(F->from_int(2));
  auto fac = factor_bipoly(f);
  BiPoly re = BiPoly::constant(fac.unit);
  for (auto& [p, mult] : fac.factors) re *= p.pow(mult);
  CHECK(re == f);
  CHECK(fac.factors.size() == 3);
  uint32_t total_mult = 0;
  for (auto& [p, mult] : fac.factors) {
    total_mult += mult;
    CHECK(is_irreducible(p));
  }
  CHECK(total_mult == 4);
  CHECK(fac.unit == F->from_int(2));
}

TEST_CASE("irreducibility verdicts on standard examples") {
  auto F = make_field(7, 1);
  BiPoly x = BiPoly::x(F.get()), y = BiPoly::y(F.get());
  CHECK(is_irreducible(x + y));
  CHECK(is_irreducible(y - x.pow(2)));
  CHECK(is_irreducible(x * y - BiPoly::constant(F->one())));
  CHECK_FALSE(is_irreducible(x * y));
  CHECK_FALSE(is_irreducible(x.pow(2) - y.pow(2)));
  CHECK_FALSE(is_irreducible(BiPoly::constant(F->one())));
  // x^2 - 1 is a product of two vertical lines; x^2 + 1 has no root mod 7
  // and stays irreducible even as a bipoly.
  CHECK_FALSE(is_irreducible(x.pow(2) - BiPoly::constant(F->one())));
  CHECK(is_irreducible(x.pow(2) + BiPoly::constant(F->one())));
  // x^2 + y^2 factors as (x+iy)(x-iy) exactly when -1 is a square: it is
  // irreducible over F_3 and F_7 but splits over F_5 (i = 2).
  auto F3 = make_field(3, 1);
  CHECK(is_irreducible(BiPoly::x(F3.get()).pow(2) + BiPoly::y(F3.get()).pow(2)));
  CHECK(is_irreducible(x.pow(2) + y.pow(2)));
  auto F5 = make_field(5, 1);
  CHECK_FALSE(is_irreducible(BiPoly::x(F5.get()).pow(2) + BiPoly::y(F5.get()).pow(2)));
}

TEST_CASE("rational functions reduce and substitute consistently") {
  auto F = make_field(5, 1);
  BiPoly x = BiPoly::x(F.get()), y = BiPoly::y(F.get());
  BiPoly common = x + y;
  BiRat r(common * x, common * y);  // reduces to x/y
  CHECK(r.num() == x);
  CHECK(r.den() == y);
  // Substituting the swap (x,y) -> (y,x) inverts it.
  BiRat rx = BiRat::of(x), ry = BiRat::of(y);
  CHECK(r.subst(ry, rx) == r.inv());
  // Evaluation matches num/den where defined.
  for (int64_t a = 0; a < 5; ++a)
    for (int64_t b = 1; b < 5; ++b)
      CHECK(r.eval(F->from_int(a), F->from_int(b)) ==
            F->from_int(a) / F->from_int(b));
  CHECK_THROWS_AS(r.eval(F->one(), F->zero()), error);
}

TEST_CASE("restriction to lines cancels shared factors") {
  auto F = make_field(7, 1);
  BiPoly x = BiPoly::x(F.get()), y = BiPoly::y(F.get());
  // (x - 2) y / ((x - 2)(y - 1)) restricted to x = 2 must cancel first.
  BiPoly lin = x - BiPoly::constant(F->from_int(2));
  BiRat r(lin * y, lin * (y - BiPoly::constant(F->one())));
  UniRat u = r.at_x(F->from_int(2));
  CHECK(u == UniRat(Poly::x(F.get()), Poly::from_ints(F.get(), {-1, 1})));
  // Restriction to a different vertical line agrees pointwise.
  UniRat v = r.at_x(F->from_int(3));
  for (int64_t b = 0; b < 7; ++b) {
    if (b == 1) continue;
    CHECK(v.eval(F->from_int(b)) == r.eval(F->from_int(3), F->from_int(b)));
  }
  // A genuine pole along the line is refused.
  BiRat pole(y, lin);
  CHECK_THROWS_AS(pole.at_x(F->from_int(2)), error);
  // at_y mirrors at_x.
  UniRat w = r.at_y(F->from_int(3));
  for (int64_t a = 0; a < 7; ++a) {
    if (a == 2) continue;
    CHECK(w.eval(F->from_int(a)) == r.eval(F->from_int(a), F->from_int(3)));
  }
}

TEST_CASE("embedding commutes with evaluation over the extension") {
  auto F2 = make_field(2, 1);
  auto F4 = make_field(2, 2);
  Embedding e(*F2, *F4);
  BiPoly f = BiPoly::from_ints(F2.get(), {{1, 1}, {0, 1}});  // 1+x+xy
  BiPoly fe = embed(e, f);
  for (int64_t a = 0; a < 2; ++a)
    for (int64_t b = 0; b < 2; ++b)
      CHECK(fe.eval(e(F2->from_int(a)), e(F2->from_int(b))) ==
            e(f.eval(F2->from_int(a), F2->from_int(b))));
  // The embedded polynomial sees new zeros over F_4.
  FieldElement t = F4->gen();
  CHECK(fe.eval(t, (F4->one() + t) / t) == F4->zero());
}
