#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "surfres/laurent.hpp"

namespace surfres {

// The two ambient surfaces.  Affine charts are indexed as follows.
//   p1xp1: chart c = bx + 2*by where bx/by say whether the first/second
//          factor is viewed through 1/x resp. 1/y.  Chart 0 has
//          coordinates (x, y); chart 1 (1/x, y); chart 2 (x, 1/y);
//          chart 3 (1/x, 1/y).
//   p2:    chart 0 = (X/Z, Y/Z), chart 1 = (X/Y, Z/Y), chart 2 = (Y/X, Z/X).
// Within every chart the two coordinates are written (x, y) and 2-forms
// are expressed against dx^dy of that chart.
enum class SurfaceKind { p2, p1xp1 };

struct Surface {
  SurfaceKind kind;
  const Field* base;  // field of definition of curves, divisors, forms

  int num_charts() const { return kind == SurfaceKind::p2 ? 3 : 4; }
};

// Prime divisors on the surface: either the closure of an irreducible
// affine curve of chart 0, or one of the boundary curves invisible there.
enum class BoundaryTag { none, x_infinity, y_infinity, line_infinity };

class Curve {
public:
  // Irreducible nonconstant chart-0 equation; normalized internally.
  // errc::domain if constant or reducible.
  static Curve affine(SurfaceKind kind, BiPoly eq);
  static Curve boundary(SurfaceKind kind, BoundaryTag tag);  // not none

  SurfaceKind kind() const { return kind_; }
  BoundaryTag tag() const { return tag_; }
  bool is_boundary() const { return tag_ != BoundaryTag::none; }
  // Chart-0 equation; errc::usage for boundary curves.
  const BiPoly& equation() const;

  // Defining equation in the given chart.  A nonzero constant means the
  // curve does not meet the chart.
  BiPoly equation_in_chart(int chart) const;

  // Class in Pic: {e, f} coefficients against vertical/horizontal line
  // classes for p1xp1, {d, 0} against the line class for p2.
  std::array<long, 2> divisor_class() const;

  bool operator==(const Curve& o) const;
  bool operator!=(const Curve& o) const { return !(*this == o); }
  bool operator<(const Curve& o) const;

  std::string str() const;

private:
  Curve(SurfaceKind k, BoundaryTag t, BiPoly eq)
      : kind_(k), tag_(t), eq_(std::move(eq)) {}
  SurfaceKind kind_;
  BoundaryTag tag_;
  BiPoly eq_;
};

using Divisor = std::map<Curve, int>;

std::vector<Curve> support(const Divisor& d);
bool supports_disjoint(const Divisor& a, const Divisor& b);
Divisor add_divisors(const Divisor& a, const Divisor& b);
Divisor negate_divisor(const Divisor& d);
// Sum of the component classes weighted by coefficients.
std::array<long, 2> divisor_class(const Divisor& d);
// Divisor of the 2-form dx^dy of chart 0 (all boundary, negative).
Divisor canonical_base_divisor(const Surface& s);

// A closed point, stored in its canonical chart: the first chart (in index
// order) that contains it.  Coordinates may live in an extension of the
// base field; both always live in the same field.
struct Point {
  int chart;
  FieldElement a, b;

  const Field& field() const { return a.field(); }
  bool operator==(const Point& o) const {
    return chart == o.chart && a == o.a && b == o.b;
  }
  std::string str() const;
};

// Canonicalize coordinates given in any chart.
Point canonical_point(SurfaceKind kind, int chart, FieldElement a, FieldElement b);

// Whether P lies on C.  P may have coordinates in an extension of C's
// field of definition.
bool on_curve(const Curve& c, const Point& p);

// Representation of a 2-form h dx^dy of chart 0 in another chart,
// against that chart's dx^dy.
BiRat form_in_chart(const Surface& s, const BiRat& h, int chart);

// Order of vanishing of the rational function h (chart-0 data) along a
// prime divisor; kInfCert for the zero function.
long func_ord_along(const Surface& s, const BiRat& h, const Curve& c);
// Order of vanishing of the 2-form h dx^dy along a prime divisor.
long form_ord_along(const Surface& s, const BiRat& h, const Curve& c);

// Irreducible factors of the denominator as curves with multiplicities.
std::vector<std::pair<Curve, int>> affine_pole_components(const Surface& s,
                                                          const BiRat& h);
std::vector<Curve> boundary_curves(const Surface& s);

// All intersection points of two distinct curves, over a common splitting
// extension of the base field (base-field points are returned embedded in
// it when an extension is needed).  errc::domain if the curves coincide;
// errc::out_of_scope if the splitting field exceeds the packed-field cap.
struct CandidateSet {
  std::shared_ptr<const Field> ext;
  std::vector<Point> points;
};
CandidateSet intersections_over_common_field(const Surface& s, const Curve& c,
                                             const std::vector<Curve>& others);
std::vector<Point> intersection_points(const Surface& s, const Curve& a,
                                       const Curve& b);

// Local data of the form h dx^dy at a point P of the smooth locus of C,
// normalized so that the local coordinates (u, w) satisfy: the form is
// H du^dw, the curve is V(u, w) = 0 with V(0,0) = 0 and dV/dw(0,0) != 0,
// and u restricts to a local parameter of C at P.  When the transverse
// gradient forced swapping the chart coordinates, u_is_x is false and H
// carries the orientation sign.
struct LocalPair {
  BiRat H;
  BiPoly V;
  bool u_is_x;
};
LocalPair local_pair(const Surface& s, const BiRat& h, const Curve& c,
                     const Point& p);

// First-level residue along C at P as an exact rational function of the
// local parameter u: available when the local equation has degree 1 in
// the transverse variable (errc::out_of_scope otherwise).
UniRat res1_exact(const Surface& s, const BiRat& h, const Curve& c,
                  const Point& p);

// Second-level (iterated) residue of h dx^dy along C at P.
//   exact:     rational change of variable, exact series (needs the local
//              equation linear in the transverse variable).
//   truncated: branch solved as a certified truncated series.
//   two_step:  exact first-level residue followed by the classical
//              simple-pole formula (errc::domain unless the pole of the
//              restricted 1-form at P is exactly simple).
//   automatic: exact when available, truncated otherwise.
enum class Res2Route { automatic, exact, truncated, two_step };
// Optional override of which chart coordinate restricts to the parameter.
enum class UChoice { automatic, prefer_x, prefer_y };

FieldElement res2_point(const Surface& s, const BiRat& h, const Curve& c,
                        const Point& p, Res2Route route = Res2Route::automatic,
                        UChoice u_choice = UChoice::automatic);

// Sum of res2_point over the support components of D passing through P.
FieldElement res2_divisor(const Surface& s, const BiRat& h, const Divisor& d,
                          const Point& p,
                          Res2Route route = Res2Route::automatic);

}  // namespace surfres
