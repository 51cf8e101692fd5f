#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zf/plane.hpp"

using namespace zf;

namespace {

RingPtr xyz() { return make_ring(rationals(), {"X", "Y", "Z"}); }
MultiPoly var(const RingPtr& r, int i) { return MultiPoly::variable(r, i); }
MultiPoly cst(const RingPtr& r, long n) { return MultiPoly::constant(r, rat(n)); }

ProjectivePoint pt(const FieldPtr& f, long a, long b, long c) {
  return ProjectivePoint::make({fe(f, a), fe(f, b), fe(f, c)});
}

// x^p + y^q as a projective plane curve singular at (0:0:1).
MultiPoly germ_curve(const RingPtr& r, int p, int q) {
  int d = std::max(p, q);
  return var(r, 0).pow(p) * var(r, 2).pow(d - p) + var(r, 1).pow(q) * var(r, 2).pow(d - q);
}

}  // namespace

TEST_CASE("cuspidal cubic: one cusp at (0:0:1)") {
  auto r = xyz();
  MultiPoly f = var(r, 1).pow(2) * var(r, 2) - var(r, 0).pow(3);
  auto locus = singular_points(f, rationals());
  CHECK(locus.complete);
  REQUIRE(locus.records.size() == 1);
  const auto& rec = locus.records[0];
  CHECK(rec.point == pt(rationals(), 0, 0, 1));
  CHECK(rec.multiplicity == 2);
  CHECK(rec.milnor == 2);
  auto ev = check_local_type(f, rec.point, 3, 2);
  CHECK(ev.matches);
}

TEST_CASE("smooth conic has no singular points") {
  auto r = xyz();
  MultiPoly conic = var(r, 0).pow(2) + var(r, 1) * var(r, 2);
  auto locus = singular_points(conic, rationals());
  CHECK(locus.complete);
  CHECK(locus.records.empty());
  CHECK(multiplicity_at(conic, pt(rationals(), 0, 0, 1)) == 1);
}

TEST_CASE("multiplicity of monomial germs") {
  auto r = xyz();
  CHECK(multiplicity_at(germ_curve(r, 3, 5), pt(rationals(), 0, 0, 1)) == 3);
  CHECK(multiplicity_at(germ_curve(r, 2, 7), pt(rationals(), 0, 0, 1)) == 2);
  CHECK_THROWS_AS(multiplicity_at(germ_curve(r, 3, 5), pt(rationals(), 1, 1, 1)),
                  PointNotOnCurve);
}

TEST_CASE("milnor numbers of x^p + y^q are (p-1)(q-1)") {
  auto r = xyz();
  ProjectivePoint origin = pt(rationals(), 0, 0, 1);
  for (auto [p, q] : std::vector<std::pair<int, int>>{
           {2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {3, 7}, {4, 5}, {5, 6}, {6, 7}}) {
    MultiPoly f = germ_curve(r, p, q);
    CHECK(milnor_number(f, origin) == static_cast<long>(p - 1) * (q - 1));
  }
  // Node: Milnor number 1.
  MultiPoly node = var(r, 0) * var(r, 1) * var(r, 2);
  CHECK(milnor_number(node, origin) == 1);
}

TEST_CASE("local type certificates") {
  auto r = xyz();
  ProjectivePoint origin = pt(rationals(), 0, 0, 1);
  auto cusp = check_local_type(var(r, 1).pow(2) * var(r, 2) - var(r, 0).pow(3), origin, 3, 2);
  CHECK(cusp.matches);
  CHECK(cusp.multiplicity == 2);
  CHECK(cusp.milnor == 2);
  auto node = check_local_type(var(r, 0) * var(r, 1) * var(r, 2), origin, 3, 2);
  CHECK_FALSE(node.matches);
  CHECK(node.milnor == 1);
  auto e6ish = check_local_type(germ_curve(r, 3, 4), origin, 3, 4);
  CHECK(e6ish.matches);
  CHECK(e6ish.multiplicity == 3);
  CHECK(e6ish.milnor == 6);
}

TEST_CASE("local type is stable under a projective change of coordinates") {
  auto r = xyz();
  MultiPoly f = var(r, 1).pow(2) * var(r, 2) - var(r, 0).pow(3);
  // x -> x + 2y - z, y -> y + x, z -> z + 3x (unimodular).
  std::vector<std::optional<MultiPoly>> images{
      var(r, 0) + cst(r, 2) * var(r, 1) - var(r, 2),
      var(r, 1) + var(r, 0),
      var(r, 2) + cst(r, 3) * var(r, 0),
  };
  MultiPoly g = substitute(f, r, images);
  // The cusp (0:0:1) pulls back to the point with image (0:0:1).
  // Solve: x + 2y - z = 0, y + x = 0, z + 3x = 1 -> x = -y, -x ... use the
  // inverse directly by solving the linear system on coordinates.
  auto locus = singular_points(g, rationals());
  REQUIRE(locus.records.size() == 1);
  CHECK(locus.records[0].multiplicity == 2);
  CHECK(locus.records[0].milnor == 2);
  CHECK(check_local_type(g, locus.records[0].point, 3, 2).matches);
}

TEST_CASE("line intersection multiplicities") {
  auto r = xyz();
  auto f_inf = line_intersection_multiplicity(var(r, 0) * var(r, 1) * var(r, 2), var(r, 2),
                                              pt(rationals(), 1, 0, 0));
  CHECK(f_inf.infinite);
  auto tangent = line_intersection_multiplicity(var(r, 0).pow(2) + var(r, 1) * var(r, 2),
                                                var(r, 1), pt(rationals(), 0, 0, 1));
  CHECK_FALSE(tangent.infinite);
  CHECK(tangent.order == 2);
  auto transverse = line_intersection_multiplicity(var(r, 0).pow(2) + var(r, 1) * var(r, 2),
                                                   var(r, 0), pt(rationals(), 0, 0, 1));
  CHECK(transverse.order == 1);
  CHECK_THROWS_AS(line_intersection_multiplicity(var(r, 0), var(r, 0).pow(2),
                                                 pt(rationals(), 0, 0, 1)),
                  DegenerateLine);
}

TEST_CASE("bezout sum for a line meeting a cubic") {
  auto r = xyz();
  // Three concurrent lines through (0:0:1) meet Z = 0 in three points, one
  // from each line, each with multiplicity 1; a double line contributes 2.
  MultiPoly f = var(r, 0) * var(r, 1) * (var(r, 0) + var(r, 1));
  MultiPoly line = var(r, 2);
  int total = 0;
  for (auto& p : {pt(rationals(), 0, 1, 0), pt(rationals(), 1, 0, 0),
                  pt(rationals(), 1, -1, 0)}) {
    auto m = line_intersection_multiplicity(f, line, p);
    REQUIRE_FALSE(m.infinite);
    total += m.order;
  }
  CHECK(total == 3);
}

TEST_CASE("locus certificates on explicit germs") {
  auto r2 = make_ring(rationals(), {"x", "y"});
  MultiPoly x = MultiPoly::variable(r2, 0), y = MultiPoly::variable(r2, 1);
  MultiPoly cusp = x * x - y.pow(3);
  std::vector<MultiPoly> origin{x, y};
  CHECK(min_multiplicity_on_locus(cusp, origin) == 2);
  auto mu = milnor_sum_on_locus(cusp, origin);
  REQUIRE(mu.has_value());
  CHECK(*mu == 2);
  auto tau = tjurina_sum_on_locus(cusp, origin);
  REQUIRE(tau.has_value());
  CHECK(*tau == 2);
  CHECK(locus_point_count(origin) == 1);
  // A conjugate pair: K = <x, y^2 + 1> carries two geometric points.
  std::vector<MultiPoly> pair{x, y * y + MultiPoly::constant(r2, rat(1))};
  CHECK(locus_point_count(pair) == 2);
  // f = x^2 - (y^2+1)^3 has a cusp at each conjugate point.
  MultiPoly conj_cusp = x * x - (y * y + MultiPoly::constant(r2, rat(1))).pow(3);
  CHECK(min_multiplicity_on_locus(conj_cusp, pair) == 2);
  auto mu2 = milnor_sum_on_locus(conj_cusp, pair);
  REQUIRE(mu2.has_value());
  CHECK(*mu2 == 4);  // two cusps, Milnor 2 each
}

TEST_CASE("singular locus of a non-reduced curve is flagged") {
  auto r = xyz();
  MultiPoly dbl = (var(r, 0) + var(r, 1)).pow(2) * var(r, 2);
  CHECK_THROWS_AS(singular_points(dbl, rationals()), NotZeroDimensional);
}
