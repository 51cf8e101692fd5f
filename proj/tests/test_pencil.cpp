#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zf/pencil.hpp"

using namespace zf;

namespace {

RingPtr p3() { return make_ring(rationals(), {"x1", "x2", "x3", "x4"}); }
MultiPoly var(const RingPtr& r, int i) { return MultiPoly::variable(r, i); }
MultiPoly cst(const RingPtr& r, long n) { return MultiPoly::constant(r, rat(n)); }

MultiPoly quartic_surface(const RingPtr& r) {
  MultiPoly x1 = var(r, 0), x2 = var(r, 1), x3 = var(r, 2), x4 = var(r, 3);
  MultiPoly s = x1 * x1 + x2 * x2;
  MultiPoly d = x1 * x1 - x2 * x2;
  return s * s + cst(r, 2) * x3 * x4 * d + (x3 * x4).pow(2);
}

// The omega cubic family member at B = 6A, A = 1 (pencil origin).
MultiPoly omega_cubic_f0() {
  auto f = omega_field();
  auto r = make_ring(f, {"X", "Y", "Z"});
  FieldElement w = theta(f);
  MultiPoly x = var(r, 0), y = var(r, 1), z = var(r, 2);
  MultiPoly sum = (x + y + z).pow(3);
  FieldElement w2 = w * w;
  MultiPoly c1 = MultiPoly::constant(r, (w2 - fe(f, 1)) * fe(f, 3));
  MultiPoly c2 = MultiPoly::constant(r, (w - fe(f, 1)) * fe(f, 3));
  return sum + c1 * x * x * y + c2 * x * y * y;
}

}  // namespace

TEST_CASE("pencil construction") {
  auto r = p3();
  CHECK_NOTHROW(make_pencil(quartic_surface(r)));
  auto r3 = make_ring(rationals(), {"X", "Y", "Z"});
  MultiPoly cubic = (var(r3, 0) + var(r3, 1) + var(r3, 2)).pow(3);
  CHECK(make_pencil(cubic).n == 3);
  MultiPoly conic = var(r3, 0).pow(2) + var(r3, 1).pow(2);
  CHECK_THROWS_AS(make_pencil(conic), DegreeMismatch);
  MultiPoly mixed = var(r3, 0).pow(3) + var(r3, 1);
  CHECK_THROWS_AS(make_pencil(mixed), NotHomogeneous);
}

TEST_CASE("members") {
  auto r = p3();
  Pencil pencil = make_pencil(quartic_surface(r));
  MultiPoly prod = var(r, 0) * var(r, 1) * var(r, 2) * var(r, 3);
  CHECK(member(pencil, fe(rationals(), 2)) == quartic_surface(r) + cst(r, 2) * prod);
  CHECK(member(pencil, fe(rationals(), 0)) == quartic_surface(r));
  MultiPoly sym = member_symbolic(pencil);
  CHECK(sym.terms().size() == 7);
  CHECK(sym.ring()->vars.size() == 5);
}

TEST_CASE("base locus identity") {
  auto r = p3();
  Pencil pencil = make_pencil(quartic_surface(r));
  MultiPoly prod = coordinate_product(pencil);
  for (long a : {-3L, 0L, 5L}) {
    for (long b : {1L, 7L}) {
      if (a == b) continue;
      MultiPoly diff = member(pencil, fe(rationals(), a)) - member(pencil, fe(rationals(), b));
      CHECK(diff == prod.scaled(fe(rationals(), a - b)));
    }
  }
}

TEST_CASE("condition 2") {
  auto r = p3();
  CHECK(check_condition_2(make_pencil(quartic_surface(r))).passed);
  // x1 * (cubic) contains the hyperplane x1 = 0.
  MultiPoly bad = var(r, 0) * (var(r, 1).pow(3) + var(r, 2).pow(3) + var(r, 3).pow(3) +
                               var(r, 0).pow(3));
  auto rep = check_condition_2(make_pencil(bad));
  CHECK_FALSE(rep.passed);
  REQUIRE(rep.witnesses.size() == 1);
  CHECK(rep.witnesses[0].find("x1") != std::string::npos);
}

TEST_CASE("condition 3 on the quartic surface") {
  auto r = p3();
  auto rep = check_condition_3(make_pencil(quartic_surface(r)), 2);
  CHECK(rep.passed);
  REQUIRE(rep.divisors.size() == 4);
  // D_1 on {x1 = 0} is x2^2 - x3 x4; D_3 on {x3 = 0} is x1^2 + x2^2.
  const auto& d1 = rep.divisors[0];
  CHECK(d1.i == 0);
  auto rd1 = d1.d.ring();
  CHECK(d1.d == MultiPoly::variable(rd1, 0).pow(2) -
                    MultiPoly::variable(rd1, 1) * MultiPoly::variable(rd1, 2));
  const auto& d3 = rep.divisors[2];
  CHECK(d3.i == 2);
  auto rd3 = d3.d.ring();
  CHECK(d3.d == MultiPoly::variable(rd3, 0).pow(2) + MultiPoly::variable(rd3, 1).pow(2));
  for (const auto& d : rep.divisors) CHECK(degree_info(d.d).total_degree == 2);
}

TEST_CASE("condition 3 rejects a non-reduced divisor") {
  auto r = p3();
  MultiPoly f0 = (var(r, 0) + var(r, 1)).pow(4);
  auto rep = check_condition_3(make_pencil(f0), 2);
  CHECK_FALSE(rep.passed);
}

TEST_CASE("condition 3 on the omega cubic (p = 3)") {
  Pencil pencil = make_pencil(omega_cubic_f0());
  auto rep = check_condition_3(pencil, 3);
  CHECK(rep.passed);
  REQUIRE(rep.divisors.size() == 3);
  // D_3 = Y + omega X (up to the monic normalization X + omega^2 Y).
  auto f = omega_field();
  FieldElement w = theta(f);
  const auto& d3 = rep.divisors[2];
  auto rd = d3.d.ring();
  MultiPoly expected = MultiPoly::variable(rd, 1) + MultiPoly::constant(rd, w) *
                                                        MultiPoly::variable(rd, 0);
  CHECK(divides(d3.d, expected));
  CHECK(divides(expected, d3.d));
}

TEST_CASE("condition 4") {
  auto r = p3();
  auto rep = check_condition_4(make_pencil(quartic_surface(r)), fe(rationals(), 2));
  CHECK(rep.passed);
  CHECK(rep.sing_dimension == 0);
  // A visibly degenerate spanning form: the square of a quadric has a
  // 2-dimensional singular locus at t = 0.
  MultiPoly bad = (var(r, 0).pow(2) + var(r, 1) * var(r, 2)).pow(2);
  auto rep_bad = check_condition_4(make_pencil(bad), fe(rationals(), 0));
  CHECK_FALSE(rep_bad.passed);
  CHECK(*rep_bad.sing_dimension == 2);
}

TEST_CASE("condition 1 passes on the quartic surface pencil") {
  auto r = p3();
  auto rep = check_condition_1(make_pencil(quartic_surface(r)));
  CHECK(rep.passed);
  CHECK(rep.caveats.empty());
  // Every detected exceptional parameter value must have been verified.
  for (const auto& e : rep.exceptional) CHECK(e.squarefree);
}

TEST_CASE("condition 1 fails on the triple-line pencil and passes on the omega pencil") {
  auto f = omega_field();
  auto r = make_ring(f, {"X", "Y", "Z"});
  MultiPoly triple = (var(r, 0) + var(r, 1) + var(r, 2)).pow(3);
  auto rep1 = check_condition_1(make_pencil(triple));
  CHECK_FALSE(rep1.passed);
  bool found_zero = false;
  for (const auto& e : rep1.exceptional) {
    if (!e.squarefree && e.t_text == "0") found_zero = true;
  }
  CHECK(found_zero);

  auto rep_w = check_condition_1(make_pencil(omega_cubic_f0()));
  CHECK(rep_w.passed);
  CHECK(rep_w.caveats.empty());
}

TEST_CASE("reduced total divisors W_t at sampled parameters") {
  auto r = p3();
  Pencil pencil = make_pencil(quartic_surface(r));
  for (long t : {1L, 2L, -3L, 7L}) {
    MultiPoly w = member(pencil, fe(rationals(), t)) * coordinate_product(pencil);
    CHECK(is_squarefree(w));
  }
}

TEST_CASE("kummer pullback") {
  auto r3 = make_ring(rationals(), {"X", "Y", "Z"});
  MultiPoly xyz = var(r3, 0) * var(r3, 1) * var(r3, 2);
  CHECK(kummer_pullback(xyz, 2) == xyz.pow(2));
  auto r = p3();
  MultiPoly f = quartic_surface(r);
  MultiPoly lifted = kummer_pullback(f, 3);
  CHECK(degree_info(lifted).total_degree == 12);
  // Multiplicativity on products.
  MultiPoly a = var(r, 0) + var(r, 1);
  MultiPoly b = var(r, 2) + var(r, 3);
  CHECK(kummer_pullback(a * b, 5) == kummer_pullback(a, 5) * kummer_pullback(b, 5));
}

TEST_CASE("plane sections") {
  auto r = p3();
  MultiPoly linear = var(r, 0);
  MultiPoly sec = plane_section(linear, 11);
  CHECK(degree_info(sec).total_degree == 1);
  CHECK(sec.ring()->vars == std::vector<std::string>{"X", "Y", "Z"});
  // Degree is preserved for a generic section of the degree-12 pullback.
  MultiPoly lifted = kummer_pullback(quartic_surface(r), 3);
  MultiPoly big = plane_section(lifted, 7);
  CHECK(degree_info(big).total_degree == 12);
  // Determinism.
  CHECK(plane_section(lifted, 7) == big);
}
