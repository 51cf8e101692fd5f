#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zf/parse.hpp"

using namespace zf;

namespace {

RingPtr p3() { return make_ring(rationals(), {"x1", "x2", "x3", "x4"}); }

MultiPoly quartic_surface(const RingPtr& r) {
  MultiPoly x1 = MultiPoly::variable(r, 0), x2 = MultiPoly::variable(r, 1),
            x3 = MultiPoly::variable(r, 2), x4 = MultiPoly::variable(r, 3);
  MultiPoly s = x1 * x1 + x2 * x2;
  MultiPoly d = x1 * x1 - x2 * x2;
  return s * s + MultiPoly::constant(r, rat(2)) * x3 * x4 * d + (x3 * x4).pow(2);
}

}  // namespace

TEST_CASE("the quartic surface parses to the assembled polynomial") {
  auto r = p3();
  MultiPoly f = parse_poly_expr("(x1^2+x2^2)^2 + 2*x3*x4*(x1^2-x2^2) + x3^2*x4^2", r);
  CHECK(f == quartic_surface(r));
}

TEST_CASE("parameterized cubic with a bound as a variable") {
  auto r = make_ring(rationals(), {"X", "Y", "Z", "a"});
  MultiPoly f = parse_poly_expr("(X+Y+Z)^3 + (a-6)*X*Y*Z", r);
  MultiPoly X = MultiPoly::variable(r, 0), Y = MultiPoly::variable(r, 1),
            Z = MultiPoly::variable(r, 2), A = MultiPoly::variable(r, 3);
  CHECK(f == (X + Y + Z).pow(3) + (A - MultiPoly::constant(r, rat(6))) * X * Y * Z);
}

TEST_CASE("syntax errors carry positions") {
  auto r = make_ring(rationals(), {"X"});
  try {
    parse_poly_expr("X^", r);
    FAIL("expected a throw");
  } catch (const SyntaxError& e) {
    CHECK(e.position == 2);
  }
  CHECK_THROWS_AS(parse_poly_expr("(X", r), SyntaxError);
  CHECK_THROWS_AS(parse_poly_expr("X + ", r), SyntaxError);
  CHECK_THROWS_AS(parse_poly_expr("X $ Y", r), SyntaxError);
}

TEST_CASE("unknown variables and field symbols") {
  auto rq = make_ring(rationals(), {"X", "Y"});
  CHECK_THROWS_AS(parse_poly_expr("X + Q", rq), UnknownVariable);
  CHECK_THROWS_AS(parse_poly_expr("w*X", rq), FieldSymbolMismatch);
  auto rw = make_ring(omega_field(), {"X", "Y"});
  MultiPoly f = parse_poly_expr("w*X + Y", rw);
  CHECK(f == MultiPoly::constant(rw, theta(omega_field())) * MultiPoly::variable(rw, 0) +
                 MultiPoly::variable(rw, 1));
  CHECK_THROWS_AS(parse_poly_expr("i*X", rw), FieldSymbolMismatch);
  auto ri = make_ring(gauss_field(), {"X"});
  CHECK(parse_poly_expr("i*i*X", ri) == -MultiPoly::variable(ri, 0));
  // theta works over any quadratic field.
  CHECK(parse_poly_expr("theta^2*X", ri) == -MultiPoly::variable(ri, 0));
}

TEST_CASE("rationals, juxtaposition and unary minus") {
  auto r = make_ring(rationals(), {"X", "Y"});
  MultiPoly X = MultiPoly::variable(r, 0), Y = MultiPoly::variable(r, 1);
  CHECK(parse_poly_expr("1/2*X", r) == X.scaled(fe(rationals(), 1, 2)));
  CHECK(parse_poly_expr("3X", r) == X.scaled(fe(rationals(), 3)));
  CHECK(parse_poly_expr("(X+Y)(X-Y)", r) == X * X - Y * Y);
  CHECK(parse_poly_expr("-X + Y", r) == Y - X);
  CHECK(parse_poly_expr("2^3*X", r) == X.scaled(fe(rationals(), 8)));
}

TEST_CASE("round trip through the canonical text form") {
  auto r = p3();
  MultiPoly f = quartic_surface(r);
  CHECK(parse_poly_expr(f.str(), r) == f);
  auto rw = make_ring(omega_field(), {"X", "Y", "Z"});
  MultiPoly g = MultiPoly::constant(rw, theta(omega_field())).pow(2) *
                    MultiPoly::variable(rw, 0).pow(2) -
                MultiPoly::variable(rw, 1) * MultiPoly::variable(rw, 2).scaled(fe(omega_field(), 1, 3));
  CHECK(parse_poly_expr(g.str(), rw) == g);
}
