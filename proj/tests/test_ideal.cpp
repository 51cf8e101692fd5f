#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "zf/ideal.hpp"

using namespace zf;

namespace {

RingPtr xy() { return make_ring(rationals(), {"x", "y"}); }

MultiPoly var(const RingPtr& r, int i) { return MultiPoly::variable(r, i); }
MultiPoly cst(const RingPtr& r, long n) { return MultiPoly::constant(r, rat(n)); }

MultiPoly quartic_surface(const RingPtr& r) {
  MultiPoly x1 = var(r, 0), x2 = var(r, 1), x3 = var(r, 2), x4 = var(r, 3);
  MultiPoly s = x1 * x1 + x2 * x2;
  MultiPoly d = x1 * x1 - x2 * x2;
  return s * s + cst(r, 2) * x3 * x4 * d + (x3 * x4).pow(2);
}

bool basis_contains(const IdealBasis& b, const MultiPoly& f) {
  return std::any_of(b.generators.begin(), b.generators.end(),
                     [&](const MultiPoly& g) { return g == f; });
}

}  // namespace

TEST_CASE("already-reduced inputs come back unchanged") {
  auto r = xy();
  auto b1 = groebner_basis({var(r, 0), var(r, 1)});
  CHECK(b1.generators.size() == 2);
  CHECK(basis_contains(b1, var(r, 0)));
  CHECK(basis_contains(b1, var(r, 1)));
  auto b2 = groebner_basis({var(r, 0).pow(2), var(r, 1).pow(3)});
  CHECK(b2.generators.size() == 2);
  CHECK(basis_contains(b2, var(r, 0).pow(2)));
  CHECK(basis_contains(b2, var(r, 1).pow(3)));
}

TEST_CASE("lex basis of {x^2 - y, y^2 - x} contains the hand eliminant") {
  // Substituting x = y^2 into x^2 = y gives y^4 - y.
  auto r = xy();
  MultiPoly g1 = var(r, 0).pow(2) - var(r, 1);
  MultiPoly g2 = var(r, 1).pow(2) - var(r, 0);
  auto basis = groebner_basis({g1, g2}, MonomialOrder::lex());
  MultiPoly expect = var(r, 1).pow(4) - var(r, 1);
  CHECK(basis_contains(basis, expect));
}

TEST_CASE("normal form: membership, standard monomials, idempotence") {
  auto r = xy();
  auto basis = groebner_basis({var(r, 0).pow(2), var(r, 1).pow(3)});
  CHECK(normal_form(var(r, 0).pow(2) + var(r, 1).pow(3), basis).is_zero());
  MultiPoly xy_mono = var(r, 0) * var(r, 1);
  CHECK(normal_form(xy_mono, basis) == xy_mono);
  MultiPoly messy = (var(r, 0) + var(r, 1)).pow(4);
  MultiPoly once = normal_form(messy, basis);
  CHECK(normal_form(once, basis) == once);
}

TEST_CASE("the quartic at t = 2 lies in its own gradient ideal") {
  auto r = make_ring(rationals(), {"x1", "x2", "x3", "x4"});
  MultiPoly f2 = quartic_surface(r) + cst(r, 2) * var(r, 0) * var(r, 1) * var(r, 2) * var(r, 3);
  std::vector<MultiPoly> partials;
  for (int i = 0; i < 4; ++i) partials.push_back(partial_derivative(f2, i));
  auto basis = groebner_basis(partials);
  CHECK(normal_form(f2, basis).is_zero());  // Euler relation forces membership
}

TEST_CASE("ideal dimension") {
  auto r2 = xy();
  CHECK(ideal_dimension(groebner_basis({var(r2, 0), var(r2, 1)})) == 0);
  auto r3 = make_ring(rationals(), {"x", "y", "z"});
  CHECK(ideal_dimension(groebner_basis({var(r3, 0)})) == 2);
  // Smooth projective quadric surface in P^3: dimension 2 = 4 - 2.
  auto r4 = make_ring(rationals(), {"x1", "x2", "x3", "x4"});
  MultiPoly q = var(r4, 0) * var(r4, 3) - var(r4, 1) * var(r4, 2);
  CHECK(ideal_dimension(groebner_basis({q}), true) == 2);
  // Unit ideal: empty locus.
  CHECK(ideal_dimension(groebner_basis({cst(r2, 1)})) == -1);
  // Singular locus of the t=2 quartic member is projectively 0-dimensional.
  MultiPoly f2 = quartic_surface(r4) + cst(r4, 2) * var(r4, 0) * var(r4, 1) * var(r4, 2) * var(r4, 3);
  std::vector<MultiPoly> sing{f2};
  for (int i = 0; i < 4; ++i) sing.push_back(partial_derivative(f2, i));
  CHECK(ideal_dimension(groebner_basis(sing), true) == 0);
}

TEST_CASE("quotient dimension counts the staircase") {
  auto r = xy();
  CHECK(quotient_dimension(groebner_basis({var(r, 0).pow(2), var(r, 1).pow(3)})) == 6);
  for (int p = 2; p <= 5; ++p) {
    for (int q = 2; q <= 5; ++q) {
      auto b = groebner_basis({var(r, 0).pow(p - 1), var(r, 1).pow(q - 1)});
      CHECK(quotient_dimension(b) == (p - 1) * (q - 1));
    }
  }
  auto b = groebner_basis({var(r, 0) - cst(r, 1), var(r, 1) - cst(r, 2)});
  CHECK(quotient_dimension(b) == 1);
  CHECK_THROWS_AS(quotient_dimension(groebner_basis({var(r, 0)})), NotZeroDimensional);
}

TEST_CASE("elimination") {
  auto r = xy();
  auto e1 = eliminate({var(r, 0).pow(2) - var(r, 1), var(r, 1).pow(2) - var(r, 0)}, {"x"});
  REQUIRE(e1.size() == 1);
  auto ry = e1[0].ring();
  CHECK(e1[0] == MultiPoly::variable(ry, 0).pow(4) - MultiPoly::variable(ry, 0));

  auto r3 = make_ring(rationals(), {"x", "y", "t"});
  auto e2 = eliminate({var(r3, 0) - var(r3, 2), var(r3, 1) - var(r3, 2).pow(2)}, {"t"});
  REQUIRE(e2.size() == 1);
  auto rxy = e2[0].ring();
  // Monic under the working order, so the parabola comes back as x^2 - y.
  CHECK(e2[0] == MultiPoly::variable(rxy, 0).pow(2) - MultiPoly::variable(rxy, 1));

  auto e3 = eliminate({var(r, 0), var(r, 1)}, {"x"});
  REQUIRE(e3.size() == 1);
  CHECK(e3[0] == MultiPoly::variable(e3[0].ring(), 0));
}

TEST_CASE("reduced basis is independent of generator order") {
  auto r = make_ring(rationals(), {"x", "y", "z"});
  std::vector<MultiPoly> gens = {
      var(r, 0).pow(2) + var(r, 1) * var(r, 2) - cst(r, 1),
      var(r, 0) * var(r, 1) - var(r, 2),
      var(r, 1).pow(2) - var(r, 0) * var(r, 2) + var(r, 0),
  };
  auto reference = groebner_basis(gens);
  std::vector<int> perm{0, 1, 2};
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<MultiPoly> shuffled{gens[perm[0]], gens[perm[1]], gens[perm[2]]};
    auto basis = groebner_basis(shuffled);
    REQUIRE(basis.generators.size() == reference.generators.size());
    for (size_t i = 0; i < basis.generators.size(); ++i) {
      CHECK(basis.generators[i] == reference.generators[i]);
    }
  }
}

TEST_CASE("every S-polynomial of the output reduces to zero") {
  auto r = make_ring(rationals(), {"x", "y", "z"});
  std::vector<MultiPoly> gens = {
      var(r, 0).pow(3) - var(r, 1) * var(r, 2),
      var(r, 1).pow(2) - var(r, 0) * var(r, 2),
      var(r, 0) * var(r, 2).pow(2) - var(r, 1),
  };
  auto basis = groebner_basis(gens);
  for (size_t i = 0; i < basis.generators.size(); ++i) {
    for (size_t j = i + 1; j < basis.generators.size(); ++j) {
      const auto& f = basis.generators[i];
      const auto& g = basis.generators[j];
      // Build the S-polynomial from scratch.
      Exponents lf = f.leading_term().exps, lg = g.leading_term().exps;
      Exponents l(lf.size());
      for (size_t k = 0; k < l.size(); ++k) l[k] = std::max(lf[k], lg[k]);
      Exponents sf(l.size()), sg(l.size());
      for (size_t k = 0; k < l.size(); ++k) sf[k] = l[k] - lf[k], sg[k] = l[k] - lg[k];
      MultiPoly mf = MultiPoly::monomial(r, sf, f.leading_term().coeff.inverse());
      MultiPoly mg = MultiPoly::monomial(r, sg, g.leading_term().coeff.inverse());
      CHECK(normal_form(mf * f - mg * g, basis).is_zero());
    }
  }
}

TEST_CASE("solving: gaussian pair") {
  auto r = xy();
  std::vector<MultiPoly> gens{var(r, 0).pow(2) + cst(r, 1), var(r, 1)};
  auto sol = solve_zero_dim(gens, gauss_field());
  CHECK(sol.complete);
  REQUIRE(sol.points.size() == 2);
  for (const auto& p : sol.points) {
    CHECK(p[0] * p[0] == fe(gauss_field(), -1));
    CHECK(p[1].is_zero());
  }
}

TEST_CASE("solving: irreducible cubic is reported unsolved") {
  auto r = xy();
  std::vector<MultiPoly> gens{var(r, 0).pow(3) - cst(r, 2), var(r, 1)};
  auto sol = solve_zero_dim(gens, rationals());
  CHECK_FALSE(sol.complete);
  CHECK(sol.points.empty());
  REQUIRE(sol.residual.size() == 1);
  CHECK(degree_info(sol.residual[0]).total_degree == 3);
}

TEST_CASE("solving agrees with a brute-force grid oracle") {
  // Systems whose solutions lie on a small rational grid; the oracle scans
  // the grid and checks all generators exactly.
  auto r = xy();
  std::vector<std::vector<MultiPoly>> systems = {
      {(var(r, 0) - cst(r, 1)) * (var(r, 0) + cst(r, 2)), var(r, 1) - var(r, 0)},
      {var(r, 0).pow(2) - cst(r, 4), var(r, 1).pow(2) - cst(r, 1)},
      {var(r, 0) * (var(r, 0) - cst(r, 3)), var(r, 1) * (var(r, 1) + cst(r, 2))},
  };
  for (const auto& gens : systems) {
    auto sol = solve_zero_dim(gens, rationals());
    CHECK(sol.complete);
    std::vector<std::pair<long, long>> oracle;
    for (long a = -5; a <= 5; ++a) {
      for (long b = -5; b <= 5; ++b) {
        std::vector<FieldElement> pt{fe(rationals(), a), fe(rationals(), b)};
        bool all_zero = true;
        for (const auto& g : gens) {
          if (!evaluate(g, pt).is_zero()) {
            all_zero = false;
            break;
          }
        }
        if (all_zero) oracle.push_back({a, b});
      }
    }
    CHECK(sol.points.size() == oracle.size());
    for (const auto& [a, b] : oracle) {
      bool found = false;
      for (const auto& p : sol.points) {
        if (p[0] == fe(rationals(), a) && p[1] == fe(rationals(), b)) found = true;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("projective solving normalizes the first nonzero coordinate") {
  auto r3 = make_ring(rationals(), {"x", "y", "z"});
  // V(xy, xz, yz) = the three coordinate points.
  std::vector<MultiPoly> gens{var(r3, 0) * var(r3, 1), var(r3, 0) * var(r3, 2),
                              var(r3, 1) * var(r3, 2)};
  auto sol = solve_zero_dim(gens, rationals(), true);
  CHECK(sol.complete);
  CHECK(sol.points.size() == 3);
}

TEST_CASE("krylov eliminant matches lex elimination") {
  auto r = xy();
  std::vector<MultiPoly> gens{var(r, 0).pow(2) - var(r, 1), var(r, 1).pow(2) - var(r, 0)};
  auto basis = groebner_basis(gens);
  MultiPoly e = univariate_eliminant(basis, 1);
  CHECK(e == var(r, 1).pow(4) - var(r, 1));
  MultiPoly ex = univariate_eliminant(basis, 0);
  CHECK(ex == var(r, 0).pow(4) - var(r, 0));
}

TEST_CASE("localized quotient dimensions split point contributions") {
  auto r = xy();
  // Two reduced points; only one at the origin.
  std::vector<MultiPoly> j{var(r, 0) * (var(r, 0) - cst(r, 1)), var(r, 1)};
  std::vector<MultiPoly> origin{var(r, 0), var(r, 1)};
  auto at_origin = localized_quotient_dimension(j, origin);
  REQUIRE(at_origin.has_value());
  CHECK(*at_origin == 1);
  CHECK(quotient_dimension(groebner_basis(j)) == 2);
  // Cusp-type local ring at the origin has dimension 2.
  std::vector<MultiPoly> cusp{var(r, 0), var(r, 1).pow(2)};
  auto mu = localized_quotient_dimension(cusp, origin);
  REQUIRE(mu.has_value());
  CHECK(*mu == 2);
  // Disjoint loci report zero.
  std::vector<MultiPoly> far{var(r, 0) - cst(r, 5), var(r, 1)};
  auto miss = localized_quotient_dimension(far, origin);
  REQUIRE(miss.has_value());
  CHECK(*miss == 0);
}

TEST_CASE("field square roots") {
  auto w = omega_field();
  auto s = field_sqrt(fe(w, -27));
  REQUIRE(s.has_value());
  CHECK((*s) * (*s) == fe(w, -27));
  CHECK_FALSE(field_sqrt(fe(w, 2)).has_value());
  auto qi = gauss_field();
  auto i_root = field_sqrt(fe(qi, -1));
  REQUIRE(i_root.has_value());
  CHECK((*i_root) * (*i_root) == fe(qi, -1));
  // sqrt(2i) = 1 + i.
  auto tw = field_sqrt(FieldElement(qi, rat(0), rat(2)));
  REQUIRE(tw.has_value());
  CHECK((*tw) * (*tw) == FieldElement(qi, rat(0), rat(2)));
  CHECK(field_sqrt(fe(rationals(), 49, 4)).has_value());
  CHECK_FALSE(field_sqrt(fe(rationals(), -1)).has_value());
}
