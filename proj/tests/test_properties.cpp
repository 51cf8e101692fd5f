#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "zf/fpgroup.hpp"
#include "zf/plane.hpp"
#include "zf/rng.hpp"

using namespace zf;

namespace {

FieldElement random_element(const FieldPtr& f, SeededRng& rng) {
  Rational a0 = rng.small_rational(9);
  if (f->kind == FieldKind::rationals) return FieldElement(f, a0);
  return FieldElement(f, a0, rng.small_rational(9));
}

MultiPoly random_homogeneous(const RingPtr& ring, int degree, SeededRng& rng) {
  const int n = static_cast<int>(ring->vars.size());
  std::vector<Term> terms;
  Exponents cur(n, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n - 1) {
      cur[var] = left;
      Rational c = rat(rng.int_in(-5, 5));
      if (c != 0) terms.push_back({cur, FieldElement(ring->field, c)});
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[var] = e;
      self(self, var + 1, left - e);
    }
  };
  rec(rec, 0, degree);
  return MultiPoly::from_terms(ring, std::move(terms));
}

MultiPoly random_linear(const RingPtr& ring, SeededRng& rng) {
  while (true) {
    std::vector<Term> terms;
    for (int i = 0; i < static_cast<int>(ring->vars.size()); ++i) {
      long c = rng.int_in(-4, 4);
      if (c == 0) continue;
      Exponents e(ring->vars.size(), 0);
      e[i] = 1;
      terms.push_back({e, fe(ring->field, c)});
    }
    MultiPoly l = MultiPoly::from_terms(ring, std::move(terms));
    if (!l.is_zero()) return l;
  }
}

bool proportional(const MultiPoly& a, const MultiPoly& b) {
  return divides(a, b) && divides(b, a);
}

}  // namespace

TEST_CASE("field axioms on randomized triples") {
  std::vector<FieldPtr> fields{rationals(), omega_field(), gauss_field(),
                               make_field(rat(0), rat(-2))};
  SeededRng rng(101);
  int cases = 0;
  for (int iter = 0; iter < 60; ++iter) {
    for (const auto& f : fields) {
      FieldElement x = random_element(f, rng);
      FieldElement y = random_element(f, rng);
      FieldElement z = random_element(f, rng);
      REQUIRE((x + y) + z == x + (y + z));
      REQUIRE((x * y) * z == x * (y * z));
      REQUIRE(x * (y + z) == x * y + x * z);
      REQUIRE(x.norm() * y.norm() == (x * y).norm());
      if (!x.is_zero()) {
        REQUIRE(x * x.inverse() == fe(f, 1));
      }
      // Canonical rational form after arithmetic.
      Rational probe = (x + y).a0();
      Integer g;
      mpz_gcd(g.get_mpz_t(), probe.get_num().get_mpz_t(), probe.get_den().get_mpz_t());
      REQUIRE((probe == 0 || g == 1));
      REQUIRE(probe.get_den() > 0);
      ++cases;
    }
  }
  CHECK(cases >= 200);
}

TEST_CASE("euler relation on random homogeneous forms") {
  SeededRng rng(202);
  int cases = 0;
  for (int iter = 0; iter < 210; ++iter) {
    int nvars = 3 + static_cast<int>(rng.int_in(0, 1));
    std::vector<std::string> names;
    for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
    RingPtr ring = make_ring(rationals(), names);
    int degree = 1 + static_cast<int>(rng.int_in(0, 4));
    MultiPoly f = random_homogeneous(ring, degree, rng);
    if (f.is_zero()) continue;
    MultiPoly acc = MultiPoly::zero(ring);
    for (int i = 0; i < nvars; ++i) {
      acc += MultiPoly::variable(ring, i) * partial_derivative(f, i);
    }
    REQUIRE(acc == MultiPoly::constant(ring, rat(degree)) * f);
    // A Kummer substitution multiplies the degree exactly by the exponent.
    int q = 2 + static_cast<int>(rng.int_in(0, 2));
    std::vector<std::optional<MultiPoly>> images(nvars);
    for (int i = 0; i < nvars; ++i) images[i] = MultiPoly::variable(ring, i).pow(q);
    REQUIRE(degree_info(substitute(f, ring, images)).total_degree == q * degree);
    ++cases;
  }
  CHECK(cases >= 200);
}

TEST_CASE("gcd and squarefree part against a constructed-factor oracle") {
  SeededRng rng(303);
  RingPtr ring = make_ring(rationals(), {"x", "y", "z"});
  int cases = 0;
  while (cases < 200) {
    MultiPoly u = random_linear(ring, rng);
    MultiPoly v = random_linear(ring, rng);
    MultiPoly w = random_linear(ring, rng);
    if (proportional(u, v) || proportional(u, w) || proportional(v, w)) continue;
    int e1 = 1 + static_cast<int>(rng.int_in(0, 1));
    int f1 = 1 + static_cast<int>(rng.int_in(0, 1));
    // a = u^e1 * v, b = u^f1 * w: total degree <= 4 in 3 variables.
    MultiPoly a = u.pow(e1) * v;
    MultiPoly b = u.pow(f1) * w;
    MultiPoly g = gcd_poly(a, b);
    // The oracle knows the construction: gcd = u^min(e1, f1) up to a unit.
    MultiPoly oracle = normalize_leading(u.pow(std::min(e1, f1)));
    REQUIRE(g == oracle);
    REQUIRE(divides(g, a));
    REQUIRE(divides(g, b));
    // Squarefree part of a is u * v up to a unit.
    MultiPoly sq = squarefree_part(a);
    REQUIRE(sq == normalize_leading(u * v));
    ++cases;
  }
  CHECK(cases >= 200);
}

TEST_CASE("smith normal form: unimodularity, exactness, divisor product") {
  SeededRng rng(404);
  int cases = 0;
  for (int iter = 0; iter < 210; ++iter) {
    int rows = 1 + static_cast<int>(rng.int_in(0, 3));
    int cols = 1 + static_cast<int>(rng.int_in(0, 3));
    IntegerMatrix m = IntegerMatrix::zero(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) m.at(i, j) = rng.int_in(-9, 9);
    }
    SmithDecomposition snf = smith_normal_form(m);
    REQUIRE(abs(determinant(snf.u)) == 1);
    REQUIRE(abs(determinant(snf.v)) == 1);
    REQUIRE(matmul(matmul(snf.u, m), snf.v) == snf.d);
    for (int t = 0; t + 1 < std::min(rows, cols); ++t) {
      const Integer& a = snf.d.at(t, t);
      const Integer& b = snf.d.at(t + 1, t + 1);
      REQUIRE(a >= 0);
      if (a == 0) {
        REQUIRE(b == 0);
      } else {
        REQUIRE(b % a == 0);
      }
    }
    if (rows == cols) {
      Integer det = determinant(m);
      if (det != 0) {
        Integer prod = 1;
        for (int t = 0; t < rows; ++t) prod *= snf.d.at(t, t);
        REQUIRE(prod == abs(det));
      }
    }
    ++cases;
  }
  CHECK(cases >= 200);
}

TEST_CASE("bezout sums for lines against arrangements") {
  SeededRng rng(505);
  RingPtr ring = make_ring(rationals(), {"X", "Y", "Z"});
  int cases = 0;
  while (cases < 200) {
    int d = 2 + static_cast<int>(rng.int_in(0, 2));
    std::vector<MultiPoly> lines;
    while (static_cast<int>(lines.size()) < d) {
      MultiPoly l = random_linear(ring, rng);
      bool dup = false;
      for (const auto& seen : lines) {
        if (proportional(l, seen)) dup = true;
      }
      if (!dup) lines.push_back(l);
    }
    MultiPoly curve = MultiPoly::constant(ring, rat(1));
    for (const auto& l : lines) curve *= l;
    MultiPoly probe = random_linear(ring, rng);
    bool degenerate = false;
    for (const auto& l : lines) {
      if (proportional(probe, l)) degenerate = true;
    }
    if (degenerate) continue;
    // Intersection points of the probe line with each arrangement line:
    // cross products of coefficient vectors.
    auto coeffs = [&](const MultiPoly& l) {
      std::vector<FieldElement> c(3, FieldElement(rationals()));
      for (const auto& t : l.terms()) {
        for (int i = 0; i < 3; ++i) {
          if (t.exps[i] == 1) c[i] = t.coeff;
        }
      }
      return c;
    };
    auto pc = coeffs(probe);
    std::vector<ProjectivePoint> points;
    for (const auto& l : lines) {
      auto lc = coeffs(l);
      std::vector<FieldElement> cross{pc[1] * lc[2] - pc[2] * lc[1],
                                      pc[2] * lc[0] - pc[0] * lc[2],
                                      pc[0] * lc[1] - pc[1] * lc[0]};
      ProjectivePoint p = ProjectivePoint::make(cross);
      bool seen = std::any_of(points.begin(), points.end(),
                              [&](const ProjectivePoint& q) { return q == p; });
      if (!seen) points.push_back(p);
    }
    int total = 0;
    for (const auto& p : points) {
      auto m = line_intersection_multiplicity(curve, probe, p);
      REQUIRE_FALSE(m.infinite);
      total += m.order;
    }
    REQUIRE(total == d);
    ++cases;
  }
  CHECK(cases >= 200);
}

TEST_CASE("reduced groebner bases are independent of generator order") {
  SeededRng rng(606);
  int cases = 0;
  while (cases < 200) {
    int nvars = 2 + static_cast<int>(rng.int_in(0, 1));
    std::vector<std::string> names;
    for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
    RingPtr ring = make_ring(rationals(), names);
    int ngens = 2 + static_cast<int>(rng.int_in(0, 1));
    std::vector<MultiPoly> gens;
    for (int i = 0; i < ngens; ++i) {
      MultiPoly g = MultiPoly::zero(ring);
      // Short random polynomials of degree <= 3.
      for (int t = 0; t < 3; ++t) {
        Exponents e(nvars, 0);
        int deg = static_cast<int>(rng.int_in(0, 3));
        for (int j = 0; j < deg; ++j) e[rng.int_in(0, nvars - 1)] += 1;
        g += MultiPoly::monomial(ring, e, fe(rationals(), rng.int_in(-4, 4)));
      }
      if (g.is_zero()) g = MultiPoly::variable(ring, 0);
      gens.push_back(g);
    }
    bool all_zero = std::all_of(gens.begin(), gens.end(),
                                [](const MultiPoly& g) { return g.is_zero(); });
    if (all_zero) continue;
    auto reference = groebner_basis(gens);
    std::vector<MultiPoly> shuffled = gens;
    for (int round = 0; round < 2; ++round) {
      for (size_t i = shuffled.size(); i > 1; --i) {
        std::swap(shuffled[i - 1], shuffled[rng.int_in(0, static_cast<long>(i) - 1)]);
      }
      auto basis = groebner_basis(shuffled);
      REQUIRE(basis.generators.size() == reference.generators.size());
      for (size_t i = 0; i < basis.generators.size(); ++i) {
        REQUIRE(basis.generators[i] == reference.generators[i]);
      }
    }
    // Normal forms against the reference are idempotent.
    MultiPoly probe = random_homogeneous(ring, 2, rng);
    MultiPoly once = normal_form(probe, reference);
    REQUIRE(normal_form(once, reference) == once);
    ++cases;
  }
  CHECK(cases >= 200);
}

TEST_CASE("local type is preserved under random projective changes") {
  SeededRng rng(707);
  RingPtr ring = make_ring(rationals(), {"X", "Y", "Z"});
  MultiPoly cusp = MultiPoly::variable(ring, 1).pow(2) * MultiPoly::variable(ring, 2) -
                   MultiPoly::variable(ring, 0).pow(3);
  int done = 0;
  while (done < 12) {
    // Random unimodular-ish integer matrix: identity plus an elementary op.
    std::vector<std::vector<long>> m{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int ops = 0; ops < 3; ++ops) {
      int a = rng.int_in(0, 2), b = rng.int_in(0, 2);
      if (a == b) continue;
      long c = rng.int_in(-2, 2);
      for (int j = 0; j < 3; ++j) m[a][j] += c * m[b][j];
    }
    std::vector<std::optional<MultiPoly>> images(3);
    for (int i = 0; i < 3; ++i) {
      MultiPoly img = MultiPoly::zero(ring);
      for (int j = 0; j < 3; ++j) {
        if (m[i][j] != 0) img += MultiPoly::variable(ring, j).scaled(fe(rationals(), m[i][j]));
      }
      images[i] = img;
    }
    MultiPoly g = substitute(cusp, ring, images);
    SingularLocus locus;
    try {
      locus = singular_points(g, rationals());
    } catch (const NotZeroDimensional&) {
      continue;  // the random map was singular
    }
    if (locus.records.size() != 1) continue;
    auto ev = check_local_type(g, locus.records[0].point, 3, 2);
    REQUIRE(ev.matches);
    REQUIRE(ev.multiplicity == 2);
    REQUIRE(ev.milnor == 2);
    ++done;
  }
}
