#include "zf/plane.hpp"

#include <algorithm>
#include <numeric>

namespace zf {

AffineGerm germ_at(const MultiPoly& curve, const ProjectivePoint& p) {
  const RingPtr& ring = curve.ring();
  const int n = static_cast<int>(ring->vars.size());
  if (static_cast<int>(p.coords.size()) != n) throw RingMismatch("point arity");
  const int chart = p.first_nonzero();
  // Dehomogenize at the pivot, then translate the rest to the origin.
  MultiPoly f = substitute_value(curve, chart, p.coords[chart]);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    if (i != chart) names.push_back(ring->vars[i]);
  }
  RingPtr affine = make_ring(ring->field, names);
  std::vector<std::optional<MultiPoly>> images(n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    if (i == chart) {
      images[i] = MultiPoly::constant(affine, FieldElement(affine->field, rat(1)));
    } else {
      images[i] = MultiPoly::variable(affine, k) +
                  MultiPoly::constant(affine, p.coords[i]);
      ++k;
    }
  }
  // The pivot was already substituted; chart image is unused but harmless.
  return AffineGerm{substitute(f, affine, images), chart};
}

int multiplicity_at(const MultiPoly& curve, const ProjectivePoint& p) {
  AffineGerm germ = germ_at(curve, p);
  if (germ.f.is_zero()) throw PointNotOnCurve("curve vanishes identically in the chart");
  int best = -1;
  for (const auto& t : germ.f.terms()) {
    int d = total_degree(t.exps);
    if (best < 0 || d < best) best = d;
  }
  if (best == 0) throw PointNotOnCurve("point is not on the curve");
  return best;
}

long milnor_number(const MultiPoly& curve, const ProjectivePoint& p, int cap) {
  AffineGerm germ = germ_at(curve, p);
  std::vector<FieldElement> origin_pt(germ.f.ring()->vars.size(),
                                      FieldElement(germ.f.ring()->field));
  if (germ.f.is_zero() || !evaluate(germ.f, origin_pt).is_zero()) {
    throw PointNotOnCurve("point is not on the curve");
  }
  std::vector<MultiPoly> jac;
  std::vector<MultiPoly> origin;
  for (int i = 0; i < static_cast<int>(germ.f.ring()->vars.size()); ++i) {
    jac.push_back(partial_derivative(germ.f, i));
    origin.push_back(MultiPoly::variable(germ.f.ring(), i));
  }
  auto mu = localized_quotient_dimension(jac, origin, cap);
  if (!mu) throw NotIsolated("Milnor stabilization exceeded the degree cap");
  return *mu;
}

LocalTypeEvidence check_local_type(const MultiPoly& curve, const ProjectivePoint& point, int p,
                                   int q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1) {
    throw std::invalid_argument("type (p, q) requires coprime p, q >= 2");
  }
  LocalTypeEvidence ev;
  ev.multiplicity = multiplicity_at(curve, point);
  ev.milnor = milnor_number(curve, point, 2 * (p - 1) * (q - 1) + 4);
  ev.matches = (ev.multiplicity == std::min(p, q)) &&
               (ev.milnor == static_cast<long>(p - 1) * (q - 1));
  return ev;
}

SingularLocus singular_points(const MultiPoly& curve, const FieldPtr& field) {
  if (curve.is_zero()) throw ZeroPolynomial("singular points of zero");
  if (!degree_info(curve).homogeneous) throw std::invalid_argument("curve must be homogeneous");
  std::vector<MultiPoly> sys{curve};
  for (int i = 0; i < static_cast<int>(curve.ring()->vars.size()); ++i) {
    sys.push_back(partial_derivative(curve, i));
  }
  SolutionSet sols = solve_zero_dim(sys, field, true);
  SingularLocus out;
  out.residual = sols.residual;
  out.complete = sols.complete;
  MultiPoly lifted = change_field(curve, field);
  for (auto& coords : sols.points) {
    ProjectivePoint pt{coords};  // already normalized by the chart solver
    SingularPointRecord rec;
    rec.multiplicity = multiplicity_at(lifted, pt);
    rec.milnor = milnor_number(lifted, pt);
    rec.point = std::move(pt);
    out.records.push_back(std::move(rec));
  }
  return out;
}

LineMult line_intersection_multiplicity(const MultiPoly& curve, const MultiPoly& line,
                                        const ProjectivePoint& p,
                                        const std::array<int, 3>& geom) {
  const RingPtr& ring = curve.ring();
  require_same_ring(curve, line);
  // The line must be linear homogeneous in the geometric variables.
  std::vector<FieldElement> lc(3, FieldElement(ring->field));
  for (const auto& t : line.terms()) {
    int which = -1;
    int deg = 0;
    for (size_t i = 0; i < t.exps.size(); ++i) {
      deg += t.exps[i];
      if (t.exps[i] == 1 &&
          std::find(geom.begin(), geom.end(), static_cast<int>(i)) != geom.end()) {
        which = static_cast<int>(std::find(geom.begin(), geom.end(), static_cast<int>(i)) -
                                 geom.begin());
      }
    }
    if (deg != 1 || which < 0) throw DegenerateLine("line must be linear in the coordinates");
    lc[which] = t.coeff;
  }
  if (lc[0].is_zero() && lc[1].is_zero() && lc[2].is_zero()) {
    throw DegenerateLine("zero line");
  }
  // p must lie on the line.
  FieldElement on_line(ring->field);
  for (int i = 0; i < 3; ++i) on_line += lc[i] * p.coords[i];
  if (!on_line.is_zero()) throw PointNotOnCurve("point is not on the line");

  // Second point spanning the line: kernel vectors of (a b c).
  const FieldElement &a = lc[0], &b = lc[1], &c = lc[2];
  std::vector<std::vector<FieldElement>> candidates = {
      {b, -a, FieldElement(ring->field)},
      {c, FieldElement(ring->field), -a},
      {FieldElement(ring->field), c, -b},
  };
  std::vector<FieldElement> q;
  for (auto& cand : candidates) {
    bool zero = cand[0].is_zero() && cand[1].is_zero() && cand[2].is_zero();
    if (zero) continue;
    // Proportional to p iff all 2x2 minors vanish.
    FieldElement m01 = cand[0] * p.coords[1] - cand[1] * p.coords[0];
    FieldElement m02 = cand[0] * p.coords[2] - cand[2] * p.coords[0];
    FieldElement m12 = cand[1] * p.coords[2] - cand[2] * p.coords[1];
    if (m01.is_zero() && m02.is_zero() && m12.is_zero()) continue;
    q = cand;
    break;
  }
  if (q.empty()) throw DegenerateLine("could not span the line");

  // Restrict the curve to P + u Q; parameters ride along.
  std::vector<std::string> names{"u"};
  for (size_t i = 0; i < ring->vars.size(); ++i) {
    if (std::find(geom.begin(), geom.end(), static_cast<int>(i)) == geom.end()) {
      names.push_back(ring->vars[i]);
    }
  }
  RingPtr target = make_ring(ring->field, names);
  MultiPoly u = MultiPoly::variable(target, 0);
  std::vector<std::optional<MultiPoly>> images(ring->vars.size());
  for (int g = 0; g < 3; ++g) {
    images[geom[g]] = MultiPoly::constant(target, p.coords[g]) + u.scaled(q[g]);
  }
  MultiPoly restricted = substitute(curve, target, images);
  if (restricted.is_zero()) return LineMult{true, 0};
  auto coeffs = coefficients_in(restricted, 0);
  int order = 0;
  while (order < static_cast<int>(coeffs.size()) && coeffs[order].is_zero()) ++order;
  return LineMult{false, order};
}

int min_multiplicity_on_locus(const MultiPoly& f, const std::vector<MultiPoly>& locus, int cap) {
  if (f.is_zero()) throw ZeroPolynomial("zero polynomial on locus");
  for (int m = 1; m <= cap; ++m) {
    IdealBasis b = groebner_basis(ideal_power(locus, m));
    if (!normal_form(f, b).is_zero()) return m - 1;
  }
  throw NotIsolated("multiplicity did not separate by the cap");
}

std::optional<long> milnor_sum_on_locus(const MultiPoly& f, const std::vector<MultiPoly>& locus) {
  std::vector<MultiPoly> jac;
  for (int i = 0; i < static_cast<int>(f.ring()->vars.size()); ++i) {
    jac.push_back(partial_derivative(f, i));
  }
  return localized_quotient_dimension(jac, locus);
}

std::optional<long> tjurina_sum_on_locus(const MultiPoly& f, const std::vector<MultiPoly>& locus) {
  std::vector<MultiPoly> jac{f};
  for (int i = 0; i < static_cast<int>(f.ring()->vars.size()); ++i) {
    jac.push_back(partial_derivative(f, i));
  }
  return localized_quotient_dimension(jac, locus);
}

long locus_point_count(const std::vector<MultiPoly>& locus) {
  return quotient_dimension(groebner_basis(locus));
}

}  // namespace zf
