#pragma once

#include <array>
#include <optional>

#include "zf/ideal.hpp"
#include "zf/point.hpp"

namespace zf {

struct PointNotOnCurve : std::domain_error {
  using std::domain_error::domain_error;
};
struct NotIsolated : std::domain_error {
  using std::domain_error::domain_error;
};
struct DegenerateLine : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularPointRecord {
  ProjectivePoint point;
  int multiplicity = 0;
  long milnor = 0;
  std::optional<std::pair<int, int>> local_type_checked;
};

struct SingularLocus {
  std::vector<SingularPointRecord> records;
  std::vector<MultiPoly> residual;
  bool complete = false;
};

/// The affine germ of a plane projective curve at a point: the curve moved
/// to the origin of the chart of the point's first nonzero coordinate.
struct AffineGerm {
  MultiPoly f;  // two affine variables, germ vanishing at the origin
  int chart;    // index of the dehomogenized coordinate
};

AffineGerm germ_at(const MultiPoly& curve, const ProjectivePoint& p);

/// Singular points of a squarefree homogeneous plane curve: solves the
/// gradient system projectively and attaches multiplicity and Milnor
/// number to every solved point. Points outside `field` stay in residual.
SingularLocus singular_points(const MultiPoly& curve, const FieldPtr& field);

/// Order of vanishing at p (minimal total degree of the affine germ).
int multiplicity_at(const MultiPoly& curve, const ProjectivePoint& p);

/// Local Milnor number: the dimension of the germ's Jacobian quotient
/// localized at the point, computed through stabilized maximal-ideal
/// powers. Throws NotIsolated when stabilization fails by `cap`.
long milnor_number(const MultiPoly& curve, const ProjectivePoint& p, int cap = 48);

struct LocalTypeEvidence {
  bool matches = false;
  int multiplicity = 0;
  long milnor = 0;
};

/// Certifies a singularity of type (p, q) through the invariant pair
/// multiplicity = min(p, q) and Milnor number = (p-1)(q-1).
LocalTypeEvidence check_local_type(const MultiPoly& curve, const ProjectivePoint& point, int p,
                                   int q);

struct LineMult {
  bool infinite = false;
  int order = 0;
};

/// Intersection multiplicity of the curve with a projective line at a
/// point of the line, via the vanishing order of the restriction along a
/// parametrization centered at the point. Infinite when the line divides
/// the curve. `geom` names the three homogeneous coordinate variables;
/// any other ring variables ride along as parameters, in which case the
/// result is the generic order (a lower bound for every specialization).
LineMult line_intersection_multiplicity(const MultiPoly& curve, const MultiPoly& line,
                                        const ProjectivePoint& p,
                                        const std::array<int, 3>& geom = {0, 1, 2});

// ---- whole-locus certificates ----------------------------------------------
// Work on an affine chart with a radical ideal K describing a finite set of
// singular points (possibly conjugate over an extension); these aggregate
// invariants stay exact without leaving the coefficient field.

/// Largest m with f in K^m: the minimal order of vanishing of f along the
/// locus. K must cut out smooth isolated points (radical complete
/// intersection), so that powers of K agree with symbolic powers.
int min_multiplicity_on_locus(const MultiPoly& f, const std::vector<MultiPoly>& locus,
                              int cap = 16);

/// Sum of local Milnor numbers of f over the locus points:
/// localized dimension of the Jacobian ideal of f.
std::optional<long> milnor_sum_on_locus(const MultiPoly& f, const std::vector<MultiPoly>& locus);

/// Sum of local Tjurina numbers (curve equation included).
std::optional<long> tjurina_sum_on_locus(const MultiPoly& f, const std::vector<MultiPoly>& locus);

/// Number of geometric points of a radical zero-dimensional ideal.
long locus_point_count(const std::vector<MultiPoly>& locus);

}  // namespace zf
