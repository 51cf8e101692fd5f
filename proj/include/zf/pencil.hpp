#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "zf/ideal.hpp"

namespace zf {

struct DegreeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotHomogeneous : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DegenerateParametrization : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The linear family F0 + t * X1...Xn spanned by a degree-n hypersurface
/// in n variables and the union of the coordinate hyperplanes.
struct Pencil {
  MultiPoly f0;
  int n = 0;

  const RingPtr& ring() const { return f0.ring(); }
  const FieldPtr& field() const { return f0.ring()->field; }
};

Pencil make_pencil(const MultiPoly& f0);

/// X1 * ... * Xn in the pencil's ring.
MultiPoly coordinate_product(const Pencil& pencil);

/// The member at an exact parameter value.
MultiPoly member(const Pencil& pencil, const FieldElement& t);

/// The member with symbolic parameter: the ring gains a final variable "t".
MultiPoly member_symbolic(const Pencil& pencil);

/// An exact parameter value whose member was tested for being reduced.
struct ExceptionalValue {
  std::string t_text;       // exact value, printed in the field it lives in
  bool squarefree = false;  // is the member reduced there?
  std::string witness;      // repeated part when not reduced
};

struct DivisorOnHyperplane {
  int i = 0;      // hyperplane index (0-based)
  MultiPoly d;    // reduced divisor, in the n-1 variables of the hyperplane
  int p = 0;      // multiplicity of the restriction
};

struct ConditionReport {
  std::string condition_id;
  bool passed = false;
  std::vector<std::string> witnesses;
  std::vector<std::string> caveats;
  // Condition-specific payloads.
  std::vector<DivisorOnHyperplane> divisors;      // (3)
  std::vector<ExceptionalValue> exceptional;      // (1)
  std::optional<int> sing_dimension;              // (4)
  std::optional<std::string> t_sample_text;       // (4)
};

/// (1): every member is reduced. Generic certificate through the gcd of
/// the symbolic member with its gradient, then exact squarefreeness tests
/// at every parameter value where a discriminant-type resultant collapses;
/// parameter values cut out by irreducible quadratics over Q are tested in
/// the corresponding extension field. Unresolvable parameter factors are
/// excluded by a structural comparison against powers of the common
/// component of a gradient pair whenever that certificate applies, and
/// land in caveats otherwise (failing the condition).
ConditionReport check_condition_1(const Pencil& pencil);

/// (2): the t = 0 member contains none of the coordinate hyperplanes.
ConditionReport check_condition_2(const Pencil& pencil);

/// (3): each restriction F0 on {X_i = 0} is a p-th power of a reduced
/// divisor meeting no other coordinate hyperplane in a component.
ConditionReport check_condition_3(const Pencil& pencil, int p);

/// (4): the singular locus of the member at a sample parameter has small
/// dimension (n = 3: a finite point set; otherwise codimension >= 2 in the
/// hypersurface). Openness in t carries the sample to general members.
ConditionReport check_condition_4(const Pencil& pencil, const FieldElement& t_sample);

/// Substitutes q-th powers for the listed variables (all by default).
MultiPoly kummer_pullback(const MultiPoly& f, int q);
MultiPoly kummer_pullback(const MultiPoly& f, int q, const std::vector<int>& geom_vars);

/// Seeded general plane: substitutes a full-rank 3 x n linear
/// parametrization with small rational entries, mapping a form in n >= 4
/// variables to a form on a plane with coordinates X, Y, Z.
MultiPoly plane_section(const MultiPoly& f, std::uint64_t seed);

struct PlaneSection {
  MultiPoly section;
  std::vector<std::vector<Rational>> frame;  // X_i = sum_j frame[j][i] * U_j
};

/// plane_section together with the parametrization matrix.
PlaneSection plane_section_with_frame(const MultiPoly& f, std::uint64_t seed);

}  // namespace zf
