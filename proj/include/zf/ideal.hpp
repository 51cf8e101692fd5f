#pragma once

#include <optional>
#include <vector>

#include "zf/poly.hpp"

namespace zf {

struct NotZeroDimensional : std::domain_error {
  using std::domain_error::domain_error;
};

enum class OrderKind { grevlex, lex, block };

/// Monomial order: grevlex, lex, or an elimination block order whose first
/// `block_size` variables are compared (grevlex) before the rest.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  int block_size = 0;

  int cmp(const Exponents& a, const Exponents& b) const;

  static MonomialOrder grevlex() { return {OrderKind::grevlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::lex, 0}; }
  static MonomialOrder block(int k) { return {OrderKind::block, k}; }
};

/// A reduced Groebner basis: monic generators, fully inter-reduced, sorted
/// by decreasing leading monomial. Unique for (ideal, order).
struct IdealBasis {
  RingPtr ring;
  MonomialOrder order;
  std::vector<MultiPoly> generators;
  bool reduced = true;

  bool contains_one() const;
};

IdealBasis groebner_basis(const std::vector<MultiPoly>& gens,
                          MonomialOrder order = MonomialOrder::grevlex());

/// Remainder of multivariate division by the basis; zero iff the input is
/// in the ideal. Idempotent.
MultiPoly normal_form(const MultiPoly& f, const IdealBasis& basis);

/// Krull dimension of the quotient via independent variable sets modulo
/// the leading-term ideal. The empty locus reports -1. With `projective`
/// the input is a homogeneous cone and the result drops by one.
int ideal_dimension(const IdealBasis& basis, bool projective = false);

/// Vector-space dimension of the quotient ring (count of standard
/// monomials); throws NotZeroDimensional unless the affine locus is finite.
long quotient_dimension(const IdealBasis& basis);

/// Generators of the elimination ideal after dropping the named variables;
/// results live in the ring of the remaining variables.
std::vector<MultiPoly> eliminate(const std::vector<MultiPoly>& gens,
                                 const std::vector<std::string>& drop_vars);

/// Monic generator of I ∩ k[var] for a zero-dimensional ideal, found by
/// linear algebra over the quotient ring (first dependence in the Krylov
/// sequence of normal forms 1, x, x^2, ...). Result involves only `var`.
MultiPoly univariate_eliminant(const IdealBasis& grevlex_basis, int var);

/// All products of d generators (the d-th power of the ideal).
std::vector<MultiPoly> ideal_power(const std::vector<MultiPoly>& gens, int d);

/// Sum over the points of V(J) ∩ V(M) of the local quotient dimensions of
/// J, computed from quotient dimensions of J + M^d, d increasing until the
/// ideals J + M^d and J + M^(d+1) coincide. Returns std::nullopt when the
/// cap is reached without stabilizing.
std::optional<long> localized_quotient_dimension(const std::vector<MultiPoly>& j_gens,
                                                 const std::vector<MultiPoly>& m_gens,
                                                 int cap = 64);

/// A solved point: one exact coordinate per variable.
using PointCoords = std::vector<FieldElement>;

struct SolutionSet {
  std::vector<PointCoords> points;
  /// Unsolved univariate eliminant factors (degree too high for the field).
  std::vector<MultiPoly> residual;
  bool complete = false;
};

/// Exact solutions of a zero-dimensional system with all coordinates in
/// `field` (generators are lifted into `field` first, so the base field
/// must embed). Projective systems are solved chart by chart; the returned
/// coordinates are normalized so the first nonzero one equals 1.
SolutionSet solve_zero_dim(const std::vector<MultiPoly>& gens, const FieldPtr& field,
                           bool projective = false);

/// Roots of a univariate polynomial lying in its coefficient field, plus
/// the factors it could not solve (degree > 2 after peeling, or quadratics
/// with no root in the field).
struct UnivariateRoots {
  std::vector<FieldElement> roots;
  std::vector<MultiPoly> unsolved;
};
UnivariateRoots roots_in_field(const MultiPoly& f, int var);

/// Square root within a quadratic field (or Q), if one exists.
std::optional<FieldElement> field_sqrt(const FieldElement& x);

}  // namespace zf
