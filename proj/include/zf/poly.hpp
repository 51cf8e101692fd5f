#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zf/field.hpp"

namespace zf {

struct RingMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ZeroPolynomial : std::domain_error {
  using std::domain_error::domain_error;
};

/// Coefficient field plus an ordered variable list.
struct PolyRing {
  FieldPtr field;
  std::vector<std::string> vars;

  int index_of(const std::string& name) const;

  bool operator==(const PolyRing& other) const {
    return same_field(field, other.field) && vars == other.vars;
  }
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(FieldPtr field, std::vector<std::string> vars);

using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// Graded reverse lexicographic comparison; variable 0 is the largest.
/// Returns <0, 0, >0 as a < b, a == b, a > b.
int grevlex_cmp(const Exponents& a, const Exponents& b);

struct Term {
  Exponents exps;
  FieldElement coeff;

  bool operator==(const Term& other) const {
    return exps == other.exps && coeff == other.coeff;
  }
};

struct DegreeInfo {
  int total_degree = 0;
  bool homogeneous = false;
};

/// Sparse multivariate polynomial; terms kept grevlex-descending, no zeros.
class MultiPoly {
 public:
  MultiPoly() = default;

  static MultiPoly zero(RingPtr ring);
  static MultiPoly constant(RingPtr ring, const FieldElement& value);
  static MultiPoly constant(RingPtr ring, const Rational& value);
  static MultiPoly variable(RingPtr ring, int index);
  static MultiPoly monomial(RingPtr ring, Exponents exps, FieldElement coeff);
  /// Builds from unsorted (exps, coeff) pairs, merging duplicates.
  static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  int var_count() const { return static_cast<int>(ring_->vars.size()); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Leading term under grevlex; throws ZeroPolynomial on zero.
  const Term& leading_term() const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& rhs) const;
  MultiPoly operator-(const MultiPoly& rhs) const;
  MultiPoly operator*(const MultiPoly& rhs) const;
  MultiPoly& operator+=(const MultiPoly& rhs) { return *this = *this + rhs; }
  MultiPoly& operator-=(const MultiPoly& rhs) { return *this = *this - rhs; }
  MultiPoly& operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

  MultiPoly scaled(const FieldElement& s) const;
  MultiPoly pow(int e) const;

  bool operator==(const MultiPoly& rhs) const;
  bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

  /// Degree in one variable (-1 for the zero polynomial).
  int degree_in(int var) const;

  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

void require_same_ring(const MultiPoly& a, const MultiPoly& b);

MultiPoly partial_derivative(const MultiPoly& f, int var);

/// Substitutes images[i] for variable i of f. All images share one target
/// ring; entries may be empty (std::nullopt) to map a variable to itself,
/// in which case the target ring must contain a variable of the same name.
MultiPoly substitute(const MultiPoly& f, const RingPtr& target,
                     const std::vector<std::optional<MultiPoly>>& images);

/// Substitutes a field value for one variable, staying in the same ring.
MultiPoly substitute_value(const MultiPoly& f, int var, const FieldElement& value);

DegreeInfo degree_info(const MultiPoly& f);

/// Evaluates at a point given by one field element per variable.
FieldElement evaluate(const MultiPoly& f, const std::vector<FieldElement>& point);

/// Re-reads f in a ring whose variable list contains f's variables (by name).
MultiPoly into_ring(const MultiPoly& f, const RingPtr& target);

/// Drops a variable that does not occur in f.
MultiPoly remove_variable(const MultiPoly& f, int var);

/// Coefficient-wise embedding into an extension field (Q into Q(theta)).
MultiPoly change_field(const MultiPoly& f, const FieldPtr& field);

/// f as a univariate polynomial in `var`: element d is the coefficient of
/// var^d, a polynomial of the same ring not involving `var`.
std::vector<MultiPoly> coefficients_in(const MultiPoly& f, int var);

MultiPoly from_coefficients_in(const RingPtr& ring, int var,
                               const std::vector<MultiPoly>& coeffs);

// ---- gcd / squarefree layer ----------------------------------------------

/// Exact quotient a / b; std::nullopt when b does not divide a.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

bool divides(const MultiPoly& b, const MultiPoly& a);

/// Monic under grevlex (leading coefficient scaled to 1).
MultiPoly normalize_leading(const MultiPoly& f);

/// A gcd via subresultant polynomial remainder sequences with
/// content/primitive-part splitting; result normalized to leading
/// coefficient 1. gcd(0, 0) = 0.
MultiPoly gcd_poly(const MultiPoly& a, const MultiPoly& b);

/// Product of the distinct irreducible factors of f (char 0).
MultiPoly squarefree_part(const MultiPoly& f);

/// Yun-style decomposition: f = unit * prod_i out[i]^(i+1) with the out[i]
/// squarefree and pairwise coprime (entries may be constant 1).
std::vector<MultiPoly> squarefree_decomposition(const MultiPoly& f);

bool is_squarefree(const MultiPoly& f);

/// f = c * g^p exactly, if such a decomposition exists.
std::optional<std::pair<FieldElement, MultiPoly>> perfect_power_test(const MultiPoly& f, int p);

/// Resultant of f and g with respect to `var`, computed as the determinant
/// of the formal Sylvester matrix (fraction-free elimination), so it
/// specializes transparently in the remaining variables.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var);

/// Content with respect to `var`: the gcd of the coefficients of f viewed
/// as a univariate polynomial in `var`. Result does not involve `var`.
MultiPoly content_wrt(const MultiPoly& f, int var);

/// f / content_wrt(f, var).
MultiPoly primitive_part_wrt(const MultiPoly& f, int var);

/// f viewed in k[var][rest]: the gcd in k[var] of the coefficients of the
/// rest-monomials. Result involves only `var`.
MultiPoly univariate_content(const MultiPoly& f, int var);

}  // namespace zf
