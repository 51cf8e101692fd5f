#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "zf/rational.hpp"

namespace zf {

struct ReducibleMinimalPolynomial : std::domain_error {
  using std::domain_error::domain_error;
};
struct FieldMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

enum class FieldKind { rationals, quadratic };

/// The coefficient field: Q, or Q(theta) with theta^2 + b*theta + c = 0.
struct FieldDescriptor {
  FieldKind kind = FieldKind::rationals;
  Rational b;  // minimal polynomial x^2 + b x + c (quadratic kind only)
  Rational c;

  bool operator==(const FieldDescriptor& other) const {
    if (kind != other.kind) return false;
    if (kind == FieldKind::rationals) return true;
    return b == other.b && c == other.c;
  }
};

using FieldPtr = std::shared_ptr<const FieldDescriptor>;

/// The rationals, shared singleton.
FieldPtr rationals();

/// Q(theta) with theta^2 + b theta + c = 0.
/// Throws ReducibleMinimalPolynomial when b^2 - 4c is a rational square.
FieldPtr make_field(const Rational& b, const Rational& c);

/// Q(omega), omega^2 + omega + 1 = 0 (primitive cube root of unity).
FieldPtr omega_field();

/// Q(i), i^2 + 1 = 0.
FieldPtr gauss_field();

inline bool same_field(const FieldPtr& f, const FieldPtr& g) {
  return f == g || (f && g && *f == *g);
}

/// a0 + a1*theta, stored reduced modulo the minimal polynomial.
class FieldElement {
 public:
  FieldElement() : field_(rationals()) {}
  explicit FieldElement(FieldPtr field) : field_(std::move(field)) {}
  FieldElement(FieldPtr field, Rational a0) : a0_(std::move(a0)), field_(std::move(field)) {}
  FieldElement(FieldPtr field, Rational a0, Rational a1);

  const Rational& a0() const { return a0_; }
  const Rational& a1() const { return a1_; }
  const FieldPtr& field() const { return field_; }

  bool is_zero() const { return a0_ == 0 && a1_ == 0; }
  bool is_one() const { return a0_ == 1 && a1_ == 0; }
  bool is_rational() const { return a1_ == 0; }

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
  FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
  FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

  bool operator==(const FieldElement& rhs) const;
  bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

  /// Multiplicative inverse; throws DivisionByZero on zero.
  FieldElement inverse() const;

  /// Field norm N(a0 + a1 theta) = a0^2 - a0 a1 b + a1^2 c.
  Rational norm() const;

  /// Text form "a0 + a1*theta" with exact rationals.
  std::string str() const;

 private:
  Rational a0_;
  Rational a1_;
  FieldPtr field_;
};

inline FieldElement fe(const FieldPtr& field, long num, long den = 1) {
  return FieldElement(field, rat(num, den));
}

/// theta of a quadratic field (omega for Q(omega), i for Q(i)).
FieldElement theta(const FieldPtr& field);

}  // namespace zf
