#include "zf/field.hpp"

namespace zf {

FieldPtr rationals() {
  static const FieldPtr q = std::make_shared<FieldDescriptor>();
  return q;
}

FieldPtr make_field(const Rational& b, const Rational& c) {
  Rational disc = b * b - 4 * c;
  if (rational_sqrt_exact(disc)) {
    throw ReducibleMinimalPolynomial("x^2 + (" + to_string(b) + ")x + (" + to_string(c) +
                                     ") splits over Q");
  }
  auto d = std::make_shared<FieldDescriptor>();
  d->kind = FieldKind::quadratic;
  d->b = b;
  d->c = c;
  return d;
}

FieldPtr omega_field() {
  static const FieldPtr f = make_field(rat(1), rat(1));
  return f;
}

FieldPtr gauss_field() {
  static const FieldPtr f = make_field(rat(0), rat(1));
  return f;
}

FieldElement::FieldElement(FieldPtr field, Rational a0, Rational a1)
    : a0_(std::move(a0)), a1_(std::move(a1)), field_(std::move(field)) {
  if (field_->kind == FieldKind::rationals && a1_ != 0) {
    throw FieldMismatch("theta component in a rational field element");
  }
}

namespace {

const FieldPtr& common_field(const FieldElement& x, const FieldElement& y) {
  if (!same_field(x.field(), y.field())) {
    throw FieldMismatch("operands live in different fields");
  }
  return x.field();
}

}  // namespace

FieldElement FieldElement::operator-() const { return FieldElement(field_, -a0_, -a1_); }

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  return FieldElement(common_field(*this, rhs), a0_ + rhs.a0_, a1_ + rhs.a1_);
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  return FieldElement(common_field(*this, rhs), a0_ - rhs.a0_, a1_ - rhs.a1_);
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  const FieldPtr& f = common_field(*this, rhs);
  // (a0 + a1 t)(b0 + b1 t) with t^2 = -b t - c.
  Rational cross = a1_ * rhs.a1_;
  if (cross == 0) {
    return FieldElement(f, a0_ * rhs.a0_, a0_ * rhs.a1_ + a1_ * rhs.a0_);
  }
  return FieldElement(f, a0_ * rhs.a0_ - f->c * cross,
                      a0_ * rhs.a1_ + a1_ * rhs.a0_ - f->b * cross);
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  return *this * rhs.inverse();
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  return same_field(field_, rhs.field_) && a0_ == rhs.a0_ && a1_ == rhs.a1_;
}

Rational FieldElement::norm() const { return a0_ * a0_ - a0_ * a1_ * field_->b + a1_ * a1_ * field_->c; }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (a1_ == 0) return FieldElement(field_, 1 / a0_);
  // Conjugate over the norm: (a0 - a1 b - a1 t) / N.
  Rational n = norm();
  return FieldElement(field_, (a0_ - a1_ * field_->b) / n, -a1_ / n);
}

std::string FieldElement::str() const {
  if (a1_ == 0) return to_string(a0_);
  std::string s;
  if (a0_ != 0) {
    s = to_string(a0_);
    s += (a1_ > 0) ? " + " : " - ";
  } else if (a1_ < 0) {
    s = "-";
  }
  Rational abs_a1 = abs(a1_);
  if (abs_a1 != 1) {
    s += to_string(abs_a1);
    s += "*";
  }
  s += "theta";
  return s;
}

FieldElement theta(const FieldPtr& field) {
  if (field->kind != FieldKind::quadratic) {
    throw FieldMismatch("theta requested from the rationals");
  }
  return FieldElement(field, rat(0), rat(1));
}

}  // namespace zf
