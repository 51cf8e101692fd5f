#pragma once

#include <string>

#include "zf/poly.hpp"

namespace zf {

struct SyntaxError : std::runtime_error {
  SyntaxError(const std::string& what, size_t pos)
      : std::runtime_error(what + " at offset " + std::to_string(pos)), position(pos) {}
  size_t position;
};
struct UnknownVariable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FieldSymbolMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses an expression over the ring: sums and differences of terms,
/// juxtaposition or * for products, ^ for natural powers, rationals as
/// p/q, parentheses. `w` resolves to theta over Q(omega), `i` over Q(i),
/// `theta` over any quadratic field; other identifiers must be ring
/// variables.
MultiPoly parse_poly_expr(const std::string& text, const RingPtr& ring);

}  // namespace zf
