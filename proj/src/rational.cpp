#include "zf/rational.hpp"

namespace zf {

std::optional<Integer> integer_sqrt_exact(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

std::optional<Rational> rational_sqrt_exact(const Rational& r) {
  if (r < 0) return std::nullopt;
  auto num = integer_sqrt_exact(r.get_num());
  if (!num) return std::nullopt;
  auto den = integer_sqrt_exact(r.get_den());
  if (!den) return std::nullopt;
  Rational root(*num, *den);
  root.canonicalize();
  return root;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational rational_from_string(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace zf
