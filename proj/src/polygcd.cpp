#include <algorithm>
#include <cassert>

#include "zf/poly.hpp"

namespace zf {

namespace {

MultiPoly one_of(const RingPtr& ring) { return MultiPoly::constant(ring, rat(1)); }

/// Coefficient of the top power of `var`, as a polynomial without `var`.
MultiPoly leading_coeff_in(const MultiPoly& f, int var) {
  int d = f.degree_in(var);
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (t.exps[var] == d) {
      Term s = t;
      s.exps[var] = 0;
      out.push_back(std::move(s));
    }
  }
  return MultiPoly::from_terms(f.ring(), std::move(out));
}

/// Scales f by a positive rational so all coefficient components are
/// coprime integers. Pure growth control; the result is an associate.
MultiPoly scalar_primitive(const MultiPoly& f) {
  if (f.is_zero()) return f;
  Integer num_gcd = 0, den_lcm = 1;
  auto feed = [&](const Rational& r) {
    if (r == 0) return;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), r.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den().get_mpz_t());
  };
  for (const auto& t : f.terms()) {
    feed(t.coeff.a0());
    feed(t.coeff.a1());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (content == 1) return f;
  return f.scaled(FieldElement(f.ring()->field, 1 / content));
}

MultiPoly pseudo_remainder(MultiPoly u, const MultiPoly& v, int var) {
  const int dv = v.degree_in(var);
  const MultiPoly lcv = leading_coeff_in(v, var);
  int e = u.degree_in(var) - dv + 1;
  while (!u.is_zero() && u.degree_in(var) >= dv) {
    int du = u.degree_in(var);
    Exponents shift(u.ring()->vars.size(), 0);
    shift[var] = du - dv;
    MultiPoly t = leading_coeff_in(u, var) *
                  MultiPoly::monomial(u.ring(), shift, FieldElement(u.ring()->field, rat(1)));
    u = u * lcv - t * v;
    --e;
  }
  for (; e > 0; --e) u = u * lcv;
  return u;
}

/// Brown's subresultant PRS on inputs primitive with respect to `var`.
/// Returns a gcd that is primitive with respect to `var`.
MultiPoly prs_gcd(MultiPoly u, MultiPoly v, int var) {
  if (u.degree_in(var) < v.degree_in(var)) std::swap(u, v);
  MultiPoly g = one_of(u.ring());
  MultiPoly h = g;
  while (true) {
    int delta = u.degree_in(var) - v.degree_in(var);
    MultiPoly r = pseudo_remainder(u, v, var);
    if (r.is_zero()) return primitive_part_wrt(v, var);
    if (r.degree_in(var) == 0) return one_of(u.ring());
    u = v;
    auto quotient = divide_exact(r, g * h.pow(delta));
    assert(quotient && "subresultant division must be exact");
    v = scalar_primitive(*quotient);
    g = leading_coeff_in(u, var);
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      auto hh = divide_exact(g.pow(delta), h.pow(delta - 1));
      assert(hh && "subresultant h-update must be exact");
      h = *hh;
    }
  }
}

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant()) return one_of(a.ring());
  const int n = a.var_count();
  int main_var = -1, best = -1;
  for (int i = 0; i < n; ++i) {
    int da = a.degree_in(i), db = b.degree_in(i);
    if (da > 0 && db > 0) {
      int score = std::max(da, db);
      if (best < 0 || score < best) best = score, main_var = i;
    }
  }
  if (main_var < 0) {
    // No shared variable: the gcd divides the content of `a` with respect
    // to any variable private to `a`.
    for (int i = 0; i < n; ++i) {
      if (a.degree_in(i) > 0) return gcd_impl(content_wrt(a, i), b);
    }
    return one_of(a.ring());  // unreachable: a is non-constant
  }
  MultiPoly ca = content_wrt(a, main_var);
  MultiPoly cb = content_wrt(b, main_var);
  MultiPoly c = gcd_impl(ca, cb);
  auto pa = divide_exact(a, ca);
  auto pb = divide_exact(b, cb);
  assert(pa && pb);
  MultiPoly g = prs_gcd(scalar_primitive(*pa), scalar_primitive(*pb), main_var);
  return c * g;
}

}  // namespace

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a, b);
  if (b.is_zero()) return std::nullopt;
  MultiPoly rem = a;
  MultiPoly quot = MultiPoly::zero(a.ring());
  const Term& lead = b.leading_term();
  const size_t n = a.ring()->vars.size();
  while (!rem.is_zero()) {
    const Term& top = rem.leading_term();
    Exponents e(n);
    for (size_t i = 0; i < n; ++i) {
      e[i] = top.exps[i] - lead.exps[i];
      if (e[i] < 0) return std::nullopt;
    }
    MultiPoly piece = MultiPoly::monomial(a.ring(), std::move(e), top.coeff / lead.coeff);
    quot += piece;
    rem -= piece * b;
  }
  return quot;
}

bool divides(const MultiPoly& b, const MultiPoly& a) {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  return divide_exact(a, b).has_value();
}

MultiPoly normalize_leading(const MultiPoly& f) {
  if (f.is_zero()) return f;
  const FieldElement& lc = f.leading_term().coeff;
  if (lc.is_one()) return f;
  return f.scaled(lc.inverse());
}

MultiPoly content_wrt(const MultiPoly& f, int var) {
  MultiPoly acc = MultiPoly::zero(f.ring());
  for (const auto& c : coefficients_in(f, var)) {
    if (c.is_zero()) continue;
    acc = acc.is_zero() ? c : gcd_impl(acc, c);
    if (acc.is_constant()) return one_of(f.ring());
  }
  return acc.is_zero() ? acc : normalize_leading(acc);
}

MultiPoly primitive_part_wrt(const MultiPoly& f, int var) {
  if (f.is_zero()) return f;
  auto q = divide_exact(f, content_wrt(f, var));
  assert(q && "content must divide");
  return *q;
}

MultiPoly univariate_content(const MultiPoly& f, int var) {
  // Group by the monomial in the other variables; each bucket is a
  // univariate polynomial in `var`.
  std::map<Exponents, std::vector<Term>> buckets;
  for (const auto& t : f.terms()) {
    Exponents key = t.exps;
    int e = key[var];
    key[var] = 0;
    Term s = t;
    s.exps.assign(f.ring()->vars.size(), 0);
    s.exps[var] = e;
    buckets[std::move(key)].push_back(std::move(s));
  }
  MultiPoly acc = MultiPoly::zero(f.ring());
  for (auto& [key, terms] : buckets) {
    MultiPoly u = MultiPoly::from_terms(f.ring(), std::move(terms));
    acc = acc.is_zero() ? u : gcd_impl(acc, u);
    if (acc.is_constant() && !acc.is_zero()) return one_of(f.ring());
  }
  return acc.is_zero() ? acc : normalize_leading(acc);
}

MultiPoly gcd_poly(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a, b);
  if (a.is_zero() && b.is_zero()) return a;
  return normalize_leading(gcd_impl(a, b));
}

MultiPoly squarefree_part(const MultiPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("squarefree part of zero");
  MultiPoly g = MultiPoly::zero(f.ring());
  for (int i = 0; i < f.var_count(); ++i) {
    if (f.degree_in(i) <= 0) continue;
    MultiPoly d = partial_derivative(f, i);
    g = g.is_zero() ? gcd_poly(f, d) : gcd_poly(g, d);
    if (g.is_constant() && !g.is_zero()) return normalize_leading(f);
  }
  if (g.is_zero()) return one_of(f.ring());  // f constant
  auto q = divide_exact(f, g);
  assert(q && "gcd with derivatives must divide");
  return normalize_leading(*q);
}

bool is_squarefree(const MultiPoly& f) {
  if (f.is_zero()) return false;
  MultiPoly s = squarefree_part(f);
  return degree_info(s).total_degree == degree_info(f).total_degree;
}

std::vector<MultiPoly> squarefree_decomposition(const MultiPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("decomposition of zero");
  // s[i] = product of the distinct factors of multiplicity > i; the
  // multiplicity-(i+1) part is then s[i] / s[i+1].
  std::vector<MultiPoly> sqf_chain;
  MultiPoly w = normalize_leading(f);
  while (!w.is_constant()) {
    MultiPoly s = squarefree_part(w);
    sqf_chain.push_back(s);
    auto next = MultiPoly::zero(f.ring());
    // w <- gcd(w, all partials) = product with multiplicities dropped by 1.
    for (int i = 0; i < w.var_count(); ++i) {
      if (w.degree_in(i) <= 0) continue;
      MultiPoly d = partial_derivative(w, i);
      next = next.is_zero() ? gcd_poly(w, d) : gcd_poly(next, d);
      if (next.is_constant() && !next.is_zero()) break;
    }
    w = next.is_zero() ? one_of(f.ring()) : next;
  }
  std::vector<MultiPoly> out;
  for (size_t i = 0; i < sqf_chain.size(); ++i) {
    const MultiPoly& hi = sqf_chain[i];
    if (i + 1 < sqf_chain.size()) {
      auto q = divide_exact(hi, sqf_chain[i + 1]);
      assert(q && "squarefree chain must divide");
      out.push_back(normalize_leading(*q));
    } else {
      out.push_back(normalize_leading(hi));
    }
  }
  return out;
}

std::optional<std::pair<FieldElement, MultiPoly>> perfect_power_test(const MultiPoly& f, int p) {
  if (p < 2) throw std::invalid_argument("power must be >= 2");
  if (f.is_zero()) throw ZeroPolynomial("perfect power test of zero");
  if (f.is_constant()) return std::make_pair(f.leading_term().coeff, one_of(f.ring()));
  auto parts = squarefree_decomposition(f);
  MultiPoly root = one_of(f.ring());
  for (size_t i = 0; i < parts.size(); ++i) {
    int multiplicity = static_cast<int>(i) + 1;
    if (parts[i].is_constant()) continue;
    if (multiplicity % p != 0) return std::nullopt;
    root *= parts[i].pow(multiplicity / p);
  }
  root = normalize_leading(root);
  auto c = divide_exact(f, root.pow(p));
  if (!c || !c->is_constant() || c->is_zero()) return std::nullopt;
  return std::make_pair(c->leading_term().coeff, root);
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
  require_same_ring(f, g);
  if (f.is_zero() || g.is_zero()) return MultiPoly::zero(f.ring());
  const int df = f.degree_in(var);
  const int dg = g.degree_in(var);
  if (df == 0) return f.pow(dg);
  if (dg == 0) return g.pow(df);
  auto fc = coefficients_in(f, var);
  auto gc = coefficients_in(g, var);
  const int n = df + dg;
  std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, MultiPoly::zero(f.ring())));
  for (int row = 0; row < dg; ++row) {
    for (int k = 0; k <= df; ++k) m[row][row + k] = fc[df - k];
  }
  for (int row = 0; row < df; ++row) {
    for (int k = 0; k <= dg; ++k) m[dg + row][row + k] = gc[dg - k];
  }
  // Fraction-free Bareiss elimination.
  MultiPoly prev = one_of(f.ring());
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i) {
        if (!m[i][k].is_zero()) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return MultiPoly::zero(f.ring());
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = divide_exact(num, prev);
        assert(q && "Bareiss division must be exact");
        m[i][j] = *q;
      }
      m[i][k] = MultiPoly::zero(f.ring());
    }
    prev = m[k][k];
  }
  MultiPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace zf
