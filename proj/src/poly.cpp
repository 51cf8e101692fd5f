#include "zf/poly.hpp"

#include <algorithm>
#include <sstream>

namespace zf {

int PolyRing::index_of(const std::string& name) const {
  for (size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == name) return static_cast<int>(i);
  }
  return -1;
}

RingPtr make_ring(FieldPtr field, std::vector<std::string> vars) {
  auto r = std::make_shared<PolyRing>();
  r->field = std::move(field);
  r->vars = std::move(vars);
  return r;
}

int total_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

int grevlex_cmp(const Exponents& a, const Exponents& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: a > b iff the last nonzero entry of a - b is negative.
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

namespace {

bool grevlex_greater(const Term& s, const Term& t) {
  return grevlex_cmp(s.exps, t.exps) > 0;
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

// Transports a coefficient into another field: identical fields verbatim,
// rational values embed anywhere, anything else is a mismatch.
FieldElement coeff_into_field(const FieldElement& c, const FieldPtr& field) {
  if (same_field(c.field(), field)) return FieldElement(field, c.a0(), c.a1());
  if (c.a1() == 0) return FieldElement(field, c.a0());
  throw FieldMismatch("theta coefficient crossing into a different field");
}

}  // namespace

void require_same_ring(const MultiPoly& a, const MultiPoly& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("polynomials from different rings");
}

MultiPoly MultiPoly::zero(RingPtr ring) {
  MultiPoly p;
  p.ring_ = std::move(ring);
  return p;
}

MultiPoly MultiPoly::constant(RingPtr ring, const FieldElement& value) {
  MultiPoly p;
  p.ring_ = std::move(ring);
  if (!value.is_zero()) {
    if (!same_field(value.field(), p.ring_->field)) {
      throw RingMismatch("constant from a different field");
    }
    p.terms_.push_back({Exponents(p.ring_->vars.size(), 0), value});
  }
  return p;
}

MultiPoly MultiPoly::constant(RingPtr ring, const Rational& value) {
  FieldElement v(ring->field, value);
  return constant(std::move(ring), v);
}

MultiPoly MultiPoly::variable(RingPtr ring, int index) {
  Exponents e(ring->vars.size(), 0);
  e.at(index) = 1;
  return monomial(std::move(ring), std::move(e), FieldElement(ring->field, rat(1)));
}

MultiPoly MultiPoly::monomial(RingPtr ring, Exponents exps, FieldElement coeff) {
  MultiPoly p;
  p.ring_ = std::move(ring);
  if (exps.size() != p.ring_->vars.size()) throw RingMismatch("exponent vector length");
  if (!coeff.is_zero()) p.terms_.push_back({std::move(exps), std::move(coeff)});
  return p;
}

MultiPoly MultiPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  std::map<Exponents, FieldElement, decltype([](const Exponents& a, const Exponents& b) {
             return grevlex_cmp(a, b) > 0;
           })>
      acc;
  for (auto& t : terms) {
    if (t.exps.size() != ring->vars.size()) throw RingMismatch("exponent vector length");
    auto it = acc.find(t.exps);
    if (it == acc.end()) {
      acc.emplace(std::move(t.exps), std::move(t.coeff));
    } else {
      it->second += t.coeff;
    }
  }
  MultiPoly p;
  p.ring_ = std::move(ring);
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) p.terms_.push_back({e, c});
  }
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].exps) == 0);
}

const Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw ZeroPolynomial("leading term of zero");
  return terms_.front();
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
  require_same_ring(*this, rhs);
  MultiPoly out;
  out.ring_ = ring_;
  out.terms_.reserve(terms_.size() + rhs.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    int c = grevlex_cmp(terms_[i].exps, rhs.terms_[j].exps);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(rhs.terms_[j++]);
    } else {
      FieldElement s = terms_[i].coeff + rhs.terms_[j].coeff;
      if (!s.is_zero()) out.terms_.push_back({terms_[i].exps, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < rhs.terms_.size(); ++j) out.terms_.push_back(rhs.terms_[j]);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const { return *this + (-rhs); }

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
  require_same_ring(*this, rhs);
  std::vector<Term> prods;
  prods.reserve(terms_.size() * rhs.terms_.size());
  const size_t n = ring_->vars.size();
  for (const auto& s : terms_) {
    for (const auto& t : rhs.terms_) {
      Exponents e(n);
      for (size_t k = 0; k < n; ++k) e[k] = s.exps[k] + t.exps[k];
      prods.push_back({std::move(e), s.coeff * t.coeff});
    }
  }
  return from_terms(ring_, std::move(prods));
}

MultiPoly MultiPoly::scaled(const FieldElement& s) const {
  if (s.is_zero()) return zero(ring_);
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.coeff *= s;
  return p;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  MultiPoly acc = constant(ring_, rat(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base = (e >>= 1) ? base * base : base;
  }
  return acc;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
  if (!same_ring(ring_, rhs.ring_)) return false;
  if (terms_.size() != rhs.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exps != rhs.terms_[i].exps || terms_[i].coeff != rhs.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.exps.at(var));
  return terms_.empty() ? -1 : d;
}

MultiPoly partial_derivative(const MultiPoly& f, int var) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    int e = t.exps.at(var);
    if (e == 0) continue;
    Term d = t;
    d.exps[var] = e - 1;
    d.coeff = d.coeff * FieldElement(f.ring()->field, rat(e));
    out.push_back(std::move(d));
  }
  return MultiPoly::from_terms(f.ring(), std::move(out));
}

MultiPoly substitute(const MultiPoly& f, const RingPtr& target,
                     const std::vector<std::optional<MultiPoly>>& images) {
  const auto& vars = f.ring()->vars;
  if (images.size() != vars.size()) throw RingMismatch("one image per variable required");
  std::vector<MultiPoly> base(vars.size());
  for (size_t i = 0; i < vars.size(); ++i) {
    if (images[i]) {
      if (!same_ring(images[i]->ring(), target)) throw RingMismatch("image in a foreign ring");
      base[i] = *images[i];
    } else {
      int j = target->index_of(vars[i]);
      if (j < 0) throw RingMismatch("no image for variable " + vars[i]);
      base[i] = MultiPoly::variable(target, j);
    }
  }
  // Per-variable power cache.
  std::vector<std::vector<MultiPoly>> powers(vars.size());
  auto power = [&](size_t i, int e) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, rat(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base[i]);
    return cache[e];
  };
  MultiPoly acc = MultiPoly::zero(target);
  for (const auto& t : f.terms()) {
    MultiPoly prod = MultiPoly::constant(target, coeff_into_field(t.coeff, target->field));
    for (size_t i = 0; i < vars.size(); ++i) {
      if (t.exps[i] > 0) prod *= power(i, t.exps[i]);
    }
    acc += prod;
  }
  return acc;
}

MultiPoly substitute_value(const MultiPoly& f, int var, const FieldElement& value) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Term s = t;
    int e = s.exps.at(var);
    s.exps[var] = 0;
    for (int k = 0; k < e; ++k) s.coeff *= value;
    if (!s.coeff.is_zero()) out.push_back(std::move(s));
  }
  return MultiPoly::from_terms(f.ring(), std::move(out));
}

DegreeInfo degree_info(const MultiPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("degree of zero polynomial");
  DegreeInfo info;
  info.total_degree = total_degree(f.terms().front().exps);
  info.homogeneous = true;
  int min_deg = info.total_degree;
  for (const auto& t : f.terms()) {
    int d = total_degree(t.exps);
    info.total_degree = std::max(info.total_degree, d);
    min_deg = std::min(min_deg, d);
  }
  info.homogeneous = (min_deg == info.total_degree);
  return info;
}

FieldElement evaluate(const MultiPoly& f, const std::vector<FieldElement>& point) {
  if (point.size() != f.ring()->vars.size()) throw RingMismatch("point arity");
  FieldElement acc(f.ring()->field);
  for (const auto& t : f.terms()) {
    FieldElement v = t.coeff;
    for (size_t i = 0; i < point.size(); ++i) {
      for (int k = 0; k < t.exps[i]; ++k) v *= point[i];
    }
    acc += v;
  }
  return acc;
}

MultiPoly into_ring(const MultiPoly& f, const RingPtr& target) {
  std::vector<int> where(f.ring()->vars.size());
  for (size_t i = 0; i < where.size(); ++i) {
    where[i] = target->index_of(f.ring()->vars[i]);
    if (where[i] < 0 && f.degree_in(static_cast<int>(i)) > 0) {
      throw RingMismatch("target ring lacks variable " + f.ring()->vars[i]);
    }
  }
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Exponents e(target->vars.size(), 0);
    for (size_t i = 0; i < where.size(); ++i) {
      if (t.exps[i] > 0) e[where[i]] = t.exps[i];
    }
    out.push_back({std::move(e), coeff_into_field(t.coeff, target->field)});
  }
  return MultiPoly::from_terms(target, std::move(out));
}

MultiPoly remove_variable(const MultiPoly& f, int var) {
  if (f.degree_in(var) > 0) throw RingMismatch("variable still occurs");
  std::vector<std::string> vars = f.ring()->vars;
  vars.erase(vars.begin() + var);
  return into_ring(f, make_ring(f.ring()->field, std::move(vars)));
}

MultiPoly change_field(const MultiPoly& f, const FieldPtr& field) {
  auto target = make_ring(field, f.ring()->vars);
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    out.push_back({t.exps, coeff_into_field(t.coeff, field)});
  }
  return MultiPoly::from_terms(target, std::move(out));
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& f, int var) {
  int d = f.degree_in(var);
  std::vector<std::vector<Term>> buckets(static_cast<size_t>(std::max(d, -1) + 1));
  for (const auto& t : f.terms()) {
    Term s = t;
    int e = s.exps[var];
    s.exps[var] = 0;
    buckets[e].push_back(std::move(s));
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(MultiPoly::from_terms(f.ring(), std::move(b)));
  return out;
}

MultiPoly from_coefficients_in(const RingPtr& ring, int var,
                               const std::vector<MultiPoly>& coeffs) {
  std::vector<Term> out;
  for (size_t d = 0; d < coeffs.size(); ++d) {
    for (const auto& t : coeffs[d].terms()) {
      Term s = t;
      s.exps[var] += static_cast<int>(d);
      out.push_back(std::move(s));
    }
  }
  return MultiPoly::from_terms(ring, std::move(out));
}

namespace {

std::string monomial_str(const PolyRing& ring, const Exponents& e) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string mono = monomial_str(*ring_, t.exps);
    const FieldElement& c = t.coeff;
    bool negative_rational = c.is_rational() && c.a0() < 0;
    if (first) {
      if (negative_rational) os << "-";
      first = false;
    } else {
      os << (negative_rational ? " - " : " + ");
    }
    FieldElement shown = negative_rational ? -c : c;
    if (!c.is_rational()) {
      os << "(" << c.str() << ")";
      if (!mono.empty()) os << "*";
    } else if (!shown.is_one() || mono.empty()) {
      os << shown.str();
      if (!mono.empty()) os << "*";
    }
    os << mono;
  }
  return os.str();
}

}  // namespace zf
