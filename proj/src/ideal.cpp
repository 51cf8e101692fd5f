#include "zf/ideal.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace zf {

namespace {

int cmp_slice(const Exponents& a, const Exponents& b, int from, int to) {
  int da = 0, db = 0;
  for (int i = from; i < to; ++i) da += a[i], db += b[i];
  if (da != db) return da < db ? -1 : 1;
  for (int i = to - 1; i >= from; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::cmp(const Exponents& a, const Exponents& b) const {
  const int n = static_cast<int>(a.size());
  switch (kind) {
    case OrderKind::grevlex:
      return cmp_slice(a, b, 0, n);
    case OrderKind::lex:
      for (int i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case OrderKind::block: {
      int c = cmp_slice(a, b, 0, block_size);
      if (c != 0) return c;
      return cmp_slice(a, b, block_size, n);
    }
  }
  return 0;
}

bool IdealBasis::contains_one() const {
  for (const auto& g : generators) {
    if (!g.is_zero() && g.is_constant()) return true;
  }
  return false;
}

namespace {

// Engine representation: terms sorted descending under the working order.
struct OP {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
};

OP to_op(const MultiPoly& p, const MonomialOrder& order) {
  OP f;
  f.terms = p.terms();
  std::sort(f.terms.begin(), f.terms.end(),
            [&](const Term& s, const Term& t) { return order.cmp(s.exps, t.exps) > 0; });
  return f;
}

MultiPoly from_op(const RingPtr& ring, const OP& f) {
  return MultiPoly::from_terms(ring, f.terms);
}

bool divides_mono(const Exponents& d, const Exponents& m) {
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] > m[i]) return false;
  }
  return true;
}

Exponents lcm_mono(const Exponents& a, const Exponents& b) {
  Exponents e(a.size());
  for (size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
  return e;
}

bool coprime_mono(const Exponents& a, const Exponents& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

// f -= c * x^shift * g, merging sorted term lists.
OP sub_scaled(const OP& f, const FieldElement& c, const Exponents& shift, const OP& g,
              const MonomialOrder& order) {
  OP out;
  out.terms.reserve(f.terms.size() + g.terms.size());
  size_t i = 0, j = 0;
  Exponents moved(shift.size());
  while (i < f.terms.size() || j < g.terms.size()) {
    int rel;
    if (i >= f.terms.size()) {
      rel = -1;
    } else if (j >= g.terms.size()) {
      rel = 1;
    } else {
      for (size_t k = 0; k < shift.size(); ++k) moved[k] = g.terms[j].exps[k] + shift[k];
      rel = order.cmp(f.terms[i].exps, moved);
    }
    if (rel > 0) {
      out.terms.push_back(f.terms[i++]);
    } else if (rel < 0) {
      for (size_t k = 0; k < shift.size(); ++k) moved[k] = g.terms[j].exps[k] + shift[k];
      out.terms.push_back({moved, -(c * g.terms[j].coeff)});
      ++j;
    } else {
      FieldElement v = f.terms[i].coeff - c * g.terms[j].coeff;
      if (!v.is_zero()) out.terms.push_back({f.terms[i].exps, std::move(v)});
      ++i, ++j;
    }
  }
  return out;
}

// Rational rescale so all coefficient components are coprime integers and
// the leading coefficient's first nonzero component is positive (a
// canonical associate; growth control).
void scalar_primitive_span(std::vector<Term>* a, std::vector<Term>* b) {
  Integer num_gcd = 0, den_lcm = 1;
  auto feed = [&](const Rational& r) {
    if (r == 0) return;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), r.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den().get_mpz_t());
  };
  const Term* lead = nullptr;
  for (auto* part : {a, b}) {
    if (!part) continue;
    for (const auto& t : *part) {
      if (!lead) lead = &t;
      feed(t.coeff.a0());
      feed(t.coeff.a1());
    }
  }
  if (!lead) return;
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  const Rational& sign_probe = (lead->coeff.a0() != 0) ? lead->coeff.a0() : lead->coeff.a1();
  if (sign_probe < 0) content = -content;
  if (content == 1) return;
  FieldElement inv(lead->coeff.field(), 1 / content);
  for (auto* part : {a, b}) {
    if (!part) continue;
    for (auto& t : *part) t.coeff *= inv;
  }
}

void make_scalar_primitive(OP& f) { scalar_primitive_span(&f.terms, nullptr); }

// Full reduction: no remainder term is divisible by any basis leading
// term. Division-free: cross-multiplies by the reducer's leading
// coefficient and strips integer content periodically, so the result is a
// canonical associate of the remainder. With a monic basis no scaling ever
// happens and the exact remainder comes back.
OP reduce_full(OP f, const std::vector<OP>& basis, const MonomialOrder& order) {
  std::vector<Term> done;
  int steps_since_strip = 0;
  bool scaled = false;  // with a monic basis the remainder stays exact
  while (!f.is_zero()) {
    const Term& top = f.lead();
    const OP* reducer = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && divides_mono(g.lead().exps, top.exps)) {
        reducer = &g;
        break;
      }
    }
    if (!reducer) {
      done.push_back(top);
      f.terms.erase(f.terms.begin());
      continue;
    }
    Exponents shift(top.exps.size());
    for (size_t k = 0; k < shift.size(); ++k) shift[k] = top.exps[k] - reducer->lead().exps[k];
    const FieldElement& lcg = reducer->lead().coeff;
    FieldElement c = top.coeff;
    if (!lcg.is_one()) {
      for (auto& t : done) t.coeff *= lcg;
      for (auto& t : f.terms) t.coeff *= lcg;
      scaled = true;
    }
    f = sub_scaled(f, c, shift, *reducer, order);
    if (scaled && ++steps_since_strip >= 4) {
      scalar_primitive_span(&done, &f.terms);
      steps_since_strip = 0;
    }
  }
  OP out;
  out.terms = std::move(done);
  return out;
}

struct Engine {
  RingPtr ring;
  MonomialOrder order;
  std::vector<OP> basis;

  // Fraction-free S-polynomial: lc(g_j) x^si g_i - lc(g_i) x^sj g_j.
  OP spoly(int i, int j) const {
    const Term& ti = basis[i].lead();
    const Term& tj = basis[j].lead();
    Exponents l = lcm_mono(ti.exps, tj.exps);
    Exponents si(l.size()), sj(l.size());
    for (size_t k = 0; k < l.size(); ++k) si[k] = l[k] - ti.exps[k], sj[k] = l[k] - tj.exps[k];
    OP zero;
    OP a = sub_scaled(zero, -tj.coeff, si, basis[i], order);
    return sub_scaled(a, ti.coeff, sj, basis[j], order);
  }
};

struct PairKey {
  Exponents lcm;
  int i, j;
};

}  // namespace

IdealBasis groebner_basis(const std::vector<MultiPoly>& gens, MonomialOrder order) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  RingPtr ring = gens.front().ring();
  Engine eng{ring, order, {}};
  for (const auto& g : gens) {
    require_same_ring(gens.front(), g);
    if (g.is_zero()) continue;
    OP f = to_op(g, order);
    make_scalar_primitive(f);
    eng.basis.push_back(std::move(f));
  }
  if (eng.basis.empty()) {
    return IdealBasis{ring, order, {MultiPoly::zero(ring)}, true};
  }

  auto pair_less = [&](const PairKey& a, const PairKey& b) {
    int c = order.cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::multiset<PairKey, decltype(pair_less)> queue(pair_less);
  // treated[i][j]: the pair was either reduced or legitimately discarded.
  std::map<std::pair<int, int>, bool> treated;
  auto mark = [&](int i, int j) { treated[{std::min(i, j), std::max(i, j)}] = true; };
  auto is_treated = [&](int i, int j) {
    return treated.count({std::min(i, j), std::max(i, j)}) > 0;
  };

  auto push_pairs_for = [&](int t) {
    for (int i = 0; i < t; ++i) {
      queue.insert({lcm_mono(eng.basis[i].lead().exps, eng.basis[t].lead().exps), i, t});
    }
  };
  for (int t = 1; t < static_cast<int>(eng.basis.size()); ++t) push_pairs_for(t);

  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    const Exponents& lmi = eng.basis[pk.i].lead().exps;
    const Exponents& lmj = eng.basis[pk.j].lead().exps;
    // Product criterion.
    if (coprime_mono(lmi, lmj)) {
      mark(pk.i, pk.j);
      continue;
    }
    // Chain criterion: some k with LM(k) | lcm(i,j) and both side pairs done.
    bool skip = false;
    for (int k = 0; k < static_cast<int>(eng.basis.size()); ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (divides_mono(eng.basis[k].lead().exps, pk.lcm) && is_treated(pk.i, k) &&
          is_treated(pk.j, k)) {
        skip = true;
        break;
      }
    }
    if (skip) {
      mark(pk.i, pk.j);
      continue;
    }
    OP s = eng.spoly(pk.i, pk.j);
    mark(pk.i, pk.j);
    OP r = reduce_full(std::move(s), eng.basis, order);
    if (r.is_zero()) continue;
    make_scalar_primitive(r);
    eng.basis.push_back(std::move(r));
    push_pairs_for(static_cast<int>(eng.basis.size()) - 1);
  }

  // Inter-reduce to the unique reduced basis.
  std::vector<OP> work = eng.basis;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < work.size(); ++i) {
      std::vector<OP> others;
      others.reserve(work.size() - 1);
      for (size_t j = 0; j < work.size(); ++j) {
        if (j != i && !work[j].is_zero()) others.push_back(work[j]);
      }
      OP r = reduce_full(work[i], others, order);
      make_scalar_primitive(r);
      if (!(r.terms == work[i].terms)) changed = true;
      work[i] = std::move(r);
    }
    work.erase(std::remove_if(work.begin(), work.end(), [](const OP& f) { return f.is_zero(); }),
               work.end());
  }
  for (auto& f : work) {
    FieldElement inv = f.lead().coeff.inverse();
    for (auto& t : f.terms) t.coeff *= inv;
  }
  std::sort(work.begin(), work.end(),
            [&](const OP& a, const OP& b) { return order.cmp(a.lead().exps, b.lead().exps) > 0; });

  IdealBasis out{ring, order, {}, true};
  out.generators.reserve(work.size());
  for (const auto& f : work) out.generators.push_back(from_op(ring, f));
  return out;
}

MultiPoly normal_form(const MultiPoly& f, const IdealBasis& basis) {
  require_same_ring(f, basis.generators.empty() ? f : basis.generators.front());
  std::vector<OP> ops;
  ops.reserve(basis.generators.size());
  for (const auto& g : basis.generators) {
    if (!g.is_zero()) ops.push_back(to_op(g, basis.order));
  }
  OP r = reduce_full(to_op(f, basis.order), ops, basis.order);
  return from_op(f.ring(), r);
}

int ideal_dimension(const IdealBasis& basis, bool projective) {
  const int n = static_cast<int>(basis.ring->vars.size());
  if (basis.contains_one()) return -1;
  std::vector<Exponents> lms;
  for (const auto& g : basis.generators) {
    if (!g.is_zero()) lms.push_back(to_op(g, basis.order).lead().exps);
  }
  int best = -1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& lm : lms) {
      bool supported = true;
      for (int i = 0; i < n; ++i) {
        if (lm[i] > 0 && !(mask & (1u << i))) {
          supported = false;
          break;
        }
      }
      if (supported) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return projective ? best - 1 : best;
}

namespace {

std::vector<Exponents> leading_monomials(const IdealBasis& basis) {
  std::vector<Exponents> lms;
  for (const auto& g : basis.generators) {
    if (!g.is_zero()) lms.push_back(to_op(g, basis.order).lead().exps);
  }
  return lms;
}

// Pure-power bounds of the staircase; empty optional when some variable has
// no pure power among the leading terms (positive-dimensional locus).
std::optional<Exponents> staircase_bounds(const IdealBasis& basis,
                                          const std::vector<Exponents>& lms) {
  const int n = static_cast<int>(basis.ring->vars.size());
  Exponents bounds(n, -1);
  for (const auto& lm : lms) {
    int var = -1;
    bool pure = true;
    for (int i = 0; i < n; ++i) {
      if (lm[i] > 0) {
        if (var >= 0) {
          pure = false;
          break;
        }
        var = i;
      }
    }
    if (pure && var >= 0) {
      if (bounds[var] < 0 || lm[var] < bounds[var]) bounds[var] = lm[var];
    }
    if (pure && var < 0) {  // constant leading term: the whole ring
      return Exponents(n, 0);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (bounds[i] < 0) return std::nullopt;
  }
  return bounds;
}

void count_standard(const std::vector<Exponents>& lms, const Exponents& bounds, Exponents& cur,
                    size_t var, long& count, std::vector<Exponents>* collect) {
  if (var == bounds.size()) {
    for (const auto& lm : lms) {
      if (divides_mono(lm, cur)) return;
    }
    ++count;
    if (collect) collect->push_back(cur);
    return;
  }
  for (int e = 0; e < std::max(bounds[var], 1) || e == 0; ++e) {
    cur[var] = e;
    count_standard(lms, bounds, cur, var + 1, count, collect);
  }
  cur[var] = 0;
}

long standard_monomials(const IdealBasis& basis, std::vector<Exponents>* collect) {
  auto lms = leading_monomials(basis);
  auto bounds = staircase_bounds(basis, lms);
  if (!bounds) throw NotZeroDimensional("quotient is not finite-dimensional");
  Exponents cur(bounds->size(), 0);
  long count = 0;
  count_standard(lms, *bounds, cur, 0, count, collect);
  return count;
}

}  // namespace

long quotient_dimension(const IdealBasis& basis) { return standard_monomials(basis, nullptr); }

std::vector<MultiPoly> eliminate(const std::vector<MultiPoly>& gens,
                                 const std::vector<std::string>& drop_vars) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  const RingPtr& ring = gens.front().ring();
  std::vector<std::string> dropped, kept;
  for (const auto& v : ring->vars) {
    if (std::find(drop_vars.begin(), drop_vars.end(), v) != drop_vars.end()) {
      dropped.push_back(v);
    } else {
      kept.push_back(v);
    }
  }
  std::vector<std::string> permuted = dropped;
  permuted.insert(permuted.end(), kept.begin(), kept.end());
  RingPtr work_ring = make_ring(ring->field, permuted);
  std::vector<MultiPoly> lifted;
  lifted.reserve(gens.size());
  for (const auto& g : gens) lifted.push_back(into_ring(g, work_ring));
  IdealBasis basis =
      groebner_basis(lifted, MonomialOrder::block(static_cast<int>(dropped.size())));
  RingPtr out_ring = make_ring(ring->field, kept);
  std::vector<MultiPoly> out;
  for (const auto& g : basis.generators) {
    bool free_of_dropped = true;
    for (size_t i = 0; i < dropped.size(); ++i) {
      if (g.degree_in(static_cast<int>(i)) > 0) {
        free_of_dropped = false;
        break;
      }
    }
    if (free_of_dropped && !g.is_zero()) out.push_back(into_ring(g, out_ring));
  }
  return out;
}

MultiPoly univariate_eliminant(const IdealBasis& basis, int var) {
  const RingPtr& ring = basis.ring;
  std::vector<Exponents> std_monos;
  standard_monomials(basis, &std_monos);
  const size_t dim = std_monos.size();
  if (dim == 0) return MultiPoly::constant(ring, rat(1));  // unit ideal
  std::map<Exponents, size_t> index;
  for (size_t i = 0; i < dim; ++i) index[std_monos[i]] = i;

  auto to_vec = [&](const MultiPoly& nf) {
    std::vector<FieldElement> v(dim, FieldElement(ring->field));
    for (const auto& t : nf.terms()) {
      auto it = index.find(t.exps);
      assert(it != index.end() && "normal form outside the staircase");
      v[it->second] = t.coeff;
    }
    return v;
  };

  // Row-reduced span of the Krylov vectors with bookkeeping of the
  // combination that produced each row.
  struct Row {
    std::vector<FieldElement> vec;
    std::vector<FieldElement> comb;  // coefficients over powers var^0..var^k
    size_t pivot;
  };
  std::vector<Row> rows;
  MultiPoly power = MultiPoly::constant(ring, rat(1));
  const MultiPoly x = MultiPoly::variable(ring, var);
  for (size_t k = 0;; ++k) {
    MultiPoly nf = normal_form(power, basis);
    Row row{to_vec(nf), std::vector<FieldElement>(k + 1, FieldElement(ring->field)), 0};
    row.comb[k] = FieldElement(ring->field, rat(1));
    for (const auto& r : rows) {
      if (row.comb.size() <= r.comb.size()) row.comb.resize(r.comb.size(), FieldElement(ring->field));
      const FieldElement c = row.vec[r.pivot];
      if (c.is_zero()) continue;
      for (size_t i = 0; i < dim; ++i) row.vec[i] -= c * r.vec[i];
      for (size_t i = 0; i < r.comb.size(); ++i) row.comb[i] -= c * r.comb[i];
    }
    size_t pivot = dim;
    for (size_t i = 0; i < dim; ++i) {
      if (!row.vec[i].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == dim) {
      // Dependence found: the combination is the eliminant.
      std::vector<Term> terms;
      Exponents e(ring->vars.size(), 0);
      for (size_t i = 0; i < row.comb.size(); ++i) {
        if (!row.comb[i].is_zero()) {
          e[var] = static_cast<int>(i);
          terms.push_back({e, row.comb[i]});
        }
      }
      return normalize_leading(MultiPoly::from_terms(ring, terms));
    }
    FieldElement inv = row.vec[pivot].inverse();
    for (auto& c : row.vec) c *= inv;
    for (auto& c : row.comb) c *= inv;
    row.pivot = pivot;
    rows.push_back(std::move(row));
    assert(rows.size() <= dim + 1);
    power *= x;
  }
}

std::vector<MultiPoly> ideal_power(const std::vector<MultiPoly>& gens, int d) {
  std::vector<MultiPoly> out;
  // Multisets of size d over the generators.
  auto rec = [&](auto&& self, size_t from, int left, const MultiPoly& acc) -> void {
    if (left == 0) {
      out.push_back(acc);
      return;
    }
    for (size_t i = from; i < gens.size(); ++i) {
      self(self, i, left - 1, acc * gens[i]);
    }
  };
  if (gens.empty()) return out;
  rec(rec, 0, d, MultiPoly::constant(gens.front().ring(), rat(1)));
  return out;
}

std::optional<long> localized_quotient_dimension(const std::vector<MultiPoly>& j_gens,
                                                 const std::vector<MultiPoly>& m_gens,
                                                 int cap) {
  IdealBasis prev;
  long prev_dim = -1;
  bool have_prev = false;
  for (int d = 1; d <= cap; ++d) {
    std::vector<MultiPoly> gens = j_gens;
    auto md = ideal_power(m_gens, d);
    gens.insert(gens.end(), md.begin(), md.end());
    IdealBasis cur = groebner_basis(gens);
    if (cur.contains_one()) return 0;  // V(J) misses V(M) entirely
    long dim = quotient_dimension(cur);
    if (have_prev && dim == prev_dim) {
      // Ideal-level stabilization: previous (larger) ideal inside current.
      bool equal = true;
      for (const auto& g : prev.generators) {
        if (!normal_form(g, cur).is_zero()) {
          equal = false;
          break;
        }
      }
      if (equal) return dim;
    }
    prev = std::move(cur);
    prev_dim = dim;
    have_prev = true;
  }
  return std::nullopt;
}

// ---- roots and zero-dimensional solving ------------------------------------

std::optional<FieldElement> field_sqrt(const FieldElement& x) {
  const FieldPtr& f = x.field();
  const Rational& r0 = x.a0();
  const Rational& r1 = x.a1();
  if (f->kind == FieldKind::rationals || r1 == 0) {
    if (auto root = rational_sqrt_exact(r0); root && r1 == 0) {
      return FieldElement(f, *root);
    }
    if (f->kind == FieldKind::rationals) return std::nullopt;
  }
  // Look for u + v theta with (u + v theta)^2 = x, v != 0.
  const Rational& b = f->b;
  const Rational& c = f->c;
  Rational disc = b * b - 4 * c;  // nonzero, not a rational square
  auto finish = [&](const Rational& v) -> std::optional<FieldElement> {
    if (v == 0) return std::nullopt;
    Rational u = (r1 + b * v * v) / (2 * v);
    FieldElement cand(f, u, v);
    if (cand * cand == x) return cand;
    return std::nullopt;
  };
  if (r1 == 0) {
    // 2u = bv, so v^2 = 4 r0 / disc.
    if (auto v = rational_sqrt_exact(4 * r0 / disc)) {
      if (auto s = finish(*v)) return s;
    }
    return std::nullopt;
  }
  // disc * w^2 + (2 b r1 - 4 r0) w + r1^2 = 0 with w = v^2.
  Rational qa = disc, qb = 2 * b * r1 - 4 * r0, qc = r1 * r1;
  Rational inner = qb * qb - 4 * qa * qc;
  auto si = rational_sqrt_exact(inner);
  if (!si) return std::nullopt;
  for (int sign : {1, -1}) {
    Rational w = (-qb + sign * *si) / (2 * qa);
    if (auto v = rational_sqrt_exact(w)) {
      if (auto s = finish(*v)) return s;
    }
  }
  return std::nullopt;
}

namespace {

// Divisors of |n| when n factors over a small trial-division bound;
// std::nullopt when a large cofactor remains.
std::optional<std::vector<Integer>> all_divisors(Integer n, size_t limit = 4096) {
  n = abs(n);
  if (n == 0) return std::nullopt;
  std::vector<std::pair<Integer, int>> factors;
  Integer p = 2;
  while (p * p <= n && p < 100000) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) n /= p, ++e;
      factors.push_back({p, e});
    }
    p += (p == 2) ? 1 : 2;
  }
  if (n > 1) {
    if (!mpz_probab_prime_p(n.get_mpz_t(), 25) && n > 1000000000) return std::nullopt;
    factors.push_back({n, 1});
  }
  std::vector<Integer> divs{1};
  for (const auto& [q, e] : factors) {
    size_t base = divs.size();
    Integer power = 1;
    for (int k = 1; k <= e; ++k) {
      power *= q;
      for (size_t i = 0; i < base; ++i) {
        divs.push_back(divs[i] * power);
        if (divs.size() > limit) return std::nullopt;
      }
    }
  }
  return divs;
}

std::vector<FieldElement> univ_coeffs(const MultiPoly& f, int var) {
  std::vector<FieldElement> out;
  for (const auto& c : coefficients_in(f, var)) {
    if (!c.is_constant()) throw RingMismatch("polynomial is not univariate");
    out.push_back(c.is_zero() ? FieldElement(f.ring()->field) : c.leading_term().coeff);
  }
  return out;
}

MultiPoly from_univ_coeffs(const RingPtr& ring, int var, const std::vector<FieldElement>& cs) {
  std::vector<Term> terms;
  Exponents e(ring->vars.size(), 0);
  for (size_t i = 0; i < cs.size(); ++i) {
    if (!cs[i].is_zero()) {
      e[var] = static_cast<int>(i);
      terms.push_back({e, cs[i]});
    }
  }
  return MultiPoly::from_terms(ring, terms);
}

// Synthetic division by (y - r); the caller guarantees exactness.
std::vector<FieldElement> deflate(const std::vector<FieldElement>& cs, const FieldElement& r) {
  std::vector<FieldElement> out(cs.size() - 1, FieldElement(r.field()));
  FieldElement carry = cs.back();
  for (int i = static_cast<int>(cs.size()) - 2; i >= 0; --i) {
    out[i] = carry;
    carry = cs[i] + r * carry;
  }
  assert(carry.is_zero() && "deflation by a non-root");
  return out;
}

FieldElement eval_univ(const std::vector<FieldElement>& cs, const FieldElement& r) {
  FieldElement acc(r.field());
  for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i) acc = acc * r + cs[i];
  return acc;
}

// Rational root candidates by the rational root theorem applied to a
// rational-coefficient companion (the norm when theta is present).
std::vector<Rational> rational_candidates(const std::vector<FieldElement>& cs) {
  // Companion with rational coefficients.
  std::vector<Rational> rc;
  bool has_theta = false;
  for (const auto& c : cs) {
    if (c.a1() != 0) has_theta = true;
  }
  if (!has_theta) {
    for (const auto& c : cs) rc.push_back(c.a0());
  } else {
    // Norm f * conj(f): coefficients sum_{i+j=k} (a_i conj(a_j)),
    // necessarily rational.
    const FieldPtr& f = cs.front().field();
    size_t n = cs.size();
    std::vector<FieldElement> prod(2 * n - 1, FieldElement(f));
    for (size_t i = 0; i < n; ++i) {
      FieldElement conj_i(f, cs[i].a0() - cs[i].a1() * f->b, -cs[i].a1());
      for (size_t j = 0; j < n; ++j) prod[i + j] += conj_i * cs[j];
    }
    for (const auto& c : prod) {
      assert(c.a1() == 0);
      rc.push_back(c.a0());
    }
  }
  // Integer-primitive form.
  Integer den_lcm = 1;
  for (const auto& r : rc) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den().get_mpz_t());
  std::vector<Integer> ic;
  for (const auto& r : rc) ic.push_back(Integer(r * den_lcm));
  while (!ic.empty() && ic.back() == 0) ic.pop_back();
  if (ic.empty()) return {};
  size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  auto p_divs = all_divisors(ic[low]);
  auto q_divs = all_divisors(ic.back());
  if (!p_divs || !q_divs) return {};
  std::vector<Rational> out;
  for (const auto& p : *p_divs) {
    for (const auto& q : *q_divs) {
      Rational cand(p, q);
      cand.canonicalize();
      out.push_back(cand);
      out.push_back(-cand);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

UnivariateRoots roots_in_field(const MultiPoly& f, int var) {
  UnivariateRoots out;
  if (f.is_zero()) throw ZeroPolynomial("roots of the zero polynomial");
  const FieldPtr& field = f.ring()->field;
  // Squarefree reduction.
  MultiPoly fs = f;
  MultiPoly d = partial_derivative(fs, var);
  if (!d.is_zero()) {
    MultiPoly g = gcd_poly(fs, d);
    if (!g.is_constant()) fs = *divide_exact(fs, g);
  }
  std::vector<FieldElement> cs = univ_coeffs(fs, var);
  while (cs.size() > 1) {
    // Root at zero.
    if (cs.front().is_zero()) {
      out.roots.push_back(FieldElement(field));
      cs.erase(cs.begin());
      continue;
    }
    if (cs.size() == 2) {
      out.roots.push_back(-(cs[0] / cs[1]));
      return out;
    }
    if (cs.size() == 3) {
      FieldElement disc = cs[1] * cs[1] - FieldElement(field, rat(4)) * cs[2] * cs[0];
      auto s = field_sqrt(disc);
      if (!s) {
        out.unsolved.push_back(from_univ_coeffs(f.ring(), var, cs));
        return out;
      }
      FieldElement two_a = FieldElement(field, rat(2)) * cs[2];
      out.roots.push_back((-cs[1] + *s) / two_a);
      out.roots.push_back((-cs[1] - *s) / two_a);
      return out;
    }
    // Degree >= 3: peel rational roots.
    bool found = false;
    for (const Rational& cand : rational_candidates(cs)) {
      FieldElement r(field, cand);
      if (eval_univ(cs, r).is_zero()) {
        out.roots.push_back(r);
        cs = deflate(cs, r);
        found = true;
        break;
      }
    }
    if (!found) {
      out.unsolved.push_back(from_univ_coeffs(f.ring(), var, cs));
      return out;
    }
  }
  return out;
}

namespace {

void solve_affine(const std::vector<MultiPoly>& gens, const RingPtr& ring,
                  std::vector<FieldElement> suffix, SolutionSet& out) {
  const int m = static_cast<int>(ring->vars.size());
  std::vector<MultiPoly> live;
  for (const auto& g : gens) {
    if (!g.is_zero()) live.push_back(g);
  }
  if (m == 0) {
    if (live.empty()) {
      std::reverse(suffix.begin(), suffix.end());
      out.points.push_back(std::move(suffix));
    }
    return;
  }
  if (live.empty()) throw NotZeroDimensional("free variables remain while solving");
  IdealBasis basis = groebner_basis(live, MonomialOrder::lex());
  if (basis.contains_one()) return;
  // Eliminant: the basis element involving only the last variable.
  const MultiPoly* elim = nullptr;
  for (const auto& g : basis.generators) {
    bool only_last = true;
    for (int i = 0; i + 1 < m; ++i) {
      if (g.degree_in(i) > 0) {
        only_last = false;
        break;
      }
    }
    if (only_last && g.degree_in(m - 1) > 0) {
      elim = &g;
      break;
    }
  }
  if (!elim) throw NotZeroDimensional("no univariate eliminant in the lex basis");
  UnivariateRoots roots = roots_in_field(*elim, m - 1);
  for (auto& u : roots.unsolved) out.residual.push_back(u);
  RingPtr sub_ring =
      make_ring(ring->field, std::vector<std::string>(ring->vars.begin(), ring->vars.end() - 1));
  for (const auto& r : roots.roots) {
    std::vector<MultiPoly> sub;
    for (const auto& g : basis.generators) {
      MultiPoly s = substitute_value(g, m - 1, r);
      if (!s.is_zero()) sub.push_back(remove_variable(s, m - 1));
    }
    if (sub.empty() && m > 1) throw NotZeroDimensional("solution slice is not isolated");
    std::vector<FieldElement> next = suffix;
    next.push_back(r);
    solve_affine(sub, sub_ring, std::move(next), out);
  }
}

}  // namespace

SolutionSet solve_zero_dim(const std::vector<MultiPoly>& gens, const FieldPtr& field,
                           bool projective) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  std::vector<MultiPoly> lifted;
  lifted.reserve(gens.size());
  for (const auto& g : gens) lifted.push_back(change_field(g, field));
  const RingPtr ring = lifted.front().ring();
  const int n = static_cast<int>(ring->vars.size());
  SolutionSet out;
  if (!projective) {
    solve_affine(lifted, ring, {}, out);
  } else {
    for (int chart = 0; chart < n; ++chart) {
      // Points with x_j = 0 for j < chart, x_chart = 1.
      std::vector<MultiPoly> sys;
      FieldElement zero(field), one(field, rat(1));
      for (const auto& g : lifted) {
        MultiPoly s = g;
        for (int j = 0; j < chart; ++j) s = substitute_value(s, j, zero);
        s = substitute_value(s, chart, one);
        if (!s.is_zero()) sys.push_back(s);
      }
      RingPtr chart_ring = make_ring(
          field, std::vector<std::string>(ring->vars.begin() + chart + 1, ring->vars.end()));
      std::vector<MultiPoly> reduced;
      for (auto& s : sys) {
        MultiPoly r = s;
        for (int j = chart; j >= 0; --j) r = remove_variable(r, j);
        reduced.push_back(std::move(r));
      }
      SolutionSet chart_sols;
      if (reduced.empty()) {
        if (n - chart - 1 > 0) throw NotZeroDimensional("chart system vanished");
        chart_sols.points.push_back({});
      } else {
        solve_affine(reduced, chart_ring, {}, chart_sols);
      }
      for (auto& p : chart_sols.points) {
        PointCoords full(chart, zero);
        full.push_back(one);
        full.insert(full.end(), p.begin(), p.end());
        out.points.push_back(std::move(full));
      }
      for (auto& r : chart_sols.residual) out.residual.push_back(r);
    }
  }
  out.complete = out.residual.empty();
  return out;
}

}  // namespace zf
