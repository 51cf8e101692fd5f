#include "zf/pencil.hpp"

#include <algorithm>

#include "zf/rng.hpp"

namespace zf {

Pencil make_pencil(const MultiPoly& f0) {
  if (f0.is_zero()) throw DegreeMismatch("zero polynomial cannot span a pencil");
  const int n = static_cast<int>(f0.ring()->vars.size());
  if (n < 3) throw DegreeMismatch("need at least 3 variables");
  DegreeInfo info = degree_info(f0);
  if (!info.homogeneous) throw NotHomogeneous("the spanning form must be homogeneous");
  if (info.total_degree != n) {
    throw DegreeMismatch("degree must equal the number of variables");
  }
  return Pencil{f0, n};
}

MultiPoly coordinate_product(const Pencil& pencil) {
  MultiPoly prod = MultiPoly::constant(pencil.ring(), rat(1));
  for (int i = 0; i < pencil.n; ++i) prod *= MultiPoly::variable(pencil.ring(), i);
  return prod;
}

MultiPoly member(const Pencil& pencil, const FieldElement& t) {
  if (same_field(t.field(), pencil.field())) {
    return pencil.f0 + coordinate_product(pencil).scaled(t);
  }
  // Parameter from an extension: lift the pencil there first.
  MultiPoly f0 = change_field(pencil.f0, t.field());
  Pencil lifted{f0, pencil.n};
  return f0 + coordinate_product(lifted).scaled(t);
}

MultiPoly member_symbolic(const Pencil& pencil) {
  std::vector<std::string> vars = pencil.ring()->vars;
  vars.push_back("t");
  RingPtr rt = make_ring(pencil.field(), vars);
  MultiPoly f = into_ring(pencil.f0, rt);
  MultiPoly prod = MultiPoly::variable(rt, pencil.n);
  for (int i = 0; i < pencil.n; ++i) prod *= MultiPoly::variable(rt, i);
  return f + prod;
}

ConditionReport check_condition_2(const Pencil& pencil) {
  ConditionReport rep;
  rep.condition_id = "2";
  rep.passed = true;
  for (int i = 0; i < pencil.n; ++i) {
    MultiPoly restricted =
        substitute_value(pencil.f0, i, FieldElement(pencil.field()));
    if (restricted.is_zero()) {
      rep.passed = false;
      rep.witnesses.push_back("hyperplane " + pencil.ring()->vars[i] +
                              " = 0 is contained in the t = 0 member");
    }
  }
  if (rep.passed) {
    rep.witnesses.push_back("all coordinate restrictions of the t = 0 member are nonzero");
  }
  return rep;
}

ConditionReport check_condition_3(const Pencil& pencil, int p) {
  if (p < 2 || pencil.n % p != 0) {
    throw std::invalid_argument("multiplicity must be >= 2 and divide the degree");
  }
  ConditionReport rep;
  rep.condition_id = "3";
  rep.passed = true;
  const int k = pencil.n / p;
  for (int i = 0; i < pencil.n; ++i) {
    MultiPoly restricted =
        substitute_value(pencil.f0, i, FieldElement(pencil.field()));
    if (restricted.is_zero()) {
      rep.passed = false;
      rep.witnesses.push_back("restriction to " + pencil.ring()->vars[i] + " = 0 vanishes");
      continue;
    }
    MultiPoly on_hyperplane = remove_variable(restricted, i);
    auto hit = perfect_power_test(on_hyperplane, p);
    if (!hit) {
      rep.passed = false;
      rep.witnesses.push_back("restriction to " + pencil.ring()->vars[i] + " = 0 is not a " +
                              std::to_string(p) + "-th power");
      continue;
    }
    const MultiPoly& d = hit->second;
    if (!is_squarefree(d)) {
      rep.passed = false;
      rep.witnesses.push_back("divisor on " + pencil.ring()->vars[i] +
                              " = 0 is not reduced: " + d.str());
      continue;
    }
    bool clean = true;
    for (int j = 0; j < static_cast<int>(d.ring()->vars.size()); ++j) {
      if (substitute_value(d, j, FieldElement(pencil.field())).is_zero()) {
        clean = false;
        rep.passed = false;
        rep.witnesses.push_back("divisor on " + pencil.ring()->vars[i] +
                                " = 0 has a component inside " + d.ring()->vars[j] + " = 0");
      }
    }
    if (!clean) continue;
    if (degree_info(d).total_degree != k) {
      rep.passed = false;
      rep.witnesses.push_back("divisor degree is not n/p on " + pencil.ring()->vars[i] + " = 0");
      continue;
    }
    rep.witnesses.push_back("D_" + std::to_string(i + 1) + " = " + d.str() + " on {" +
                            pencil.ring()->vars[i] + " = 0}");
    rep.divisors.push_back(DivisorOnHyperplane{i, d, p});
  }
  return rep;
}

ConditionReport check_condition_4(const Pencil& pencil, const FieldElement& t_sample) {
  ConditionReport rep;
  rep.condition_id = "4";
  MultiPoly f = member(pencil, t_sample);
  std::vector<MultiPoly> sys{f};
  for (int i = 0; i < pencil.n; ++i) sys.push_back(partial_derivative(f, i));
  int dim = ideal_dimension(groebner_basis(sys), true);
  rep.sing_dimension = dim;
  rep.t_sample_text = t_sample.str();
  const int limit = (pencil.n == 3) ? 0 : pencil.n - 4;
  rep.passed = dim <= limit;
  rep.witnesses.push_back("dim Sing S_t = " + std::to_string(dim) + " at t = " +
                          t_sample.str() + " (allowed: <= " + std::to_string(limit) + ")");
  return rep;
}

namespace {

// Monic normalization of a univariate-in-t polynomial given by its
// coefficient list; b and c of t^2 + b t + c.
std::optional<std::pair<Rational, Rational>> monic_quadratic(const MultiPoly& u, int tvar) {
  auto cs = coefficients_in(u, tvar);
  if (cs.size() != 3) return std::nullopt;
  for (const auto& c : cs) {
    if (!c.is_constant()) return std::nullopt;
  }
  FieldElement c2 = cs[2].is_zero() ? FieldElement(u.ring()->field) : cs[2].leading_term().coeff;
  FieldElement c1 = cs[1].is_zero() ? FieldElement(u.ring()->field) : cs[1].leading_term().coeff;
  FieldElement c0 = cs[0].is_zero() ? FieldElement(u.ring()->field) : cs[0].leading_term().coeff;
  if (c2.is_zero() || !c2.is_rational() || !c1.is_rational() || !c0.is_rational()) {
    return std::nullopt;
  }
  return std::make_pair(c1.a0() / c2.a0(), c0.a0() / c2.a0());
}

struct SquarefreeVerdict {
  bool squarefree = false;
  std::string witness;
};

SquarefreeVerdict member_squarefree(const Pencil& pencil, const FieldElement& t) {
  MultiPoly f = member(pencil, t);
  MultiPoly s = squarefree_part(f);
  SquarefreeVerdict v;
  v.squarefree = degree_info(s).total_degree == degree_info(f).total_degree;
  if (!v.squarefree) {
    auto repeated = divide_exact(f, s);
    v.witness = "member factors as (" + s.str() + ") * (" + (repeated ? repeated->str() : "?") +
                "); squarefree part " + s.str();
  }
  return v;
}

// True when e is coprime to the t-content of every per-variable resultant
// of the two polynomials: then they share no factor involving any
// geometric variable at any root of e.
bool coprime_resultant_certificate(const MultiPoly& a, const MultiPoly& b, const MultiPoly& e,
                                   int nvars, int tvar) {
  for (int s = 0; s < nvars; ++s) {
    if (a.degree_in(s) < 1 && b.degree_in(s) < 1) continue;
    if (a.degree_in(s) < 1 || b.degree_in(s) < 1) continue;  // no common s-factor possible
    MultiPoly rs = resultant(a, b, s);
    if (rs.is_zero()) return false;  // symbolic common factor in x_s
    MultiPoly cont = univariate_content(rs, tvar);
    if (cont.is_constant()) continue;
    if (!gcd_poly(cont, e).is_constant()) return false;
  }
  return true;
}

// Structural exclusion of a leftover parameter factor e(t): shows no root
// of e can produce a member with a multiple component. Reports how.
bool clear_factor(const Pencil& pencil, const MultiPoly& fsym, const MultiPoly& e,
                  ConditionReport& rep) {
  const int n = pencil.n;
  const int tvar = n;
  std::vector<MultiPoly> partials;
  for (int i = 0; i < n; ++i) partials.push_back(partial_derivative(fsym, i));

  // Gradient pair with the smallest common factor.
  int bi = -1, bj = -1;
  MultiPoly best_g;
  int best_deg = -1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (partials[i].is_zero() || partials[j].is_zero()) continue;
      MultiPoly g = gcd_poly(partials[i], partials[j]);
      MultiPoly cont = univariate_content(g, tvar);
      if (!cont.is_constant()) g = *divide_exact(g, cont);
      int deg = 0;
      for (int s = 0; s < n; ++s) deg += g.degree_in(s);
      if (best_deg < 0 || deg < best_deg) {
        best_deg = deg;
        best_g = g;
        bi = i, bj = j;
      }
      if (best_deg == 0) break;
    }
    if (best_deg == 0) break;
  }
  if (bi < 0) return false;

  if (best_deg == 0) {
    // The pair is coprime over k(t); certify that it stays coprime at
    // every root of e, so no multiple component can exist there.
    if (coprime_resultant_certificate(partials[bi], partials[bj], e, n, tvar)) {
      rep.witnesses.push_back(
          "parameter factor " + e.str() + " excluded: gradient pair (" + std::to_string(bi + 1) +
          "," + std::to_string(bj + 1) + ") stays coprime at its roots");
      return true;
    }
    return false;
  }

  // Nontrivial common component G: a multiple component at a root of e
  // must coincide with G there, provided the cofactors stay coprime and G
  // stays irreducible. Quadrics certify irreducibility through rank >= 3.
  const MultiPoly& g = best_g;
  auto ci = divide_exact(partials[bi], g);
  auto cj = divide_exact(partials[bj], g);
  if (!ci || !cj) return false;
  if (!coprime_resultant_certificate(*ci, *cj, e, n, tvar)) return false;

  // Irreducibility at the roots of e: only the quadratic-form case.
  bool g_quadratic = true;
  for (const auto& term : g.terms()) {
    int xdeg = 0;
    for (int s = 0; s < n; ++s) xdeg += term.exps[s];
    if (xdeg != 2) g_quadratic = false;
  }
  if (!g_quadratic) return false;
  // Symmetric matrix entries over k[t]; rank >= 3 iff some 3x3 minor is
  // nonzero; demand a minor coprime to e.
  std::vector<std::vector<MultiPoly>> m(
      n, std::vector<MultiPoly>(n, MultiPoly::zero(fsym.ring())));
  MultiPoly two = MultiPoly::constant(fsym.ring(), rat(2));
  for (const auto& term : g.terms()) {
    std::vector<int> support;
    for (int s = 0; s < n; ++s) {
      for (int c = 0; c < term.exps[s]; ++c) support.push_back(s);
    }
    MultiPoly coeff = MultiPoly::monomial(
        fsym.ring(),
        [&] {
          Exponents ex(n + 1, 0);
          ex[tvar] = term.exps[tvar];
          return ex;
        }(),
        term.coeff);
    if (support[0] == support[1]) {
      m[support[0]][support[0]] += two * coeff;
    } else {
      m[support[0]][support[1]] += coeff;
      m[support[1]][support[0]] += coeff;
    }
  }
  bool minor_ok = false;
  for (int a = 0; a < n && !minor_ok; ++a) {
    for (int b = a + 1; b < n && !minor_ok; ++b) {
      for (int c = b + 1; c < n && !minor_ok; ++c) {
        // rows/cols {a,b,c}
        MultiPoly det = m[a][a] * (m[b][b] * m[c][c] - m[b][c] * m[c][b]) -
                        m[a][b] * (m[b][a] * m[c][c] - m[b][c] * m[c][a]) +
                        m[a][c] * (m[b][a] * m[c][b] - m[b][b] * m[c][a]);
        if (!det.is_zero() && gcd_poly(det, e).is_constant()) minor_ok = true;
      }
    }
  }
  if (!minor_ok) return false;

  // Compare F_t with c * G^m * (residual of matching degree): a linear
  // system in the residual coefficients for each multiplicity m >= 2,
  // constrained to the roots of e. Unsatisfiable for every m excludes the
  // factor.
  int gdeg = 0;
  for (const auto& term : g.terms()) {
    int xdeg = 0;
    for (int s = 0; s < n; ++s) xdeg += term.exps[s];
    gdeg = std::max(gdeg, xdeg);
  }
  for (int mult = 2; mult * gdeg <= pencil.n; ++mult) {
    int rdeg = pencil.n - mult * gdeg;
    // Residual monomials of degree rdeg in the geometric variables.
    std::vector<Exponents> rmonos;
    Exponents cur(n + 1, 0);
    auto enumerate = [&](auto&& self, int var, int left) -> void {
      if (var == n - 1) {
        cur[var] = left;
        rmonos.push_back(cur);
        return;
      }
      for (int ei = 0; ei <= left; ++ei) {
        cur[var] = ei;
        self(self, var + 1, left - ei);
      }
    };
    enumerate(enumerate, 0, rdeg);
    // Unknowns: one coefficient per residual monomial; ring k[t, d_0...].
    std::vector<std::string> uvars{"t"};
    for (size_t r = 0; r < rmonos.size(); ++r) uvars.push_back("d" + std::to_string(r));
    RingPtr unk = make_ring(pencil.field(), uvars);
    // Match coefficients of F_t - G^mult * D across the x-monomials.
    MultiPoly gm = g.pow(mult);
    std::map<Exponents, MultiPoly> byx;  // x-monomial -> poly in (t, d)
    auto add_term = [&](const Exponents& full, const MultiPoly& val) {
      Exponents key(full.begin(), full.begin() + n);
      auto it = byx.find(key);
      if (it == byx.end()) {
        byx.emplace(key, val);
      } else {
        it->second += val;
      }
    };
    for (const auto& term : fsym.terms()) {
      Exponents te(uvars.size(), 0);
      te[0] = term.exps[tvar];
      add_term(term.exps, MultiPoly::monomial(unk, te, term.coeff));
    }
    for (const auto& gterm : gm.terms()) {
      for (size_t r = 0; r < rmonos.size(); ++r) {
        Exponents full(n + 1, 0);
        for (int s = 0; s < n; ++s) full[s] = gterm.exps[s] + rmonos[r][s];
        Exponents te(uvars.size(), 0);
        te[0] = gterm.exps[tvar];
        te[1 + r] = 1;
        add_term(full, -MultiPoly::monomial(unk, te, gterm.coeff));
      }
    }
    std::vector<MultiPoly> sys;
    for (auto& [key, val] : byx) {
      if (!val.is_zero()) sys.push_back(val);
    }
    // Constrain t to the roots of e.
    MultiPoly e_in_unk = substitute(e, unk, [&] {
      std::vector<std::optional<MultiPoly>> im(n + 1);
      for (int s = 0; s < n; ++s) im[s] = MultiPoly::constant(unk, rat(0));
      im[tvar] = MultiPoly::variable(unk, 0);
      return im;
    }());
    sys.push_back(e_in_unk);
    IdealBasis basis = groebner_basis(sys);
    if (!basis.contains_one()) return false;  // some root might satisfy it
  }
  rep.witnesses.push_back("parameter factor " + e.str() +
                          " excluded: no member there can be a multiple of " + g.str());
  return true;
}

}  // namespace

ConditionReport check_condition_1(const Pencil& pencil) {
  ConditionReport rep;
  rep.condition_id = "1";
  const int n = pencil.n;
  MultiPoly fsym = member_symbolic(pencil);
  const int tvar = n;

  // Stage A: the generic member is reduced.
  MultiPoly g = fsym;
  for (int i = 0; i < n; ++i) {
    g = gcd_poly(g, partial_derivative(fsym, i));
    if (g.is_constant()) break;
  }
  MultiPoly gcont = univariate_content(g, tvar);
  if (!gcont.is_constant() && !g.is_zero()) g = *divide_exact(g, gcont);
  bool generic_ok = g.is_constant();
  if (!generic_ok) {
    rep.passed = false;
    rep.witnesses.push_back("generic member is non-reduced; gradient gcd " + g.str());
    return rep;
  }
  rep.witnesses.push_back("generic member is reduced");

  // Exceptional candidates: parameter values where some per-variable
  // discriminant resultant vanishes identically.
  MultiPoly e_all = MultiPoly::constant(fsym.ring(), rat(1));
  for (int s = 0; s < n; ++s) {
    if (fsym.degree_in(s) < 2) continue;
    MultiPoly res = resultant(fsym, partial_derivative(fsym, s), s);
    if (res.is_zero()) continue;  // excluded by the generic certificate
    MultiPoly cont = univariate_content(res, tvar);
    if (!cont.is_constant()) e_all *= cont;
  }
  bool all_ok = true;
  std::vector<MultiPoly> leftovers;
  if (!e_all.is_constant()) {
    e_all = squarefree_part(e_all);
    UnivariateRoots roots = roots_in_field(e_all, tvar);
    for (const auto& a : roots.roots) {
      SquarefreeVerdict v = member_squarefree(pencil, a);
      rep.exceptional.push_back(ExceptionalValue{a.str(), v.squarefree, v.witness});
      if (!v.squarefree) {
        all_ok = false;
        rep.witnesses.push_back("member at t = " + a.str() + " is non-reduced: " + v.witness);
      }
    }
    for (const auto& u : roots.unsolved) {
      // Quadratic factors over Q: test in the defining extension.
      auto bc = monic_quadratic(u, tvar);
      if (bc && pencil.field()->kind == FieldKind::rationals) {
        FieldPtr ext = make_field(bc->first, bc->second);
        FieldElement root = theta(ext);
        SquarefreeVerdict v = member_squarefree(pencil, root);
        rep.exceptional.push_back(ExceptionalValue{
            "theta with theta^2 + (" + to_string(bc->first) + ")theta + (" +
                to_string(bc->second) + ") = 0",
            v.squarefree, v.witness});
        if (!v.squarefree) {
          all_ok = false;
          rep.witnesses.push_back("member at the quadratic parameter " + u.str() +
                                  " is non-reduced: " + v.witness);
        }
        continue;
      }
      leftovers.push_back(u);
    }
  }
  for (const auto& e : leftovers) {
    if (!clear_factor(pencil, fsym, e, rep)) {
      all_ok = false;
      rep.caveats.push_back("unresolved parameter factor " + e.str());
    }
  }
  rep.passed = all_ok;
  if (rep.passed && rep.exceptional.empty()) {
    rep.witnesses.push_back("no exceptional parameter values detected");
  }
  return rep;
}

MultiPoly kummer_pullback(const MultiPoly& f, int q) {
  std::vector<int> all(f.ring()->vars.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return kummer_pullback(f, q, all);
}

MultiPoly kummer_pullback(const MultiPoly& f, int q, const std::vector<int>& geom_vars) {
  if (q < 2) throw std::invalid_argument("pullback exponent must be >= 2");
  std::vector<std::optional<MultiPoly>> images(f.ring()->vars.size());
  for (int v : geom_vars) images[v] = MultiPoly::variable(f.ring(), v).pow(q);
  return substitute(f, f.ring(), images);
}

MultiPoly plane_section(const MultiPoly& f, std::uint64_t seed) {
  return plane_section_with_frame(f, seed).section;
}

PlaneSection plane_section_with_frame(const MultiPoly& f, std::uint64_t seed) {
  const int n = static_cast<int>(f.ring()->vars.size());
  if (n < 4) throw std::invalid_argument("plane sections need at least 4 variables");
  if (f.is_zero() || !degree_info(f).homogeneous) {
    throw NotHomogeneous("plane sections apply to homogeneous forms");
  }
  SeededRng rng(seed);
  RingPtr plane = make_ring(f.ring()->field, {"X", "Y", "Z"});
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<std::vector<Rational>> c(3, std::vector<Rational>(n));
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < n; ++j) c[i][j] = rat(rng.int_in(-9, 9));
    }
    // Rank check by fraction-free elimination on a copy.
    auto mat = c;
    int rank = 0;
    for (int col = 0; col < n && rank < 3; ++col) {
      int pivot = -1;
      for (int row = rank; row < 3; ++row) {
        if (mat[row][col] != 0) {
          pivot = row;
          break;
        }
      }
      if (pivot < 0) continue;
      std::swap(mat[rank], mat[pivot]);
      for (int row = rank + 1; row < 3; ++row) {
        Rational factor = mat[row][col] / mat[rank][col];
        for (int k = col; k < n; ++k) mat[row][k] -= factor * mat[rank][k];
      }
      ++rank;
    }
    if (rank < 3) continue;
    std::vector<std::optional<MultiPoly>> images(n);
    for (int i = 0; i < n; ++i) {
      MultiPoly img = MultiPoly::zero(plane);
      for (int j = 0; j < 3; ++j) {
        img += MultiPoly::variable(plane, j).scaled(FieldElement(plane->field, c[j][i]));
      }
      images[i] = img;
    }
    MultiPoly section = substitute(f, plane, images);
    if (!section.is_zero()) return PlaneSection{section, c};
  }
  throw DegenerateParametrization("no full-rank plane after bounded retries");
}

}  // namespace zf
