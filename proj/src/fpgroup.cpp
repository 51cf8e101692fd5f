#include "zf/fpgroup.hpp"

#include <algorithm>
#include <numeric>

namespace zf {

FinitePresentation prop1_presentation(int p, int q, int k) {
  if (p < 2 || q < 2 || k < 1 || std::gcd(p, q) != 1) {
    throw InvalidParameters("need coprime p, q >= 2 and k >= 1");
  }
  FinitePresentation pres;
  pres.generator_count = 3;  // a = 1, b = 2, c = 3
  std::vector<int> r1(p, 1);
  r1.push_back(-3);
  std::vector<int> r2(q, 2);
  r2.push_back(-3);
  std::vector<int> r3(k, 3);
  pres.relators = {r1, r2, r3};
  return pres;
}

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m = zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix matmul(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix out = IntegerMatrix::zero(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  }
  return out;
}

Integer determinant(const IntegerMatrix& m) {
  // Fraction-free Bareiss.
  IntegerMatrix w = m;
  const int n = w.rows;
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i) {
        if (w.at(i, k) != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        w.at(i, j) = (w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j)) / prev;
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

namespace {

void swap_rows(IntegerMatrix& m, int a, int b) {
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}
void swap_cols(IntegerMatrix& m, int a, int b) {
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}
// row a -= q * row b
void row_sub(IntegerMatrix& m, int a, int b, const Integer& q) {
  if (q == 0) return;
  for (int j = 0; j < m.cols; ++j) m.at(a, j) -= q * m.at(b, j);
}
void col_sub(IntegerMatrix& m, int a, int b, const Integer& q) {
  if (q == 0) return;
  for (int i = 0; i < m.rows; ++i) m.at(i, a) -= q * m.at(i, b);
}

Integer nearest_quotient(const Integer& a, const Integer& b) {
  // Quotient minimizing |a - q b|.
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * r > abs(b)) q += (b > 0 ? 1 : -1);
  return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  SmithDecomposition out{m, IntegerMatrix::identity(m.rows), IntegerMatrix::identity(m.cols)};
  IntegerMatrix& d = out.d;
  const int bound = std::min(m.rows, m.cols);
  for (int t = 0; t < bound; ++t) {
    while (true) {
      // Smallest nonzero entry in the trailing block into the pivot slot.
      int pi = -1, pj = -1;
      for (int i = t; i < d.rows; ++i) {
        for (int j = t; j < d.cols; ++j) {
          if (d.at(i, j) != 0 &&
              (pi < 0 || abs(d.at(i, j)) < abs(d.at(pi, pj)))) {
            pi = i, pj = j;
          }
        }
      }
      if (pi < 0) {
        t = bound;  // trailing block vanished
        break;
      }
      if (pi != t) {
        swap_rows(d, t, pi);
        swap_rows(out.u, t, pi);
      }
      if (pj != t) {
        swap_cols(d, t, pj);
        swap_cols(out.v, t, pj);
      }
      bool clean = true;
      for (int i = t + 1; i < d.rows; ++i) {
        Integer q = nearest_quotient(d.at(i, t), d.at(t, t));
        row_sub(d, i, t, q);
        row_sub(out.u, i, t, q);
        if (d.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < d.cols; ++j) {
        Integer q = nearest_quotient(d.at(t, j), d.at(t, t));
        col_sub(d, j, t, q);
        col_sub(out.v, j, t, q);
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility of the trailing block by the pivot.
      bool divides_all = true;
      for (int i = t + 1; i < d.rows && divides_all; ++i) {
        for (int j = t + 1; j < d.cols; ++j) {
          if (d.at(i, j) % d.at(t, t) != 0) {
            row_sub(d, t, i, Integer(-1));  // mix the offending row in
            row_sub(out.u, t, i, Integer(-1));
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
    if (t >= bound) break;
  }
  for (int t = 0; t < bound; ++t) {
    if (d.at(t, t) < 0) {
      for (int j = 0; j < d.cols; ++j) d.at(t, j) = -d.at(t, j);
      for (int j = 0; j < out.u.cols; ++j) out.u.at(t, j) = -out.u.at(t, j);
    }
  }
  return out;
}

IntegerMatrix relation_matrix(const FinitePresentation& pres) {
  IntegerMatrix m = IntegerMatrix::zero(static_cast<int>(pres.relators.size()),
                                        pres.generator_count);
  for (size_t r = 0; r < pres.relators.size(); ++r) {
    for (int g : pres.relators[r]) {
      int idx = std::abs(g) - 1;
      m.at(static_cast<int>(r), idx) += (g > 0) ? 1 : -1;
    }
  }
  return m;
}

Abelianization abelianization(const FinitePresentation& pres) {
  IntegerMatrix m = relation_matrix(pres);
  Abelianization out;
  if (m.rows == 0) {
    out.free_rank = pres.generator_count;
    return out;
  }
  SmithDecomposition snf = smith_normal_form(m);
  int rank = 0;
  for (int t = 0; t < std::min(m.rows, m.cols); ++t) {
    const Integer& dt = snf.d.at(t, t);
    if (dt == 0) continue;
    ++rank;
    if (dt > 1) out.divisors.push_back(dt);
  }
  out.free_rank = pres.generator_count - rank;
  return out;
}

namespace {

Permutation identity_perm(int m) {
  Permutation p(m);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& f, const Permutation& g) {
  // (f * g)(x) = f(g(x))
  Permutation out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = f[g[i]];
  return out;
}

Permutation inverse_perm(const Permutation& f) {
  Permutation out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[f[i]] = static_cast<int>(i);
  return out;
}

bool is_identity(const Permutation& f) {
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation power(const Permutation& f, int e) {
  Permutation acc = identity_perm(static_cast<int>(f.size()));
  for (int i = 0; i < e; ++i) acc = compose(acc, f);
  return acc;
}

bool commute(const Permutation& f, const Permutation& g) {
  return compose(f, g) == compose(g, f);
}

Permutation eval_word(const std::vector<int>& word, const std::vector<Permutation>& images,
                      int degree) {
  Permutation acc = identity_perm(degree);
  for (int g : word) {
    const Permutation& img = images[std::abs(g) - 1];
    acc = compose(acc, g > 0 ? img : inverse_perm(img));
  }
  return acc;
}

std::vector<Permutation> perms_with_power_identity(int degree, int e) {
  std::vector<Permutation> out;
  Permutation p = identity_perm(degree);
  do {
    if (is_identity(power(p, e))) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

bool satisfies_relators(const FinitePresentation& pres,
                        const std::vector<Permutation>& images) {
  const int degree = static_cast<int>(images.front().size());
  for (const auto& r : pres.relators) {
    if (!is_identity(eval_word(r, images, degree))) return false;
  }
  return true;
}

std::string PermutationAssignment::cycle_string(int generator) const {
  const Permutation& p = images[generator];
  std::vector<bool> seen(p.size(), false);
  std::string s;
  for (size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start)) continue;
    s += "(";
    size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) s += " ";
      s += std::to_string(i + 1);
      first = false;
      i = p[i];
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

std::optional<PermutationAssignment> nonabelian_certificate(const FinitePresentation& pres,
                                                            int max_degree) {
  if (max_degree < 2) throw InvalidParameters("max_degree must be >= 2");
  if (pres.generator_count != 3) {
    // General fallback: brute force over all assignments is only feasible
    // for tiny degrees; handled below for the 3-generator shape.
    for (int m = 2; m <= std::min(max_degree, 5); ++m) {
      std::vector<Permutation> all;
      Permutation p = identity_perm(m);
      do {
        all.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      std::vector<int> pick(pres.generator_count, 0);
      // Odometer over assignments.
      while (true) {
        std::vector<Permutation> images;
        for (int g = 0; g < pres.generator_count; ++g) images.push_back(all[pick[g]]);
        if (satisfies_relators(pres, images)) {
          for (int i = 0; i < pres.generator_count; ++i) {
            for (int j = i + 1; j < pres.generator_count; ++j) {
              if (!commute(images[i], images[j])) {
                return PermutationAssignment{m, images};
              }
            }
          }
        }
        int g = pres.generator_count - 1;
        while (g >= 0 && ++pick[g] == static_cast<int>(all.size())) pick[g--] = 0;
        if (g < 0) break;
      }
    }
    return std::nullopt;
  }
  // Presentation shape a^p = b^q = c, c^k = 1. Killing the central c first
  // surjects onto Z/p * Z/q, so search c = identity, a^p = b^q = 1.
  const int p = static_cast<int>(pres.relators[0].size()) - 1;
  const int q = static_cast<int>(pres.relators[1].size()) - 1;
  for (int m = 2; m <= max_degree; ++m) {
    auto as = perms_with_power_identity(m, p);
    auto bs = perms_with_power_identity(m, q);
    const Permutation id = identity_perm(m);
    for (const auto& a : as) {
      for (const auto& b : bs) {
        if (!commute(a, b)) {
          std::vector<Permutation> images{a, b, id};
          if (satisfies_relators(pres, images)) {
            return PermutationAssignment{m, images};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace zf
