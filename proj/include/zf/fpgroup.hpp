#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zf/rational.hpp"

namespace zf {

struct InvalidParameters : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Finitely presented group: generators 1..n, relators as words of signed
/// generator indices (negative = inverse), freely reduced.
struct FinitePresentation {
  int generator_count = 0;
  std::vector<std::vector<int>> relators;
};

/// <a, b, c | a^p = b^q = c, c^k = 1> as relators a^p c^-1, b^q c^-1, c^k.
FinitePresentation prop1_presentation(int p, int q, int k);

struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Integer> data;  // row major

  static IntegerMatrix zero(int r, int c) { return {r, c, std::vector<Integer>(r * c, 0)}; }
  static IntegerMatrix identity(int n);
  Integer& at(int i, int j) { return data[i * cols + j]; }
  const Integer& at(int i, int j) const { return data[i * cols + j]; }
  bool operator==(const IntegerMatrix& o) const = default;
};

IntegerMatrix matmul(const IntegerMatrix& a, const IntegerMatrix& b);
Integer determinant(const IntegerMatrix& m);

struct SmithDecomposition {
  IntegerMatrix d;  // diagonal, d1 | d2 | ..., entries >= 0
  IntegerMatrix u;  // unimodular, u * m * v = d
  IntegerMatrix v;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m);

struct Abelianization {
  std::vector<Integer> divisors;  // nontrivial elementary divisors (> 1)
  int free_rank = 0;
};

Abelianization abelianization(const FinitePresentation& pres);

/// Relation matrix of a presentation (one row per relator, exponent sums).
IntegerMatrix relation_matrix(const FinitePresentation& pres);

using Permutation = std::vector<int>;  // images of 0..m-1

struct PermutationAssignment {
  int degree = 0;
  std::vector<Permutation> images;  // one per generator

  std::string cycle_string(int generator) const;
};

/// Deterministic search for a permutation representation of degree at most
/// `max_degree` in which every relator maps to the identity and some pair
/// of generator images fails to commute. Absence of a witness is not a
/// proof of abelianness.
std::optional<PermutationAssignment> nonabelian_certificate(const FinitePresentation& pres,
                                                            int max_degree);

/// True when every relator evaluates to the identity permutation.
bool satisfies_relators(const FinitePresentation& pres,
                        const std::vector<Permutation>& images);

}  // namespace zf
