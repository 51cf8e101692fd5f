#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zf/fpgroup.hpp"

using namespace zf;

namespace {

IntegerMatrix from_rows(std::vector<std::vector<long>> rows) {
  IntegerMatrix m = IntegerMatrix::zero(static_cast<int>(rows.size()),
                                        static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

void check_snf(const IntegerMatrix& m) {
  SmithDecomposition snf = smith_normal_form(m);
  CHECK(abs(determinant(snf.u)) == 1);
  CHECK(abs(determinant(snf.v)) == 1);
  CHECK(matmul(matmul(snf.u, m), snf.v) == snf.d);
  for (int i = 0; i + 1 < std::min(m.rows, m.cols); ++i) {
    const Integer& a = snf.d.at(i, i);
    const Integer& b = snf.d.at(i + 1, i + 1);
    CHECK(a >= 0);
    if (a != 0) {
      CHECK(b % a == 0);
    } else {
      CHECK(b == 0);
    }
  }
  for (int i = 0; i < snf.d.rows; ++i) {
    for (int j = 0; j < snf.d.cols; ++j) {
      if (i != j) CHECK(snf.d.at(i, j) == 0);
    }
  }
}

}  // namespace

TEST_CASE("presentation relators") {
  auto pres = prop1_presentation(3, 2, 1);
  REQUIRE(pres.relators.size() == 3);
  CHECK(pres.relators[0] == std::vector<int>{1, 1, 1, -3});
  CHECK(pres.relators[1] == std::vector<int>{2, 2, -3});
  CHECK(pres.relators[2] == std::vector<int>{3});
  auto s2 = prop1_presentation(2, 3, 2);
  CHECK(s2.relators[0] == std::vector<int>{1, 1, -3});
  CHECK(s2.relators[1] == std::vector<int>{2, 2, 2, -3});
  CHECK(s2.relators[2] == std::vector<int>{3, 3});
  CHECK_THROWS_AS(prop1_presentation(2, 4, 1), InvalidParameters);
}

TEST_CASE("smith normal form on small fixed matrices") {
  auto diag23 = from_rows({{2, 0}, {0, 3}});
  auto snf = smith_normal_form(diag23);
  CHECK(snf.d.at(0, 0) == 1);
  CHECK(snf.d.at(1, 1) == 6);
  check_snf(diag23);

  auto id3 = IntegerMatrix::identity(3);
  auto snf_id = smith_normal_form(id3);
  CHECK(snf_id.d == id3);

  // Relation matrix shape (p, 0, -1), (0, q, -1), (0, 0, k).
  for (auto [p, q, k] : std::vector<std::array<long, 3>>{{3, 2, 1}, {2, 3, 2}, {3, 5, 1}}) {
    auto m = from_rows({{p, 0, -1}, {0, q, -1}, {0, 0, k}});
    auto s = smith_normal_form(m);
    CHECK(s.d.at(0, 0) == 1);
    CHECK(s.d.at(1, 1) == 1);
    CHECK(s.d.at(2, 2) == p * q * k);
    check_snf(m);
  }
}

TEST_CASE("smith normal form unimodularity on awkward inputs") {
  check_snf(from_rows({{4, 6}, {6, 9}}));
  check_snf(from_rows({{0, 0}, {0, 0}}));
  check_snf(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}));
  check_snf(from_rows({{1, 2, 3}}));
  check_snf(from_rows({{5}, {10}, {15}}));
}

TEST_CASE("abelianizations") {
  auto ab = abelianization(prop1_presentation(3, 2, 1));
  REQUIRE(ab.divisors.size() == 1);
  CHECK(ab.divisors[0] == 6);
  CHECK(ab.free_rank == 0);

  auto ab2 = abelianization(prop1_presentation(2, 3, 2));
  REQUIRE(ab2.divisors.size() == 1);
  CHECK(ab2.divisors[0] == 12);

  auto ab3 = abelianization(prop1_presentation(3, 5, 1));
  REQUIRE(ab3.divisors.size() == 1);
  CHECK(ab3.divisors[0] == 15);

  FinitePresentation free2{2, {}};
  auto abf = abelianization(free2);
  CHECK(abf.divisors.empty());
  CHECK(abf.free_rank == 2);
}

TEST_CASE("nonabelian witness for the classical parameters") {
  auto pres = prop1_presentation(3, 2, 1);
  auto w = nonabelian_certificate(pres, 3);
  REQUIRE(w.has_value());
  CHECK(w->degree == 3);
  CHECK(satisfies_relators(pres, w->images));
  // Independent exhaustive confirmation in S3: a 3-cycle and a
  // transposition never commute.
  const auto& a = w->images[0];
  const auto& b = w->images[1];
  auto comp = [&](const Permutation& f, const Permutation& g) {
    Permutation out(f.size());
    for (size_t i = 0; i < f.size(); ++i) out[i] = f[g[i]];
    return out;
  };
  CHECK(comp(a, b) != comp(b, a));
  CHECK(w->images[2] == Permutation{0, 1, 2});
}

TEST_CASE("nonabelian witnesses across the series parameters") {
  for (auto [p, q, k] : std::vector<std::array<int, 3>>{{3, 2, 1}, {3, 5, 1}, {2, 3, 2}}) {
    auto pres = prop1_presentation(p, q, k);
    auto w = nonabelian_certificate(pres, 8);
    REQUIRE(w.has_value());
    CHECK(w->degree <= 8);
    CHECK(satisfies_relators(pres, w->images));
  }
}

TEST_CASE("abelian presentations yield no witness") {
  FinitePresentation cyclic2{1, {{1, 1}}};
  CHECK_FALSE(nonabelian_certificate(cyclic2, 4).has_value());
}

TEST_CASE("cycle strings") {
  PermutationAssignment w{3, {{1, 2, 0}, {1, 0, 2}, {0, 1, 2}}};
  CHECK(w.cycle_string(0) == "(1 2 3)");
  CHECK(w.cycle_string(1) == "(1 2)");
  CHECK(w.cycle_string(2) == "()");
}
