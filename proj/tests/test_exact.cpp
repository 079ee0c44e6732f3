#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "opf/error.hpp"
#include "opf/lambda_poly.hpp"
#include "opf/lincomb.hpp"
#include "opf/matrix.hpp"
#include "opf/parse.hpp"
#include "opf/rational.hpp"
#include "oracles.hpp"

using namespace opf;

namespace {

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST(Rational, LowestTermsAndSign) {
  Rational r(6, -4);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
  EXPECT_EQ(Rational(4, 2).to_fraction_string(), "2/1");
  EXPECT_THROW(Rational(1, 0), Error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("-7/14"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("5"), Rational(5));
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("x"), Error);
  EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(Rational, FieldAxiomsRandomized) {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a - a, Rational(0));
    if (!a.is_zero()) {
      EXPECT_EQ(a * (Rational(1) / a), Rational(1));
    }
  }
}

TEST(LambdaPoly, Evaluation) {
  LambdaPoly p = LambdaPoly(1) + LambdaPoly(2) * LambdaPoly::lambda();
  EXPECT_EQ(eval_lambda(p, 0), Rational(1));
  EXPECT_EQ(eval_lambda(p, 1), Rational(3));
  LambdaPoly sq = LambdaPoly::lambda() * LambdaPoly::lambda();
  EXPECT_EQ(eval_lambda(sq, -2), Rational(4));
  EXPECT_EQ(sq.degree(), 2);
  EXPECT_EQ(LambdaPoly().degree(), -1);
}

TEST(LambdaPoly, TrimsAndPrints) {
  LambdaPoly l = LambdaPoly::lambda();
  EXPECT_TRUE((l - l).is_zero());
  EXPECT_EQ((LambdaPoly(1) + LambdaPoly(2) * l - l * l).to_string(), "1 + 2λ - λ^2");
  EXPECT_EQ(LambdaPoly(std::vector<Rational>{0, 0, 0}).degree(), -1);
}

TEST(LinComb, VectorSpaceOperations) {
  using C = LinComb<RootedTree, Rational>;
  RootedTree t = parse_rooted("1(2)"), u = parse_rooted("2(1)");
  C T(t), U(u);
  EXPECT_EQ((T + U) + Rational(-1) * U, T);
  EXPECT_EQ(Rational(2) * (T * Rational(1, 2)), T);
  EXPECT_TRUE(lincomb_support(Rational(3) * T - Rational(3) * T).empty());
  EXPECT_EQ(T + U, U + T);
  EXPECT_EQ(format_lincomb(T + U), "1(2) + 2(1)");
  EXPECT_EQ(format_lincomb(Rational(-1, 2) * T), "-1/2*1(2)");
  EXPECT_EQ(format_lincomb(C()), "0");
}

TEST(Rank, SmallExamples) {
  RationalMatrix id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id.set(i, i, 1);
  EXPECT_EQ(rank(id), 3u);
  RationalMatrix z(2, 4);
  EXPECT_EQ(rank(z), 0u);
  RationalMatrix m(2, 2);
  m.set(0, 0, Rational(1, 2));
  m.set(0, 1, 1);
  m.set(1, 0, 1);
  m.set(1, 1, 2);
  EXPECT_EQ(rank(m), 1u);
  EXPECT_THROW(m.set(2, 0, 1), Error);
}

TEST(Rank, AgreesWithDenseOracleAndTranspose) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dim(1, 9), coin(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    RationalMatrix m(r, c);
    std::vector<std::vector<mpq_class>> dense(r, std::vector<mpq_class>(c, 0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (coin(rng) == 0) {
          Rational v = random_rational(rng);
          m.set(i, j, v);
          dense[i][j] = v.value();
        }
    // Low-rank rows: add combinations of earlier rows now and then.
    if (r > 2 && coin(rng) == 0)
      for (std::size_t j = 0; j < c; ++j) {
        Rational v = m.get(0, j) * Rational(3) - m.get(1, j);
        m.set(r - 1, j, v);
        dense[r - 1][j] = v.value();
      }
    const std::size_t want = oracle::dense_rank(dense);
    EXPECT_EQ(rank(m), want);
    EXPECT_EQ(rank(m.transpose()), want);

    // Row permutation and nonzero scaling leave the rank alone.
    std::vector<std::size_t> perm(r);
    for (std::size_t i = 0; i < r; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    RationalMatrix p(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) p.set(perm[i], j, m.get(i, j) * Rational(static_cast<long>(i) + 2, 3));
    EXPECT_EQ(rank(p), want);
  }
}

TEST(Rank, IntegerRowsValidated) {
  std::vector<IntRow> rows = {{{0, mpz_class(2)}, {3, mpz_class(4)}}, {{0, mpz_class(1)}, {3, mpz_class(2)}}};
  EXPECT_EQ(integer_rank(rows, 4), 1u);
  EXPECT_THROW(integer_rank({{{5, mpz_class(1)}}}, 4), Error);
  EXPECT_THROW(integer_rank({{{1, mpz_class(0)}}}, 4), Error);
}

TEST(Rank, ModularPivotsAgreeWithExactRank) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 9;
    std::vector<IntRow> rows(r);
    for (auto& row : rows)
      for (std::size_t j = 0; j < c; ++j)
        if (int v = d(rng); v != 0 && rng() % 2) row.emplace_back(j, mpz_class(v));
    auto piv = pivot_columns_mod_p(rows, c);
    EXPECT_EQ(piv.size(), integer_rank(rows, c));
    std::sort(piv.begin(), piv.end());
    EXPECT_EQ(std::adjacent_find(piv.begin(), piv.end()), piv.end());
  }
}

TEST(Rank, EntryBudget) {
  std::vector<IntRow> rows;
  for (std::size_t i = 0; i < 6; ++i) {
    IntRow r;
    for (std::size_t j = 0; j < 6; ++j) r.emplace_back(j, mpz_class(static_cast<long>((i + 1) * (j + 2) % 7 + 1)));
    rows.push_back(r);
  }
  EXPECT_THROW(integer_rank(rows, 6, 20), ResourceError);
  EXPECT_THROW(pivot_columns_mod_p(rows, 6, 2147483647, 20), ResourceError);
  EXPECT_EQ(integer_rank(rows, 6, 1000), pivot_columns_mod_p(rows, 6, 2147483647, 1000).size());
}

TEST(Rank, ModularRankCanUndercount) {
  // Nonzero over Q, zero mod 7: the modular pass only proposes columns.
  std::vector<IntRow> rows = {{{0, mpz_class(7)}}};
  EXPECT_TRUE(pivot_columns_mod_p(rows, 1, 7).empty());
  EXPECT_EQ(integer_rank(rows, 1), 1u);
  EXPECT_THROW(pivot_columns_mod_p(rows, 1, 2), Error);
}
