#include <gtest/gtest.h>

#include <functional>
#include <map>

#include "oracles.hpp"

#include "opf/assoc.hpp"
#include "opf/checks.hpp"
#include "opf/dendriform.hpp"
#include "opf/enumerate.hpp"
#include "opf/error.hpp"
#include "opf/parse.hpp"
#include "opf/prelie.hpp"

using namespace opf;

namespace {

TreeComb tc(const char* s) { return TreeComb(parse_rooted(s)); }
DendComb dc(const char* s) { return DendComb(parse_pbt(s), LambdaPoly(1)); }
DendComb dc(const PlanarBinaryTree& t) { return DendComb(t, LambdaPoly(1)); }

}  // namespace

TEST(PreLie, GraftingExamples) {
  EXPECT_EQ(format_lincomb(prelie_product(tc("3(1,4)"), tc("2"))), "3(1(2),4) + 3(1,2,4) + 3(1,4(2))");
  EXPECT_EQ(format_lincomb(prelie_product(tc("1"), tc("2"))), "1(2)");
  EXPECT_EQ(format_lincomb(prelie_product(tc("1(2)"), tc("3"))), "1(2(3)) + 1(2,3)");
  EXPECT_THROW(prelie_product(tc("1(2)"), tc("2")), Error);
}

TEST(PreLie, BilinearExtension) {
  TreeComb x = tc("1") + Rational(2) * tc("2");
  TreeComb y = tc("3");
  EXPECT_EQ(prelie_product(x, y), prelie_product(tc("1"), y) + Rational(2) * prelie_product(tc("2"), y));
}

TEST(PreLie, RightSymmetricAssociatorExhaustive) {
  for (const auto& [t, u, v] : rooted_triples(5)) {
    TreeComb T(t), U(u), V(v);
    TreeComb lhs = prelie_product(prelie_product(T, U), V) - prelie_product(T, prelie_product(U, V));
    TreeComb rhs = prelie_product(prelie_product(T, V), U) - prelie_product(T, prelie_product(V, U));
    ASSERT_EQ(lhs, rhs) << to_string(t) << " " << to_string(u) << " " << to_string(v);
  }
}

TEST(Nap, Examples) {
  EXPECT_EQ(to_string(nap_product(parse_rooted("1(2)"), parse_rooted("3(4)"))), "1(2,3(4))");
  EXPECT_EQ(to_string(nap_product(parse_rooted("1"), parse_rooted("2"))), "1(2)");
  RootedTree a = nap_product(nap_product(parse_rooted("1(2)"), parse_rooted("3")), parse_rooted("4"));
  RootedTree b = nap_product(nap_product(parse_rooted("1(2)"), parse_rooted("4")), parse_rooted("3"));
  EXPECT_EQ(a, b);
  EXPECT_EQ(to_string(a), "1(2,3,4)");
  EXPECT_THROW(nap_product(parse_rooted("1"), parse_rooted("1")), Error);
}

TEST(Nap, RelationExhaustive) {
  for (const auto& [t, u, v] : rooted_triples(5))
    ASSERT_EQ(nap_product(nap_product(t, u), v), nap_product(nap_product(t, v), u));
}

TEST(Sharp, Examples) {
  EXPECT_EQ(format_lincomb(sharp(TreeProduct::PreLie, tc("1"), tc("2"))), "1(2) + 2(1)");
  EXPECT_EQ(format_lincomb(sharp(TreeProduct::Nap, tc("1(2)"), tc("3"))), "1(2,3) + 3(1(2))");
  EXPECT_EQ(format_lincomb(sharp(TreeProduct::Nap, tc("2"), tc("1(3)"))), "1(2,3) + 2(1(3))");
  EXPECT_EQ(parse_tree_product("nap"), TreeProduct::Nap);
  EXPECT_THROW(parse_tree_product("dend"), Error);
}

TEST(Filtration, RootGraftIsTheUniqueTopTerm) {
  for (const auto& [t, y] : rooted_pairs(6)) {
    TreeComb p = prelie_product(t, y);
    RootedTree top = nap_product(t, y);
    ASSERT_EQ(p.coeff(top), Rational(1));
    for (const auto& [s, c] : p)
      if (!(s == top)) {
        ASSERT_EQ(s.degree(), t.degree());
      }
  }
}

TEST(Dendriform, GeneratorProducts) {
  DendComb x = dc("(o,o)");
  EXPECT_EQ(format_lincomb(dend_left(x, x)), "(o,(o,o))");
  EXPECT_EQ(format_lincomb(dend_right(x, x)), "((o,o),o)");
  EXPECT_EQ(format_lincomb(dend_brace(x, x)), "-((o,o),o) + (o,(o,o))");
  EXPECT_EQ(dend_square(x, x), dend_brace(x, x));
  EXPECT_THROW(dend_left(dc("o"), x), Error);
  EXPECT_THROW(dend_left(DendComb(PlanarBinaryTree::generator(1), LambdaPoly(1)), x), Error);
}

TEST(Dendriform, MiddleRelationHoldsIdentically) {
  for (const auto& [p, q, w] : pbt_triples(7)) {
    DendComb x = dc(p), y = dc(q), z = dc(w);
    ASSERT_TRUE((dend_left(dend_right(x, y), z) - dend_right(x, dend_left(y, z))).is_zero());
  }
}

TEST(Dendriform, OuterRelationsHoldAtZeroOneMinusOne) {
  const LambdaPoly lam = LambdaPoly::lambda();
  for (const auto& [p, q, w] : pbt_triples(7)) {
    DendComb x = dc(p), y = dc(q), z = dc(w);
    DendComb r1 = dend_left(dend_left(x, y), z) - dend_left(x, dend_left(y, z)) - dend_left(x, dend_right(y, z)) * lam;
    DendComb r3 = dend_right(dend_left(x, y), z) * lam + dend_right(dend_right(x, y), z) - dend_right(x, dend_right(y, z));
    for (int v : {0, 1, -1}) {
      ASSERT_TRUE(at_lambda(r1, v).is_zero());
      ASSERT_TRUE(at_lambda(r3, v).is_zero());
    }
  }
}

// The outer relations do not hold as identities in λ on the planar-binary-tree
// basis: the residual is a multiple of λ(λ-1)(λ+1) from four leaves on.
TEST(Dendriform, OuterRelationResidualIsCubicInLambda) {
  DendRelationSummary s = dend_relation_summary(7);
  EXPECT_EQ(s.triples, 144u);
  EXPECT_EQ(s.nonzero[1], 0u);
  EXPECT_GT(s.nonzero[0], 0u);
  EXPECT_GT(s.nonzero[2], 0u);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(s.nonzero_at_zero[k], 0u);
    EXPECT_EQ(s.nonzero_at_one[k], 0u);
    EXPECT_EQ(s.nonzero_at_minus_one[k], 0u);
  }
  EXPECT_EQ(dend_relation_summary(4).nonzero[0], 0u);
  EXPECT_EQ(s.duplicial_failures, 0u);
}

namespace {

// Arity-4 component of the free ns operad on two binary operations modulo the
// λ-dendriform relations, computed directly from the relations.
std::size_t lambda_dend_dim4(const mpq_class& lam) {
  std::function<std::vector<std::string>(int)> trees = [&](int n) -> std::vector<std::string> {
    if (n == 1) return {"x"};
    std::vector<std::string> out;
    for (int k = 1; k < n; ++k)
      for (const auto& a : trees(k))
        for (const auto& b : trees(n - k))
          for (char op : {'<', '>'}) out.push_back("(" + a + op + b + ")");
    return out;
  };
  auto basis = trees(4);
  std::map<std::string, std::size_t> col;
  for (const auto& t : basis) col.emplace(t, col.size());

  using Rel = std::vector<std::pair<std::function<std::string(std::string, std::string, std::string)>, mpq_class>>;
  auto L = [](const std::string& a, const std::string& b) { return "(" + a + "<" + b + ")"; };
  auto R = [](const std::string& a, const std::string& b) { return "(" + a + ">" + b + ")"; };
  using S = const std::string&;
  std::vector<Rel> rels = {
      {{[&](S a, S b, S c) { return L(L(a, b), c); }, 1},
       {[&](S a, S b, S c) { return L(a, L(b, c)); }, -1},
       {[&](S a, S b, S c) { return L(a, R(b, c)); }, -lam}},
      {{[&](S a, S b, S c) { return L(R(a, b), c); }, 1}, {[&](S a, S b, S c) { return R(a, L(b, c)); }, -1}},
      {{[&](S a, S b, S c) { return R(L(a, b), c); }, lam},
       {[&](S a, S b, S c) { return R(R(a, b), c); }, 1},
       {[&](S a, S b, S c) { return R(a, R(b, c)); }, -1}},
  };
  std::vector<std::vector<mpq_class>> rows;
  auto emit = [&](const std::function<std::string(const Rel::value_type&)>& place, const Rel& r) {
    std::vector<mpq_class> row(basis.size(), 0);
    for (const auto& term : r) row[col.at(place(term))] += term.second;
    rows.push_back(row);
  };
  const std::string x = "x";
  for (const auto& r : rels)
    for (const char* op : {"<", ">"}) {
      std::string g = std::string("(x") + op + "x)";
      emit([&](const auto& t) { return t.first(g, x, x); }, r);
      emit([&](const auto& t) { return t.first(x, g, x); }, r);
      emit([&](const auto& t) { return t.first(x, x, g); }, r);
      emit([&](const auto& t) { return "(" + t.first(x, x, x) + op + "x)"; }, r);
      emit([&](const auto& t) { return "(x" + std::string(op) + t.first(x, x, x) + ")"; }, r);
    }
  return basis.size() - oracle::dense_rank(rows);
}

}  // namespace

// Independent of the tree formulas: the operad itself has dimension 14 in
// arity 4 only at λ = 0, ±1, so no product on planar binary trees can satisfy
// the outer relations identically in λ.
TEST(Dendriform, ArityFourDimensionDropsAwayFromZeroAndUnits) {
  for (int v : {0, 1, -1}) EXPECT_EQ(lambda_dend_dim4(v), 14u) << v;
  for (mpq_class v : {mpq_class(2), mpq_class(1, 2), mpq_class(-5, 7)}) EXPECT_EQ(lambda_dend_dim4(v), 12u) << v;
}

TEST(Dendriform, PhiRecursionReproducesEveryTree) {
  for (int k = 2; k <= 7; ++k)
    for (const auto& t : enumerate_pbt(k, 1)) ASSERT_EQ(phi_recursion(t), dc(t)) << to_string(t);
}

TEST(Dendriform, SquareAndBraceSymmetrize) {
  for (const auto& [p, q] : pbt_pairs(6)) {
    DendComb x = dc(p), y = dc(q);
    ASSERT_EQ(dend_square(x, y) + dend_square(y, x), dend_brace(x, y) + dend_brace(y, x));
  }
}

TEST(Dendriform, BraceIsPreLieAtOne) {
  for (const auto& [p, q, w] : pbt_triples(6)) {
    DendComb x = dc(p), y = dc(q), z = dc(w);
    DendComb a = dend_brace(dend_brace(x, y), z) - dend_brace(x, dend_brace(y, z));
    DendComb b = dend_brace(dend_brace(x, z), y) - dend_brace(x, dend_brace(z, y));
    ASSERT_TRUE(at_lambda(a - b, 1).is_zero());
  }
}

TEST(Assoc, SymmetrizedProduct) {
  EXPECT_EQ(format_lincomb(assoc_sym(word("a"), word("b"))), "ab + ba");
  EXPECT_EQ(format_lincomb(assoc_concat(word("ab"), word("c"))), "abc");
  WordComb a = word("a"), b = word("b");
  WordComb a2 = assoc_sym(a, a);
  EXPECT_TRUE((assoc_sym(a2, assoc_sym(b, a)) - assoc_sym(assoc_sym(a2, b), a)).is_zero());
}

TEST(Assoc, ArityFourIdentity) {
  auto s = [](const WordComb& u, const WordComb& v) { return assoc_sym(u, v); };
  WordComb t = word("w"), x = word("x"), y = word("y"), z = word("z");
  WordComb e = s(s(x, y), s(t, z)) + s(s(x, z), s(t, y)) + s(s(y, z), s(t, x)) - s(s(s(x, y), t), z) -
               s(s(s(x, z), t), y) - s(s(s(y, z), t), x);
  EXPECT_TRUE(e.is_zero());
}
