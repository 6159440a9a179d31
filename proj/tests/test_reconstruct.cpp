#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "tdp/reconstruct.hpp"
#include "test_support.hpp"

using namespace tdp;

namespace {

polynomial P(std::string_view s) { return parse_polynomial_text(s, var_set::xy()); }

std::vector<std::string> texts(const std::vector<polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_text(p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(InferStem, Examples) {
  auto s = infer_stem(P("x + 3*y"));
  EXPECT_EQ(s.length, 3u);
  EXPECT_EQ(s.affix, P("x"));
  s = infer_stem(P("x^2 + 2*y"));
  EXPECT_EQ(s.length, 1u);
  EXPECT_EQ(s.affix, P("x^2 + y"));
  s = infer_stem(P("x^3 + y"));
  EXPECT_EQ(s.length, 0u);
  EXPECT_EQ(s.affix, P("x^3 + y"));
  s = infer_stem(P("x"));
  EXPECT_EQ(s.length, 0u);
  EXPECT_EQ(s.affix, P("x"));
}

TEST(InferStem, Rejections) {
  EXPECT_THROW(infer_stem(P("x^2 + x*y")), not_a_tree_polynomial);
  EXPECT_THROW(infer_stem(P("x + x*y")), not_a_tree_polynomial);
  EXPECT_THROW(infer_stem(P("x^2 + y^2")), not_a_tree_polynomial);
  EXPECT_THROW(infer_stem(P("x^2 - y")), not_a_tree_polynomial);
}

TEST(FactorTreeProduct, Examples) {
  auto f = factor_tree_product(P("x^3"));
  ASSERT_TRUE(f.complete);
  EXPECT_EQ(texts(f.factors), (std::vector<std::string>{"x", "x", "x"}));
  f = factor_tree_product(P("x^2 + y") * P("x + y"));
  ASSERT_TRUE(f.complete);
  EXPECT_EQ(texts(f.factors), (std::vector<std::string>{"x + y", "x^2 + y"}));
  f = factor_tree_product(P("x^2"));
  ASSERT_TRUE(f.complete);
  EXPECT_EQ(f.factors.size(), 2u);
}

TEST(FactorTreeProduct, ReportsPartialFactorization) {
  // x * (x + 2) is not a product of tree polynomials.
  const auto f = factor_tree_product(P("x^2 + 2*x"));
  EXPECT_FALSE(f.complete);
  EXPECT_EQ(texts(f.factors), std::vector<std::string>{"x"});
  EXPECT_EQ(f.remainder, P("x + 2"));
}

TEST(FactorTreeProduct, RespectsBudget) {
  const auto q = P("x^2 + y") * P("x^2 + y");
  EXPECT_FALSE(factor_tree_product(q, {std::nullopt, std::nullopt, 0}).complete);
  EXPECT_TRUE(factor_tree_product(q, {std::nullopt, std::nullopt, 1}).complete);
}

TEST(ReconstructRooted, Examples) {
  EXPECT_TRUE(reconstruct_rooted(P("x")).is_trivial());
  EXPECT_EQ(to_dyck(reconstruct_rooted(P("x^2 + 2*y"))), "((()()))");
  EXPECT_EQ(reconstruct_rooted(P("x^3 + x^2*y + x*y + y^2 + y")),
            wedge({rooted_star(2), rooted_path(1)}));
}

TEST(ReconstructRooted, Rejections) {
  EXPECT_THROW(reconstruct_rooted(P("x^2 + x*y")), not_a_tree_polynomial);
  EXPECT_THROW(reconstruct_rooted(P("x^2 - 2*x*y + y")), not_a_tree_polynomial);
  EXPECT_THROW(reconstruct_rooted(P("x^2 + 2*x*y + y^2")), not_a_tree_polynomial);
  EXPECT_THROW(reconstruct_rooted(P("x^4 + 2*x^2*y + 2*y^2 + y")), not_a_tree_polynomial);
  EXPECT_THROW(reconstruct_rooted(polynomial::variable(var_set::x_only(), "x")),
               not_a_tree_polynomial);
}

TEST(ReconstructGeneral, Examples) {
  const auto star = reconstruct_general(pow(P("x^2 + y"), 3));
  ASSERT_TRUE(std::holds_alternative<unrooted_tree>(star));
  EXPECT_EQ(std::get<unrooted_tree>(star), unrooted_tree::from_rooted(rooted_star(3)));
  const auto edge = reconstruct_general(P("x^2"));
  ASSERT_TRUE(std::holds_alternative<unrooted_tree>(edge));
  EXPECT_EQ(std::get<unrooted_tree>(edge).vertex_count(), 2u);
  const auto cherry = reconstruct_general(P("x^2 + y"));
  ASSERT_TRUE(std::holds_alternative<rooted_tree>(cherry));
  EXPECT_EQ(std::get<rooted_tree>(cherry), rooted_star(2));
}

TEST(ReconstructGeneral, Rejections) {
  EXPECT_THROW(reconstruct_general(P("x^2 + x*y")), not_a_tree_polynomial);
  EXPECT_THROW(reconstruct_general(P("x^3")), not_a_tree_polynomial);
  // Two different contraction factors that do not come from one tree.
  EXPECT_THROW(reconstruct_general(P("x") * P("x + y")), not_a_tree_polynomial);
  EXPECT_THROW(reconstruct_general(polynomial(var_set::xy())), not_a_tree_polynomial);
}

TEST(CandidatePool, MatchesFilteredEnumeration) {
  // Oracle: every rooted tree up to 9 vertices, bucketed by leaves and subtree
  // count. At most 4 leaves and 6 subtrees bounds the tree to 9 vertices.
  std::map<std::pair<std::size_t, std::size_t>, std::set<std::string>> expected;
  for (const auto& t : fixtures::rooted_up_to(9)) {
    const auto cs = static_cast<std::size_t>(p_rooted(t).coefficient_sum());
    expected[{t.leaf_count(), cs}].insert(t.code());
  }
  for (std::size_t leaves = 1; leaves <= 4; ++leaves)
    for (std::size_t cs = 1; cs <= 6; ++cs) {
      std::set<std::string> got;
      for (const auto& t : trees_with(leaves, cs)) got.insert(t.code());
      ASSERT_EQ(got, (expected[{leaves, cs}])) << leaves << " " << cs;
    }
}

// ---------------------------------------------------------------------------
// Properties

TEST(RoundtripProperty, RootedUpToNineVertices) {
  for (const auto& t : fixtures::rooted_up_to(9)) ASSERT_EQ(reconstruct_rooted(p_rooted(t)), t) << t.code();
}

TEST(RoundtripProperty, UnrootedUpToNineVertices) {
  for (const auto& u : fixtures::unrooted_up_to(9)) {
    const auto r = reconstruct_general(p_unrooted(u));
    ASSERT_TRUE(std::holds_alternative<unrooted_tree>(r)) << u.code();
    ASSERT_EQ(std::get<unrooted_tree>(r), u) << u.code();
  }
}

TEST(RoundtripProperty, RootedGeneralBranch) {
  for (const auto& t : fixtures::rooted_up_to(8)) {
    const auto r = reconstruct_general(p_rooted(t));
    ASSERT_TRUE(std::holds_alternative<rooted_tree>(r)) << t.code();
    ASSERT_EQ(std::get<rooted_tree>(r), t);
  }
}

TEST(ReattachProperty, AnyFactorGivesTheSameTree) {
  for (const auto& u : fixtures::unrooted_up_to(8)) {
    const std::size_t n = u.leaf_count();
    const auto split = factor_tree_product(p_unrooted(u), {n, n - 1, std::nullopt});
    ASSERT_TRUE(split.complete) << u.code();
    for (const auto& f : split.factors) ASSERT_EQ(reattach_root_leaf(reconstruct_rooted(f)), u) << u.code();
  }
}

TEST(RoundtripProperty, RandomLargerRootedTrees) {
  std::mt19937 rng(17);
  for (int i = 0; i < 30; ++i) {
    const auto t = fixtures::random_rooted(std::uniform_int_distribution<std::size_t>(10, 16)(rng), rng);
    ASSERT_EQ(reconstruct_rooted(p_rooted(t)), t) << t.code();
  }
}
