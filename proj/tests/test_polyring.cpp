#include <gtest/gtest.h>

#include <random>

#include "tdp/invariant.hpp"
#include "tdp/poly_json.hpp"
#include "tdp/polyring.hpp"
#include "test_support.hpp"

using namespace tdp;

namespace {

polynomial P(std::string_view s) { return parse_polynomial_text(s, var_set::xy()); }

const monomial kX{std::vector<unsigned>{1, 0}};
const monomial kY{std::vector<unsigned>{0, 1}};

}  // namespace

TEST(PolyAdd, DisjointSupports) { EXPECT_EQ(P("x") + P("2*y"), P("x + 2*y")); }

TEST(PolyAdd, Cancellation) {
  const auto sum = P("x + y") + P("-y");
  EXPECT_EQ(sum, P("x"));
  EXPECT_EQ(sum.term_count(), 1u);
}

TEST(PolyAdd, AdditiveIdentity) {
  EXPECT_EQ(P("x^2 + 2*y") + polynomial(var_set::xy()), P("x^2 + 2*y"));
}

TEST(PolyAdd, MismatchedVarSetsThrow) {
  const auto a = polynomial::variable(var_set::x_only(), "x");
  EXPECT_THROW(a + P("x"), var_set_mismatch);
  EXPECT_THROW(a * P("x"), var_set_mismatch);
}

TEST(PolyMul, BinomialSquare) { EXPECT_EQ(P("x + y") * P("x + y"), P("x^2 + 2*x*y + y^2")); }

TEST(PolyMul, UnrootedThreeStarCube) {
  const auto f = P("x^2 + y");
  EXPECT_EQ(to_text(f * f * f), "x^6 + 3*x^4*y + 3*x^2*y^2 + y^3");
}

TEST(PolyMul, MultiplicativeIdentity) {
  const auto one = polynomial::constant(var_set::xy(), 1);
  EXPECT_EQ(P("3*x*y - y^4 + 7") * one, P("3*x*y - y^4 + 7"));
}

TEST(Substitute, PrimeForY) {
  const auto r = substitute(P("x^2 + 2*y"), "y", 2);
  EXPECT_EQ(r.vars(), var_set::x_only());
  EXPECT_EQ(to_text(r), "x^2 + 4");
}

TEST(Substitute, RootedPathPolynomial) {
  EXPECT_EQ(to_text(substitute(P("3*y + x"), "y", 2)), "x + 6");
}

TEST(Substitute, AbsentVariable) { EXPECT_EQ(to_text(substitute(P("x^5"), "y", 7)), "x^5"); }

TEST(Substitute, UnknownVariableThrows) {
  EXPECT_THROW(substitute(P("x"), "z", 1), std::invalid_argument);
}

TEST(TryDivExact, ConstructedProduct) {
  auto q = try_div_exact(P("x^2 + y") * P("x + y"), P("x + y"));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, P("x^2 + y"));
}

TEST(TryDivExact, NotDivisible) {
  // Oracle: no linear polynomial with small coefficients times (x + y) gives
  // x^2 + 2y; the quotient would have to be linear by degree.
  const auto target = P("x^2 + 2*y");
  const auto den = P("x + y");
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c) {
        const auto q = polynomial::from_terms(
            var_set::xy(), {{kX, a}, {kY, b}, {monomial::one(2), c}});
        ASSERT_FALSE(q * den == target);
      }
  EXPECT_FALSE(try_div_exact(target, den).has_value());
}

TEST(TryDivExact, ByOne) {
  const auto p = P("x^3 + x*y + 5");
  EXPECT_EQ(*try_div_exact(p, polynomial::constant(var_set::xy(), 1)), p);
}

TEST(TryDivExact, ZeroDivisorThrows) {
  EXPECT_THROW(try_div_exact(P("x"), polynomial(var_set::xy())), std::domain_error);
}

TEST(TryDivExact, CoefficientMustDivide) {
  EXPECT_FALSE(try_div_exact(P("3*x"), P("2*x")).has_value());
  EXPECT_EQ(*try_div_exact(P("4*x^2 + 2*x"), P("2*x")), P("2*x + 1"));
}

TEST(Coefficients, Queries) {
  const auto p = P("x^2 + 2*y");
  EXPECT_EQ(p.coefficient(kY), 2);
  EXPECT_EQ(p.degree_in("x"), 2u);
  EXPECT_EQ(p.coefficient_sum(), 3);
  EXPECT_THROW(p.coefficient(monomial(std::vector<unsigned>{1})), var_set_mismatch);
}

TEST(Text, CanonicalForms) {
  EXPECT_EQ(to_text(polynomial(var_set::xy())), "0");
  EXPECT_EQ(to_text(P("-x + 3")), "-x + 3");
  EXPECT_EQ(to_text(P("y + x*x - 2*x*y*y")), "-2*x*y^2 + x^2 + y");
  EXPECT_EQ(to_text(P("1")), "1");
}

TEST(Text, ParseErrorsCarryPosition) {
  try {
    parse_polynomial_text("x + * y");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_polynomial_text(""), parse_error);
  EXPECT_THROW(parse_polynomial_text("x^"), parse_error);
  EXPECT_THROW(parse_polynomial_text("z", var_set::xy()), parse_error);
}

TEST(Text, InfersLabeledVariables) {
  const auto p = parse_polynomial_text("x_10*x_2 + y");
  EXPECT_EQ(p.vars().names(), (std::vector<std::string>{"x_2", "x_10", "y"}));
}

TEST(Json, BitExactForm) {
  EXPECT_EQ(to_json(P("x^2 + 2*y")),
            R"({"vars":["x","y"],"terms":[{"exp":[2,0],"coef":"1"},{"exp":[0,1],"coef":"2"}]})");
}

TEST(Json, RejectsMalformed) {
  EXPECT_THROW(parse_polynomial_json("{"), parse_error);
  EXPECT_THROW(parse_polynomial_json(R"({"vars":["x","y"],"terms":[{"exp":[1],"coef":"1"}]})"),
               parse_error);
  EXPECT_THROW(parse_polynomial_json(R"({"vars":["x","y"],"terms":[{"exp":[1,0],"coef":"a"}]})"),
               parse_error);
}

TEST(BigIntegers, NoOverflow) {
  const auto big = pow(P("x + 1000*y"), 12);
  const integer expected = pow(integer(1001), 12);
  EXPECT_EQ(big.coefficient_sum(), expected);
  EXPECT_EQ(parse_polynomial_json(to_json(big)), big);
}

// ---------------------------------------------------------------------------
// Properties

TEST(RingAxioms, RandomSmallPolynomials) {
  std::mt19937 rng(20240611);
  for (int i = 0; i < 300; ++i) {
    const auto a = fixtures::random_poly(rng), b = fixtures::random_poly(rng),
               c = fixtures::random_poly(rng);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).is_zero());
  }
}

TEST(SubstituteProperty, CommutesWithRingOperations) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = fixtures::random_poly(rng), b = fixtures::random_poly(rng);
    const integer v = std::uniform_int_distribution<int>(-4, 4)(rng);
    ASSERT_EQ(substitute(a * b, "y", v), substitute(a, "y", v) * substitute(b, "y", v));
    ASSERT_EQ(substitute(a + b, "y", v), substitute(a, "y", v) + substitute(b, "y", v));
  }
}

TEST(TryDivExactProperty, TreePolynomialProductsUpToEightVertices) {
  const auto trees = fixtures::rooted_up_to(8);
  std::vector<polynomial> polys;
  for (const auto& t : trees) polys.push_back(p_rooted(t));
  for (const auto& a : polys)
    for (const auto& b : polys) {
      auto q = try_div_exact(a * b, b);
      ASSERT_TRUE(q.has_value());
      ASSERT_EQ(*q, a);
    }
}

TEST(SerializationProperty, RoundtripTreePolynomialsUpToTenVertices) {
  for (const auto& t : fixtures::rooted_up_to(10)) {
    const auto p = p_rooted(t);
    ASSERT_EQ(parse_polynomial_text(to_text(p)), p);
    ASSERT_EQ(parse_polynomial_json(to_json(p)), p);
  }
}
