#include <gtest/gtest.h>

#include "mclosure/error.hpp"
#include "mclosure/linalg.hpp"
#include "mclosure/parse.hpp"
#include "test_util.hpp"

using namespace mclosure;
using mclosure::testing::P;

namespace {

RingPtr xyz() { return Ring::make({"x1", "x2", "y1", "y2", "z1"}); }

}  // namespace

TEST(MonomialOrder, LexAndGrevlex) {
  Monomial a{2, 0, 0}, b{1, 3, 0}, c{0, 0, 4};
  EXPECT_GT(mono_cmp(a, b, MonomialOrder::lex()), 0);
  EXPECT_LT(mono_cmp(a, b, MonomialOrder::grevlex()), 0);
  EXPECT_GT(mono_cmp(b, c, MonomialOrder::lex()), 0);
  // equal degree: grevlex prefers the smaller last exponent
  Monomial d{1, 1, 0}, e{2, 0, 0}, f{0, 1, 1};
  EXPECT_LT(mono_cmp(d, e, MonomialOrder::grevlex()), 0);
  EXPECT_GT(mono_cmp(d, f, MonomialOrder::grevlex()), 0);
  EXPECT_EQ(mono_cmp(a, a, MonomialOrder::grevlex()), 0);
}

TEST(MonomialOrder, BlockEliminates) {
  auto ord = MonomialOrder::block(1);
  Monomial t{1, 0, 0}, big{0, 5, 5};
  EXPECT_GT(mono_cmp(t, big, ord), 0);
  EXPECT_TRUE(ord.eliminates_prefix(1));
  EXPECT_FALSE(ord.eliminates_prefix(2));
  EXPECT_FALSE(MonomialOrder::grevlex().eliminates_prefix(1));
}

TEST(MonomialOrder, LengthMismatchIsStructural) {
  EXPECT_THROW(mono_cmp(Monomial{1, 2}, Monomial{1, 2, 3}, MonomialOrder::lex()), StructuralError);
}

TEST(Parse, PrintsCanonicalForm) {
  auto r = xyz();
  Polynomial p = P(r, "x1^2 - 1/2*z1*y1^2");
  EXPECT_EQ(p.nterms(), 2u);
  EXPECT_EQ(P(r, p.to_string().c_str()), p);
  EXPECT_EQ(P(r, "(x1 + y1)^2 - 2*x1*y1").to_string(), P(r, "y1^2 + x1^2").to_string());
  EXPECT_EQ(P(r, "0").to_string(), "0");
  EXPECT_EQ(P(r, "-3/6").to_string(), "-1/2");
  EXPECT_EQ(P(r, "x1*-x2").to_string(), "-x1*x2");
}

TEST(Parse, Errors) {
  auto r = xyz();
  EXPECT_THROW(P(r, "x1 +"), ParseError);
  EXPECT_THROW(P(r, "w^2"), ParseError);
  EXPECT_THROW(P(r, "x1/x2"), ParseError);
  EXPECT_THROW(P(r, "x1^"), ParseError);
  EXPECT_THROW(P(r, "(x1"), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
}

TEST(Parse, RoundTripRandom) {
  std::mt19937_64 rng(20261014);
  auto r = xyz();
  for (int k = 0; k < 1000; ++k) {
    Polynomial p = mclosure::testing::random_polynomial(rng, r, 5, 6, 30);
    EXPECT_EQ(parse_polynomial(r, p.to_string()), p) << p.to_string();
  }
}

TEST(Parse, PolyVec) {
  auto r = xyz();
  PolyVec v = parse_polyvec(r, "(x1, y1^2 - 1, 0)", 3);
  EXPECT_EQ(v.to_string(), "(x1, y1^2 - 1, 0)");
  EXPECT_THROW(parse_polyvec(r, "(x1, y1)", 3), ParseError);
}

TEST(Polynomial, RingAxiomsRandom) {
  std::mt19937_64 rng(7);
  auto r = Ring::make({"x", "y", "z"});
  for (int k = 0; k < 200; ++k) {
    auto a = mclosure::testing::random_polynomial(rng, r, 3, 4, 9);
    auto b = mclosure::testing::random_polynomial(rng, r, 3, 4, 9);
    auto c = mclosure::testing::random_polynomial(rng, r, 2, 3, 9);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * Polynomial::constant(r, 1), a);
  }
}

TEST(Polynomial, LeibnizRandom) {
  std::mt19937_64 rng(11);
  auto r = Ring::make({"x", "y"});
  for (int k = 0; k < 200; ++k) {
    auto a = mclosure::testing::random_polynomial(rng, r, 4, 4, 9);
    auto b = mclosure::testing::random_polynomial(rng, r, 4, 4, 9);
    for (std::size_t v = 0; v < 2; ++v) EXPECT_EQ((a * b).diff(v), a.diff(v) * b + a * b.diff(v));
  }
}

TEST(Polynomial, DiffEvalExamples) {
  auto r = Ring::make({"x", "y"});
  EXPECT_EQ(P(r, "x^3*y").diff(Monomial{2, 1}), P(r, "6*x"));
  EXPECT_EQ(P(r, "x^2 + y").eval({Rational(1, 2), Rational(3)}), Rational(13, 4));
  EXPECT_THROW(P(r, "x").eval({Rational(1)}), StructuralError);
  EXPECT_EQ(P(r, "x^2*y - y").divide_exact(P(r, "x - 1")).value(), P(r, "x*y + y"));
  EXPECT_FALSE(P(r, "x^2 + 1").divide_exact(P(r, "x - 1")).has_value());
}

TEST(LinearChange, InverseRoundTripRandom) {
  std::mt19937_64 rng(3);
  auto r = Ring::make({"x", "y", "z"});
  for (int k = 0; k < 50; ++k) {
    QMatrix T(3, 3);
    do {
      for (auto& e : T.a) e = mclosure::testing::random_rational(rng, 4);
    } while (determinant(T) == 0);
    auto f = mclosure::testing::random_polynomial(rng, r, 3, 4, 9);
    EXPECT_EQ(linear_change_of_vars(linear_change_of_vars(f, T), inverse(T)), f);
  }
}

TEST(LinearChange, SingularIsDomainError) {
  auto r = Ring::make({"x", "y"});
  QMatrix T(2, 2);
  T.at(0, 0) = 1;
  T.at(0, 1) = 2;
  T.at(1, 0) = 2;
  T.at(1, 1) = 4;
  EXPECT_THROW(linear_change_of_vars(P(r, "x"), T), DomainError);
  QMatrix swap(2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  EXPECT_EQ(linear_change_of_vars(P(r, "x^2 + 3*y"), swap), P(r, "y^2 + 3*x"));
}
