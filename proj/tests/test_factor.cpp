#include <gtest/gtest.h>

#include "mclosure/factor.hpp"
#include "test_util.hpp"

using namespace mclosure;
using mclosure::testing::P;

namespace {

UPoly U(const char* s) {
  auto r = Ring::make({"x"});
  return UPoly::from_polynomial(P(r, s), 0);
}

Polynomial expand(const std::vector<Factor>& fs, const RingPtr& r) {
  Polynomial p = Polynomial::constant(r, 1);
  for (const auto& f : fs) p = p * f.f.pow(f.multiplicity);
  return p;
}

std::vector<std::string> names(const std::vector<Factor>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(f.f.to_string() + "^" + std::to_string(f.multiplicity));
  return out;
}

}  // namespace

TEST(FactorUnivariate, Small) {
  auto fs = factor_univariate(U("2*x^4 - 2"));
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_EQ(fs[0].f, U("x - 1"));
  EXPECT_EQ(fs[1].f, U("x + 1"));
  EXPECT_EQ(fs[2].f, U("x^2 + 1"));
  EXPECT_EQ(factor_univariate(U("x^4 + 1")).size(), 1u);
  EXPECT_EQ(factor_univariate(U("x^4 - 10*x^2 + 1")).size(), 1u);
  auto sq = factor_univariate(U("(x - 1/2)^3*(x^2 - 2)"));
  ASSERT_EQ(sq.size(), 2u);
  EXPECT_EQ(sq[0].f, U("2*x - 1"));
  EXPECT_EQ(sq[0].multiplicity, 3u);
  EXPECT_TRUE(factor_univariate(U("7")).empty());
}

TEST(FactorUnivariate, ProductsOfRandomFactors) {
  std::mt19937_64 rng(17);
  auto r = Ring::make({"x"});
  for (int k = 0; k < 60; ++k) {
    UPoly f = UPoly::constant(1);
    int parts = 2 + k % 3;
    for (int i = 0; i < parts; ++i) {
      UPoly g = UPoly::from_polynomial(mclosure::testing::random_polynomial(rng, r, 4, 4, 20, false), 0);
      if (g.degree() < 1) g = U("x + 3");
      f = f * g;
    }
    auto fs = factor_univariate(f);
    UPoly prod = UPoly::constant(1);
    std::size_t count = 0;
    for (const auto& g : fs) {
      for (unsigned m = 0; m < g.multiplicity; ++m) prod = prod * g.f;
      count += g.multiplicity;
      EXPECT_GT(g.f.lead(), 0);
    }
    EXPECT_EQ(prod.monic(), f.monic());
    EXPECT_GE(count, static_cast<std::size_t>(parts));
  }
}

TEST(FactorMultivariate, Examples) {
  auto r = Ring::make({"x", "y", "z", "w"});
  EXPECT_EQ(names(factor(P(r, "x^2 - z*y^2"))), (std::vector<std::string>{"y^2*z - x^2^1"}));
  EXPECT_EQ(names(factor(P(r, "w^2 - x^2"))), (std::vector<std::string>{"x + w^1", "x - w^1"}));
  auto f = P(r, "3*(x*y + 1)*(x - y^2)^2*z");
  auto fs = factor(f);
  EXPECT_EQ(expand(fs, r).normalized(), f.normalized());
  EXPECT_EQ(fs.size(), 3u);
}

TEST(FactorMultivariate, RandomProducts) {
  std::mt19937_64 rng(23);
  auto r = Ring::make({"x", "y", "w"});
  for (int k = 0; k < 25; ++k) {
    auto a = mclosure::testing::random_polynomial(rng, r, 2, 3, 6, false);
    auto b = mclosure::testing::random_polynomial(rng, r, 2, 3, 6, false);
    if (a.degree() < 1 || b.degree() < 1) continue;
    auto f = a * b;
    auto fs = factor(f);
    unsigned count = 0;
    for (const auto& g : fs) count += g.multiplicity;
    EXPECT_GE(count, 2u);
    EXPECT_EQ(expand(fs, r).normalized(), f.normalized());
  }
}
