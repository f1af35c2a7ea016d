#include <gtest/gtest.h>

#include "mclosure/error.hpp"
#include "mclosure/groebner.hpp"
#include "mclosure/vanishing.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace mclosure;
using mclosure::testing::P;
using namespace mclosure::fixtures;


TEST(Vanishing, AnnihilatingPolynomial) {
  auto r = Ring::make({"x", "y"});
  auto g = SemialgebraicDescription::parse(r, "y - x^2 = 0 & x > 0 | y = 0 & x < 0");
  EXPECT_EQ(annihilating_polynomial(g), P(r, "(y - x^2)*y"));
  auto c = SemialgebraicDescription::parse(r, "x > 0 & !(x > 0) | y = x");
  EXPECT_EQ(annihilating_polynomial(c), P(r, "y - x"));
  EXPECT_THROW(annihilating_polynomial(SemialgebraicDescription::parse(r, "x > 0")), DomainError);
  EXPECT_THROW(annihilating_polynomial(SemialgebraicDescription::parse(r, "false")), DomainError);
}

TEST(Vanishing, DerivativePreprocess) {
  auto r = Ring::make({"x", "t"});
  Polynomial p = P(r, "(t - x)^2*(t + 1)");
  EXPECT_EQ(derivative_preprocess(p, 1, P(r, "t - x")), 1u);
  EXPECT_EQ(p, P(r, "(2*t - 2*x)*(t + 1) + (t - x)^2"));
  Polynomial q = P(r, "(t - x)^4");
  long before = q.degree();
  EXPECT_EQ(derivative_preprocess(q, 1, P(r, "t - x")), 3u);
  EXPECT_LT(q.degree(), before);
  EXPECT_EQ(q, P(r, "24*(t - x)"));
  Polynomial s = P(r, "t^2 - x");
  EXPECT_EQ(derivative_preprocess(s, 1, s), 0u);
}

TEST(Vanishing, SelectComponentExamples) {
  auto r = Ring::make({"x", "t"});
  EXPECT_TRUE(module_equal(select_component({r, {P(r, "t - x^2")}, {1}}, Q({"1", "1"})), ideal(r, {"t - x^2"})));
  EXPECT_TRUE(module_equal(select_component({r, {P(r, "t^2 - x^2")}, {1}}, Q({"1", "1"})), ideal(r, {"t - x"})));
  EXPECT_TRUE(module_equal(select_component({r, {P(r, "t^2 - x^2")}, {1}}, Q({"2", "-2"})), ideal(r, {"t + x"})));
  auto r3 = Ring::make({"x", "y", "z"});
  EXPECT_TRUE(module_equal(select_component({r3, {P(r3, "x^2 - z*y^2")}, {0}}, Q({"1", "1", "1"})),
                           ideal(r3, {"x^2 - z*y^2"})));
  // Leading coefficient x: the saturation removes nothing here, but the
  // ideal must still be prime.
  EXPECT_TRUE(module_equal(select_component({r, {P(r, "x*t - 1")}, {1}}, Q({"2", "1/2"})), ideal(r, {"x*t - 1"})));
  EXPECT_THROW(select_component({r, {P(r, "t - x^2")}, {1}}, Q({"1", "2"})), DomainError);
  EXPECT_THROW(select_component({r, {P(r, "t^2 - x^2")}, {1}}, Q({"0", "0"})), UnsupportedInput);
  EXPECT_TRUE(select_component({r, {}, {}}, Q({"0", "0"})).is_zero());
}

TEST(Vanishing, PrimitiveElementSplit) {
  auto r = Ring::make({"x", "s", "t"});
  // s^2 = t^2 = x splits into t = s and t = -s.
  EXPECT_TRUE(module_equal(select_component({r, {P(r, "s^2 - x"), P(r, "t^2 - x")}, {1, 2}}, Q({"1", "1", "1"})),
                           ideal(r, {"s^2 - x", "t - s"})));
  EXPECT_TRUE(module_equal(select_component({r, {P(r, "s^2 - x"), P(r, "t^2 - 4*x")}, {1, 2}}, Q({"1", "1", "-2"})),
                           ideal(r, {"s^2 - x", "t + 2*s"})));
  // x and x + 1 both squares at 9/16: the system stays prime.
  EXPECT_TRUE(module_equal(
      select_component({r, {P(r, "s^2 - x"), P(r, "t^2 - x - 1")}, {1, 2}}, Q({"9/16", "3/4", "5/4"})),
      ideal(r, {"s^2 - x", "t^2 - x - 1"})));
}

TEST(Vanishing, ComplexifySuppliedWitness) {
  auto s = make_stratum({"x"}, {"y"}, "x > 0", {"(y - x)^2"}, Q({"1", "1"}));
  auto c = complexify(s);
  EXPECT_EQ(c.replacements, std::vector<unsigned>{1});
  EXPECT_TRUE(module_equal(c.ideal, ideal(s.ring, {"y - x"})));

  auto bad = make_stratum({"x"}, {"y"}, "x > 0", {"y - x"}, Q({"-1", "-1"}));
  EXPECT_THROW(complexify(bad), DomainError);
  auto off = make_stratum({"x"}, {"y"}, "x > 0", {"y - x"}, Q({"1", "2"}));
  EXPECT_THROW(complexify(off), DomainError);
}

TEST(Vanishing, ComplexifySearch) {
  auto s = make_stratum({"x"}, {"y"}, "x > 0", {"y - x^2"});
  auto c = complexify(s);
  ASSERT_EQ(c.witness.size(), 2u);
  EXPECT_GT(c.witness[0], 0);
  EXPECT_TRUE(module_equal(c.ideal, ideal(s.ring, {"y - x^2"})));

  auto cube = make_stratum({"x"}, {"y"}, "x > 0", {"y^3 - x"});
  EXPECT_TRUE(module_equal(complexify(cube).ideal, ideal(cube.ring, {"y^3 - x"})));

  // Two real roots over every base point: the search must refuse.
  auto two = make_stratum({"x"}, {"y"}, "x > 0", {"y^2 - x"});
  EXPECT_THROW(complexify(two, false, {2000, 8}), UnsupportedInput);
  // The same stratum with a supplied witness is fine.
  two.witness = Q({"4", "-2"});
  EXPECT_TRUE(module_equal(complexify(two).ideal, ideal(two.ring, {"y^2 - x"})));
}

TEST(Vanishing, ExtraneousFactorsDoNotMatter) {
  auto base = make_stratum({"x"}, {"y"}, "x > 0", {"y - x^2"}, Q({"1", "1"}));
  auto noisy = make_stratum({"x"}, {"y"}, "x > 0", {"(x^2 + 1)*(y - x^2)*(y + 3)"}, Q({"1", "1"}));
  EXPECT_TRUE(module_equal(complexify(base).ideal, complexify(noisy).ideal));

  std::mt19937_64 rng(3);
  auto s = make_stratum({"x1", "x2"}, {"y"}, "x1 > 0 & x2 > 0", {"x1*y^2 - x2*y - x1 - x2"}, Q({"1", "1", "2"}));
  auto ref = complexify(s).ideal;
  for (int k = 0; k < 10; ++k) {
    Polynomial c = mclosure::testing::random_polynomial(rng, s.ring, 2, 3, 4, false).partial_eval({2}, {Rational(0)});
    c += Polynomial::constant(s.ring, 1);
    if (c.eval(*s.witness) == 0) continue;
    Stratum t = s;
    t.annihilators[0] *= c;
    EXPECT_TRUE(module_equal(complexify(t).ideal, ref));
  }
}

TEST(Vanishing, StratumValidation) {
  auto s = make_stratum({"x"}, {"y"}, "x > 0", {"x + 1"});
  EXPECT_THROW(s.validate(), StructuralError);
  auto w = make_stratum({"x"}, {"y"}, "x > 0", {"y - x"}, Q({"1", "1", "1"}));
  EXPECT_THROW(w.validate(), StructuralError);
  auto t = make_stratum({"x", "z"}, {"y", "w"}, "x > 0", {"y - x", "w - y"});
  EXPECT_THROW(t.validate(), StructuralError);
}

TEST(Vanishing, PullBackAndPushForward) {
  auto g = Ring::make({"x", "y"});
  auto s = make_stratum({"u"}, {"v"}, "u > 0", {"v - u^2"}, Q({"1", "1"}));
  QMatrix T(2, 2);
  T.at(0, 0) = 1;
  T.at(0, 1) = 1;
  T.at(1, 1) = 1;
  s.T = T;
  Polynomial pulled = s.pull_back(s.annihilators[0], g);
  EXPECT_EQ(pulled, P(g, "y - (x + y)^2"));
  EXPECT_EQ(s.push_forward(pulled), s.annihilators[0]);
  EXPECT_TRUE(module_equal(vanishing_ideal({s}, g), ideal(g, {"y - (x + y)^2"})));

  auto by_name = make_stratum({"y"}, {"x"}, "y > 0", {"x - y^2"}, Q({"1", "1"}));
  EXPECT_EQ(by_name.pull_back(by_name.annihilators[0], g), P(g, "x - y^2"));
  auto stranger = Ring::make({"a", "b"});
  EXPECT_THROW(by_name.pull_back(by_name.annihilators[0], stranger), StructuralError);
}

TEST(Vanishing, ExampleOne) {
  auto g = Ring::make({"x", "y", "z"});
  auto pos = example_one(true);
  auto I = vanishing_ideal(pos, g);
  EXPECT_TRUE(module_equal(I, ideal(g, {"x^2 - z*y^2"})));
  auto neg = vanishing_ideal(example_one(false), g);
  EXPECT_TRUE(module_equal(neg, ideal(g, {"x", "y"})));

  // Generators vanish at sample points of every stratum.
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int k = 0; k < 50; ++k) {
    Rational y = mclosure::testing::random_nonzero_rational(rng, 9);
    Rational s = Rational(std::uniform_int_distribution<int>(1, 9)(rng), 10);
    Rational sign = (k % 2) ? Rational(1) : Rational(-1);
    std::vector<std::vector<Rational>> pts{{sign * s * y, y, s * s}, {Rational(0), Rational(0), -s - 1},
                                           {Rational(0), y, Rational(0)}, {sign * y, y, Rational(1)}};
    for (const auto& pt : pts) {
      for (const auto& gen : I.gens) {
        EXPECT_EQ(gen[0].eval(pt), 0);
        ++checked;
      }
    }
    for (const auto& gen : neg.gens) {
      EXPECT_EQ(gen[0].eval({Rational(0), Rational(0), -s - 2}), 0);
      EXPECT_EQ(gen[0].eval({Rational(0), Rational(0), Rational(-1)}), 0);
    }
  }
  EXPECT_EQ(checked, 200);
}
