#include <gtest/gtest.h>

#include "mclosure/error.hpp"
#include "mclosure/roots.hpp"
#include "mclosure/semialgebraic.hpp"
#include "root_oracle.hpp"
#include "test_util.hpp"

using namespace mclosure;
using mclosure::testing::P;

namespace {

UPoly U(const char* s) {
  auto r = Ring::make({"x"});
  return UPoly::from_polynomial(P(r, s), 0);
}

bool overlaps(const IsolatingInterval& iv, const mclosure::testing::ScanRoot& s) {
  // Closed [lo, hi] for exact roots, open otherwise.
  if (iv.exact && s.lo == s.hi) return iv.lo == s.lo;
  if (iv.exact) return s.lo < iv.lo && iv.lo < s.hi;
  if (s.lo == s.hi) return iv.lo < s.lo && s.lo < iv.hi;
  return iv.lo < s.hi && s.lo < iv.hi;
}

}  // namespace

TEST(Sturm, Examples) {
  auto seq = sturm_sequence(U("x"));
  ASSERT_EQ(seq.size(), 2u);
  EXPECT_EQ(seq[1], UPoly::constant(1));
  auto s2 = sturm_sequence(U("x^2 - 1"));
  EXPECT_EQ(count_roots(s2, Rational(-2), Rational(2)), 2);
  auto s3 = sturm_sequence(square_free_part(U("(x - 1)^2")));
  EXPECT_EQ(count_roots(s3, Rational(-5), Rational(5)), 1);
  EXPECT_EQ(gcd(U("(x - 1)^2"), U("2*x - 2")), U("x - 1"));
  EXPECT_THROW(sturm_sequence(UPoly()), DomainError);
}

TEST(Isolate, Examples) {
  auto a = isolate_real_roots(U("x*(x - 1)"));
  ASSERT_EQ(a.size(), 2u);
  EXPECT_TRUE(a[0].exact && a[0].lo == 0);
  EXPECT_TRUE(a[1].exact && a[1].lo == 1);

  auto b = isolate_real_roots(U("x^2 - 2"));
  ASSERT_EQ(b.size(), 2u);
  auto q = U("x^2 - 2");
  for (const auto& iv : b) {
    EXPECT_FALSE(iv.exact);
    EXPECT_LT(q.sign_at(iv.lo) * q.sign_at(iv.hi), 0);
  }
  EXPECT_LE(b[0].hi, 0);
  EXPECT_GE(b[1].lo, 0);

  EXPECT_TRUE(isolate_real_roots(U("x^2 + 1")).empty());
  EXPECT_THROW(isolate_real_roots(U("5")), DomainError);
}

TEST(Isolate, MixedRationalAndIrrational) {
  // Rational roots lying inside the first bisection cells of the rest.
  auto p = U("(x - 1)*(x - 3/2)^2*(x^2 - 2)*(x^2 - 3)");
  auto ivs = isolate_real_roots(p);
  ASSERT_EQ(ivs.size(), 6u);
  for (std::size_t i = 0; i + 1 < ivs.size(); ++i) EXPECT_LE(ivs[i].hi, ivs[i + 1].lo);
  int exact = 0;
  for (const auto& iv : ivs) exact += iv.exact;
  EXPECT_EQ(exact, 2);
}

TEST(Isolate, RefineBelowWidth) {
  auto q = U("x^2 - 2");
  Rational eps(1, 1000000);
  for (auto iv : isolate_real_roots(q)) {
    auto r = refine(q, iv, eps);
    EXPECT_LT(r.width(), eps);
    EXPECT_LT(q.sign_at(r.lo) * q.sign_at(r.hi), 0);
  }
}

TEST(Isolate, AgreesWithIntervalScan) {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> coef(-10, 10), deg(1, 8);
  for (int k = 0; k < 300; ++k) {
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = coef(rng);
    if (c.back() == 0) c.back() = 1;
    UPoly p(c);
    if (p.degree() < 1) continue;
    bool failed = false;
    auto scan = mclosure::testing::scan_roots(p, failed);
    ASSERT_FALSE(failed) << p.to_string();
    auto ivs = isolate_real_roots(p);
    ASSERT_EQ(ivs.size(), scan.size()) << p.to_string();
    for (std::size_t i = 0; i < ivs.size(); ++i) EXPECT_TRUE(overlaps(ivs[i], scan[i])) << p.to_string();
    for (auto iv : ivs) {
      auto r = refine(p, iv, Rational(1, 1000));
      if (!r.exact) EXPECT_LT(square_free_part(p).sign_at(r.lo) * square_free_part(p).sign_at(r.hi), 0);
    }
  }
}

TEST(Semialgebraic, ParsePrintEval) {
  auto r = Ring::make({"x", "y"});
  auto d = SemialgebraicDescription::parse(r, "x > 0 & (y^2 <= 1 | !(x = y))");
  EXPECT_TRUE(d.eval({Rational(1), Rational(0)}));
  EXPECT_FALSE(d.eval({Rational(-1), Rational(0)}));
  EXPECT_FALSE(d.eval({Rational(2), Rational(2)}));
  EXPECT_TRUE(d.eval({Rational(2), Rational(3)}));
  auto again = SemialgebraicDescription::parse(r, d.to_string());
  EXPECT_EQ(again.to_string(), d.to_string());
  auto e = SemialgebraicDescription::parse(r, "(x + 1)^2 > 2*y");
  EXPECT_EQ(e.kind(), SemialgebraicDescription::Kind::Atom);
  EXPECT_THROW(SemialgebraicDescription::parse(r, "x > 0 &"), ParseError);
  EXPECT_THROW(SemialgebraicDescription::parse(r, "x + 1"), ParseError);
  EXPECT_THROW(SemialgebraicDescription::parse(r, "x > y > 0"), ParseError);
  EXPECT_THROW(SemialgebraicDescription::parse(r, "q > 0"), ParseError);
}

TEST(Semialgebraic, Cells) {
  auto r = Ring::make({"x", "y"});
  auto d = SemialgebraicDescription::parse(r, "(y = x^2 & x > 0) | !(y = 0 | x < 1)");
  auto cells = d.cells();
  ASSERT_EQ(cells.size(), 2u);
  EXPECT_EQ(cells[0].size(), 2u);
  EXPECT_FALSE(cells[0][0].negated);
  ASSERT_EQ(cells[1].size(), 2u);
  EXPECT_TRUE(cells[1][0].negated);
  EXPECT_TRUE(cells[1][1].negated);
}

TEST(Semialgebraic, IntervalEnclosure) {
  std::mt19937_64 rng(7);
  auto r = Ring::make({"x", "y"});
  for (int k = 0; k < 200; ++k) {
    auto p = mclosure::testing::random_polynomial(rng, r, 4, 5, 5, true);
    Rational a = mclosure::testing::random_rational(rng, 4), b = mclosure::testing::random_rational(rng, 4);
    std::vector<QInterval> box{{std::min(a, b), std::max(a, b)}, {Rational(-1), Rational(1, 2)}};
    auto iv = eval_interval(p, box);
    for (int s = 0; s < 5; ++s) {
      Rational t(s, 4);
      std::vector<Rational> pt{box[0].lo + t * (box[0].hi - box[0].lo), Rational(-1) + t * Rational(3, 2)};
      Rational v = p.eval(pt);
      EXPECT_LE(iv.lo, v);
      EXPECT_GE(iv.hi, v);
    }
  }
  EXPECT_EQ(pow(QInterval{Rational(-2), Rational(1)}, 2).lo, 0);
  EXPECT_EQ(pow(QInterval{Rational(-2), Rational(1)}, 2).hi, 4);
}

TEST(Witness, Examples) {
  auto r1 = Ring::make({"x"});
  auto d1 = SemialgebraicDescription::parse(r1, "x > 0");
  auto w1 = find_witness_point(d1, {P(r1, "x - 1")});
  ASSERT_TRUE(w1.has_value());
  EXPECT_GT((*w1)[0], 0);
  EXPECT_NE((*w1)[0], 1);

  auto r2 = Ring::make({"y", "z"});
  auto d2 = SemialgebraicDescription::parse(r2, "z > 0 & y > 0");
  auto w2 = find_witness_point(d2, {P(r2, "y^2"), P(r2, "z")});
  ASSERT_TRUE(w2.has_value());
  EXPECT_EQ(*w2, (std::vector<Rational>{Rational(1), Rational(1)}));

  auto d3 = SemialgebraicDescription::parse(r1, "x^2 < 0");
  EXPECT_FALSE(find_witness_point(d3, {}, {5000, 16}).has_value());
}

TEST(Witness, ReturnedPointsVerify) {
  std::mt19937_64 rng(3);
  auto r = Ring::make({"x", "y"});
  int found = 0;
  for (int k = 0; k < 30; ++k) {
    auto p = mclosure::testing::random_polynomial(rng, r, 2, 3, 4, false);
    auto q = mclosure::testing::random_polynomial(rng, r, 2, 3, 4, false);
    if (p.is_zero() || q.is_zero()) continue;
    auto d = SemialgebraicDescription::conj({SemialgebraicDescription::atom(SignCondition(p, Relation::Positive)),
                                             SemialgebraicDescription::atom(SignCondition(q, Relation::Negative))});
    auto w = find_witness_point(d, {p + q}, {20000, 12});
    if (!w) continue;
    ++found;
    EXPECT_GT(p.eval(*w), 0);
    EXPECT_LT(q.eval(*w), 0);
    EXPECT_NE((p + q).eval(*w), 0);
  }
  EXPECT_GT(found, 5);
}
