#include <gtest/gtest.h>

#include "mclosure/diffop.hpp"
#include "mclosure/error.hpp"
#include "mclosure/groebner.hpp"
#include "test_util.hpp"

using namespace mclosure;
using mclosure::testing::P;
using mclosure::testing::random_polynomial;

namespace {

Monomial mono(std::initializer_list<std::uint32_t> e) { return Monomial(e); }

LinearDiffOp op(const RingPtr& r, std::size_t arity, const char* text) { return parse_operator(r, arity, text); }

LinearDiffOp random_operator(std::mt19937_64& rng, const RingPtr& r, std::size_t arity, unsigned order,
                             const std::vector<std::size_t>& dvars, int cdeg) {
  LinearDiffOp L(r, arity);
  std::uniform_int_distribution<int> nt(1, 4);
  int k = nt(rng);
  for (int t = 0; t < k; ++t) {
    Monomial a(r->nvars());
    unsigned ord = std::uniform_int_distribution<unsigned>(0, order)(rng);
    for (unsigned s = 0; s < ord && !dvars.empty(); ++s) {
      a[dvars[std::uniform_int_distribution<std::size_t>(0, dvars.size() - 1)(rng)]] += 1;
    }
    std::size_t comp = std::uniform_int_distribution<std::size_t>(0, arity - 1)(rng);
    L.add(a, comp, random_polynomial(rng, r, cdeg, 2, 3, false));
  }
  return L;
}

PolyVec random_vec(std::mt19937_64& rng, const RingPtr& r, std::size_t J, int deg) {
  std::vector<Polynomial> c;
  for (std::size_t j = 0; j < J; ++j) c.push_back(random_polynomial(rng, r, deg, 4, 5, true));
  return PolyVec(c);
}

SubmoduleBasis ideal_of(const RingPtr& r, const std::vector<Polynomial>& g) {
  return groebner_basis(SubmoduleBasis::from_ideal(r, g));
}

// Applies sum_alpha X^alpha o L_alpha one factor at a time.
Polynomial apply_rewrite(const XRewrite& rw, const TangentFrame& f, const PolyVec& v) {
  Polynomial out(f.ring);
  for (const auto& [alpha, La] : rw.parts) {
    Polynomial g = apply(La, v);
    for (std::size_t j = f.n; j-- > 0;) {
      for (std::uint32_t k = 0; k < alpha[j]; ++k) g = apply(f.X[j], PolyVec({g}));
    }
    out += g;
  }
  return out;
}

}  // namespace

TEST(DiffOp, ApplyExamples) {
  auto r = Ring::make({"x", "y"});
  EXPECT_EQ(apply(op(r, 1, "1 ; (0,1) ; 1"), PolyVec({P(r, "y^2")})), P(r, "2*y"));
  auto diff = op(r, 2, "1 ; (0,0) ; 1\n-1 ; (0,0) ; 2");
  Polynomial q = P(r, "x^3*y - 7*y + 1/2");
  EXPECT_TRUE(apply(diff, PolyVec({q, q})).is_zero());
  EXPECT_EQ(apply(op(r, 1, "x ; (1,0) ; 1"), PolyVec({P(r, "x^2")})), P(r, "2*x^2"));
  EXPECT_THROW(apply(diff, PolyVec({q})), StructuralError);
}

TEST(DiffOp, TextRoundTrip) {
  auto r = Ring::make({"x1", "x2"});
  auto L = op(r, 2, "# comment\n2/1*x1 ; (1,0) ; 1\n\nx2^2 - 1 ; (0,2) ; 2\n3 ; (0,0) ; 1");
  EXPECT_EQ(L.order(), 2u);
  EXPECT_EQ(parse_operator(r, 2, print_operator(L)), L);
  EXPECT_THROW(op(r, 1, "1 ; (1) ; 1"), ParseError);
  EXPECT_THROW(op(r, 1, "1 ; (1,0) ; 2"), ParseError);
  EXPECT_THROW(op(r, 1, "1 ; 1,0 ; 1"), ParseError);
  // Normal form sorts by order, then multi-index, then component.
  auto terms = L.terms();
  EXPECT_EQ(terms[0].alpha, mono({0, 0}));
  EXPECT_EQ(terms.back().alpha, mono({0, 2}));
}

TEST(DiffOp, ApplyIsBilinear) {
  std::mt19937_64 rng(21);
  auto r = Ring::make({"x", "y"});
  for (int k = 0; k < 30; ++k) {
    auto A = random_operator(rng, r, 2, 2, {0, 1}, 2);
    auto B = random_operator(rng, r, 2, 2, {0, 1}, 2);
    auto u = random_vec(rng, r, 2, 3), v = random_vec(rng, r, 2, 3);
    Rational c = mclosure::testing::random_rational(rng, 7);
    EXPECT_EQ(apply(A + B, u), apply(A, u) + apply(B, u));
    EXPECT_EQ(apply(A, u + v), apply(A, u) + apply(A, v));
    EXPECT_EQ(apply(A, u * c), apply(A, u) * c);
  }
}

TEST(DiffOp, ComposeMatchesApplication) {
  std::mt19937_64 rng(8);
  auto r = Ring::make({"x", "y"});
  for (int k = 0; k < 30; ++k) {
    auto A = random_operator(rng, r, 1, 2, {0, 1}, 2);
    auto L = random_operator(rng, r, 2, 2, {0, 1}, 2);
    auto v = random_vec(rng, r, 2, 4);
    EXPECT_EQ(apply(compose(A, L), v), apply(A, PolyVec({apply(L, v)})));
  }
}

TEST(DiffOp, DeclaredBlocks) {
  auto r = Ring::make({"x", "y"});
  auto L = op(r, 1, "1 ; (0,1) ; 1");
  L.declare_blocks({1});
  EXPECT_THROW(L.add(mono({1, 0}), 0, P(r, "1")), StructuralError);
  auto M = op(r, 1, "1 ; (1,0) ; 1");
  EXPECT_THROW(M.declare_blocks({1}), StructuralError);
}

TEST(DiffOp, PolyCoeffExamples) {
  auto r = Ring::make({"x"});
  auto one_one = groebner_basis(SubmoduleBasis(r, 2, {PolyVec({P(r, "1"), P(r, "1")})}));
  EXPECT_TRUE(module_equal(mclosure_poly_coeffs(op(r, 2, "1 ; (0) ; 1\n-1 ; (0) ; 2")), one_one));
  EXPECT_TRUE(mclosure_poly_coeffs(op(r, 1, "1 ; (1) ; 1")).is_zero());
  EXPECT_TRUE(module_equal(mclosure_poly_coeffs(op(r, 2, "1 ; (1) ; 1\n-1 ; (1) ; 2")), one_one));
  // x f' - f: the top row forces x P = 0.
  EXPECT_TRUE(mclosure_poly_coeffs(op(r, 1, "x ; (1) ; 1\n-1 ; (0) ; 1")).is_zero());
  EXPECT_TRUE(module_equal(mclosure_poly_coeffs(LinearDiffOp(r, 2)), SubmoduleBasis::full(r, 2)));
}

TEST(DiffOp, PolyCoeffGeneratorsAnnihilate) {
  std::mt19937_64 rng(33);
  auto r = Ring::make({"x1", "x2"});
  int nonzero = 0;
  for (int k = 0; k < 12; ++k) {
    std::size_t N = 1 + k % 2;
    LinearDiffOp L = random_operator(rng, r, N, 2, {0, 1}, 1);
    if (N == 2 && k % 4 == 1) {
      // f1 - f2 type dependence keeps the module nonzero
      LinearDiffOp D(r, 2);
      for (const auto& t : L.terms()) {
        D.add(t.alpha, 0, t.coeff);
        D.add(t.alpha, 1, -t.coeff);
      }
      L = D;
    }
    auto G = mclosure_poly_coeffs(L);
    unsigned s = L.order();
    for (const auto& g : G.gens) {
      ++nonzero;
      for (int q = 0; q < 50; ++q) {
        Polynomial Q = random_polynomial(rng, r, static_cast<int>(s) + 2, 4, 5, true);
        EXPECT_TRUE(apply(L, g * Q).is_zero());
      }
    }
  }
  EXPECT_GT(nonzero, 0);
}

TEST(DiffOp, FrameExamples) {
  auto r = Ring::make({"x", "y"});
  auto f = build_tangent_frame(r, 1, {1}, {P(r, "y^2 - x")}, ideal_of(r, {P(r, "y^2 - x")}));
  EXPECT_EQ(f.delta, P(r, "2*y"));
  EXPECT_EQ(f.X[0], op(r, 1, "2*y ; (1,0) ; 1\n1 ; (0,1) ; 1"));
  EXPECT_TRUE(apply(f.X[0], PolyVec({P(r, "y^2 - x")})).is_zero());

  auto g = build_tangent_frame(r, 1, {1}, {P(r, "y - x^3 - x")}, ideal_of(r, {P(r, "y - x^3 - x")}));
  EXPECT_EQ(g.delta, P(r, "1"));
  EXPECT_EQ(g.X[0], op(r, 1, "1 ; (1,0) ; 1\n3*x^2 + 1 ; (0,1) ; 1"));

  auto r2 = Ring::make({"x1", "x2"});
  auto h = build_tangent_frame(r2, 2, {}, {}, ideal_of(r2, {}));
  EXPECT_EQ(h.delta, P(r2, "1"));
  EXPECT_EQ(h.X[1], op(r2, 1, "1 ; (0,1) ; 1"));

  // (y - x)^2: its y-derivative lies in I(V) = (y - x), so it is replaced.
  auto d = build_tangent_frame(r, 1, {1}, {P(r, "(y - x)^2")}, ideal_of(r, {P(r, "y - x")}));
  EXPECT_EQ(d.replacements, std::vector<unsigned>{1});
  EXPECT_EQ(d.annihilators[0], P(r, "2*y - 2*x"));
  EXPECT_THROW(build_tangent_frame(r, 1, {1}, {P(r, "y - x")}, ideal_of(r, {P(r, "1")})), StructuralError);
}

TEST(DiffOp, EliminateExamples) {
  auto r = Ring::make({"x", "y"});
  auto f = build_tangent_frame(r, 1, {1}, {P(r, "y^2 - x")}, ideal_of(r, {P(r, "y^2 - x")}));
  auto Ly = op(r, 1, "x*y ; (0,2) ; 1\n1 ; (0,0) ; 1");
  auto a = eliminate_x_derivatives(Ly, f);
  EXPECT_EQ(a.D, 0u);
  ASSERT_EQ(a.parts.size(), 1u);
  EXPECT_EQ(a.parts[0].second, Ly);

  auto Lx = op(r, 1, "1 ; (1,0) ; 1");
  auto b = eliminate_x_derivatives(Lx, f);
  for (const auto& [alpha, La] : b.parts) EXPECT_TRUE(La.differentiates_only({1}));
  for (const char* s : {"1", "x", "y", "x*y", "y^2"}) {
    PolyVec v({P(r, s)});
    EXPECT_EQ(apply_rewrite(b, f, v), apply(Lx, v) * f.delta.pow(b.D)) << s;
  }

  auto r1 = Ring::make({"x"});
  auto f1 = build_tangent_frame(r1, 1, {}, {}, ideal_of(r1, {}));
  auto c = eliminate_x_derivatives(op(r1, 1, "1 ; (1) ; 1"), f1);
  EXPECT_EQ(c.D, 0u);
  ASSERT_EQ(c.parts.size(), 1u);
  EXPECT_EQ(c.parts[0].first, mono({1}));
  EXPECT_EQ(c.parts[0].second, op(r1, 1, "1 ; (0) ; 1"));
}

TEST(DiffOp, RandomFramesAndRewrites) {
  std::mt19937_64 rng(44);
  for (int k = 0; k < 10; ++k) {
    std::size_t n = 1 + k % 2, m = 1 + (k / 2) % 2;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    for (std::size_t i = 0; i < m; ++i) names.push_back("y" + std::to_string(i + 1));
    auto r = Ring::make(names);
    std::vector<std::size_t> gv, all;
    std::vector<Polynomial> anns;
    for (std::size_t v = 0; v < n + m; ++v) all.push_back(v);
    for (std::size_t mu = 0; mu < m; ++mu) {
      std::size_t v = n + mu;
      gv.push_back(v);
      unsigned D = 1 + static_cast<unsigned>((k + mu) % 2);
      Polynomial p = Polynomial::monomial(r, Monomial::variable(n + m, v, D));
      for (unsigned e = 0; e < D; ++e) {
        Polynomial c = random_polynomial(rng, r, 2, 2, 3, false);
        for (std::size_t w = n; w < n + m; ++w) c = c.partial_eval({w}, {Rational(0)});
        p += c * Polynomial::monomial(r, Monomial::variable(n + m, v, e));
      }
      anns.push_back(p);
    }
    auto f = build_tangent_frame(r, n, gv, anns, ideal_of(r, anns));
    for (const auto& X : f.X) {
      for (const auto& a : f.annihilators) EXPECT_TRUE(apply(X, PolyVec({a})).is_zero());
    }
    auto L = random_operator(rng, r, 2, 2, all, 1);
    auto rw = eliminate_x_derivatives(L, f);
    for (const auto& [alpha, La] : rw.parts) EXPECT_TRUE(La.differentiates_only(gv));
    for (int t = 0; t < 50; ++t) {
      auto v = random_vec(rng, r, 2, 3);
      EXPECT_EQ(apply_rewrite(rw, f, v), apply(L, v) * f.delta.pow(rw.D));
    }
  }
}

TEST(DiffOp, LiftExamples) {
  auto r = Ring::make({"x", "z1", "z2"});
  std::vector<OmegaEntry> one{{0, mono({1}), 0, Rational(1)}};
  EXPECT_EQ(lift_operator(r, 1, one, 2, 1), op(r, 1, "z1 ; (1,0,0) ; 1"));
  std::vector<OmegaEntry> two{{0, mono({1}), 0, Rational(1)}, {1, mono({0}), 0, Rational(1)}};
  auto L = lift_operator(r, 1, two, 2, 1);
  EXPECT_EQ(L, op(r, 1, "z1 ; (1,0,0) ; 1\nz2 ; (0,0,0) ; 1"));
  EXPECT_TRUE(L.differentiates_only({0}));
  // Substituting z := H recovers the unlifted operator on z-free inputs.
  std::vector<Polynomial> subst{P(r, "x"), P(r, "x^2 + 1"), P(r, "3*x")};
  auto Ls = L.map_coefficients(subst, r);
  for (const char* s : {"x^3", "x + 2", "1"}) {
    Polynomial u = P(r, s);
    EXPECT_EQ(apply(Ls, PolyVec({u})), P(r, "x^2 + 1") * u.diff(0) + P(r, "3*x") * u);
  }
  EXPECT_THROW(lift_operator(r, 1, {{2, mono({0}), 0, Rational(1)}}, 2, 1), StructuralError);
}
