#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "mclosure/manifest.hpp"

using namespace mclosure;
using namespace mclosure::fixtures;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MCLOSURE_TEST_DATA) + "/" + name; }

SubmoduleBasis result_module(const CliRun& r) {
  Manifest m = parse_manifest(r.out);
  return decode_module(manifest_ring(m), m.rank, m.only("generators"));
}

std::optional<std::string> log_value(const CliRun& r, const std::string& key) {
  Manifest m = parse_manifest(r.out);
  for (const auto* s : m.named("log")) {
    for (const auto& l : s->lines) {
      auto eq = l.text.find('=');
      if (l.text.substr(0, eq) == key) return l.text.substr(eq + 1);
    }
  }
  return std::nullopt;
}

}  // namespace

TEST(Cli, GroebnerExample) {
  CliRun r = run({"gb", data("gb_basic.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto ring = Ring::make({"x", "y"}, MonomialOrder::parse("lex"));
  EXPECT_TRUE(module_equal(result_module(r), ideal(ring, {"x - 1", "y - 1"})));
  EXPECT_EQ(run({"gb", data("gb_basic.txt")}).out, r.out);
}

TEST(Cli, StdinAndOrderOverride) {
  std::string text = "kind polynomials\nring x, y\n[generators]\nx^2 - y\nx*y - 1\n";
  CliRun a = run({"gb", "-"}, text);
  CliRun b = run({"gb", "--order", "lex", "-"}, text);
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_NE(a.out.find("kind polynomials"), std::string::npos);
  EXPECT_NE(b.out.find("order lex"), std::string::npos);
  EXPECT_EQ(run({"gb", "--order", "sideways", "-"}, text).code, 2);
}

TEST(Cli, VanishNegativeExample) {
  CliRun r = run({"vanish", data("vanish_negative.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(module_equal(result_module(r), ideal(Ring::make({"x", "y", "z"}), {"x", "y"})));
}

TEST(Cli, WitnessFillsEveryStratum) {
  CliRun r = run({"witness", data("vanish_negative.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const Stratum& s : decode_strata(parse_manifest(r.out))) {
    ASSERT_TRUE(s.witness.has_value());
    EXPECT_NO_THROW(s.validate());
  }
}

TEST(Cli, RootsWithoutRealRoots) {
  CliRun r = run({"roots", data("roots_none.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(log_value(r, "poly[1].count"), "0");
  EXPECT_FALSE(log_value(r, "poly[1].root[1]"));
}

TEST(Cli, RootsRefined) {
  CliRun r = run({"roots", "--width", "1/1000000", data("roots_sqrt2.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(log_value(r, "poly[1].count"), "2");
  std::string iv = *log_value(r, "poly[1].root[2]");
  auto comma = iv.find(',');
  Rational lo = parse_rational(iv.substr(1, comma - 1));
  Rational hi = parse_rational(iv.substr(comma + 2, iv.size() - comma - 3));
  EXPECT_LT(lo * lo, 2);
  EXPECT_GT(hi * hi, 2);
  EXPECT_LT(hi - lo, Rational(1, 1000000));
  EXPECT_EQ(log_value(r, "poly[2].root[2]"), "0");
  EXPECT_EQ(run({"roots", "--width", "0", data("roots_sqrt2.txt")}).code, 3);
  EXPECT_EQ(run({"roots", "-"}, "kind polynomials\nring x, y\n[generators]\nx\n").code, 2);
}

TEST(Cli, CriticalExponent) {
  CliRun r = run({"critical-l", data("critical.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(log_value(r, "l0"), "1");
  EXPECT_TRUE(module_equal(result_module(r), SubmoduleBasis::full(Ring::make({"x", "y"}), 1)));
  CliRun s0 = run({"solve", "--l", "0", "--log", data("critical.txt")});
  ASSERT_EQ(s0.code, 0) << s0.err;
  EXPECT_TRUE(module_equal(result_module(s0), ideal(Ring::make({"x", "y"}), {"x"})));
  EXPECT_EQ(log_value(s0, "l"), "0");
}

TEST(Cli, ModuleOperations) {
  std::string two = "kind polynomials\nring x, y\n[generators]\nx\n[generators]\ny\n";
  CliRun i = run({"intersect", "-"}, two);
  ASSERT_EQ(i.code, 0) << i.err;
  EXPECT_TRUE(module_equal(result_module(i), ideal(Ring::make({"x", "y"}), {"x*y"})));
  EXPECT_EQ(run({"intersect", "-"}, "kind polynomials\nring x\n[generators]\nx\n").code, 2);

  CliRun s = run({"syz", "-"}, "kind polynomials\nring x, y\n[generators]\nx\ny\n");
  ASSERT_EQ(s.code, 0) << s.err;
  Manifest sm = parse_manifest(s.out);
  EXPECT_EQ(sm.rank, 2u);
  RingPtr r2 = manifest_ring(sm);
  EXPECT_TRUE(module_equal(result_module(s), SubmoduleBasis(r2, 2, {parse_polyvec(r2, "(y, -x)", 2)})));

  CliRun sat = run({"saturate", "--log", "-"}, "kind polynomials\nring x, y\n[generators]\nx^2*y\n[query]\nx\n");
  ASSERT_EQ(sat.code, 0) << sat.err;
  EXPECT_TRUE(module_equal(result_module(sat), ideal(Ring::make({"x", "y"}), {"y"})));
  EXPECT_TRUE(log_value(sat, "rounds"));

  CliRun e = run({"eliminate", "--drop", "1", "-"}, "kind polynomials\nring t, x, y\n[generators]\nx - t^2\ny - t^3\n");
  ASSERT_EQ(e.code, 0) << e.err;
  Manifest em = parse_manifest(e.out);
  RingPtr xy = Ring::make({"x", "y"});
  SubmoduleBasis E = decode_module(xy, 1, em.only("generators"));
  EXPECT_TRUE(module_equal(E, ideal(xy, {"x^3 - y^2"})));

  CliRun nf = run({"nf", "-"}, "kind polynomials\nring x, y\n[generators]\nx - y\n[query]\nx^2 + 1\n");
  ASSERT_EQ(nf.code, 0) << nf.err;
  EXPECT_EQ(parse_manifest(nf.out).only("remainder").lines.at(0).text, "y^2 + 1");
}

TEST(Cli, QuasiMonicDivision) {
  CliRun r = run({"qdiv", "--vars", "x", "--power", "2", "-"},
              "kind polynomials\nring x, y\n[generators]\nx^3 + y\n[query]\nx^7*y + 1\n");
  ASSERT_EQ(r.code, 0) << r.err;
  Manifest m = parse_manifest(r.out);
  auto ring = Ring::make({"x", "y"});
  Polynomial H = parse_polynomial(ring, m.only("cofactors").lines.at(0).text);
  Polynomial R = parse_polynomial(ring, m.only("remainder").lines.at(0).text);
  Polynomial p = parse_polynomial(ring, "x^3 + y");
  EXPECT_EQ(H * p * p + R, parse_polynomial(ring, "x^7*y + 1"));
  EXPECT_LT(R.degree_in(0), 6);
  EXPECT_EQ(run({"qdiv", "--vars", "x, y", "-"}, "kind polynomials\nring x, y\n[generators]\nx\n[query]\n1\n").code,
            2);
}

TEST(Cli, ApplyOperator) {
  CliRun r = run({"apply", "-"}, "kind operator\nring x, y\n[operator]\nx ; (1, 0) ; 1\n[generators]\nx^2*y\n");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_manifest(r.out).only("generators").lines.at(0).text, "2*x^2*y");
}

TEST(Cli, MclosureWithCheck) {
  CliRun r = run({"mclosure", "--check", data("mclosure_parabola.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(module_equal(result_module(r), ideal(Ring::make({"x", "y"}), {"(y - x^2)^2"})));
  EXPECT_EQ(log_value(r, "check.stratum[0].failures"), "0");
  EXPECT_TRUE(log_value(r, "stratum[0].IV.part[0].II.graph.l0"));
  CliRun plain = run({"mclosure", data("mclosure_parabola.txt")});
  EXPECT_FALSE(log_value(plain, "strata"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"gb", "/nonexistent/file"}).code, 2);
  EXPECT_EQ(run({"gb", "-"}, "kind polynomials\nring x\n[bogus]\nx\n").code, 2);
  EXPECT_EQ(run({"gb", "-"}, "kind strata\nring x\n").code, 2);
  EXPECT_EQ(run({"gb", "-"}, "kind polynomials\nring x\n[generators]\nx +* 1\n").code, 2);
  EXPECT_EQ(run({"eliminate", "-"}, "kind polynomials\nring x\n[generators]\nx\n").code, 1);
  // Empty U: the witness search gives up.
  EXPECT_EQ(run({"vanish", "-"}, "kind strata\nring x, y\n[stratum]\nbase x\ngraph y\nU x^2 < 0\nannihilator y\n").code, 4);
  // A supplied witness off the stratum.
  EXPECT_EQ(run({"vanish", "-"}, "kind strata\nring x, y\n[stratum]\nbase x\ngraph y\nannihilator y\nwitness 0, 1\n").code, 3);
  CliRun help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("mclosure"), std::string::npos);
}
