#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "mclosure/error.hpp"
#include "mclosure/groebner.hpp"
#include "mclosure/manifest.hpp"
#include "mclosure/parse.hpp"
#include "mclosure/pipeline.hpp"
#include "mclosure/quasimonic.hpp"
#include "mclosure/roots.hpp"
#include "mclosure/vanishing.hpp"

namespace mclosure {

namespace {

struct Options {
  std::string input = "-";
  std::string order;
  std::uint64_t seed = 1;
  std::uint64_t budget = WitnessOptions{}.budget;
  bool log = false;
  bool check = false;
  unsigned l = 0;
  std::size_t drop = 0;
  std::string vars;
  unsigned power = 1;
  std::string width;
};

class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Manifest read_manifest(const Options& o, std::istream& in, const std::string& kind) {
  std::string text;
  if (o.input == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(o.input);
    if (!f) throw ParseError("cannot read '" + o.input + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  Manifest m = parse_manifest(text);
  if (m.kind != kind) throw ParseError("expected a '" + kind + "' document, got '" + m.kind + "'");
  if (!o.order.empty()) {
    MonomialOrder::parse(o.order);
    m.order = o.order;
  }
  return m;
}

WitnessOptions witness_options(const Options& o) {
  WitnessOptions w;
  w.budget = o.budget;
  return w;
}

void emit(std::ostream& out, Manifest m, const ProvenanceLog& log, bool with_log) {
  if (with_log && !log.entries.empty()) append_log(m, log);
  out << print_manifest(m);
}

SubmoduleBasis generators(const Manifest& m, const RingPtr& r) { return decode_module(r, m.rank, m.only("generators")); }

int cmd_gb(const Options& o, std::istream& in, std::ostream& out) {
  Manifest m = read_manifest(o, in, "polynomials");
  RingPtr r = manifest_ring(m);
  emit(out, module_manifest(groebner_basis(generators(m, r))), {}, false);
  return 0;
}

int cmd_nf(const Options& o, std::istream& in, std::ostream& out) {
  Manifest m = read_manifest(o, in, "polynomials");
  RingPtr r = manifest_ring(m);
  SubmoduleBasis G = groebner_basis(generators(m, r));
  Manifest res = module_manifest(G, "generators");
  std::vector<PolyVec> nfs;
  for (const auto& q : decode_vectors(r, m.rank, m.only("query"))) nfs.push_back(normal_form(q, G));
  encode_vectors(res.add_section("remainder"), nfs);
  emit(out, res, {}, false);
  return 0;
}

int cmd_syz(const Options& o, std::istream& in, std::ostream& out) {
  Manifest m = read_manifest(o, in, "polynomials");
  RingPtr r = manifest_ring(m);
  SubmoduleBasis M = generators(m, r);
  emit(out, module_manifest(syzygy_module(r, m.rank, M.gens)), {}, false);
  return 0;
}

int cmd_intersect(const Options& o, std::istream& in, std::ostream& out) {
  Manifest m = read_manifest(o, in, "polynomials");
  RingPtr r = manifest_ring(m);
  auto secs = m.named("generators");
  if (secs.size() < 2) throw ParseError("intersect needs at least two [generators] sections");
  SubmoduleBasis acc = decode_module(r, m.rank, *secs[0]);
  for (std::size_t k = 1; k < secs.size(); ++k) acc = intersect(acc, decode_module(r, m.rank, *secs[k]));
  emit(out, module_manifest(groebner_basis(acc)), {}, false);
  return 0;
}

int cmd_saturate(const Options& o, std::istream& in, std::ostream& out) {
  Manifest m = read_manifest(o, in, "polynomials");
  RingPtr r = manifest_ring(m);
  const ManifestSection& q = m.only("query");
  if (q.lines.size() != 1) throw ParseError("saturate needs one polynomial in [query]");
  Polynomial f = parse_polynomial(r, q.lines[0].text);
  std::size_t rounds = 0;
  SubmoduleBasis S = saturate(generators(m, r), f, &rounds);
  ProvenanceLog log;
  log.add("rounds", static_cast<long>(rounds));
  emit(out, module_manifest(S), log, o.log);
  return 0;
}

int cmd_eliminate(const Options& o, std::istream& in, std::ostream& out) {
  Options oo = o;
  if (oo.order.empty()) oo.order = "block:" + std::to_string(o.drop);
  Manifest m = read_manifest(oo, in, "polynomials");
  RingPtr r = manifest_ring(m);
  std::vector<std::size_t> drop;
  for (std::size_t k = 0; k < o.drop; ++k) drop.push_back(k);
  emit(out, module_manifest(eliminate(groebner_basis(generators(m, r)), drop)), {}, false);
  return 0;
}

struct System {
  PolyMatrix A, B;
  Polynomial delta;
};

System read_system(const Manifest& m) {
  RingPtr r = manifest_ring(m);
  System s{decode_matrix(r, m.only("A")), decode_matrix(r, m.only("B")), Polynomial(r)};
  const ManifestSection& d = m.only("delta");
  if (d.lines.size() != 1) throw ParseError("[delta] holds one polynomial");
  s.delta = parse_polynomial(r, d.lines[0].text);
  if (s.A.rows != s.B.rows) throw StructuralError("A and B need the same number of rows");
  return s;
}

int cmd_solve(const Options& o, std::istream& in, std::ostream& out) {
  System s = read_system(read_manifest(o, in, "system"));
  ProvenanceLog log;
  log.add("l", static_cast<long>(o.l));
  emit(out, module_manifest(solution_module(s.A, s.B, s.delta, o.l)), log, o.log);
  return 0;
}

int cmd_critical_l(const Options& o, std::istream& in, std::ostream& out) {
  System s = read_system(read_manifest(o, in, "system"));
  CriticalL c = critical_l(s.A, s.B, s.delta);
  ProvenanceLog log;
  log.add("l0", static_cast<long>(c.l0));
  emit(out, module_manifest(c.module), log, true);
  return 0;
}

int cmd_roots(const Options& o, std::istream& in, std::ostream& out) {
  Manifest m = read_manifest(o, in, "polynomials");
  RingPtr r = manifest_ring(m);
  if (r->nvars() != 1) throw StructuralError("roots needs a univariate ring");
  std::optional<Rational> width;
  if (!o.width.empty()) {
    width = parse_rational(o.width);
    if (*width <= 0) throw DomainError("--width must be positive");
  }
  SubmoduleBasis M = generators(m, r);
  Manifest res = module_manifest(M);
  ProvenanceLog log;
  for (std::size_t k = 0; k < M.gens.size(); ++k) {
    UPoly u = UPoly::from_polynomial(M.gens[k][0], 0);
    auto roots = isolate_real_roots(u);
    std::string p = "poly[" + std::to_string(k + 1) + "].";
    log.add(p + "count", static_cast<long>(roots.size()));
    for (std::size_t i = 0; i < roots.size(); ++i) {
      IsolatingInterval iv = roots[i];
      if (width && !iv.exact) iv = refine(u, iv, *width);
      log.add(p + "root[" + std::to_string(i + 1) + "]",
              iv.exact ? iv.lo.get_str() : "(" + iv.lo.get_str() + ", " + iv.hi.get_str() + ")");
    }
  }
  emit(out, res, log, true);
  return 0;
}

int cmd_witness(const Options& o, std::istream& in, std::ostream& out) {
  Manifest m = read_manifest(o, in, "strata");
  Manifest res = m;
  res.sections.clear();
  for (const auto* sec : m.named("stratum")) {
    Stratum s = decode_stratum(*sec);
    ComplexifyResult c = complexify(s, s.p > 0, witness_options(o));
    s.witness = c.witness;
    res.sections.push_back(encode_stratum(s));
  }
  out << print_manifest(res);
  return 0;
}

int cmd_vanish(const Options& o, std::istream& in, std::ostream& out) {
  Manifest m = read_manifest(o, in, "strata");
  RingPtr g = manifest_ring(m);
  emit(out, module_manifest(vanishing_ideal(decode_strata(m), g, witness_options(o))), {}, false);
  return 0;
}

int cmd_qdiv(const Options& o, std::istream& in, std::ostream& out) {
  Manifest m = read_manifest(o, in, "polynomials");
  RingPtr r = manifest_ring(m);
  std::vector<std::string> names;
  {
    std::stringstream ss(o.vars);
    std::string t;
    while (std::getline(ss, t, ',')) {
      t.erase(0, t.find_first_not_of(' '));
      t.erase(t.find_last_not_of(' ') + 1);
      if (!t.empty()) names.push_back(t);
    }
  }
  auto ps = decode_vectors(r, 1, m.only("generators"));
  if (names.size() != ps.size()) throw StructuralError("--vars needs one variable per generator");
  std::vector<QuasiMonic> qms;
  for (std::size_t k = 0; k < ps.size(); ++k) qms.emplace_back(ps[k][0], r->require_index(names[k]));
  Manifest res;
  res.kind = "polynomials";
  res.ring = m.ring;
  res.order = m.order;
  encode_vectors(res.add_section("generators"), ps);
  ProvenanceLog log;
  std::size_t k = 0;
  for (const auto& q : decode_vectors(r, 1, m.only("query"))) {
    DivisionCertificate c = reduce_mod_powers(q[0], qms, o.power);
    std::vector<PolyVec> hs;
    for (const auto& h : c.H) hs.push_back(PolyVec({h}));
    encode_vectors(res.add_section("cofactors"), hs);
    encode_vectors(res.add_section("remainder"), {PolyVec({c.remainder})});
    std::string p = "query[" + std::to_string(++k) + "].";
    log.add(p + "l", static_cast<long>(c.l));
    std::string b;
    for (std::size_t i = 0; i < c.bounds.size(); ++i) b += (i ? "," : "") + std::to_string(c.bounds[i]);
    log.add(p + "bounds", b);
  }
  emit(out, res, log, true);
  return 0;
}

int cmd_apply(const Options& o, std::istream& in, std::ostream& out) {
  Manifest m = read_manifest(o, in, "operator");
  RingPtr r = manifest_ring(m);
  LinearDiffOp L = decode_operator(m);
  Manifest res;
  res.kind = "polynomials";
  res.ring = m.ring;
  res.order = m.order;
  std::vector<PolyVec> vals;
  for (const auto& v : decode_vectors(r, m.rank, m.only("generators"))) vals.push_back(PolyVec({apply(L, v)}));
  encode_vectors(res.add_section("generators"), vals);
  out << print_manifest(res);
  return 0;
}

int cmd_mclosure(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Manifest m = read_manifest(o, in, "operator");
  StratifiedOperator op = decode_stratified_operator(m);
  ModuleResult r = main_mclosure(op, witness_options(o));
  ProvenanceLog log = r.log;
  std::size_t failures = 0;
  if (o.check) {
    std::mt19937_64 rng(o.seed);
    for (std::size_t k = 0; k < op.strata.size(); ++k) {
      const Stratum& s = op.strata[k];
      ComplexifyResult c = complexify(s, true, witness_options(o));
      LinearDiffOp L = lifted_operator(s, op.arity);
      SubmoduleBasis local(s.ring, op.arity);
      for (const auto& g : r.module.gens) local.add(s.push_forward(g));
      std::size_t f = soundness_failures(L, c.ideal, local, rng, 20, L.order() + 2);
      log.add("check.stratum[" + std::to_string(k) + "].failures", static_cast<long>(f));
      failures += f;
    }
  }
  emit(out, module_manifest(r.module), log, o.log || o.check);
  if (failures) {
    err << "check failed: " << failures << " soundness sample(s) did not vanish\n";
    return 5;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modules of polynomial vectors, vanishing ideals and operator closures"};
  app.require_subcommand(1);
  Options o;
  struct Cmd {
    const char* name;
    const char* help;
  };
  const Cmd cmds[] = {
      {"gb", "Groebner basis of [generators]"},
      {"nf", "normal forms of [query] modulo [generators]"},
      {"syz", "syzygies of [generators]"},
      {"intersect", "intersection of the [generators] sections"},
      {"saturate", "[generators] saturated by the [query] polynomial"},
      {"eliminate", "drop the first --drop variables"},
      {"solve", "{P : delta^l B P in image A}"},
      {"critical-l", "stabilisation exponent of the solution modules"},
      {"roots", "real roots of univariate [generators]"},
      {"witness", "fill in witness points of the strata"},
      {"vanish", "vanishing ideal of the strata"},
      {"qdiv", "division by powers of quasi-monic [generators]"},
      {"apply", "apply [operator] to [generators]"},
      {"mclosure", "module of the stratified operator"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& c : cmds) {
    CLI::App* s = app.add_subcommand(c.name, c.help);
    s->add_option("input", o.input, "manifest file, - for stdin");
    s->add_option("--order", o.order, "monomial order override (lex, grevlex, block:k)");
    s->add_option("--seed", o.seed, "seed for sampling checks");
    s->add_option("--budget", o.budget, "witness search budget (evaluations)");
    s->add_flag("--log", o.log, "append the provenance log as a [log] section");
    subs[c.name] = s;
  }
  subs["solve"]->add_option("--l", o.l, "exponent of delta");
  subs["eliminate"]->add_option("--drop", o.drop, "number of leading variables to eliminate")->required();
  subs["qdiv"]->add_option("--vars", o.vars, "distinguished variable of each generator")->required();
  subs["qdiv"]->add_option("--power", o.power, "power K of the divisors");
  subs["roots"]->add_option("--width", o.width, "refine isolating intervals below this width");
  subs["mclosure"]->add_flag("--check", o.check, "re-run soundness sampling on every stratum");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << '\n';
    return 1;
  }
  std::string name = app.get_subcommands()[0]->get_name();
  try {
    if (name == "gb") return cmd_gb(o, in, out);
    if (name == "nf") return cmd_nf(o, in, out);
    if (name == "syz") return cmd_syz(o, in, out);
    if (name == "intersect") return cmd_intersect(o, in, out);
    if (name == "saturate") return cmd_saturate(o, in, out);
    if (name == "eliminate") return cmd_eliminate(o, in, out);
    if (name == "solve") return cmd_solve(o, in, out);
    if (name == "critical-l") return cmd_critical_l(o, in, out);
    if (name == "roots") return cmd_roots(o, in, out);
    if (name == "witness") return cmd_witness(o, in, out);
    if (name == "vanish") return cmd_vanish(o, in, out);
    if (name == "qdiv") return cmd_qdiv(o, in, out);
    if (name == "apply") return cmd_apply(o, in, out);
    if (name == "mclosure") return cmd_mclosure(o, in, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const StructuralError& e) {
    err << "structural error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const UnsupportedInput& e) {
    err << "unsupported input: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace mclosure
