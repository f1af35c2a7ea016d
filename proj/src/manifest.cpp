#include "mclosure/manifest.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mclosure/error.hpp"
#include "mclosure/groebner.hpp"
#include "mclosure/parse.hpp"

namespace mclosure {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Splits on sep outside parentheses.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<std::string> name_list(const std::string& s) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  for (auto& n : split_top(s, ',')) {
    if (n.empty()) throw ParseError("empty variable name in '" + s + "'");
    out.push_back(n);
  }
  return out;
}

std::string join_names(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s;
}

std::string at_line(std::size_t line) { return line ? "line " + std::to_string(line) + ": " : ""; }

const std::set<std::string>& allowed_sections(const std::string& kind) {
  static const std::set<std::string> poly{"generators", "query", "cofactors", "remainder", "log"};
  static const std::set<std::string> sys{"A", "B", "delta", "log"};
  static const std::set<std::string> strata{"stratum", "log"};
  static const std::set<std::string> op{"stratum", "operator", "generators", "log"};
  if (kind == "polynomials") return poly;
  if (kind == "system") return sys;
  if (kind == "strata") return strata;
  if (kind == "operator") return op;
  throw ParseError("unknown document kind '" + kind + "'");
}

// "key rest" split at the first blank.
std::pair<std::string, std::string> key_value(const std::string& text) {
  std::size_t sp = text.find_first_of(" \t");
  if (sp == std::string::npos) return {text, ""};
  return {text.substr(0, sp), trim(text.substr(sp + 1))};
}

std::string rational_list(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s;
}

}  // namespace

bool Manifest::operator==(const Manifest& o) const {
  if (kind != o.kind || ring != o.ring || order != o.order || rank != o.rank) return false;
  if (sections.size() != o.sections.size()) return false;
  for (std::size_t k = 0; k < sections.size(); ++k) {
    const auto &a = sections[k], &b = o.sections[k];
    if (a.name != b.name || a.lines.size() != b.lines.size()) return false;
    for (std::size_t i = 0; i < a.lines.size(); ++i) {
      if (a.lines[i].text != b.lines[i].text) return false;
    }
  }
  return true;
}

std::vector<const ManifestSection*> Manifest::named(const std::string& name) const {
  std::vector<const ManifestSection*> out;
  for (const auto& s : sections) {
    if (s.name == name) out.push_back(&s);
  }
  return out;
}

const ManifestSection& Manifest::only(const std::string& name) const {
  auto v = named(name);
  if (v.size() != 1) {
    throw ParseError("expected exactly one [" + name + "] section, found " + std::to_string(v.size()));
  }
  return *v[0];
}

ManifestSection& Manifest::add_section(const std::string& name) {
  sections.push_back({name, 0, {}});
  return sections.back();
}

Manifest parse_manifest(const std::string& text) {
  Manifest m;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool have_ring = false;
  std::set<std::string> seen;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string t = trim(raw);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw ParseError(at_line(lineno) + "unterminated section header");
      if (m.kind.empty()) throw ParseError(at_line(lineno) + "section before 'kind'");
      std::string name = trim(t.substr(1, t.size() - 2));
      if (!allowed_sections(m.kind).count(name)) {
        throw ParseError(at_line(lineno) + "unknown section [" + name + "] for kind " + m.kind);
      }
      m.sections.push_back({name, lineno, {}});
      continue;
    }
    if (!m.sections.empty()) {
      m.sections.back().lines.push_back({lineno, t});
      continue;
    }
    auto [key, value] = key_value(t);
    if (!seen.insert(key).second) throw ParseError(at_line(lineno) + "repeated header key '" + key + "'");
    if (key == "kind") {
      try {
        allowed_sections(value);
      } catch (const ParseError& e) {
        throw ParseError(at_line(lineno) + e.what());
      }
      m.kind = value;
    } else if (m.kind.empty()) {
      throw ParseError(at_line(lineno) + "the first header line must be 'kind'");
    } else if (key == "ring") {
      m.ring = name_list(value);
      have_ring = true;
    } else if (key == "order") {
      try {
        MonomialOrder::parse(value);
      } catch (const std::exception& e) {
        throw ParseError(at_line(lineno) + e.what());
      }
      m.order = value;
    } else if (key == "rank") {
      try {
        std::size_t pos = 0;
        long r = std::stol(value, &pos);
        if (pos != value.size() || r < 1) throw ParseError("");
        m.rank = static_cast<std::size_t>(r);
      } catch (const std::exception&) {
        throw ParseError(at_line(lineno) + "rank must be a positive integer");
      }
    } else {
      throw ParseError(at_line(lineno) + "unknown header key '" + key + "'");
    }
  }
  if (m.kind.empty()) throw ParseError("missing 'kind'");
  if (!have_ring) throw ParseError("missing 'ring'");
  return m;
}

std::string print_manifest(const Manifest& m) {
  std::ostringstream os;
  os << "kind " << m.kind << '\n';
  os << "ring " << join_names(m.ring) << '\n';
  if (m.order != "grevlex") os << "order " << m.order << '\n';
  if (m.rank != 1) os << "rank " << m.rank << '\n';
  for (const auto& s : m.sections) {
    os << '[' << s.name << "]\n";
    for (const auto& l : s.lines) os << l.text << '\n';
  }
  return os.str();
}

RingPtr manifest_ring(const Manifest& m) {
  std::set<std::string> uniq(m.ring.begin(), m.ring.end());
  if (uniq.size() != m.ring.size()) throw ParseError("ring: repeated variable name");
  return Ring::make(m.ring, MonomialOrder::parse(m.order));
}

std::vector<PolyVec> decode_vectors(const RingPtr& ring, std::size_t rank, const ManifestSection& s) {
  std::vector<PolyVec> out;
  for (const auto& l : s.lines) {
    try {
      out.push_back(parse_polyvec(ring, l.text, rank));
    } catch (const ParseError& e) {
      throw ParseError(at_line(l.line) + e.what());
    }
  }
  return out;
}

SubmoduleBasis decode_module(const RingPtr& ring, std::size_t rank, const ManifestSection& s) {
  return SubmoduleBasis(ring, rank, decode_vectors(ring, rank, s));
}

void encode_vectors(ManifestSection& s, const std::vector<PolyVec>& v) {
  for (const auto& g : v) s.lines.push_back({0, g.rank() == 1 ? to_string(g[0]) : to_string(g)});
}

Manifest module_manifest(const SubmoduleBasis& M, const std::string& section) {
  Manifest m;
  m.kind = "polynomials";
  m.ring = M.ring->names();
  m.order = M.ring->order().to_string();
  m.rank = M.rank;
  encode_vectors(m.add_section(section), M.gens);
  return m;
}

PolyMatrix decode_matrix(const RingPtr& ring, const ManifestSection& s) {
  std::vector<std::vector<Polynomial>> rows;
  for (const auto& l : s.lines) {
    std::vector<Polynomial> row;
    try {
      for (const auto& e : split_top(l.text, ',')) row.push_back(parse_polynomial(ring, e));
    } catch (const ParseError& e) {
      throw ParseError(at_line(l.line) + e.what());
    }
    if (!rows.empty() && row.size() != rows[0].size()) throw ParseError(at_line(l.line) + "ragged matrix row");
    rows.push_back(std::move(row));
  }
  PolyMatrix A(ring, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) A.at(i, j) = rows[i][j];
  }
  return A;
}

Stratum decode_stratum(const ManifestSection& sec) {
  std::vector<std::string> base, graph, coef;
  std::string U = "true";
  std::vector<ManifestLine> anns, coefs, omegas;
  std::optional<ManifestLine> witness, T;
  std::set<std::string> once;
  for (const auto& l : sec.lines) {
    auto [key, value] = key_value(l.text);
    bool single = key == "base" || key == "graph" || key == "coefficients" || key == "U" || key == "witness" || key == "T";
    if (single && !once.insert(key).second) throw ParseError(at_line(l.line) + "repeated key '" + key + "'");
    try {
      if (key == "base") base = name_list(value);
      else if (key == "graph") graph = name_list(value);
      else if (key == "coefficients") coef = name_list(value);
      else if (key == "U") U = value;
      else if (key == "annihilator") anns.push_back({l.line, value});
      else if (key == "coefficient") coefs.push_back({l.line, value});
      else if (key == "omega") omegas.push_back({l.line, value});
      else if (key == "witness") witness = ManifestLine{l.line, value};
      else if (key == "T") T = ManifestLine{l.line, value};
      else throw ParseError("unknown stratum key '" + key + "'");
    } catch (const ParseError& e) {
      throw ParseError(at_line(l.line) + e.what());
    }
  }
  Stratum s;
  std::vector<std::string> names = base;
  names.insert(names.end(), graph.begin(), graph.end());
  names.insert(names.end(), coef.begin(), coef.end());
  std::set<std::string> uniq(names.begin(), names.end());
  if (uniq.size() != names.size()) throw ParseError(at_line(sec.line) + "stratum: repeated variable name");
  s.ring = Ring::make(names);
  s.base_ring = Ring::make(base);
  s.n = base.size();
  s.m = graph.size();
  s.p = coef.size();
  auto wrap = [](const ManifestLine& l, auto&& f) {
    try {
      return f();
    } catch (const ParseError& e) {
      throw ParseError(at_line(l.line) + e.what());
    }
  };
  s.U = wrap(ManifestLine{sec.line, U}, [&] { return SemialgebraicDescription::parse(s.base_ring, U); });
  for (const auto& l : anns) s.annihilators.push_back(wrap(l, [&] { return parse_polynomial(s.ring, l.text); }));
  for (const auto& l : coefs) s.coefficients.push_back(wrap(l, [&] { return parse_polynomial(s.ring, l.text); }));
  if (witness) s.witness = wrap(*witness, [&] { return parse_rational_list(witness->text); });
  if (T) {
    auto rows = split_top(T->text, ';');
    QMatrix t(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto r = wrap(*T, [&] { return parse_rational_list(rows[i]); });
      if (r.size() != rows.size()) throw ParseError(at_line(T->line) + "T must be square");
      for (std::size_t j = 0; j < r.size(); ++j) t.at(i, j) = r[j];
    }
    s.T = t;
  }
  for (const auto& l : omegas) {
    auto parts = split_top(l.text, ';');
    if (parts.size() != 4) throw ParseError(at_line(l.line) + "omega needs 'lambda ; (alpha) ; component ; value'");
    OmegaEntry e;
    wrap(l, [&] {
      auto lam = parse_index_list("(" + parts[0] + ")");
      auto comp = parse_index_list("(" + parts[2] + ")");
      if (lam.size() != 1 || comp.size() != 1 || lam[0] == 0 || comp[0] == 0) {
        throw ParseError("omega indices are 1-based integers");
      }
      e.lambda = lam[0] - 1;
      e.component = comp[0] - 1;
      auto a = parse_index_list(parts[1]);
      e.alpha = Monomial(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) e.alpha[i] = a[i];
      e.value = parse_rational(parts[3]);
      return 0;
    });
    s.omega.push_back(e);
  }
  s.validate();
  return s;
}

ManifestSection encode_stratum(const Stratum& s) {
  ManifestSection sec{"stratum", 0, {}};
  const auto& names = s.ring->names();
  auto slice = [&](std::size_t a, std::size_t b) {
    return join_names(std::vector<std::string>(names.begin() + a, names.begin() + b));
  };
  auto add = [&](const std::string& k, const std::string& v) { sec.lines.push_back({0, v.empty() ? k : k + " " + v}); };
  add("base", slice(0, s.n));
  add("graph", slice(s.n, s.n + s.m));
  if (s.p) add("coefficients", slice(s.n + s.m, s.n + s.m + s.p));
  add("U", s.U.to_string());
  for (const auto& a : s.annihilators) add("annihilator", to_string(a));
  for (const auto& c : s.coefficients) add("coefficient", to_string(c));
  if (s.witness) add("witness", rational_list(*s.witness));
  if (s.T) {
    std::string t;
    for (std::size_t i = 0; i < s.T->rows; ++i) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < s.T->cols; ++j) row.push_back(s.T->at(i, j));
      t += (i ? " ; " : "") + rational_list(row);
    }
    add("T", t);
  }
  for (const auto& e : s.omega) {
    std::string a;
    for (std::size_t i = 0; i < e.alpha.size(); ++i) a += (i ? "," : "") + std::to_string(e.alpha[i]);
    add("omega", std::to_string(e.lambda + 1) + " ; (" + a + ") ; " + std::to_string(e.component + 1) + " ; " +
                     e.value.get_str());
  }
  return sec;
}

std::vector<Stratum> decode_strata(const Manifest& m) {
  std::vector<Stratum> out;
  for (const auto* s : m.named("stratum")) out.push_back(decode_stratum(*s));
  return out;
}

StratifiedOperator decode_stratified_operator(const Manifest& m) {
  StratifiedOperator op;
  op.ring = manifest_ring(m);
  op.arity = m.rank;
  op.strata = decode_strata(m);
  op.validate();
  return op;
}

LinearDiffOp decode_operator(const Manifest& m) {
  const ManifestSection& s = m.only("operator");
  std::string text;
  for (const auto& l : s.lines) text += l.text + "\n";
  try {
    return parse_operator(manifest_ring(m), m.rank, text);
  } catch (const ParseError& e) {
    throw ParseError(at_line(s.line) + "[operator] " + e.what());
  }
}

void append_log(Manifest& m, const ProvenanceLog& log) {
  ManifestSection& s = m.add_section("log");
  for (const auto& [k, v] : log.entries) s.lines.push_back({0, k + "=" + v});
}

}  // namespace mclosure
