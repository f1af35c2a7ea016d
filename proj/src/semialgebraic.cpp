#include "mclosure/semialgebraic.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "mclosure/error.hpp"
#include "mclosure/parse.hpp"

namespace mclosure {

SignCondition::SignCondition(Polynomial poly, Relation r) : p(std::move(poly)), rel(r) {
  if (rel != Relation::Zero && p.is_zero()) throw StructuralError("strict sign condition on the zero polynomial");
}

bool SignCondition::holds(const std::vector<Rational>& point) const {
  int s = sign(p.eval(point));
  switch (rel) {
    case Relation::Positive: return s > 0;
    case Relation::Negative: return s < 0;
    case Relation::Zero: return s == 0;
  }
  return false;
}

std::string SignCondition::to_string() const {
  static const char* rels[] = {" > 0", " < 0", " = 0"};
  return p.to_string() + rels[static_cast<int>(rel)];
}

QInterval operator+(const QInterval& a, const QInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

QInterval operator*(const QInterval& a, const QInterval& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

namespace {

Rational rpow(const Rational& a, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= a;
  return r;
}

}  // namespace

QInterval pow(const QInterval& a, unsigned e) {
  if (e == 0) return QInterval::point(1);
  Rational l = rpow(a.lo, e), h = rpow(a.hi, e);
  if (e % 2 == 1) return {l, h};
  if (a.lo >= 0) return {l, h};
  if (a.hi <= 0) return {h, l};
  return {Rational(0), std::max(l, h)};
}

QInterval eval_interval(const Polynomial& p, const std::vector<QInterval>& box) {
  if (box.size() != p.ring()->nvars()) throw StructuralError("box dimension does not match the ring");
  QInterval acc = QInterval::point(0);
  for (const auto& t : p.terms()) {
    QInterval m = QInterval::point(t.coeff);
    for (std::size_t v = 0; v < box.size(); ++v) {
      if (t.mono[v] != 0) m = m * pow(box[v], t.mono[v]);
    }
    acc = acc + m;
  }
  return acc;
}

SemialgebraicDescription::SemialgebraicDescription(RingPtr ring) : ring_(std::move(ring)) {}

SemialgebraicDescription SemialgebraicDescription::constant(RingPtr ring, bool value) {
  SemialgebraicDescription d(std::move(ring));
  d.kind_ = value ? Kind::True : Kind::False;
  return d;
}

SemialgebraicDescription SemialgebraicDescription::atom(SignCondition c) {
  SemialgebraicDescription d(c.p.ring());
  d.kind_ = Kind::Atom;
  d.atom_ = std::make_shared<SignCondition>(std::move(c));
  return d;
}

namespace {

SemialgebraicDescription combine(std::vector<SemialgebraicDescription> parts, bool is_and) {
  if (parts.empty()) throw StructuralError("empty Boolean combination");
  for (const auto& p : parts) {
    if (!same_ring(p.ring(), parts[0].ring())) throw StructuralError("Boolean combination over different rings");
  }
  if (parts.size() == 1) return parts[0];
  return is_and ? SemialgebraicDescription::conj(std::move(parts)) : SemialgebraicDescription::disj(std::move(parts));
}

}  // namespace

SemialgebraicDescription SemialgebraicDescription::conj(std::vector<SemialgebraicDescription> parts) {
  if (parts.empty()) throw StructuralError("empty conjunction");
  for (const auto& p : parts) require_same_ring(p.ring(), parts[0].ring(), "conjunction");
  SemialgebraicDescription d(parts[0].ring());
  d.kind_ = Kind::And;
  d.children_ = std::move(parts);
  return d;
}

SemialgebraicDescription SemialgebraicDescription::disj(std::vector<SemialgebraicDescription> parts) {
  if (parts.empty()) throw StructuralError("empty disjunction");
  for (const auto& p : parts) require_same_ring(p.ring(), parts[0].ring(), "disjunction");
  SemialgebraicDescription d(parts[0].ring());
  d.kind_ = Kind::Or;
  d.children_ = std::move(parts);
  return d;
}

SemialgebraicDescription SemialgebraicDescription::negate(SemialgebraicDescription inner) {
  SemialgebraicDescription d(inner.ring());
  d.kind_ = Kind::Not;
  d.children_.push_back(std::move(inner));
  return d;
}

std::size_t SemialgebraicDescription::dimension() const { return ring_->nvars(); }

const SignCondition& SemialgebraicDescription::condition() const {
  if (kind_ != Kind::Atom) throw InternalError("condition() on a non-atom");
  return *atom_;
}

bool SemialgebraicDescription::eval(const std::vector<Rational>& point) const {
  switch (kind_) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Atom: return atom_->holds(point);
    case Kind::Not: return !children_[0].eval(point);
    case Kind::And:
      for (const auto& c : children_) {
        if (!c.eval(point)) return false;
      }
      return true;
    case Kind::Or:
      for (const auto& c : children_) {
        if (c.eval(point)) return true;
      }
      return false;
  }
  return false;
}

Tri SemialgebraicDescription::eval_box(const std::vector<QInterval>& box) const {
  switch (kind_) {
    case Kind::True: return Tri::True;
    case Kind::False: return Tri::False;
    case Kind::Atom: {
      QInterval v = eval_interval(atom_->p, box);
      switch (atom_->rel) {
        case Relation::Positive:
          if (v.lo > 0) return Tri::True;
          if (v.hi <= 0) return Tri::False;
          return Tri::Unknown;
        case Relation::Negative:
          if (v.hi < 0) return Tri::True;
          if (v.lo >= 0) return Tri::False;
          return Tri::Unknown;
        case Relation::Zero:
          if (v.lo == 0 && v.hi == 0) return Tri::True;
          if (!v.contains_zero()) return Tri::False;
          return Tri::Unknown;
      }
      return Tri::Unknown;
    }
    case Kind::Not: {
      Tri t = children_[0].eval_box(box);
      if (t == Tri::Unknown) return t;
      return t == Tri::True ? Tri::False : Tri::True;
    }
    case Kind::And: {
      Tri acc = Tri::True;
      for (const auto& c : children_) {
        Tri t = c.eval_box(box);
        if (t == Tri::False) return t;
        if (t == Tri::Unknown) acc = t;
      }
      return acc;
    }
    case Kind::Or: {
      Tri acc = Tri::False;
      for (const auto& c : children_) {
        Tri t = c.eval_box(box);
        if (t == Tri::True) return t;
        if (t == Tri::Unknown) acc = t;
      }
      return acc;
    }
  }
  return Tri::Unknown;
}

namespace {

using Cells = std::vector<std::vector<Literal>>;

Cells dnf(const SemialgebraicDescription& d, bool neg) {
  using K = SemialgebraicDescription::Kind;
  switch (d.kind()) {
    case K::True: return neg ? Cells{} : Cells(1);
    case K::False: return neg ? Cells(1) : Cells{};
    case K::Atom: return Cells{{Literal{d.condition(), neg}}};
    case K::Not: return dnf(d.children()[0], !neg);
    case K::And:
    case K::Or: {
      bool as_and = (d.kind() == K::And) != neg;
      if (!as_and) {
        Cells out;
        for (const auto& c : d.children()) {
          auto part = dnf(c, neg);
          out.insert(out.end(), part.begin(), part.end());
        }
        return out;
      }
      Cells out(1);
      for (const auto& c : d.children()) {
        auto part = dnf(c, neg);
        Cells next;
        for (const auto& a : out) {
          for (const auto& b : part) {
            auto cell = a;
            cell.insert(cell.end(), b.begin(), b.end());
            next.push_back(std::move(cell));
          }
        }
        out = std::move(next);
      }
      return out;
    }
  }
  return {};
}

}  // namespace

std::vector<std::vector<Literal>> SemialgebraicDescription::cells() const { return dnf(*this, false); }

std::string SemialgebraicDescription::to_string() const {
  switch (kind_) {
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Atom: return atom_->to_string();
    case Kind::Not: return "!(" + children_[0].to_string() + ")";
    case Kind::And:
    case Kind::Or: {
      std::string sep = kind_ == Kind::And ? " & " : " | ";
      std::string s = "(";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) s += sep;
        s += children_[i].to_string();
      }
      return s + ")";
    }
  }
  return "";
}

// ---- parser -------------------------------------------------------------

namespace {

class DescParser {
 public:
  DescParser(const RingPtr& ring, const std::string& text) : ring_(ring), s_(text) {}

  SemialgebraicDescription run() {
    auto d = parse_or();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return d;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("description, column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool keyword(const char* kw) {
    std::size_t n = std::char_traits<char>::length(kw);
    if (s_.compare(pos_, n, kw) != 0) return false;
    std::size_t e = pos_ + n;
    if (e < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[e])) || s_[e] == '_')) return false;
    pos_ = e;
    return true;
  }

  SemialgebraicDescription parse_or() {
    std::vector<SemialgebraicDescription> parts{parse_and()};
    for (;;) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '|') {
        ++pos_;
        parts.push_back(parse_and());
      } else {
        break;
      }
    }
    return combine(std::move(parts), false);
  }

  SemialgebraicDescription parse_and() {
    std::vector<SemialgebraicDescription> parts{parse_not()};
    for (;;) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '&') {
        ++pos_;
        parts.push_back(parse_not());
      } else {
        break;
      }
    }
    return combine(std::move(parts), true);
  }

  // End of the atom starting at pos_: first depth-0 '&', '|' or unmatched ')'.
  std::size_t atom_end(std::size_t from) const {
    int depth = 0;
    std::size_t i = from;
    for (; i < s_.size(); ++i) {
      char c = s_[i];
      if (c == '(') {
        ++depth;
      } else if (c == ')') {
        if (depth == 0) break;
        --depth;
      } else if (depth == 0 && (c == '&' || c == '|')) {
        break;
      }
    }
    return i;
  }

  // Whether s_[a, b) has a relation or Boolean operator at depth 0.
  bool has_logic(std::size_t a, std::size_t b) const {
    int depth = 0;
    for (std::size_t i = a; i < b; ++i) {
      char c = s_[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && (c == '<' || c == '>' || c == '=' || c == '!' || c == '&' || c == '|')) return true;
    }
    return false;
  }

  SemialgebraicDescription parse_not() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (s_[pos_] == '!' && (pos_ + 1 >= s_.size() || s_[pos_ + 1] != '=')) {
      ++pos_;
      return SemialgebraicDescription::negate(parse_not());
    }
    if (keyword("true")) return SemialgebraicDescription::constant(ring_, true);
    if (keyword("false")) return SemialgebraicDescription::constant(ring_, false);
    if (s_[pos_] == '(') {
      int depth = 0;
      std::size_t close = pos_;
      for (; close < s_.size(); ++close) {
        if (s_[close] == '(') ++depth;
        if (s_[close] == ')' && --depth == 0) break;
      }
      if (close >= s_.size()) fail("unbalanced parenthesis");
      if (has_logic(pos_ + 1, close)) {
        ++pos_;
        auto d = parse_or();
        skip();
        if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
        ++pos_;
        return d;
      }
    }
    return parse_atom();
  }

  SemialgebraicDescription parse_atom() {
    std::size_t start = pos_, end = atom_end(pos_);
    int depth = 0;
    std::size_t rel_at = std::string::npos, rel_len = 0;
    for (std::size_t i = start; i < end; ++i) {
      char c = s_[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth != 0) continue;
      if (c == '<' || c == '>' || c == '=' || c == '!') {
        if (rel_at != std::string::npos) {
          pos_ = i;
          fail("more than one relation in an atom");
        }
        rel_at = i;
        rel_len = (i + 1 < end && s_[i + 1] == '=' && c != '=') ? 2 : 1;
        if (c == '!' && rel_len != 2) {
          pos_ = i;
          fail("expected '!='");
        }
        i += rel_len - 1;
      }
    }
    if (rel_at == std::string::npos) fail("expected a sign condition");
    std::string op = s_.substr(rel_at, rel_len);
    Polynomial lhs = parse_side(start, rel_at);
    Polynomial rhs = parse_side(rel_at + rel_len, end);
    pos_ = end;
    Polynomial p = lhs - rhs;
    auto mk = [&](Relation r) { return SemialgebraicDescription::atom(SignCondition(p, r)); };
    try {
      if (op == ">") return mk(Relation::Positive);
      if (op == "<") return mk(Relation::Negative);
      if (op == "=") return mk(Relation::Zero);
      if (op == ">=") return SemialgebraicDescription::negate(mk(Relation::Negative));
      if (op == "<=") return SemialgebraicDescription::negate(mk(Relation::Positive));
      if (op == "!=") return SemialgebraicDescription::negate(mk(Relation::Zero));
    } catch (const StructuralError&) {
      // p identically zero under a strict relation: a constant truth value.
      bool v = op == ">=" || op == "<=";
      return SemialgebraicDescription::constant(ring_, v);
    }
    fail("unknown relation " + op);
  }

  Polynomial parse_side(std::size_t a, std::size_t b) {
    try {
      return parse_polynomial(ring_, std::string_view(s_).substr(a, b - a));
    } catch (const ParseError& e) {
      pos_ = a;
      fail(e.what());
    }
  }

  const RingPtr& ring_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

SemialgebraicDescription SemialgebraicDescription::parse(const RingPtr& ring, const std::string& text) {
  return DescParser(ring, text).run();
}

// ---- witness search ------------------------------------------------------

namespace {

// Rationals of height exactly h (max(|p|, q) = h), by |value| then sign.
std::vector<Rational> height_layer(unsigned h) {
  std::vector<Rational> out;
  if (h == 1) return {Rational(0), Rational(1), Rational(-1)};
  for (unsigned q = 1; q <= h; ++q) {
    for (unsigned p = 1; p <= h; ++p) {
      if (std::max(p, q) != h || std::gcd(p, q) != 1) continue;
      out.emplace_back(p, q);
    }
  }
  for (auto& r : out) r.canonicalize();
  std::sort(out.begin(), out.end());
  std::vector<Rational> signed_out;
  for (const auto& r : out) {
    signed_out.push_back(r);
    signed_out.push_back(-r);
  }
  return signed_out;
}

struct Search {
  const SemialgebraicDescription& desc;
  const std::vector<Polynomial>& avoid;
  const std::function<bool(const std::vector<Rational>&)>& accept_fn;
  std::uint64_t budget;
  std::size_t n;
  std::vector<std::vector<Rational>> layers;  // layers[h-1]
  std::vector<Rational> point;
  bool exhausted = false;

  bool spend() {
    if (budget == 0) {
      exhausted = true;
      return false;
    }
    --budget;
    return true;
  }

  bool accept() {
    if (!spend()) return false;
    if (!desc.eval(point)) return false;
    for (const auto& a : avoid) {
      if (a.eval(point) == 0) return false;
    }
    return !accept_fn || accept_fn(point);
  }

  bool dfs(std::size_t i, unsigned H, bool has_top) {
    if (i == n) return has_top && accept();
    unsigned hmin = (i + 1 == n && !has_top) ? H : 1;
    for (unsigned h = hmin; h <= H; ++h) {
      for (const auto& v : layers[h - 1]) {
        point[i] = v;
        if (i + 1 < n) {
          if (!spend()) return false;
          std::vector<QInterval> box;
          for (std::size_t k = 0; k < n; ++k) {
            if (k <= i) {
              box.push_back(QInterval::point(point[k]));
            } else {
              box.push_back({Rational(-static_cast<long>(H)), Rational(H)});
            }
          }
          if (desc.eval_box(box) == Tri::False) continue;
        }
        if (dfs(i + 1, H, has_top || h == H)) return true;
        if (exhausted) return false;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Rational>> find_witness_point(const SemialgebraicDescription& desc,
                                                        const std::vector<Polynomial>& avoid,
                                                        const WitnessOptions& opts) {
  return find_witness_point(desc, avoid, opts, nullptr);
}

std::optional<std::vector<Rational>> find_witness_point(const SemialgebraicDescription& desc,
                                                        const std::vector<Polynomial>& avoid,
                                                        const WitnessOptions& opts,
                                                        const std::function<bool(const std::vector<Rational>&)>& accept) {
  for (const auto& a : avoid) require_same_ring(a.ring(), desc.ring(), "witness avoid list");
  Search s{desc, avoid, accept, opts.budget, desc.dimension(), {}, {}};
  s.point.assign(s.n, Rational(0));
  if (s.n == 0) {
    if (s.accept()) return s.point;
    return std::nullopt;
  }
  for (unsigned H = 1; H <= opts.max_height; ++H) {
    s.layers.push_back(height_layer(H));
    if (s.dfs(0, H, false)) {
      // Independent recheck before returning.
      if (!desc.eval(s.point)) throw InternalError("witness failed verification");
      return s.point;
    }
    if (s.exhausted) break;
  }
  return std::nullopt;
}

}  // namespace mclosure
