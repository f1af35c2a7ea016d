#include "mclosure/parse.hpp"

#include <cctype>

#include "mclosure/error.hpp"

namespace mclosure {

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view s) : ring_(ring), s_(s) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("column " + std::to_string(pos_ + 1) + ": " + msg + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip();
    Polynomial acc(ring_);
    bool first = true;
    for (;;) {
      int sgn = 1;
      if (eat('+')) {
        sgn = 1;
      } else if (eat('-')) {
        sgn = -1;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc = sgn > 0 ? acc + t : acc - t;
      first = false;
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc * (1 / d.constant_value());
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 100000) fail("exponent too large");
      b = b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  Polynomial base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Integer z(std::string(s_.substr(start, pos_ - start)));
      return Polynomial::constant(ring_, Rational(z));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const RingPtr& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Split at top-level commas.
std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

std::string strip_parens(std::string_view text) {
  std::string t = trim(text);
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
    int depth = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] == '(') ++depth;
      if (t[i] == ')') --depth;
      if (depth == 0 && i + 1 < t.size()) return t;
    }
    return trim(std::string_view(t).substr(1, t.size() - 2));
  }
  return t;
}

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  Parser p(ring, text);
  return p.parse_all();
}

PolyVec parse_polyvec(const RingPtr& ring, std::string_view text, std::size_t rank) {
  std::string t = trim(text);
  if (rank == 1) {
    std::string inner = strip_parens(t);
    if (split_commas(inner).size() == 1) return PolyVec({parse_polynomial(ring, t)});
  }
  std::string inner = strip_parens(t);
  if (inner == t && rank != 1) throw ParseError("expected '(p1, ..., pJ)' in '" + t + "'");
  auto parts = split_commas(inner);
  if (parts.size() != rank)
    throw ParseError("expected " + std::to_string(rank) + " components in '" + t + "'");
  std::vector<Polynomial> cs;
  for (const auto& s : parts) cs.push_back(parse_polynomial(ring, s));
  return PolyVec(std::move(cs));
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::string inner = strip_parens(text);
  std::vector<Rational> out;
  if (trim(inner).empty()) return out;
  for (const auto& s : split_commas(inner)) out.push_back(parse_rational(s));
  return out;
}

std::vector<std::uint32_t> parse_index_list(std::string_view text) {
  std::string inner = strip_parens(text);
  std::vector<std::uint32_t> out;
  if (trim(inner).empty()) return out;
  for (const auto& s : split_commas(inner)) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad index '" + s + "'");
    out.push_back(static_cast<std::uint32_t>(std::stoul(s)));
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      if (!t.mono[v]) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->name(v);
      if (t.mono[v] > 1) mono += "^" + std::to_string(t.mono[v]);
    }
    if (mono.empty()) {
      s += c.get_str();
    } else if (c == 1) {
      s += mono;
    } else {
      s += c.get_str() + "*" + mono;
    }
  }
  return s;
}

std::string to_string(const Polynomial& p) { return p.to_string(); }
std::string to_string(const PolyVec& v) { return v.to_string(); }

}  // namespace mclosure
