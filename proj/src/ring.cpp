#include "mclosure/ring.hpp"

#include <algorithm>
#include <set>

#include "mclosure/error.hpp"
#include "mclosure/rational.hpp"

namespace mclosure {

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  bool slash = false, digit = false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] == '/') {
      if (slash || !digit) throw ParseError("bad rational '" + s + "'");
      slash = true;
      digit = false;
    } else if (s[k] >= '0' && s[k] <= '9') {
      digit = true;
    } else {
      throw ParseError("bad rational '" + s + "'");
    }
  }
  if (!digit) throw ParseError("bad rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (size() != o.size()) throw StructuralError("monomial length mismatch");
  Monomial r(*this);
  for (std::size_t i = 0; i < size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (size() != o.size()) throw StructuralError("monomial length mismatch");
  for (std::size_t i = 0; i < size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r(o);
  for (std::size_t i = 0; i < size(); ++i) r.e_[i] -= e_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  if (size() != o.size()) throw StructuralError("monomial length mismatch");
  Monomial r(*this);
  for (std::size_t i = 0; i < size(); ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  if (size() != o.size()) throw StructuralError("monomial length mismatch");
  Monomial r(*this);
  for (std::size_t i = 0; i < size(); ++i) r.e_[i] = std::min(e_[i], o.e_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (e_[i] && o.e_[i]) return false;
  return true;
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw StructuralError("mono_cmp: length mismatch");
  switch (kind_) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case OrderKind::GrevLex:
      return grevlex_range(a, b, 0, a.size());
    case OrderKind::Block: {
      std::size_t s = std::min(split_, a.size());
      int c = grevlex_range(a, b, 0, s);
      if (c) return c;
      return grevlex_range(a, b, s, a.size());
    }
  }
  return 0;
}

bool MonomialOrder::eliminates_prefix(std::size_t k) const {
  if (k == 0) return true;
  if (kind_ == OrderKind::Lex) return true;
  if (kind_ == OrderKind::Block) return split_ == k;
  return false;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrevLex: return "grevlex";
    case OrderKind::Block: return "block:" + std::to_string(split_);
  }
  return "grevlex";
}

MonomialOrder MonomialOrder::parse(const std::string& text) {
  if (text == "lex") return lex();
  if (text == "grevlex") return grevlex();
  if (text.rfind("block:", 0) == 0) {
    std::string n = text.substr(6);
    if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad block order '" + text + "'");
    return block(std::stoul(n));
  }
  throw ParseError("unknown monomial order '" + text + "'");
}

int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord) { return ord.compare(a, b); }

Ring::Ring(std::vector<std::string> names, MonomialOrder order) : names_(std::move(names)), order_(order) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw StructuralError("empty variable name");
    if (!seen.insert(n).second) throw StructuralError("duplicate variable name '" + n + "'");
  }
  if (order_.kind() == OrderKind::Block && order_.split() > names_.size())
    throw StructuralError("block split exceeds number of variables");
}

RingPtr Ring::make(std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(names), order);
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t Ring::require_index(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw StructuralError("unknown variable '" + name + "'");
  return *i;
}

RingPtr Ring::with_order(MonomialOrder order) const { return make(names_, order); }

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (!same_ring(a, b)) throw StructuralError(std::string(where) + ": ring mismatch");
}

}  // namespace mclosure
