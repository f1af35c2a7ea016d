#include "mclosure/diffop.hpp"

#include <algorithm>
#include <sstream>

#include "mclosure/error.hpp"
#include "mclosure/groebner.hpp"
#include "mclosure/parse.hpp"

namespace mclosure {

bool LinearDiffOp::KeyLess::operator()(const std::pair<Monomial, std::size_t>& a,
                                       const std::pair<Monomial, std::size_t>& b) const {
  auto da = a.first.degree(), db = b.first.degree();
  if (da != db) return da < db;
  if (a.first.exps() != b.first.exps()) {
    return std::lexicographical_compare(a.first.exps().begin(), a.first.exps().end(), b.first.exps().begin(),
                                        b.first.exps().end());
  }
  return a.second < b.second;
}

LinearDiffOp::LinearDiffOp(RingPtr ring, std::size_t arity) : ring_(std::move(ring)), arity_(arity) {
  if (arity_ == 0) throw StructuralError("operator arity must be positive");
}

LinearDiffOp LinearDiffOp::from_terms(RingPtr ring, std::size_t arity, const std::vector<OpTerm>& terms) {
  LinearDiffOp L(std::move(ring), arity);
  for (const auto& t : terms) L.add(t.alpha, t.component, t.coeff);
  return L;
}

LinearDiffOp LinearDiffOp::monomial(RingPtr ring, std::size_t arity, Monomial alpha, std::size_t component,
                                    const Polynomial& c) {
  LinearDiffOp L(std::move(ring), arity);
  L.add(alpha, component, c);
  return L;
}

std::vector<OpTerm> LinearDiffOp::terms() const {
  std::vector<OpTerm> out;
  out.reserve(t_.size());
  for (const auto& [k, c] : t_) out.push_back({k.first, k.second, c});
  return out;
}

unsigned LinearDiffOp::order() const {
  std::uint64_t s = 0;
  for (const auto& [k, c] : t_) s = std::max(s, k.first.degree());
  return static_cast<unsigned>(s);
}

unsigned LinearDiffOp::order_in(const std::vector<std::size_t>& vars) const {
  unsigned s = 0;
  for (const auto& [k, c] : t_) {
    unsigned d = 0;
    for (auto v : vars) d += k.first[v];
    s = std::max(s, d);
  }
  return s;
}

bool LinearDiffOp::differentiates_only(const std::vector<std::size_t>& vars) const {
  for (const auto& [k, c] : t_) {
    for (std::size_t v = 0; v < k.first.size(); ++v) {
      if (k.first[v] && std::find(vars.begin(), vars.end(), v) == vars.end()) return false;
    }
  }
  return true;
}

long LinearDiffOp::coefficient_degree_in(const std::vector<std::size_t>& vars) const {
  long d = -1;
  for (const auto& [k, c] : t_) d = std::max(d, c.degree_in(vars));
  return d;
}

void LinearDiffOp::declare_blocks(std::vector<std::size_t> vars) {
  for (auto v : vars) {
    if (v >= ring_->nvars()) throw StructuralError("declared derivative variable out of range");
  }
  blocks_ = std::move(vars);
  if (!differentiates_only(*blocks_)) throw StructuralError("operator differentiates outside its declared blocks");
}

void LinearDiffOp::check_key(const Monomial& alpha, std::size_t component) const {
  if (!ring_) throw StructuralError("operator without a ring");
  if (alpha.size() != ring_->nvars()) throw StructuralError("multi-index length differs from the ring size");
  if (component >= arity_) throw StructuralError("operator component out of range");
  if (blocks_) {
    for (std::size_t v = 0; v < alpha.size(); ++v) {
      if (alpha[v] && std::find(blocks_->begin(), blocks_->end(), v) == blocks_->end()) {
        throw StructuralError("operator differentiates " + ring_->name(v) + " outside its declared blocks");
      }
    }
  }
}

void LinearDiffOp::add(const Monomial& alpha, std::size_t component, const Polynomial& c) {
  check_key(alpha, component);
  if (c.is_zero()) return;
  require_same_ring(c.ring(), ring_, "operator coefficient");
  auto key = std::make_pair(alpha, component);
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

LinearDiffOp LinearDiffOp::operator+(const LinearDiffOp& o) const {
  if (o.arity_ != arity_) throw StructuralError("operator arity mismatch");
  LinearDiffOp r = *this;
  for (const auto& [k, c] : o.t_) r.add(k.first, k.second, c);
  return r;
}

LinearDiffOp LinearDiffOp::operator-(const LinearDiffOp& o) const {
  if (o.arity_ != arity_) throw StructuralError("operator arity mismatch");
  LinearDiffOp r = *this;
  for (const auto& [k, c] : o.t_) r.add(k.first, k.second, -c);
  return r;
}

LinearDiffOp LinearDiffOp::operator*(const Polynomial& p) const {
  LinearDiffOp r(ring_, arity_);
  r.blocks_ = blocks_;
  for (const auto& [k, c] : t_) r.add(k.first, k.second, c * p);
  return r;
}

bool LinearDiffOp::operator==(const LinearDiffOp& o) const {
  if (arity_ != o.arity_ || t_.size() != o.t_.size()) return false;
  auto a = t_.begin();
  for (auto b = o.t_.begin(); b != o.t_.end(); ++a, ++b) {
    if (a->first != b->first || a->second != b->second) return false;
  }
  return true;
}

LinearDiffOp LinearDiffOp::map_coefficients(const std::vector<Polynomial>& images, const RingPtr& target) const {
  LinearDiffOp r(target, arity_);
  for (const auto& [k, c] : t_) {
    Monomial a(target->nvars());
    for (std::size_t v = 0; v < k.first.size(); ++v) {
      if (!k.first[v]) continue;
      if (v >= a.size()) throw StructuralError("derivative variable missing from the target ring");
      a[v] = k.first[v];
    }
    r.add(a, k.second, c.compose(images, target));
  }
  return r;
}

std::string LinearDiffOp::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (std::size_t v = 0; v < k.first.size(); ++v) {
      if (k.first[v] == 1) os << "*d" << ring_->name(v);
      if (k.first[v] > 1) os << "*d" << ring_->name(v) << "^" << k.first[v];
    }
    os << "*f" << (k.second + 1);
  }
  return os.str();
}

// ---- application and composition -----------------------------------------

Polynomial apply(const LinearDiffOp& L, const PolyVec& P) {
  if (P.rank() != L.arity()) throw StructuralError("apply: operator arity differs from the vector length");
  Polynomial out(L.ring());
  for (const auto& t : L.terms()) {
    require_same_ring(P[t.component].ring(), L.ring(), "apply");
    out += t.coeff * P[t.component].diff(t.alpha);
  }
  return out;
}

namespace {

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Calls f(delta, binom(gamma, delta)) for every delta <= gamma.
template <class F>
void for_each_below(const Monomial& gamma, F&& f) {
  Monomial d(gamma.size());
  for (;;) {
    Integer c = 1;
    for (std::size_t v = 0; v < gamma.size(); ++v) c *= binomial(gamma[v], d[v]);
    f(d, Rational(c));
    std::size_t v = 0;
    while (v < gamma.size() && d[v] == gamma[v]) d[v++] = 0;
    if (v == gamma.size()) return;
    ++d[v];
  }
}

Monomial minus(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) r[v] = a[v] - b[v];
  return r;
}

}  // namespace

LinearDiffOp compose(const LinearDiffOp& A, const LinearDiffOp& L) {
  if (A.arity() != 1) throw StructuralError("compose: outer operator must be scalar");
  require_same_ring(A.ring(), L.ring(), "compose");
  LinearDiffOp out(L.ring(), L.arity());
  for (const auto& a : A.terms()) {
    for (const auto& l : L.terms()) {
      for_each_below(a.alpha, [&](const Monomial& d, const Rational& binom) {
        Polynomial c = l.coeff.diff(minus(a.alpha, d));
        if (c.is_zero()) return;
        out.add(l.alpha * d, l.component, a.coeff * c * binom);
      });
    }
  }
  return out;
}

// ---- text format -----------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

LinearDiffOp parse_operator(const RingPtr& ring, std::size_t arity, const std::string& text) {
  LinearDiffOp L(ring, arity);
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    auto where = [&](const std::string& msg) { return ParseError("operator line " + std::to_string(lineno) + ": " + msg); };
    auto p1 = s.find(';');
    auto p2 = p1 == std::string::npos ? p1 : s.find(';', p1 + 1);
    if (p2 == std::string::npos || s.find(';', p2 + 1) != std::string::npos) {
      throw where("expected `coeff ; alpha ; component`");
    }
    Polynomial c = parse_polynomial(ring, trim(s.substr(0, p1)));
    std::string a = trim(s.substr(p1 + 1, p2 - p1 - 1));
    if (a.size() < 2 || a.front() != '(' || a.back() != ')') throw where("multi-index must be parenthesised");
    a = a.substr(1, a.size() - 2);
    Monomial alpha(ring->nvars());
    std::size_t idx = 0;
    if (!trim(a).empty()) {
      std::istringstream as(a);
      std::string part;
      while (std::getline(as, part, ',')) {
        part = trim(part);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
          throw where("bad multi-index entry '" + part + "'");
        }
        if (idx >= alpha.size()) throw where("multi-index longer than the number of variables");
        alpha[idx++] = static_cast<std::uint32_t>(std::stoul(part));
      }
    }
    if (idx != alpha.size()) throw where("multi-index length differs from the number of variables");
    std::string comp = trim(s.substr(p2 + 1));
    if (comp.empty() || comp.find_first_not_of("0123456789") != std::string::npos) throw where("bad component");
    unsigned long j = std::stoul(comp);
    if (j < 1 || j > arity) throw where("component out of range");
    L.add(alpha, j - 1, c);
  }
  return L;
}

std::string print_operator(const LinearDiffOp& L) {
  std::ostringstream os;
  for (const auto& t : L.terms()) {
    os << t.coeff.to_string() << " ; (";
    for (std::size_t v = 0; v < t.alpha.size(); ++v) os << (v ? "," : "") << t.alpha[v];
    os << ") ; " << (t.component + 1) << "\n";
  }
  return os.str();
}

// ---- polynomial coefficients on R^n --------------------------------------

SubmoduleBasis mclosure_poly_coeffs(const LinearDiffOp& L) {
  const RingPtr& ring = L.ring();
  std::size_t N = L.arity();
  std::vector<std::vector<Polynomial>> rows;
  LinearDiffOp cur = L;
  while (!cur.is_zero()) {
    unsigned s = cur.order();
    std::map<std::vector<std::uint32_t>, std::vector<Polynomial>> top;
    LinearDiffOp div(ring, N);
    for (const auto& t : cur.terms()) {
      if (t.alpha.degree() != s) continue;
      std::vector<std::uint32_t> key(t.alpha.exps().begin(), t.alpha.exps().end());
      auto& row = top[key];
      if (row.empty()) row.assign(N, Polynomial(ring));
      row[t.component] = t.coeff;
      // d^alpha (c f_i) by Leibniz
      for_each_below(t.alpha, [&](const Monomial& d, const Rational& binom) {
        div.add(d, t.component, t.coeff.diff(minus(t.alpha, d)) * binom);
      });
    }
    for (auto& [k, row] : top) rows.push_back(row);
    if (s == 0) break;
    LinearDiffOp next = cur - div;
    if (!next.is_zero() && next.order() >= s) throw InternalError("divergence-form rewrite did not lower the order");
    cur = next;
  }
  if (rows.empty()) return groebner_basis(SubmoduleBasis::full(ring, N));
  std::vector<PolyVec> cols;
  for (std::size_t i = 0; i < N; ++i) {
    std::vector<Polynomial> c;
    for (const auto& r : rows) c.push_back(r[i]);
    cols.emplace_back(c);
  }
  return groebner_basis(syzygy_module(ring, rows.size(), cols));
}

// ---- tangent frame ---------------------------------------------------------

TangentFrame build_tangent_frame(const RingPtr& ring, std::size_t n, const std::vector<std::size_t>& graph_vars,
                                 std::vector<Polynomial> annihilators, const SubmoduleBasis& ideal) {
  if (annihilators.size() != graph_vars.size()) throw StructuralError("one annihilator per graph variable is required");
  if (ideal.rank != 1) throw StructuralError("vanishing ideal must have rank 1");
  require_same_ring(ideal.ring, ring, "tangent frame");
  for (auto v : graph_vars) {
    if (v < n || v >= ring->nvars()) throw StructuralError("graph variable index out of range");
  }
  SubmoduleBasis G = ideal.is_groebner ? ideal : groebner_basis(ideal);
  TangentFrame f;
  f.ring = ring;
  f.n = n;
  f.graph_vars = graph_vars;
  std::size_t m = graph_vars.size();
  std::vector<Polynomial> dy;
  for (std::size_t mu = 0; mu < m; ++mu) {
    Polynomial P = annihilators[mu];
    require_same_ring(P.ring(), ring, "annihilator");
    unsigned k = 0;
    for (;;) {
      if (!P.involves(graph_vars[mu])) {
        throw StructuralError("annihilator cannot be independent of " + ring->name(graph_vars[mu]) +
                              "; the stratum data is inconsistent");
      }
      Polynomial d = P.diff(graph_vars[mu]);
      if (!normal_form(d, G).is_zero()) break;
      P = d;
      ++k;
    }
    f.annihilators.push_back(P);
    f.replacements.push_back(k);
    dy.push_back(P.diff(graph_vars[mu]));
  }
  f.delta = Polynomial::constant(ring, 1);
  for (const auto& d : dy) f.delta *= d;
  f.b.assign(n, std::vector<Polynomial>(m, Polynomial(ring)));
  for (std::size_t j = 0; j < n; ++j) {
    LinearDiffOp X = LinearDiffOp::monomial(ring, 1, Monomial::variable(ring->nvars(), j), 0, f.delta);
    for (std::size_t mu = 0; mu < m; ++mu) {
      Polynomial others = Polynomial::constant(ring, 1);
      for (std::size_t nu = 0; nu < m; ++nu) {
        if (nu != mu) others *= dy[nu];
      }
      f.b[j][mu] = -(f.annihilators[mu].diff(j) * others);
      X.add(Monomial::variable(ring->nvars(), graph_vars[mu]), 0, f.b[j][mu]);
    }
    for (std::size_t mu = 0; mu < m; ++mu) {
      if (!apply(X, PolyVec({f.annihilators[mu]})).is_zero()) throw InternalError("tangent field does not annihilate P");
    }
    f.X.push_back(X);
  }
  return f;
}

TangentFrame build_tangent_frame(const Stratum& s, const ComplexifyResult& c, bool with_coefficients) {
  std::vector<std::size_t> gv;
  std::vector<Polynomial> anns = c.annihilators;
  for (std::size_t mu = 0; mu < s.m; ++mu) gv.push_back(s.y_var(mu));
  if (with_coefficients) {
    for (std::size_t l = 0; l < s.p; ++l) {
      gv.push_back(s.z_var(l));
      anns.push_back(c.coefficients[l]);
    }
  }
  return build_tangent_frame(s.ring, s.n, gv, anns, c.ideal);
}

LinearDiffOp frame_power(const TangentFrame& frame, const Monomial& alpha) {
  if (alpha.size() != frame.n) throw StructuralError("frame multi-index must cover the base variables");
  LinearDiffOp r = LinearDiffOp::monomial(frame.ring, 1, Monomial(frame.ring->nvars()), 0,
                                          Polynomial::constant(frame.ring, 1));
  for (std::size_t j = 0; j < frame.n; ++j) {
    for (std::uint32_t k = 0; k < alpha[j]; ++k) r = compose(r, frame.X[j]);
  }
  return r;
}

// ---- elimination of x-derivatives ----------------------------------------

namespace {

struct AlphaLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.exps().begin(), a.exps().end(), b.exps().begin(), b.exps().end());
  }
};

std::optional<XRewrite> peel(const LinearDiffOp& L, const TangentFrame& frame, unsigned D) {
  const RingPtr& ring = L.ring();
  std::size_t n = frame.n, N = ring->nvars();
  std::vector<std::size_t> xv(n);
  for (std::size_t j = 0; j < n; ++j) xv[j] = j;
  std::map<Monomial, LinearDiffOp, AlphaLess> parts;
  std::map<Monomial, LinearDiffOp, AlphaLess> powers;
  auto power = [&](const Monomial& a) -> const LinearDiffOp& {
    auto it = powers.find(a);
    if (it == powers.end()) it = powers.emplace(a, frame_power(frame, a)).first;
    return it->second;
  };
  LinearDiffOp T = L * frame.delta.pow(D);
  for (;;) {
    unsigned a = T.order_in(xv);
    if (a == 0) {
      auto& p0 = parts.try_emplace(Monomial(n), ring, L.arity()).first->second;
      p0 = p0 + T;
      break;
    }
    Polynomial da = frame.delta.pow(a);
    std::map<Monomial, LinearDiffOp, AlphaLess> pieces;
    for (const auto& t : T.terms()) {
      unsigned ord = 0;
      for (auto v : xv) ord += t.alpha[v];
      if (ord != a) continue;
      auto q = t.coeff.divide_exact(da);
      if (!q) return std::nullopt;
      Monomial ax(n), ay(N);
      for (std::size_t v = 0; v < N; ++v) {
        if (v < n) {
          ax[v] = t.alpha[v];
        } else {
          ay[v] = t.alpha[v];
        }
      }
      pieces.try_emplace(ax, ring, L.arity()).first->second.add(ay, t.component, *q);
    }
    for (const auto& [ax, piece] : pieces) {
      T = T - compose(power(ax), piece);
      auto& slot = parts.try_emplace(ax, ring, L.arity()).first->second;
      slot = slot + piece;
    }
    if (T.order_in(xv) >= a) throw InternalError("x-derivative peel did not lower the x-order");
  }
  XRewrite out;
  out.D = D;
  LinearDiffOp check(ring, L.arity());
  for (auto& [ax, op] : parts) {
    if (op.is_zero()) continue;
    check = check + compose(power(ax), op);
    out.parts.emplace_back(ax, op);
  }
  if (check != L * frame.delta.pow(D)) throw InternalError("x-derivative rewrite failed verification");
  return out;
}

}  // namespace

XRewrite eliminate_x_derivatives(const LinearDiffOp& L, const TangentFrame& frame) {
  require_same_ring(L.ring(), frame.ring, "eliminate_x_derivatives");
  std::vector<std::size_t> allowed;
  for (std::size_t j = 0; j < frame.n; ++j) allowed.push_back(j);
  allowed.insert(allowed.end(), frame.graph_vars.begin(), frame.graph_vars.end());
  if (!L.differentiates_only(allowed)) throw StructuralError("operator differentiates a variable outside the frame");
  unsigned M = L.order();
  unsigned cap = M * (M + 1) + 1;
  // The parts may differentiate the graph variables, whatever L declared.
  LinearDiffOp work = LinearDiffOp::from_terms(L.ring(), L.arity(), L.terms());
  for (unsigned D = 0; D <= cap; ++D) {
    if (auto r = peel(work, frame, D)) return *r;
  }
  throw InternalError("no power of Delta admits the x-derivative rewrite");
}

// ---- lift ------------------------------------------------------------------

LinearDiffOp lift_operator(const RingPtr& ring, std::size_t q, const std::vector<OmegaEntry>& omega, std::size_t K,
                           std::size_t arity) {
  if (ring->nvars() < q + K) throw StructuralError("lift ring lacks coefficient variables");
  LinearDiffOp L(ring, arity);
  std::vector<std::size_t> blocks(q);
  for (std::size_t v = 0; v < q; ++v) blocks[v] = v;
  L.declare_blocks(blocks);
  for (const auto& e : omega) {
    if (e.lambda >= K) throw StructuralError("coefficient index out of range");
    if (e.alpha.size() != q) throw StructuralError("multi-index must cover the local coordinates");
    Monomial a(ring->nvars());
    for (std::size_t v = 0; v < q; ++v) a[v] = e.alpha[v];
    L.add(a, e.component, Polynomial::variable(ring, q + e.lambda) * e.value);
  }
  return L;
}

}  // namespace mclosure
