#include "mclosure/groebner.hpp"

#include <algorithm>
#include <set>

#include "mclosure/error.hpp"

namespace mclosure {

namespace {

struct MTerm {
  Monomial m;
  std::uint32_t comp;
  Integer c;
};
using Terms = std::vector<MTerm>;

struct ModCmp {
  const MonomialOrder* ord;
  ModuleOrderKind kind;

  int operator()(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    if (kind == ModuleOrderKind::PositionOverTerm) {
      if (ca != cb) return ca < cb ? 1 : -1;
      return ord->compare(a, b);
    }
    int c = ord->compare(a, b);
    if (c) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
  int operator()(const MTerm& a, const MTerm& b) const { return (*this)(a.m, a.comp, b.m, b.comp); }
};

struct MPoly {
  Terms t;
  std::uint64_t sugar = 0;
};

// Integer image of v; returns s with result = s * v.
Terms to_terms(const PolyVec& v, const ModCmp& cmp, Rational* scale) {
  Integer den = 1;
  for (const auto& p : v.comps())
    for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  Terms out;
  for (std::size_t j = 0; j < v.rank(); ++j)
    for (const auto& t : v[j].terms()) {
      Rational c = t.coeff * den;
      out.push_back({t.mono, static_cast<std::uint32_t>(j), c.get_num()});
    }
  std::sort(out.begin(), out.end(), [&](const MTerm& a, const MTerm& b) { return cmp(a, b) > 0; });
  if (scale) *scale = Rational(den);
  return out;
}

PolyVec to_polyvec(const Terms& t, const RingPtr& ring, std::size_t rank, const Rational& divide_by) {
  std::vector<std::vector<Term>> cs(rank);
  for (const auto& x : t) cs[x.comp].push_back({x.m, Rational(x.c) / divide_by});
  PolyVec v(ring, rank);
  for (std::size_t j = 0; j < rank; ++j) v[j] = Polynomial::from_terms(ring, std::move(cs[j]));
  return v;
}

Integer content(const Terms& t) {
  Integer g = 0;
  for (const auto& x : t) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Divide by the content; returns it (1 for zero).
Integer make_primitive(Terms& t) {
  if (t.empty()) return 1;
  Integer g = content(t);
  if (g != 1 && g != 0)
    for (auto& x : t) mpz_divexact(x.c.get_mpz_t(), x.c.get_mpz_t(), g.get_mpz_t());
  return g == 0 ? Integer(1) : g;
}

std::uint64_t degree_of(const Terms& t) {
  std::uint64_t d = 0;
  for (const auto& x : t) d = std::max(d, x.m.degree());
  return d;
}

// f <- a*f - b*(m*g), where terms of f before `pos` are only scaled.
void sub_scaled(Terms& f, const Integer& a, const Integer& b, const Monomial& m, const Terms& g,
                std::size_t pos, const ModCmp& cmp) {
  Terms r;
  r.reserve(f.size() + g.size());
  for (std::size_t i = 0; i < pos; ++i) r.push_back({std::move(f[i].m), f[i].comp, f[i].c * a});
  std::size_t i = pos, j = 0;
  Monomial gm;
  bool have = false;
  while (i < f.size() || j < g.size()) {
    if (j < g.size() && !have) {
      gm = g[j].m * m;
      have = true;
    }
    int c;
    if (i >= f.size()) {
      c = -1;
    } else if (j >= g.size()) {
      c = 1;
    } else {
      c = cmp(f[i].m, f[i].comp, gm, g[j].comp);
    }
    if (c > 0) {
      r.push_back({std::move(f[i].m), f[i].comp, f[i].c * a});
      ++i;
    } else if (c < 0) {
      r.push_back({std::move(gm), g[j].comp, -(g[j].c * b)});
      ++j;
      have = false;
    } else {
      Integer v = f[i].c * a - g[j].c * b;
      if (v != 0) r.push_back({std::move(f[i].m), f[i].comp, std::move(v)});
      ++i;
      ++j;
      have = false;
    }
  }
  f = std::move(r);
}

struct Reducer {
  const std::vector<MPoly>* basis;
  std::vector<bool> active;
  ModCmp cmp;

  const MPoly* find_divisor(const MTerm& t, std::size_t skip) const {
    for (std::size_t k = 0; k < basis->size(); ++k) {
      if (k == skip || !active[k]) continue;
      const MTerm& l = (*basis)[k].t.front();
      if (l.comp == t.comp && l.m.divides(t.m)) return &(*basis)[k];
    }
    return nullptr;
  }

  // Full reduction starting at `from`. Tracks scale: f_new = scale * f_old - sum.
  void reduce(MPoly& f, std::size_t from, std::size_t skip, Rational* scale) const {
    std::size_t pos = from;
    while (pos < f.t.size()) {
      const MPoly* g = find_divisor(f.t[pos], skip);
      if (!g) {
        ++pos;
        continue;
      }
      const MTerm& lg = g->t.front();
      Monomial q = lg.m.quotient_of(f.t[pos].m);
      Integer d;
      mpz_gcd(d.get_mpz_t(), lg.c.get_mpz_t(), f.t[pos].c.get_mpz_t());
      Integer a = lg.c / d, b = f.t[pos].c / d;
      if (a < 0) {
        a = -a;
        b = -b;
      }
      f.sugar = std::max<std::uint64_t>(f.sugar, g->sugar + q.degree());
      sub_scaled(f.t, a, b, q, g->t, pos, cmp);
      if (scale) *scale *= a;
      Integer c = make_primitive(f.t);
      if (scale && c != 1) *scale /= c;
    }
  }
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  std::uint64_t sugar;
};

std::vector<MPoly> buchberger(std::vector<MPoly> input, const ModCmp& cmp, std::size_t rank) {
  std::vector<MPoly> G;
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  Reducer red{&G, {}, cmp};

  auto add = [&](MPoly p) {
    std::size_t n = G.size();
    const MTerm& ln = p.t.front();
    for (std::size_t i = 0; i < n; ++i) {
      if (!red.active[i]) continue;
      const MTerm& li = G[i].t.front();
      if (li.comp != ln.comp) continue;
      Monomial l = li.m.lcm(ln.m);
      std::uint64_t d = l.degree();
      std::uint64_t s = std::max(G[i].sugar + d - li.m.degree(), p.sugar + d - ln.m.degree());
      pairs.push_back({i, n, std::move(l), ln.comp, s});
      pending.insert({i, n});
    }
    G.push_back(std::move(p));
    red.active.push_back(true);
  };

  for (auto& p : input) {
    if (p.t.empty()) continue;
    make_primitive(p.t);
    red.reduce(p, 0, static_cast<std::size_t>(-1), nullptr);
    if (p.t.empty()) continue;
    add(std::move(p));
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      int c = cmp(a.lcm, a.comp, b.lcm, b.comp);
      if (c < 0 || (c == 0 && (a.sugar < b.sugar || (a.sugar == b.sugar && std::tie(a.j, a.i) < std::tie(b.j, b.i)))))
        best = k;
    }
    Pair pr = std::move(pairs[best]);
    pairs[best] = std::move(pairs.back());
    pairs.pop_back();
    pending.erase({pr.i, pr.j});

    const MTerm& li = G[pr.i].t.front();
    const MTerm& lj = G[pr.j].t.front();
    // Product criterion holds only for ideals.
    if (rank == 1 && li.m.coprime(lj.m)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j || !red.active[k]) continue;
      const MTerm& lk = G[k].t.front();
      if (lk.comp != pr.comp || !lk.m.divides(pr.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k))) chain = true;
    }
    if (chain) continue;

    MPoly s;
    s.sugar = pr.sugar;
    Monomial qi = li.m.quotient_of(pr.lcm);
    Monomial qj = lj.m.quotient_of(pr.lcm);
    s.t.reserve(G[pr.i].t.size());
    for (const auto& x : G[pr.i].t) s.t.push_back({x.m * qi, x.comp, x.c});
    Integer d;
    mpz_gcd(d.get_mpz_t(), li.c.get_mpz_t(), lj.c.get_mpz_t());
    Integer a = lj.c / d, b = li.c / d;
    sub_scaled(s.t, a, b, qj, G[pr.j].t, 0, cmp);
    make_primitive(s.t);
    red.reduce(s, 0, static_cast<std::size_t>(-1), nullptr);
    if (s.t.empty()) continue;
    add(std::move(s));
  }

  // Minimize: drop elements whose leading term is divisible by another's.
  std::vector<std::size_t> idx(G.size());
  for (std::size_t k = 0; k < G.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    int c = cmp(G[a].t.front(), G[b].t.front());
    return c != 0 ? c < 0 : a < b;
  });
  std::vector<MPoly> minimal;
  for (std::size_t k : idx) {
    const MTerm& l = G[k].t.front();
    bool redundant = false;
    for (const auto& h : minimal) {
      const MTerm& lh = h.t.front();
      if (lh.comp == l.comp && lh.m.divides(l.m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(G[k]));
  }
  // Interreduce tails.
  Reducer tail{&minimal, std::vector<bool>(minimal.size(), true), cmp};
  for (std::size_t k = 0; k < minimal.size(); ++k) tail.reduce(minimal[k], 1, k, nullptr);
  for (auto& p : minimal) {
    make_primitive(p.t);
    if (p.t.front().c < 0)
      for (auto& x : p.t) x.c = -x.c;
  }
  return minimal;
}

std::vector<MPoly> to_mpolys(const std::vector<PolyVec>& gens, const ModCmp& cmp) {
  std::vector<MPoly> in;
  for (const auto& v : gens) {
    MPoly p;
    p.t = to_terms(v, cmp, nullptr);
    p.sugar = degree_of(p.t);
    in.push_back(std::move(p));
  }
  return in;
}

std::vector<PolyVec> gb_vectors(const RingPtr& ring, std::size_t rank, const std::vector<PolyVec>& gens,
                                ModuleOrderKind kind) {
  ModCmp cmp{&ring->order(), kind};
  auto G = buchberger(to_mpolys(gens, cmp), cmp, rank);
  std::vector<PolyVec> out;
  out.reserve(G.size());
  for (const auto& p : G) out.push_back(to_polyvec(p.t, ring, rank, Rational(p.t.front().c)));
  return out;
}

void require_rank(const SubmoduleBasis& M, const PolyVec& v, const char* where) {
  if (v.rank() != M.rank) throw StructuralError(std::string(where) + ": rank mismatch");
  if (!same_ring(v.ring(), M.ring)) throw StructuralError(std::string(where) + ": ring mismatch");
}

const SubmoduleBasis& ensure_gb(const SubmoduleBasis& M, SubmoduleBasis& storage) {
  if (M.is_groebner) return M;
  storage = groebner_basis(M, M.module_order);
  return storage;
}

}  // namespace

SubmoduleBasis groebner_basis(const SubmoduleBasis& M, ModuleOrderKind kind) {
  if (M.is_groebner && M.module_order == kind) return M;
  SubmoduleBasis out(M.ring, M.rank, gb_vectors(M.ring, M.rank, M.gens, kind));
  out.is_groebner = true;
  out.module_order = kind;
  return out;
}

PolyVec normal_form(const PolyVec& f, const SubmoduleBasis& B) {
  require_rank(B, f, "normal_form");
  ModCmp cmp{&B.ring->order(), B.module_order};
  std::vector<MPoly> basis;
  for (const auto& g : B.gens) {
    if (g.is_zero()) continue;
    MPoly p;
    p.t = to_terms(g, cmp, nullptr);
    basis.push_back(std::move(p));
  }
  Reducer red{&basis, std::vector<bool>(basis.size(), true), cmp};
  Rational scale;
  MPoly p;
  p.t = to_terms(f, cmp, &scale);
  Integer c = make_primitive(p.t);
  scale /= c;
  red.reduce(p, 0, static_cast<std::size_t>(-1), &scale);
  return to_polyvec(p.t, B.ring, B.rank, scale);
}

Polynomial normal_form(const Polynomial& f, const SubmoduleBasis& B) {
  return normal_form(PolyVec({f}), B)[0];
}

PolyVec s_vector(const PolyVec& f, const PolyVec& g, ModuleOrderKind kind) {
  if (f.rank() != g.rank()) throw StructuralError("s_vector: rank mismatch");
  const RingPtr& ring = f.ring();
  ModCmp cmp{&ring->order(), kind};
  Terms a = to_terms(f, cmp, nullptr), b = to_terms(g, cmp, nullptr);
  if (a.empty() || b.empty() || a.front().comp != b.front().comp) return PolyVec(ring, f.rank());
  // Use rational leading data so the result is the textbook S-vector.
  auto lead = [&](const PolyVec& v) {
    Terms t = to_terms(v, cmp, nullptr);
    const MTerm& l = t.front();
    return std::make_pair(l.m, v[l.comp].coefficient(l.m));
  };
  auto [ma, ca] = lead(f);
  auto [mb, cb] = lead(g);
  Monomial l = ma.lcm(mb);
  std::size_t j = a.front().comp;
  (void)j;
  Polynomial pa = Polynomial::monomial(ring, ma.quotient_of(l), 1 / ca);
  Polynomial pb = Polynomial::monomial(ring, mb.quotient_of(l), 1 / cb);
  return f * pa - g * pb;
}

bool satisfies_buchberger_criterion(const SubmoduleBasis& B) {
  for (std::size_t i = 0; i < B.gens.size(); ++i)
    for (std::size_t j = i + 1; j < B.gens.size(); ++j) {
      if (B.gens[i].is_zero() || B.gens[j].is_zero()) continue;
      PolyVec s = s_vector(B.gens[i], B.gens[j], B.module_order);
      if (!normal_form(s, B).is_zero()) return false;
    }
  return true;
}

bool module_contains(const SubmoduleBasis& M, const PolyVec& v) {
  require_rank(M, v, "module_contains");
  SubmoduleBasis storage;
  return normal_form(v, ensure_gb(M, storage)).is_zero();
}

bool module_contains(const SubmoduleBasis& M, const Polynomial& f) { return module_contains(M, PolyVec({f})); }

bool module_subset(const SubmoduleBasis& A, const SubmoduleBasis& B) {
  if (A.rank != B.rank) throw StructuralError("module_subset: rank mismatch");
  require_same_ring(A.ring, B.ring, "module_subset");
  SubmoduleBasis storage;
  const SubmoduleBasis& G = ensure_gb(B, storage);
  for (const auto& g : A.gens)
    if (!normal_form(g, G).is_zero()) return false;
  return true;
}

bool module_equal(const SubmoduleBasis& A, const SubmoduleBasis& B) {
  return module_subset(A, B) && module_subset(B, A);
}

namespace {

// Augmented vectors (head_k, e_k) in R^{I+K} under position-over-term;
// returns the tails of Groebner elements whose head part vanishes.
SubmoduleBasis tail_module(const RingPtr& ring, std::size_t I, std::size_t K,
                           const std::vector<PolyVec>& heads_with_tag, const std::vector<PolyVec>& heads_plain) {
  std::vector<PolyVec> aug;
  for (std::size_t k = 0; k < heads_with_tag.size(); ++k) {
    PolyVec v(ring, I + K);
    for (std::size_t i = 0; i < I; ++i) v[i] = heads_with_tag[k][i];
    v[I + k] = Polynomial::constant(ring, 1);
    aug.push_back(std::move(v));
  }
  for (const auto& h : heads_plain) {
    PolyVec v(ring, I + K);
    for (std::size_t i = 0; i < I; ++i) v[i] = h[i];
    aug.push_back(std::move(v));
  }
  auto G = gb_vectors(ring, I + K, aug, ModuleOrderKind::PositionOverTerm);
  SubmoduleBasis out(ring, K);
  for (const auto& g : G) {
    bool head_zero = true;
    for (std::size_t i = 0; i < I && head_zero; ++i) head_zero = g[i].is_zero();
    if (!head_zero) continue;
    PolyVec t(ring, K);
    for (std::size_t k = 0; k < K; ++k) t[k] = g[I + k];
    out.gens.push_back(std::move(t));
  }
  return out;
}

}  // namespace

SubmoduleBasis syzygy_module(const RingPtr& ring, std::size_t rank, const std::vector<PolyVec>& gens) {
  for (const auto& g : gens)
    if (g.rank() != rank || !same_ring(g.ring(), ring)) throw StructuralError("syzygy_module: inconsistent generators");
  auto S = tail_module(ring, rank, gens.size(), gens, {});
  return groebner_basis(S);
}

std::optional<PolyVec> solve_inhomogeneous(const PolyMatrix& A, const PolyVec& Q) {
  if (Q.rank() != A.rows) throw StructuralError("solve_inhomogeneous: right-hand side size mismatch");
  const RingPtr& ring = A.ring;
  std::size_t I = A.rows, K = A.cols;
  std::vector<PolyVec> aug;
  for (std::size_t k = 0; k < K; ++k) {
    PolyVec v(ring, I + K);
    for (std::size_t i = 0; i < I; ++i) v[i] = A.at(i, k);
    v[I + k] = Polynomial::constant(ring, 1);
    aug.push_back(std::move(v));
  }
  SubmoduleBasis G(ring, I + K, gb_vectors(ring, I + K, aug, ModuleOrderKind::PositionOverTerm));
  G.is_groebner = true;
  G.module_order = ModuleOrderKind::PositionOverTerm;
  PolyVec q(ring, I + K);
  for (std::size_t i = 0; i < I; ++i) q[i] = Q[i];
  PolyVec r = normal_form(q, G);
  for (std::size_t i = 0; i < I; ++i)
    if (!r[i].is_zero()) return std::nullopt;
  PolyVec P(ring, K);
  for (std::size_t k = 0; k < K; ++k) P[k] = -r[I + k];
  if (A * P != Q) throw InternalError("solve_inhomogeneous: certificate check failed");
  return P;
}

namespace {

// Ring with a fresh variable prepended, order block:1.
RingPtr tagged_ring(const RingPtr& ring) {
  std::vector<std::string> names{"_t"};
  while (ring->index_of(names[0])) names[0] += "_";
  for (const auto& n : ring->names()) names.push_back(n);
  return Ring::make(names, MonomialOrder::block(1));
}

std::vector<std::size_t> shift_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i + 1;
  return m;
}

}  // namespace

SubmoduleBasis intersect(const SubmoduleBasis& A, const SubmoduleBasis& B) {
  if (A.rank != B.rank) throw StructuralError("intersect: rank mismatch");
  require_same_ring(A.ring, B.ring, "intersect");
  const RingPtr& ring = A.ring;
  if (A.is_zero() || B.is_zero()) {
    SubmoduleBasis z(ring, A.rank);
    z.is_groebner = true;
    return z;
  }
  RingPtr tr = tagged_ring(ring);
  auto map = shift_map(ring->nvars());
  Polynomial t = Polynomial::variable(tr, 0);
  Polynomial one_minus_t = Polynomial::constant(tr, 1) - t;
  std::vector<PolyVec> gens;
  for (const auto& g : A.gens)
    if (!g.is_zero()) gens.push_back(g.map_vars(tr, map) * t);
  for (const auto& g : B.gens)
    if (!g.is_zero()) gens.push_back(g.map_vars(tr, map) * one_minus_t);
  auto G = gb_vectors(tr, A.rank, gens, ModuleOrderKind::TermOverPosition);
  std::vector<std::size_t> back(tr->nvars());
  for (std::size_t i = 1; i < tr->nvars(); ++i) back[i] = i - 1;
  SubmoduleBasis out(ring, A.rank);
  for (const auto& g : G) {
    bool has_t = false;
    for (const auto& p : g.comps()) has_t = has_t || p.involves(0);
    if (has_t) continue;
    out.gens.push_back(g.map_vars(ring, back));
  }
  return groebner_basis(out);
}

SubmoduleBasis colon(const SubmoduleBasis& M, const Polynomial& f) {
  require_same_ring(M.ring, f.ring(), "colon");
  if (f.is_zero()) throw DomainError("colon by the zero polynomial");
  if (f.is_constant()) return groebner_basis(M);
  SubmoduleBasis fR(M.ring, M.rank);
  for (std::size_t j = 0; j < M.rank; ++j) {
    PolyVec v(M.ring, M.rank);
    v[j] = f;
    fR.gens.push_back(std::move(v));
  }
  SubmoduleBasis I = intersect(M, fR);
  SubmoduleBasis out(M.ring, M.rank);
  for (const auto& g : I.gens) {
    PolyVec q(M.ring, M.rank);
    for (std::size_t j = 0; j < M.rank; ++j) {
      auto d = g[j].divide_exact(f);
      if (!d) throw InternalError("colon: intersection element not divisible by f");
      q[j] = *d;
    }
    out.gens.push_back(std::move(q));
  }
  return groebner_basis(out);
}

SubmoduleBasis saturate(const SubmoduleBasis& M, const Polynomial& f, std::size_t* rounds) {
  if (f.is_zero()) throw DomainError("saturation by the zero polynomial");
  SubmoduleBasis cur = groebner_basis(M);
  std::size_t k = 0;
  for (;;) {
    SubmoduleBasis next = colon(cur, f);
    ++k;
    if (module_equal(next, cur)) break;
    cur = std::move(next);
  }
  if (rounds) *rounds = k;
  return cur;
}

SubmoduleBasis eliminate(const SubmoduleBasis& M, const std::vector<std::size_t>& drop) {
  const RingPtr& ring = M.ring;
  std::size_t k = drop.size();
  for (std::size_t i = 0; i < k; ++i)
    if (drop[i] != i) throw StructuralError("eliminate: dropped variables must be the leading block of the order");
  if (k > ring->nvars()) throw StructuralError("eliminate: too many variables");
  if (!ring->order().eliminates_prefix(k))
    throw StructuralError("eliminate: ring order " + ring->order().to_string() +
                          " is not an elimination order for the first " + std::to_string(k) + " variables");
  auto G = groebner_basis(M, ModuleOrderKind::TermOverPosition);
  std::vector<std::string> rest(ring->names().begin() + static_cast<long>(k), ring->names().end());
  MonomialOrder ord = ring->order().kind() == OrderKind::Lex ? MonomialOrder::lex() : MonomialOrder::grevlex();
  RingPtr target = Ring::make(rest, ord);
  std::vector<std::size_t> map(ring->nvars(), 0);
  for (std::size_t i = k; i < ring->nvars(); ++i) map[i] = i - k;
  SubmoduleBasis out(target, M.rank);
  for (const auto& g : G.gens) {
    bool has = false;
    for (const auto& p : g.comps())
      for (std::size_t i = 0; i < k; ++i) has = has || p.involves(i);
    if (!has) out.gens.push_back(g.map_vars(target, map));
  }
  return groebner_basis(out);
}

SubmoduleBasis solution_module(const PolyMatrix& A, const PolyMatrix& B, const Polynomial& delta, unsigned l) {
  if (A.rows != B.rows) throw StructuralError("solution_module: A and B need the same number of rows");
  require_same_ring(A.ring, B.ring, "solution_module");
  const RingPtr& ring = A.ring;
  Polynomial dl = delta.pow(l);
  std::vector<PolyVec> tagged, plain;
  for (std::size_t k = 0; k < B.cols; ++k) tagged.push_back(B.column(k) * dl);
  for (std::size_t j = 0; j < A.cols; ++j) plain.push_back(A.column(j));
  return groebner_basis(tail_module(ring, A.rows, B.cols, tagged, plain));
}

CriticalL critical_l(const PolyMatrix& A, const PolyMatrix& B, const Polynomial& delta, unsigned max_l) {
  if (delta.is_zero()) throw DomainError("critical_l: delta must be nonzero");
  require_same_ring(A.ring, delta.ring(), "critical_l");
  SubmoduleBasis cur = solution_module(A, B, delta, 0);
  for (unsigned l = 0; l <= max_l; ++l) {
    SubmoduleBasis next = solution_module(A, B, delta, l + 1);
    if (module_subset(next, cur)) return {l, cur};
    cur = std::move(next);
  }
  throw UnsupportedInput("critical_l: no stabilisation up to l = " + std::to_string(max_l));
}

}  // namespace mclosure
