#include "mclosure/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "mclosure/error.hpp"

namespace mclosure {

namespace {

// ---------------------------------------------------------------- Z[t]

using ZPoly = std::vector<Integer>;  // low to high

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long zdeg(const ZPoly& a) { return static_cast<long>(a.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  ztrim(c);
  return c;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  ztrim(c);
  return c;
}

Integer zcontent(const ZPoly& a) {
  Integer g = 0;
  for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

ZPoly zprimitive(ZPoly a) {
  ztrim(a);
  if (a.empty()) return a;
  Integer g = zcontent(a);
  if (a.back() < 0) g = -g;
  for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return a;
}

ZPoly zderiv(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * static_cast<unsigned long>(i);
  ztrim(d);
  return d;
}

// Exact quotient a / b in Z[t], or false.
bool zdivexact(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  if (b.empty()) throw DomainError("division by zero polynomial");
  ZPoly r = a;
  ztrim(r);
  if (r.empty()) {
    q.clear();
    return true;
  }
  long db = zdeg(b);
  if (zdeg(r) < db) return false;
  q.assign(static_cast<std::size_t>(zdeg(r) - db + 1), 0);
  const Integer& lb = b.back();
  for (long i = zdeg(r); i >= db; --i) {
    Integer& c = r[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!mpz_divisible_p(c.get_mpz_t(), lb.get_mpz_t())) return false;
    Integer f = c / lb;
    q[static_cast<std::size_t>(i - db)] = f;
    for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b[static_cast<std::size_t>(j)];
  }
  ztrim(r);
  ztrim(q);
  return r.empty();
}

// Pseudo-remainder of a by b.
ZPoly zprem(ZPoly a, const ZPoly& b) {
  long db = zdeg(b);
  const Integer& lb = b.back();
  ztrim(a);
  while (!a.empty() && zdeg(a) >= db) {
    Integer la = a.back();
    long shift = zdeg(a) - db;
    for (auto& x : a) x *= lb;
    for (long j = 0; j <= db; ++j) a[static_cast<std::size_t>(j + shift)] -= la * b[static_cast<std::size_t>(j)];
    ztrim(a);
  }
  return a;
}

// Primitive gcd with positive leading coefficient.
ZPoly zgcd(ZPoly a, ZPoly b) {
  a = zprimitive(a);
  b = zprimitive(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (zdeg(a) < zdeg(b)) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = zprimitive(zprem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return zprimitive(a);
}

// ---------------------------------------------------------------- F_p[t]

using u64 = std::uint64_t;
using FPoly = std::vector<u64>;

struct Fp {
  u64 p;

  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  static void trim(FPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  FPoly reduce(const ZPoly& a) const {
    FPoly r(a.size());
    Integer P(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < a.size(); ++i) {
      Integer m;
      mpz_fdiv_r(m.get_mpz_t(), a[i].get_mpz_t(), P.get_mpz_t());
      r[i] = m.get_ui();
    }
    trim(r);
    return r;
  }
  FPoly sub(const FPoly& a, const FPoly& b) const {
    FPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = sub(c[i], b[i]);
    trim(c);
    return c;
  }
  FPoly add(const FPoly& a, const FPoly& b) const {
    FPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = add(c[i], b[i]);
    trim(c);
    return c;
  }
  FPoly mul(const FPoly& a, const FPoly& b) const {
    if (a.empty() || b.empty()) return {};
    FPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    trim(c);
    return c;
  }
  FPoly scale(const FPoly& a, u64 s) const {
    FPoly c(a);
    for (auto& x : c) x = mul(x, s);
    trim(c);
    return c;
  }
  void divmod(const FPoly& a, const FPoly& b, FPoly& q, FPoly& r) const {
    r = a;
    trim(r);
    long db = static_cast<long>(b.size()) - 1;
    long da = static_cast<long>(r.size()) - 1;
    q.assign(da >= db ? static_cast<std::size_t>(da - db + 1) : 0, 0);
    u64 il = inv(b.back());
    for (long i = da; i >= db; --i) {
      u64 c = r[static_cast<std::size_t>(i)];
      if (!c) continue;
      u64 f = mul(c, il);
      q[static_cast<std::size_t>(i - db)] = f;
      for (long j = 0; j <= db; ++j) {
        auto& x = r[static_cast<std::size_t>(i - db + j)];
        x = sub(x, mul(f, b[static_cast<std::size_t>(j)]));
      }
    }
    trim(r);
    trim(q);
  }
  FPoly rem(const FPoly& a, const FPoly& b) const {
    FPoly q, r;
    divmod(a, b, q, r);
    return r;
  }
  FPoly quo(const FPoly& a, const FPoly& b) const {
    FPoly q, r;
    divmod(a, b, q, r);
    return q;
  }
  FPoly monic(const FPoly& a) const {
    if (a.empty()) return a;
    return scale(a, inv(a.back()));
  }
  FPoly gcd(FPoly a, FPoly b) const {
    while (!b.empty()) {
      FPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // s*a + t*b = 1, assuming coprime.
  void ext_gcd(const FPoly& a, const FPoly& b, FPoly& s, FPoly& t) const {
    FPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      FPoly q, r;
      divmod(r0, r1, q, r);
      FPoly s2 = sub(s0, mul(q, s1));
      FPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    // r0 is a nonzero constant
    u64 il = inv(r0.at(0));
    s = scale(s0, il);
    t = scale(t0, il);
  }
  FPoly powmod(FPoly base, const Integer& e, const FPoly& m) const {
    FPoly r{1};
    base = rem(base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = rem(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base), m);
    }
    return r;
  }
  FPoly deriv(const FPoly& a) const {
    if (a.size() <= 1) return {};
    FPoly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mul(a[i], i % p);
    trim(d);
    return d;
  }

  void equal_degree(const FPoly& f, std::size_t d, std::mt19937_64& rng, std::vector<FPoly>& out) const {
    std::size_t n = f.size() - 1;
    if (n == d) {
      out.push_back(f);
      return;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, d);
    e = (e - 1) / 2;
    std::uniform_int_distribution<u64> coin(0, p - 1);
    for (;;) {
      FPoly a(n);
      for (auto& x : a) x = coin(rng);
      trim(a);
      if (a.size() <= 1) continue;
      FPoly b = sub(powmod(a, e, f), FPoly{1});
      FPoly g = gcd(b, f);
      if (g.size() > 1 && g.size() < f.size()) {
        equal_degree(g, d, rng, out);
        equal_degree(quo(f, g), d, rng, out);
        return;
      }
    }
  }

  // Monic irreducible factors of a monic square-free f.
  std::vector<FPoly> factor(FPoly f) const {
    std::vector<FPoly> out;
    std::mt19937_64 rng(0x5eed + p);
    FPoly x{0, 1};
    FPoly h = x;
    for (std::size_t d = 1; f.size() > 1; ++d) {
      if (2 * d > f.size() - 1) {
        out.push_back(f);
        break;
      }
      h = powmod(h, Integer(static_cast<unsigned long>(p)), f);
      FPoly g = gcd(sub(h, x), f);
      if (g.size() > 1) {
        equal_degree(g, d, rng, out);
        f = quo(f, g);
        h = rem(h, f);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

std::vector<u64> small_primes() {
  std::vector<u64> out;
  const u64 lo = 1009, hi = 60000;
  std::vector<bool> comp(hi + 1, false);
  for (u64 i = 2; i <= hi; ++i) {
    if (comp[i]) continue;
    if (i >= lo) out.push_back(i);
    for (u64 j = i * i; j <= hi; j += i) comp[j] = true;
  }
  return out;
}

// ---------------------------------------------------------------- Hensel

ZPoly to_z(const FPoly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<unsigned long>(a[i]));
  return r;
}

ZPoly zmod(const ZPoly& a, const Integer& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  ztrim(r);
  return r;
}

ZPoly zsymmetric(const ZPoly& a, const Integer& m) {
  ZPoly r = zmod(a, m);
  Integer half = m / 2;
  for (auto& x : r)
    if (x > half) x -= m;
  ztrim(r);
  return r;
}

// Lift f = g*h (mod p), g monic, to modulus p^k. f is known modulo p^k.
void hensel_pair(const ZPoly& f, ZPoly& g, ZPoly& h, const Fp& F, unsigned k) {
  FPoly s, t;
  F.ext_gcd(F.reduce(g), F.reduce(h), s, t);
  Integer P(static_cast<unsigned long>(F.p));
  Integer pj = P;
  for (unsigned j = 1; j < k; ++j) {
    Integer pj1 = pj * P;
    ZPoly e = zmod(zsub(f, zmul(g, h)), pj1);
    for (auto& x : e) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), pj.get_mpz_t());
    FPoly ef = F.reduce(e);
    FPoly te = F.mul(t, ef);
    FPoly fg = F.reduce(g);
    FPoly q, tau;
    F.divmod(te, fg, q, tau);
    FPoly sigma = F.add(F.mul(s, ef), F.mul(q, F.reduce(h)));
    ZPoly tz = to_z(tau), sz = to_z(sigma);
    g.resize(std::max(g.size(), tz.size()));
    for (std::size_t i = 0; i < tz.size(); ++i) g[i] += pj * tz[i];
    h.resize(std::max(h.size(), sz.size()));
    for (std::size_t i = 0; i < sz.size(); ++i) h[i] += pj * sz[i];
    g = zmod(g, pj1);
    h = zmod(h, pj1);
    pj = pj1;
  }
}

// Lift monic factors gs of f/lc(f) mod p to mod p^k.
std::vector<ZPoly> hensel_multi(const ZPoly& f, const std::vector<FPoly>& gs, const Fp& F, unsigned k,
                                const Integer& pk) {
  std::vector<ZPoly> out;
  ZPoly cur = zmod(f, pk);
  for (std::size_t i = 0; i + 1 < gs.size(); ++i) {
    FPoly rest = F.reduce(ZPoly{cur.back()});
    for (std::size_t j = i + 1; j < gs.size(); ++j) rest = F.mul(rest, gs[j]);
    ZPoly g = to_z(gs[i]), h = to_z(rest);
    hensel_pair(cur, g, h, F, k);
    out.push_back(g);
    cur = h;
  }
  // Last factor: cur / lc(cur), made monic modulo p^k.
  Integer inv;
  mpz_invert(inv.get_mpz_t(), cur.back().get_mpz_t(), pk.get_mpz_t());
  ZPoly last(cur.size());
  for (std::size_t i = 0; i < cur.size(); ++i) last[i] = cur[i] * inv;
  out.push_back(zmod(last, pk));
  return out;
}

// ---------------------------------------------------------------- Zassenhaus

std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  if (zdeg(f) <= 1) return {f};
  static const std::vector<u64> primes = small_primes();
  const Integer& lc = f.back();

  u64 best_p = 0;
  std::vector<FPoly> best;
  int good = 0;
  for (u64 p : primes) {
    Fp F{p};
    if (mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
    FPoly fp = F.reduce(f);
    if (F.gcd(fp, F.deriv(fp)).size() != 1) continue;
    auto fs = F.factor(F.monic(fp));
    if (best_p == 0 || fs.size() < best.size()) {
      best_p = p;
      best = fs;
    }
    if (++good >= 3 || best.size() == 1) break;
  }
  if (best_p == 0) throw UnsupportedInput("factorisation: no suitable prime");
  if (best.size() == 1) return {f};

  Fp F{best_p};
  // Coefficient bound for lc(f) times any factor.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer bound = root * abs(lc);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(zdeg(f) + 1));
  Integer P(static_cast<unsigned long>(best_p)), pk = P;
  unsigned k = 1;
  while (pk <= bound) {
    pk *= P;
    ++k;
  }
  std::vector<ZPoly> lifted = hensel_multi(f, best, F, k, pk);

  std::vector<ZPoly> out;
  std::vector<std::size_t> T(lifted.size());
  for (std::size_t i = 0; i < T.size(); ++i) T[i] = i;
  ZPoly cur = f;
  std::size_t s = 1;
  while (2 * s <= T.size()) {
    bool found = false;
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    for (;;) {
      ZPoly G{cur.back()};
      long deg = 0;
      for (auto i : pick) {
        G = zmod(zmul(G, lifted[T[i]]), pk);
        deg += zdeg(lifted[T[i]]);
      }
      G = zprimitive(zsymmetric(G, pk));
      ZPoly q;
      if (zdeg(G) == deg && zdivexact(cur, G, q)) {
        out.push_back(G);
        cur = zprimitive(q);
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < T.size(); ++i)
          if (std::find(pick.begin(), pick.end(), i) == pick.end()) rest.push_back(T[i]);
        T = rest;
        found = true;
        break;
      }
      // next combination
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == T.size() - s + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (zdeg(cur) > 0) out.push_back(zprimitive(cur));
  return out;
}

ZPoly to_zpoly(const UPoly& f) {
  Integer den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z(f.coeffs().size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    Rational v = f.coeffs()[i] * den;
    z[i] = v.get_num();
  }
  return zprimitive(z);
}

UPoly to_upoly(const ZPoly& z) {
  std::vector<Rational> c(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) c[i] = Rational(z[i]);
  return UPoly(std::move(c));
}

// Yun over Z; entries a_1, a_2, ... (primitive).
std::vector<ZPoly> zsquare_free(const ZPoly& f) {
  std::vector<ZPoly> out;
  ZPoly d = zderiv(f);
  ZPoly c = zgcd(f, d);
  ZPoly w, y;
  if (!zdivexact(f, c, w) || !zdivexact(d, c, y)) throw InternalError("square-free decomposition: inexact");
  for (;;) {
    if (zdeg(w) <= 0) break;
    ZPoly z = zsub(y, zderiv(w));
    ZPoly g = zgcd(w, z);
    out.push_back(g);
    ZPoly w2, y2;
    if (!zdivexact(w, g, w2) || !zdivexact(z, g, y2)) throw InternalError("square-free decomposition: inexact");
    w = w2;
    y = y2;
  }
  return out;
}

std::vector<std::pair<ZPoly, unsigned>> zfactor(const ZPoly& f0) {
  ZPoly f = zprimitive(f0);
  std::vector<std::pair<ZPoly, unsigned>> out;
  if (zdeg(f) <= 0) return out;
  // Power of t first.
  std::size_t low = 0;
  while (f[low] == 0) ++low;
  if (low) {
    out.push_back({ZPoly{0, 1}, static_cast<unsigned>(low)});
    f.erase(f.begin(), f.begin() + static_cast<long>(low));
  }
  auto parts = zsquare_free(f);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (zdeg(parts[i]) <= 0) continue;
    for (auto& g : zassenhaus(parts[i])) out.push_back({zprimitive(g), static_cast<unsigned>(i + 1)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return out;
}

}  // namespace

std::vector<UPoly> square_free_decomposition(const UPoly& f) {
  std::vector<UPoly> out;
  if (f.degree() <= 0) return out;
  for (const auto& z : zsquare_free(to_zpoly(f))) out.push_back(to_upoly(z));
  return out;
}

std::vector<UFactor> factor_univariate(const UPoly& f) {
  if (f.is_zero()) throw DomainError("factorisation of the zero polynomial");
  std::vector<UFactor> out;
  for (auto& [z, m] : zfactor(to_zpoly(f))) out.push_back({to_upoly(z), m});
  return out;
}

namespace {

Polynomial normalise(const Polynomial& p) { return p.normalized(); }

// Odometer over count vectors c <= avail, stopping at those with sum s.
bool next_counts(std::vector<unsigned>& c, const std::vector<unsigned>& avail, unsigned s) {
  for (;;) {
    std::size_t k = 0;
    while (k < c.size() && c[k] == avail[k]) {
      c[k] = 0;
      ++k;
    }
    if (k == c.size()) return false;
    ++c[k];
    unsigned sum = 0;
    for (auto x : c) sum += x;
    if (sum == s) return true;
  }
}

}  // namespace

std::vector<Factor> factor(const Polynomial& f0) {
  if (f0.is_zero()) throw DomainError("factorisation of the zero polynomial");
  const RingPtr& ring = f0.ring();
  std::size_t n = ring->nvars();
  std::vector<Factor> out;
  if (f0.is_constant()) return out;
  Polynomial f = normalise(f0);

  // Monomial content.
  Monomial low = f.terms()[0].mono;
  for (const auto& t : f.terms()) low = low.gcd(t.mono);
  if (!low.is_one()) {
    for (std::size_t v = 0; v < n; ++v)
      if (low[v]) out.push_back({Polynomial::variable(ring, v), low[v]});
    f = *f.divide_exact(Polynomial::monomial(ring, low));
  }
  if (f.is_constant()) return out;

  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < n; ++v)
    if (f.involves(v)) vars.push_back(v);

  // Kronecker substitution with mixed radix.
  std::vector<Integer> weight(vars.size());
  std::vector<unsigned long> radix(vars.size());
  Integer w = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    weight[i] = w;
    radix[i] = static_cast<unsigned long>(f.degree_in(vars[i]) + 1);
    w *= radix[i];
  }
  if (w > 200000) throw UnsupportedInput("factorisation: Kronecker degree too large");
  std::size_t total = w.get_ui();
  ZPoly img(total, 0);
  {
    Integer den = 1;
    for (const auto& t : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    for (const auto& t : f.terms()) {
      unsigned long e = 0;
      for (std::size_t i = 0; i < vars.size(); ++i) e += t.mono[vars[i]] * weight[i].get_ui();
      Rational c = t.coeff * den;
      img[e] += c.get_num();
    }
    ztrim(img);
  }
  auto decode = [&](const ZPoly& u, std::optional<Polynomial>& res) {
    std::vector<Term> ts;
    for (std::size_t e = 0; e < u.size(); ++e) {
      if (u[e] == 0) continue;
      Monomial m(n);
      unsigned long rest = e;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        unsigned long d = (i + 1 < vars.size()) ? rest % radix[i] : rest;
        if (i + 1 < vars.size()) rest /= radix[i];
        if (d >= radix[i]) return;
        m[vars[i]] = static_cast<std::uint32_t>(d);
      }
      ts.push_back({m, Rational(u[e])});
    }
    res = Polynomial::from_terms(ring, std::move(ts));
  };

  auto ufac = zfactor(img);
  std::vector<ZPoly> distinct;
  std::vector<unsigned> avail;
  for (auto& [g, m] : ufac) {
    distinct.push_back(g);
    avail.push_back(m);
  }
  unsigned remaining = 0;
  for (auto a : avail) remaining += a;
  if (distinct.size() > 24) throw UnsupportedInput("factorisation: too many modular factors");

  std::vector<Polynomial> found;
  unsigned s = 1;
  std::size_t budget = 2000000;
  while (2 * s <= remaining && !f.is_constant()) {
    std::vector<unsigned> c(distinct.size(), 0);
    bool hit = false;
    while (next_counts(c, avail, s)) {
      if (budget-- == 0) throw UnsupportedInput("factorisation: recombination budget exhausted");
      ZPoly prod{1};
      for (std::size_t i = 0; i < c.size(); ++i)
        for (unsigned k = 0; k < c[i]; ++k) prod = zmul(prod, distinct[i]);
      std::optional<Polynomial> cand;
      decode(prod, cand);
      if (!cand || cand->is_constant()) continue;
      bool fits = true;
      for (auto v : vars)
        if (cand->degree_in(v) > f.degree_in(v)) fits = false;
      if (!fits) continue;
      auto q = f.divide_exact(*cand);
      if (!q) continue;
      found.push_back(normalise(*cand));
      f = *q;
      for (std::size_t i = 0; i < c.size(); ++i) avail[i] -= c[i];
      remaining -= s;
      hit = true;
      break;
    }
    if (!hit) ++s;
  }
  if (!f.is_constant()) found.push_back(normalise(f));

  for (auto& g : found) {
    bool merged = false;
    for (auto& o : out)
      if (o.f == g) {
        ++o.multiplicity;
        merged = true;
      }
    if (!merged) out.push_back({g, 1});
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.f.degree() != b.f.degree()) return a.f.degree() < b.f.degree();
    return a.f.to_string() < b.f.to_string();
  });
  return out;
}

}  // namespace mclosure
