#include "mclosure/quasimonic.hpp"

#include <algorithm>
#include <map>

#include "mclosure/error.hpp"

namespace mclosure {

QuasiMonic::QuasiMonic(Polynomial p, std::size_t var) : p_(std::move(p)), var_(var) {
  if (var_ >= p_.ring()->nvars()) throw StructuralError("distinguished variable out of range");
  long d = p_.degree_in(var_);
  if (d < 1) throw StructuralError("quasi-monic polynomial must have positive degree in " + p_.ring()->name(var_));
  d_ = static_cast<unsigned>(d);
  a_ = p_.lc_in(var_);
}

Polynomial leading_product(const std::vector<QuasiMonic>& ps) {
  if (ps.empty()) throw StructuralError("empty quasi-monic list");
  Polynomial delta = Polynomial::constant(ps[0].poly().ring(), 1);
  for (const auto& q : ps) delta *= q.lead();
  return delta;
}

unsigned degree_bound(const std::vector<unsigned>& Dmus, unsigned K) {
  if (K == 0) throw DomainError("K must be positive");
  unsigned D = 0;
  for (unsigned d : Dmus) {
    if (d == 0) throw DomainError("degrees must be positive");
    D += K * d - 1;
  }
  return D;
}

namespace {

void check_family(const std::vector<QuasiMonic>& ps, const RingPtr& ring) {
  for (std::size_t i = 0; i < ps.size(); ++i) {
    require_same_ring(ps[i].poly().ring(), ring, "quasi-monic family");
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (i == j) continue;
      if (ps[i].var() == ps[j].var()) throw StructuralError("duplicate distinguished variable");
      if (ps[i].poly().involves(ps[j].var())) {
        throw StructuralError("quasi-monic polynomial involves another distinguished variable");
      }
    }
  }
}

Polynomial var_power(const RingPtr& ring, std::size_t v, unsigned e) {
  return Polynomial::monomial(ring, Monomial::variable(ring->nvars(), v, e));
}

}  // namespace

DivisionCertificate reduce_mod_powers(const Polynomial& P, const std::vector<QuasiMonic>& ps, unsigned K) {
  if (K == 0) throw DomainError("K must be positive");
  const RingPtr& ring = P.ring();
  check_family(ps, ring);
  std::size_t m = ps.size();
  DivisionCertificate cert;
  cert.H.assign(m, Polynomial(ring));
  cert.remainder = P;
  std::vector<unsigned> e(m, 0);
  Polynomial& R = cert.remainder;
  for (std::size_t mu = 0; mu < m; ++mu) {
    std::size_t v = ps[mu].var();
    Polynomial Q = ps[mu].poly().pow(K);
    Polynomial lcq = ps[mu].lead().pow(K);
    long dq = static_cast<long>(K * ps[mu].degree());
    for (long d = R.degree_in(v); d >= dq; d = R.degree_in(v)) {
      Polynomial c = R.coeffs_in(v)[static_cast<std::size_t>(d)];
      Polynomial shift = var_power(ring, v, static_cast<unsigned>(d - dq));
      if (auto q = c.divide_exact(lcq)) {
        Polynomial t = *q * shift;
        R -= t * Q;
        cert.H[mu] += t;
      } else {
        Polynomial t = c * shift;
        R = lcq * R - t * Q;
        for (auto& h : cert.H) h *= lcq;
        cert.H[mu] += t;
        e[mu] += K;
      }
    }
  }
  cert.l = m ? *std::max_element(e.begin(), e.end()) : 0;
  for (std::size_t mu = 0; mu < m; ++mu) {
    if (e[mu] == cert.l) continue;
    Polynomial f = ps[mu].lead().pow(cert.l - e[mu]);
    R *= f;
    for (auto& h : cert.H) h *= f;
  }
  for (const auto& q : ps) cert.bounds.push_back(K * q.degree() - 1);

  Polynomial lhs = m ? leading_product(ps).pow(cert.l) * P : P;
  Polynomial rhs = R;
  for (std::size_t mu = 0; mu < m; ++mu) rhs += cert.H[mu] * ps[mu].poly().pow(K);
  if (lhs != rhs) throw InternalError("division certificate failed verification");
  for (std::size_t mu = 0; mu < m; ++mu) {
    if (R.degree_in(ps[mu].var()) > static_cast<long>(cert.bounds[mu])) {
      throw InternalError("division remainder exceeds its degree bound");
    }
  }
  return cert;
}

namespace {

using Exps = std::vector<std::uint32_t>;

// Homogeneous part of total y-degree `deg`, keyed by y-exponents.
std::map<Exps, Polynomial> top_part(const Polynomial& p, const std::vector<std::size_t>& yv, long deg) {
  std::map<Exps, std::vector<Term>> parts;
  for (const auto& t : p.terms()) {
    Exps key(yv.size());
    long total = 0;
    Monomial rest = t.mono;
    for (std::size_t k = 0; k < yv.size(); ++k) {
      key[k] = t.mono[yv[k]];
      total += key[k];
      rest[yv[k]] = 0;
    }
    if (total == deg) parts[key].push_back({rest, t.coeff});
  }
  std::map<Exps, Polynomial> out;
  for (auto& [k, ts] : parts) out.emplace(k, Polynomial::from_terms(p.ring(), std::move(ts)));
  return out;
}

Polynomial y_monomial(const RingPtr& ring, const std::vector<std::size_t>& yv, const Exps& e) {
  Monomial m(ring->nvars());
  for (std::size_t k = 0; k < yv.size(); ++k) m[yv[k]] = e[k];
  return Polynomial::monomial(ring, m);
}

}  // namespace

CofactorReduction reduce_cofactor_degrees(const std::vector<Polynomial>& H, const std::vector<QuasiMonic>& ps,
                                          unsigned D) {
  if (H.size() != ps.size()) throw StructuralError("cofactor count does not match the quasi-monic family");
  if (ps.empty()) return {0, H};
  const RingPtr& ring = ps[0].poly().ring();
  check_family(ps, ring);
  for (const auto& h : H) require_same_ring(h.ring(), ring, "cofactor");
  std::size_t m = ps.size();
  std::vector<std::size_t> yv;
  for (const auto& q : ps) yv.push_back(q.var());
  for (const auto& q : ps) {
    if (q.degree() > D) throw DomainError("D must be at least every D_mu");
  }
  Polynomial S(ring);
  for (std::size_t mu = 0; mu < m; ++mu) S += H[mu] * ps[mu].poly();
  if (S.degree_in(yv) > static_cast<long>(D)) throw DomainError("combination exceeds the y-degree bound D");

  Polynomial delta = leading_product(ps);
  // delta / (a_i a_j) for i != j
  std::vector<std::vector<Polynomial>> cofac(m, std::vector<Polynomial>(m, Polynomial(ring)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      auto q = delta.divide_exact(ps[i].lead() * ps[j].lead());
      if (!q) throw InternalError("leading product not divisible by a pair of leads");
      cofac[i][j] = *q;
    }
  }

  CofactorReduction out{0, H};
  for (;;) {
    long M = -1;
    for (std::size_t mu = 0; mu < m; ++mu) {
      if (!out.H[mu].is_zero()) M = std::max(M, static_cast<long>(ps[mu].degree()) + out.H[mu].degree_in(yv));
    }
    if (M <= static_cast<long>(D)) break;

    // gamma -> (mu -> a_mu A^mu_{gamma - D_mu I_mu})
    std::map<Exps, std::map<std::size_t, Polynomial>> by_gamma;
    for (std::size_t mu = 0; mu < m; ++mu) {
      if (out.H[mu].is_zero()) continue;
      for (auto& [beta, A] : top_part(out.H[mu], yv, M - static_cast<long>(ps[mu].degree()))) {
        Exps g = beta;
        g[mu] += ps[mu].degree();
        by_gamma[g].emplace(mu, ps[mu].lead() * A);
      }
    }

    struct Move {
      std::size_t i, j;
      Exps shift;
      Polynomial C;
    };
    std::vector<Move> moves;
    for (auto& [g, Bs] : by_gamma) {
      Polynomial C(ring);
      std::vector<std::size_t> S_g;
      for (std::size_t mu = 0; mu < m; ++mu) {
        if (g[mu] >= ps[mu].degree()) S_g.push_back(mu);
      }
      for (std::size_t k = 0; k + 1 < S_g.size(); ++k) {
        auto it = Bs.find(S_g[k]);
        if (it != Bs.end()) C += it->second;
        if (C.is_zero()) continue;
        std::size_t i = S_g[k], j = S_g[k + 1];
        Exps shift = g;
        shift[i] -= ps[i].degree();
        shift[j] -= ps[j].degree();
        moves.push_back({i, j, shift, C});
      }
      auto last = Bs.find(S_g.back());
      if (last != Bs.end()) C += last->second;
      if (!C.is_zero()) throw InternalError("top-degree cancellation failed");
    }

    // lambda = C / (a_i a_j) when exact for every move, else C delta/(a_i a_j).
    std::vector<Polynomial> lambdas;
    bool exact = true;
    for (const auto& mv : moves) {
      auto q = mv.C.divide_exact(ps[mv.i].lead() * ps[mv.j].lead());
      if (!q) {
        exact = false;
        break;
      }
      lambdas.push_back(*q);
    }
    if (!exact) {
      lambdas.clear();
      for (const auto& mv : moves) lambdas.push_back(mv.C * cofac[mv.i][mv.j]);
      for (auto& h : out.H) h *= delta;
      ++out.l;
    }
    for (std::size_t k = 0; k < moves.size(); ++k) {
      const auto& mv = moves[k];
      Polynomial t = lambdas[k] * y_monomial(ring, yv, mv.shift);
      out.H[mv.i] -= t * ps[mv.j].poly();
      out.H[mv.j] += t * ps[mv.i].poly();
    }
  }

  Polynomial rhs(ring);
  for (std::size_t mu = 0; mu < m; ++mu) rhs += out.H[mu] * ps[mu].poly();
  if (rhs != delta.pow(out.l) * S) throw InternalError("cofactor reduction failed verification");
  return out;
}

}  // namespace mclosure
