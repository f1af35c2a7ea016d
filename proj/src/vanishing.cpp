#include "mclosure/vanishing.hpp"

#include <algorithm>

#include "mclosure/error.hpp"
#include "mclosure/factor.hpp"
#include "mclosure/groebner.hpp"
#include "mclosure/roots.hpp"
#include "mclosure/upoly.hpp"

namespace mclosure {

// ---- Stratum -------------------------------------------------------------

void Stratum::validate() const {
  if (!ring) throw StructuralError("stratum without a ring");
  if (ring->nvars() != n + m + p) throw StructuralError("stratum ring size differs from n + m + p");
  if (!base_ring || base_ring->nvars() != n) throw StructuralError("stratum base ring must have n variables");
  for (std::size_t i = 0; i < n; ++i) {
    if (base_ring->name(i) != ring->name(i)) throw StructuralError("base ring names differ from the stratum ring");
  }
  if (!U.ring() || !same_ring(U.ring(), base_ring)) throw StructuralError("U must be described over the base ring");
  if (annihilators.size() != m) throw StructuralError("one annihilator per graph coordinate is required");
  if (coefficients.size() != p) throw StructuralError("one annihilator per coefficient variable is required");
  auto check = [&](const Polynomial& f, std::size_t own, const char* what) {
    require_same_ring(f.ring(), ring, what);
    if (f.is_zero()) throw StructuralError(std::string(what) + " is zero");
    if (!f.involves(own)) throw StructuralError(std::string(what) + " does not involve " + ring->name(own));
    for (std::size_t v = n; v < n + m + p; ++v) {
      if (v != own && f.involves(v)) {
        throw StructuralError(std::string(what) + " for " + ring->name(own) + " involves " + ring->name(v));
      }
    }
  };
  for (std::size_t mu = 0; mu < m; ++mu) check(annihilators[mu], y_var(mu), "annihilator");
  for (std::size_t l = 0; l < p; ++l) check(coefficients[l], z_var(l), "coefficient annihilator");
  if (witness) {
    std::size_t w = witness->size();
    if (w != n && w != n + m && w != n + m + p) throw StructuralError("witness length must be n, n + m or n + m + p");
  }
  if (T) {
    if (T->rows != n + m || T->cols != n + m) throw StructuralError("T must be (n + m) x (n + m)");
    if (determinant(*T) == 0) throw DomainError("T is singular");
  }
  for (const auto& e : omega) {
    if (e.lambda >= p) throw StructuralError("omega coefficient index out of range");
    if (e.alpha.size() != n + m) throw StructuralError("omega multi-index must cover the n + m local coordinates");
  }
}

namespace {

QMatrix effective_T(const Stratum& s, const RingPtr& global) {
  std::size_t q = s.n + s.m;
  if (global->nvars() != q) throw StructuralError("global ring size differs from n + m");
  if (s.T) return *s.T;
  QMatrix T(q, q);
  for (std::size_t i = 0; i < q; ++i) {
    auto j = global->index_of(s.ring->name(i));
    if (!j) throw StructuralError("local coordinate " + s.ring->name(i) + " is not a global variable; give T");
    T.at(i, *j) = 1;
  }
  if (determinant(T) == 0) throw StructuralError("local coordinate names repeat a global variable");
  return T;
}

}  // namespace

Polynomial Stratum::pull_back(const Polynomial& local, const RingPtr& global) const {
  require_same_ring(local.ring(), ring, "pull back");
  QMatrix t = effective_T(*this, global);
  std::size_t q = n + m;
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    Polynomial img(global);
    if (i < q) {
      for (std::size_t j = 0; j < q; ++j) {
        if (t.at(i, j) != 0) img += Polynomial::variable(global, j) * t.at(i, j);
      }
    } else if (local.involves(i)) {
      throw StructuralError("cannot pull back a polynomial involving coefficient variables");
    }
    images.push_back(img);
  }
  return local.compose(images, global);
}

PolyVec Stratum::pull_back(const PolyVec& local, const RingPtr& global) const {
  std::vector<Polynomial> c;
  for (const auto& f : local.comps()) c.push_back(pull_back(f, global));
  return PolyVec(c);
}

Polynomial Stratum::push_forward(const Polynomial& global) const {
  QMatrix ti = inverse(effective_T(*this, global.ring()));
  std::size_t q = n + m;
  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < q; ++j) {
    Polynomial img(ring);
    for (std::size_t i = 0; i < q; ++i) {
      if (ti.at(j, i) != 0) img += Polynomial::variable(ring, i) * ti.at(j, i);
    }
    images.push_back(img);
  }
  return global.compose(images, ring);
}

PolyVec Stratum::push_forward(const PolyVec& global) const {
  std::vector<Polynomial> c;
  for (const auto& f : global.comps()) c.push_back(push_forward(f));
  return PolyVec(c);
}

// ---- annihilating polynomial ---------------------------------------------

Polynomial annihilating_polynomial(const SemialgebraicDescription& graph) {
  auto cells = graph.cells();
  if (cells.empty()) throw DomainError("graph description is empty");
  Polynomial P = Polynomial::constant(graph.ring(), 1);
  for (const auto& cell : cells) {
    bool contradictory = false;
    for (std::size_t a = 0; a < cell.size() && !contradictory; ++a) {
      for (std::size_t b = a + 1; b < cell.size(); ++b) {
        if (cell[a].negated != cell[b].negated && cell[a].cond.rel == cell[b].cond.rel &&
            cell[a].cond.p == cell[b].cond.p) {
          contradictory = true;
          break;
        }
      }
    }
    if (contradictory) continue;
    const Polynomial* eq = nullptr;
    for (const auto& lit : cell) {
      if (!lit.negated && lit.cond.rel == Relation::Zero && !lit.cond.p.is_zero()) {
        eq = &lit.cond.p;
        break;
      }
    }
    if (!eq) throw DomainError("a cell of the graph has no equation, so the set has interior and is not a graph");
    P *= *eq;
  }
  return P;
}

// ---- component selection -------------------------------------------------

unsigned derivative_preprocess(Polynomial& P, std::size_t t, const Polynomial& g) {
  unsigned k = 0;
  for (;;) {
    Polynomial d = P.diff(t);
    if (d.is_zero() || !d.divide_exact(g)) return k;
    if (d.degree() >= P.degree()) throw InternalError("derivative preprocessing did not lower the degree");
    P = d;
    ++k;
  }
}

namespace {

// Irreducible factor of f vanishing at w; DomainError if none involves t,
// UnsupportedInput if several vanish.
Polynomial factor_through(const Polynomial& f, std::size_t t, const std::vector<Rational>& w) {
  std::vector<Polynomial> hits;
  for (const auto& fa : factor(f)) {
    if (fa.f.eval(w) == 0) hits.push_back(fa.f);
  }
  if (hits.empty()) throw DomainError("witness does not lie on " + f.to_string() + " = 0");
  if (hits.size() > 1) throw UnsupportedInput("witness lies on several factors of " + f.to_string());
  if (!hits[0].involves(t)) throw DomainError("witness lies on a factor free of " + f.ring()->name(t));
  return hits[0];
}

Polynomial lc_product(const std::vector<Polynomial>& gs, const std::vector<std::size_t>& vars, const RingPtr& ring) {
  Polynomial prod = Polynomial::constant(ring, 1);
  for (std::size_t k = 0; k < gs.size(); ++k) prod *= gs[k].lc_in(vars[k]);
  return prod;
}

// Split J along a primitive element u = sum c_k t_k when it is not prime;
// keeps the component through the witness.
SubmoduleBasis split_by_primitive_element(const SubmoduleBasis& J, const std::vector<Polynomial>& gs,
                                          const std::vector<std::size_t>& vars, const std::vector<Rational>& w) {
  const RingPtr& ring = J.ring;
  std::size_t N = ring->nvars(), k = vars.size();
  std::vector<std::size_t> others;
  for (std::size_t v = 0; v < N; ++v) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) others.push_back(v);
  }
  std::vector<std::string> names;
  for (auto v : vars) names.push_back(ring->name(v));
  for (auto v : others) names.push_back(ring->name(v));
  std::string uname = "_u";
  while (ring->index_of(uname)) uname += "_";
  names.push_back(uname);
  auto R2 = Ring::make(names, MonomialOrder::block(k));
  std::vector<std::size_t> to2(N);
  for (std::size_t i = 0; i < k; ++i) to2[vars[i]] = i;
  for (std::size_t i = 0; i < others.size(); ++i) to2[others[i]] = k + i;

  long expected = 1;
  for (std::size_t i = 0; i < k; ++i) expected *= gs[i].degree_in(vars[i]);

  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Rational> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = Rational(static_cast<long>((i + 1) * (attempt + 1) + i * i));
    Polynomial u_def = Polynomial::variable(R2, k + others.size());
    Polynomial u_local(ring);
    Rational u0 = 0;
    for (std::size_t i = 0; i < k; ++i) {
      u_def -= Polynomial::variable(R2, i) * c[i];
      u_local += Polynomial::variable(ring, vars[i]) * c[i];
      u0 += c[i] * w[vars[i]];
    }
    SubmoduleBasis J2(R2, 1);
    for (const auto& g : J.gens) J2.add(PolyVec({g[0].map_vars(R2, to2)}));
    J2.add(PolyVec({u_def}));
    SubmoduleBasis E = eliminate(J2, [&] {
      std::vector<std::size_t> d(k);
      for (std::size_t i = 0; i < k; ++i) d[i] = i;
      return d;
    }());
    if (E.gens.size() != 1) continue;
    Polynomial h = E.gens[0][0];
    const RingPtr& RE = h.ring();
    std::size_t uidx = RE->require_index(uname);
    if (h.degree_in(uidx) != expected) continue;
    auto fs = factor(h);
    std::vector<Polynomial> with_u;
    for (const auto& f : fs) {
      if (f.f.involves(uidx)) {
        if (f.multiplicity > 1) throw InternalError("elimination polynomial is not square-free");
        with_u.push_back(f.f);
      }
    }
    if (with_u.size() == 1) return J;
    // Evaluate the factors at the witness image.
    std::vector<Rational> pt(RE->nvars());
    for (std::size_t i = 0; i < others.size(); ++i) pt[RE->require_index(ring->name(others[i]))] = w[others[i]];
    pt[uidx] = u0;
    std::vector<Polynomial> hits;
    for (const auto& f : with_u) {
      if (f.eval(pt) == 0) hits.push_back(f);
    }
    if (hits.size() != 1) continue;
    // Back to the original ring with u -> sum c_k t_k.
    std::vector<Polynomial> images;
    for (std::size_t v = 0; v < RE->nvars(); ++v) {
      if (v == uidx) {
        images.push_back(u_local);
      } else {
        images.push_back(Polynomial::variable(ring, ring->require_index(RE->name(v))));
      }
    }
    // J is radical and its components match the factors of h, so removing
    // the other factors leaves the prime through the witness.
    Polynomial rest = Polynomial::constant(ring, 1);
    for (const auto& f : with_u) {
      if (!(f == hits[0])) rest *= f.compose(images, ring);
    }
    return saturate(J, rest);
  }
  throw UnsupportedInput("could not separate the components of the triangular system through the witness");
}

}  // namespace

SubmoduleBasis select_component(const TriangularSystem& W, const std::vector<Rational>& witness) {
  const RingPtr& ring = W.ring;
  if (W.polys.size() != W.vars.size()) throw StructuralError("triangular system needs one variable per polynomial");
  if (witness.size() != ring->nvars()) throw StructuralError("witness length differs from the ring size");
  for (std::size_t k = 0; k < W.polys.size(); ++k) {
    require_same_ring(W.polys[k].ring(), ring, "triangular system");
    if (W.polys[k].is_zero()) throw StructuralError("triangular system contains zero");
    for (std::size_t j = 0; j < W.vars.size(); ++j) {
      if (j != k && W.polys[k].involves(W.vars[j])) throw StructuralError("triangular system is not triangular");
      if (j != k && W.vars[j] == W.vars[k]) throw StructuralError("repeated distinguished variable");
    }
    if (W.polys[k].eval(witness) != 0) throw DomainError("witness does not lie on W");
  }
  std::size_t m = W.polys.size();
  if (m == 0) return groebner_basis(SubmoduleBasis(ring, 1));
  QMatrix jac(m, ring->nvars());
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t v = 0; v < ring->nvars(); ++v) jac.at(k, v) = W.polys[k].diff(v).eval(witness);
  }
  if (rank(jac) < m) throw UnsupportedInput("differentials at the witness are linearly dependent");
  std::vector<Polynomial> gs;
  int nonlinear = 0;
  for (std::size_t k = 0; k < m; ++k) {
    gs.push_back(factor_through(W.polys[k], W.vars[k], witness));
    if (gs.back().degree_in(W.vars[k]) >= 2) ++nonlinear;
  }
  Polynomial lcs = lc_product(gs, W.vars, ring);
  SubmoduleBasis J = saturate(SubmoduleBasis::from_ideal(ring, gs), lcs);
  if (nonlinear >= 2) J = split_by_primitive_element(J, gs, W.vars, witness);
  return groebner_basis(J);
}

// ---- complexify ----------------------------------------------------------

namespace {

Polynomial to_base(const Polynomial& f, const RingPtr& base) {
  std::size_t n = base->nvars();
  std::vector<Term> ts;
  for (const auto& t : f.terms()) {
    Monomial mono(n);
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (i < n) {
        mono[i] = t.mono[i];
      } else if (t.mono[i] != 0) {
        throw InternalError("to_base on a polynomial with graph variables");
      }
    }
    ts.push_back({mono, t.coeff});
  }
  return Polynomial::from_terms(base, std::move(ts));
}

struct Completion {
  std::vector<Rational> point;
  std::vector<Polynomial> anns;
  std::vector<unsigned> replaced;
};

// Fill unknown graph coordinates by the unique real root rule, preprocess
// each annihilator, and check the differential condition.
std::optional<Completion> complete(const Stratum& s, const std::vector<Polynomial>& anns,
                                   const std::vector<std::size_t>& gv, std::vector<Rational> pt,
                                   std::size_t known, std::string* why) {
  auto fail = [&](const std::string& msg) -> std::optional<Completion> {
    if (why) *why = msg;
    return std::nullopt;
  };
  std::size_t n = s.n;
  std::vector<std::size_t> base_idx(n);
  for (std::size_t i = 0; i < n; ++i) base_idx[i] = i;
  std::vector<Rational> x0(pt.begin(), pt.begin() + static_cast<long>(n));
  for (std::size_t k = 0; k < gv.size(); ++k) {
    if (gv[k] < known) continue;
    Polynomial f = anns[k].partial_eval(base_idx, x0);
    if (f.is_zero()) return fail("annihilator vanishes identically over the base point");
    UPoly u = UPoly::from_polynomial(f, gv[k]);
    if (u.degree() < 1) return fail("annihilator has no root over the base point");
    auto roots = isolate_real_roots(u);
    if (roots.size() != 1) return fail("graph coordinate " + s.ring->name(gv[k]) + " is not determined by a unique real root");
    if (!roots[0].exact) return fail("graph coordinate " + s.ring->name(gv[k]) + " is irrational at the base point");
    pt[gv[k]] = roots[0].lo;
  }
  Completion c{pt, anns, {}};
  for (std::size_t k = 0; k < gv.size(); ++k) {
    if (c.anns[k].eval(pt) != 0) return fail("witness does not satisfy annihilator " + anns[k].to_string());
    Polynomial g;
    try {
      g = factor_through(c.anns[k], gv[k], pt);
    } catch (const UnsupportedInput& e) {
      return fail(e.what());
    } catch (const DomainError& e) {
      return fail(e.what());
    }
    c.replaced.push_back(derivative_preprocess(c.anns[k], gv[k], g));
    if (c.anns[k].diff(gv[k]).eval(pt) == 0) {
      return fail("derivative of " + c.anns[k].to_string() + " vanishes at the witness");
    }
  }
  return c;
}

}  // namespace

ComplexifyResult complexify(const Stratum& s, bool with_coefficients, const WitnessOptions& opts) {
  s.validate();
  std::vector<std::size_t> gv;
  std::vector<Polynomial> anns;
  for (std::size_t mu = 0; mu < s.m; ++mu) {
    gv.push_back(s.y_var(mu));
    anns.push_back(s.annihilators[mu]);
  }
  if (with_coefficients) {
    for (std::size_t l = 0; l < s.p; ++l) {
      gv.push_back(s.z_var(l));
      anns.push_back(s.coefficients[l]);
    }
  }
  std::size_t N = s.ring->nvars();
  std::optional<Completion> done;
  std::string why;
  if (s.witness) {
    std::vector<Rational> pt(N, Rational(0));
    std::copy(s.witness->begin(), s.witness->end(), pt.begin());
    std::vector<Rational> x0(pt.begin(), pt.begin() + static_cast<long>(s.n));
    if (!s.U.eval(x0)) throw DomainError("witness base point is not in U");
    for (std::size_t k = 0; k < gv.size(); ++k) {
      bool covered = std::all_of(gv.begin(), gv.end(), [&](std::size_t v) { return v < s.witness->size(); });
      if (covered && anns[k].eval(pt) != 0) throw DomainError("witness does not lie on " + anns[k].to_string() + " = 0");
    }
    done =complete(s, anns, gv, pt, s.witness->size(), &why);
    if (!done) {
      if (s.witness->size() == N || s.witness->size() >= s.n + (with_coefficients ? s.m + s.p : s.m)) {
        throw UnsupportedInput("witness rejected: " + why);
      }
      throw UnsupportedInput("partial witness cannot be completed: " + why);
    }
  } else {
    std::vector<Polynomial> avoid;
    for (std::size_t k = 0; k < gv.size(); ++k) avoid.push_back(to_base(anns[k].lc_in(gv[k]), s.base_ring));
    auto accept = [&](const std::vector<Rational>& x0) {
      std::vector<Rational> pt(N, Rational(0));
      std::copy(x0.begin(), x0.end(), pt.begin());
      done = complete(s, anns, gv, pt, s.n, nullptr);
      return done.has_value();
    };
    auto found = find_witness_point(s.U, avoid, opts, accept);
    if (!found) throw UnsupportedInput("no witness found within the search budget; supply one");
  }
  ComplexifyResult r;
  r.witness = done->point;
  r.replacements = done->replaced;
  for (std::size_t k = 0; k < gv.size(); ++k) {
    if (k < s.m) {
      r.annihilators.push_back(done->anns[k]);
    } else {
      r.coefficients.push_back(done->anns[k]);
    }
  }
  if (!with_coefficients) r.coefficients = s.coefficients;
  r.ideal = select_component(TriangularSystem{s.ring, done->anns, gv}, done->point);
  return r;
}

SubmoduleBasis vanishing_ideal(const std::vector<Stratum>& strata, const RingPtr& global, const WitnessOptions& opts) {
  if (strata.empty()) throw StructuralError("no strata given");
  std::optional<SubmoduleBasis> acc;
  for (const auto& s : strata) {
    auto r = complexify(s, false, opts);
    SubmoduleBasis I(global, 1);
    for (const auto& g : r.ideal.gens) I.add(PolyVec({s.pull_back(g[0], global)}));
    I = groebner_basis(I);
    acc = acc ? intersect(*acc, I) : I;
  }
  return groebner_basis(*acc);
}

}  // namespace mclosure
