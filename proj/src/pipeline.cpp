#include "mclosure/pipeline.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mclosure/error.hpp"
#include "mclosure/groebner.hpp"
#include "mclosure/quasimonic.hpp"

namespace mclosure {

// ---- provenance ------------------------------------------------------------

void ProvenanceLog::append(const ProvenanceLog& o, const std::string& prefix) {
  for (const auto& [k, v] : o.entries) entries.emplace_back(prefix + k, v);
}

std::optional<std::string> ProvenanceLog::get(const std::string& key) const {
  for (const auto& [k, v] : entries) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string ProvenanceLog::to_string() const {
  std::ostringstream os;
  for (const auto& [k, v] : entries) os << k << '=' << v << '\n';
  return os.str();
}

// ---- bounds ----------------------------------------------------------------

GraphBounds graph_bounds(const std::vector<unsigned>& Dmu, unsigned M, long cL, long sdeg) {
  GraphBounds b;
  unsigned K = M + 1, maxD = 0;
  for (unsigned d : Dmu) {
    b.D1 += K * d - 1;
    b.D2 += d - 1;
    maxD = std::max(maxD, d);
  }
  long d3 = std::max<long>(M + b.D1 + std::max(cL, 0L), b.D2 + std::max(sdeg, 0L));
  b.D3 = static_cast<unsigned>(std::max<long>(d3, maxD));
  for (unsigned d : Dmu) b.D4.push_back(b.D3 - d);
  return b;
}

CoefficientBounds coefficient_bounds(const std::vector<unsigned>& Dlambda, unsigned M, long pdeg) {
  CoefficientBounds b;
  unsigned K = M + 1, maxKD = 0;
  for (unsigned d : Dlambda) {
    b.D1 += K * d - 1;
    maxKD = std::max(maxKD, K * d);
  }
  b.D2 = static_cast<unsigned>(std::max<long>(b.D1 + std::max(pdeg, 0L), maxKD));
  b.D4 = b.D1;
  for (unsigned d : Dlambda) {
    b.D3.push_back(b.D2 - K * d);
    b.D4 = std::max(b.D4, b.D3.back());
  }
  return b;
}

namespace {

// Monomials over `vars` (full-length exponent vectors) with vars[i] <= box[i].
std::vector<Monomial> box_monomials(std::size_t nvars, const std::vector<std::size_t>& vars,
                                    const std::vector<unsigned>& box) {
  std::vector<Monomial> out{Monomial(nvars)};
  for (std::size_t i = 0; i < vars.size(); ++i) {
    std::vector<Monomial> next;
    for (const auto& m : out) {
      for (unsigned e = 0; e <= box[i]; ++e) {
        Monomial t = m;
        t[vars[i]] = e;
        next.push_back(t);
      }
    }
    out = std::move(next);
  }
  return out;
}

// Monomials over `vars` of total degree <= d.
std::vector<Monomial> total_monomials(std::size_t nvars, const std::vector<std::size_t>& vars, unsigned d) {
  std::vector<Monomial> out;
  for (auto& m : box_monomials(nvars, vars, std::vector<unsigned>(vars.size(), d))) {
    if (m.degree() <= d) out.push_back(std::move(m));
  }
  return out;
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& vars) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) out.push_back(v);
  }
  return out;
}

// Rewrites vectors over R as coefficient vectors over Rb indexed by
// (component, monomial in the bounded variables); Rb's variables are the
// `rest` variables of R in order.
class RowSpace {
 public:
  RowSpace(RingPtr R, std::vector<std::size_t> bvars, RingPtr Rb)
      : R_(std::move(R)), bvars_(std::move(bvars)), Rb_(std::move(Rb)), rest_(complement(R_->nvars(), bvars_)) {
    if (rest_.size() != Rb_->nvars()) throw InternalError("row space: base ring size");
  }

  using Column = std::map<std::size_t, Polynomial>;

  Column expand(const PolyVec& v) {
    std::map<std::size_t, std::vector<Term>> acc;
    for (std::size_t j = 0; j < v.rank(); ++j) {
      for (const auto& t : v[j].terms()) {
        std::vector<std::uint32_t> key;
        for (auto b : bvars_) key.push_back(t.mono[b]);
        Monomial m(Rb_->nvars());
        for (std::size_t i = 0; i < rest_.size(); ++i) m[i] = t.mono[rest_[i]];
        acc[row_of(j, key)].push_back({m, t.coeff});
      }
    }
    Column c;
    for (auto& [r, ts] : acc) {
      Polynomial p = Polynomial::from_terms(Rb_, std::move(ts));
      if (!p.is_zero()) c.emplace(r, std::move(p));
    }
    return c;
  }

  // Registers the row without touching any column.
  void touch(std::size_t comp, const Monomial& bmono) {
    std::vector<std::uint32_t> key;
    for (auto b : bvars_) key.push_back(bmono[b]);
    row_of(comp, key);
  }

  PolyMatrix matrix(const std::vector<Column>& cols) const {
    PolyMatrix A(Rb_, rows_.size(), cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) {
      for (const auto& [r, p] : cols[k]) A.at(r, k) = p;
    }
    return A;
  }

  std::size_t rows() const { return rows_.size(); }

  Polynomial to_base(const Polynomial& f) const {
    if (f.involves_any(bvars_)) throw InternalError("row space: polynomial involves bounded variables");
    std::vector<std::size_t> map(R_->nvars(), 0);
    for (std::size_t i = 0; i < rest_.size(); ++i) map[rest_[i]] = i;
    return f.map_vars(Rb_, map);
  }

  Polynomial from_base(const Polynomial& f) const { return f.map_vars(R_, rest_); }

 private:
  std::size_t row_of(std::size_t comp, const std::vector<std::uint32_t>& key) {
    auto [it, fresh] = rows_.emplace(std::make_pair(comp, key), rows_.size());
    (void)fresh;
    return it->second;
  }

  RingPtr R_;
  std::vector<std::size_t> bvars_;
  RingPtr Rb_;
  std::vector<std::size_t> rest_;
  std::map<std::pair<std::size_t, std::vector<std::uint32_t>>, std::size_t> rows_;
};

RingPtr base_ring_of(const RingPtr& R, const std::vector<std::size_t>& rest) {
  std::vector<std::string> names;
  for (auto v : rest) names.push_back(R->name(v));
  return Ring::make(names);
}

PolyVec scalar_at(const RingPtr& R, std::size_t rank, std::size_t pos, const Polynomial& p) {
  PolyVec v(R, rank);
  v[pos] = p;
  return v;
}

std::string join(const std::vector<unsigned>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<std::size_t> y_vars(const Stratum& s) {
  std::vector<std::size_t> v;
  for (std::size_t mu = 0; mu < s.m; ++mu) v.push_back(s.y_var(mu));
  return v;
}

std::vector<std::size_t> z_vars(const Stratum& s) {
  std::vector<std::size_t> v;
  for (std::size_t l = 0; l < s.p; ++l) v.push_back(s.z_var(l));
  return v;
}

}  // namespace

// ---- solutions for y-only operators ------------------------------------------

ModuleResult graph_solutions(const RingPtr& ring, const std::vector<std::size_t>& gv,
                             const std::vector<Polynomial>& anns, const SubmoduleBasis& ideal,
                             const LinearDiffOp& L) {
  require_same_ring(L.ring(), ring, "graph_solutions operator");
  require_same_ring(ideal.ring, ring, "graph_solutions ideal");
  if (anns.size() != gv.size()) throw StructuralError("graph_solutions: one annihilator per graph variable");
  if (!L.differentiates_only(gv)) throw StructuralError("graph_solutions: operator differentiates a base variable");
  const std::size_t J = L.arity();
  ModuleResult out;
  ProvenanceLog& log = out.log;
  log.add("graph_vars", static_cast<long>(gv.size()));
  if (L.is_zero()) {
    log.add("operator", "zero");
    out.module = groebner_basis(SubmoduleBasis::full(ring, J));
    return out;
  }

  const unsigned M = L.order(), K = M + 1;
  std::vector<QuasiMonic> qms;
  std::vector<unsigned> Dmu;
  for (std::size_t mu = 0; mu < gv.size(); ++mu) {
    std::vector<std::size_t> others;
    for (std::size_t nu = 0; nu < gv.size(); ++nu) {
      if (nu != mu) others.push_back(gv[nu]);
    }
    if (anns[mu].involves_any(others)) throw StructuralError("graph_solutions: annihilator involves another graph variable");
    qms.emplace_back(anns[mu], gv[mu]);
    Dmu.push_back(qms.back().degree());
  }
  Polynomial delta = gv.empty() ? Polynomial::constant(ring, 1) : leading_product(qms);

  long sdeg = 0;
  std::vector<Polynomial> S;
  for (const auto& g : ideal.gens) {
    if (g.rank() != 1) throw StructuralError("graph_solutions: ideal must have rank 1");
    if (g[0].is_zero()) continue;
    S.push_back(g[0]);
    sdeg = std::max(sdeg, g[0].degree_in(gv));
  }
  GraphBounds bd = graph_bounds(Dmu, M, L.coefficient_degree_in(gv), sdeg);
  log.add("M", static_cast<long>(M));
  log.add("D_mu", join(Dmu));
  log.add("D1*", static_cast<long>(bd.D1));
  log.add("D2*", static_cast<long>(bd.D2));
  log.add("D3*", static_cast<long>(bd.D3));
  log.add("D4*", join(bd.D4));

  const std::size_t nv = ring->nvars();
  std::vector<unsigned> box1, box2;
  for (unsigned d : Dmu) {
    box1.push_back(K * d - 1);
    box2.push_back(d - 1);
  }
  auto Gamma = total_monomials(nv, gv, M);
  auto B1 = box_monomials(nv, gv, box1);
  auto B2 = box_monomials(nv, gv, box2);
  const std::size_t G = Gamma.size();

  RingPtr Rb = base_ring_of(ring, complement(nv, gv));
  RowSpace rs(ring, gv, Rb);
  std::vector<RowSpace::Column> bcols, acols;
  for (std::size_t j = 0; j < J; ++j) {
    for (const auto& beta : B1) {
      PolyVec col(ring, G);
      for (std::size_t g = 0; g < G; ++g) {
        PolyVec e = scalar_at(ring, J, j, Polynomial::monomial(ring, Gamma[g] * beta));
        col[g] = apply(L, e);
      }
      bcols.push_back(rs.expand(col));
    }
  }
  for (std::size_t g = 0; g < G; ++g) {
    for (const auto& s : S) {
      for (const auto& beta : B2) acols.push_back(rs.expand(scalar_at(ring, G, g, s * Polynomial::monomial(ring, beta))));
    }
    for (std::size_t mu = 0; mu < gv.size(); ++mu) {
      for (const auto& eta : total_monomials(nv, gv, bd.D4[mu])) {
        acols.push_back(rs.expand(scalar_at(ring, G, g, anns[mu] * Polynomial::monomial(ring, eta))));
      }
    }
  }
  PolyMatrix A = rs.matrix(acols), B = rs.matrix(bcols);
  log.add("system", std::to_string(A.rows) + "x" + std::to_string(A.cols) + "+" + std::to_string(B.cols));
  CriticalL c0 = critical_l(A, B, rs.to_base(delta));
  log.add("l0", static_cast<long>(c0.l0));

  std::vector<PolyVec> sharp;
  for (const auto& g : c0.module.gens) {
    PolyVec P(ring, J);
    for (std::size_t j = 0; j < J; ++j) {
      for (std::size_t b = 0; b < B1.size(); ++b) {
        const Polynomial& c = g[j * B1.size() + b];
        if (!c.is_zero()) P[j] += rs.from_base(c) * Polynomial::monomial(ring, B1[b]);
      }
    }
    if (!P.is_zero()) sharp.push_back(P);
  }
  log.add("P#", static_cast<long>(sharp.size()));

  std::vector<PolyVec> fcols;
  for (const auto& a : anns) {
    Polynomial aK = a.pow(K);
    for (std::size_t j = 0; j < J; ++j) fcols.push_back(scalar_at(ring, J, j, aK));
  }
  for (const auto& P : sharp) fcols.push_back(P);
  PolyMatrix A2(ring, J, fcols.size());
  for (std::size_t k = 0; k < fcols.size(); ++k) {
    for (std::size_t j = 0; j < J; ++j) A2.at(j, k) = fcols[k][j];
  }
  CriticalL c1 = critical_l(A2, PolyMatrix::identity(ring, J), delta);
  log.add("l1", static_cast<long>(c1.l0));
  out.module = c1.module;
  log.add("generators", static_cast<long>(out.module.gens.size()));
  return out;
}

// ---- removal of z --------------------------------------------------------------

ModuleResult z_free_solutions(const SubmoduleBasis& full, const RingPtr& xy, const std::vector<std::size_t>& zv,
                              const std::vector<Polynomial>& hats, unsigned M) {
  const RingPtr& R = full.ring;
  const std::size_t J = full.rank, nv = R->nvars();
  if (hats.size() != zv.size()) throw StructuralError("z_free_solutions: one annihilator per coefficient variable");
  auto rest = complement(nv, zv);
  if (rest.size() != xy->nvars()) throw StructuralError("z_free_solutions: xy ring size");
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (rest[i] != i || R->name(i) != xy->name(i)) throw StructuralError("z_free_solutions: xy ring must be a prefix");
  }
  ModuleResult out;
  ProvenanceLog& log = out.log;
  log.add("coefficient_vars", static_cast<long>(zv.size()));
  if (zv.empty()) {
    std::vector<std::size_t> id(nv);
    for (std::size_t v = 0; v < nv; ++v) id[v] = v;
    SubmoduleBasis m(xy, J);
    for (const auto& g : full.gens) m.add(g.map_vars(xy, id));
    out.module = groebner_basis(m);
    return out;
  }

  const unsigned K = M + 1;
  std::vector<QuasiMonic> qms;
  std::vector<unsigned> Dl;
  for (std::size_t l = 0; l < zv.size(); ++l) {
    for (std::size_t k = 0; k < zv.size(); ++k) {
      if (k != l && hats[l].involves(zv[k])) {
        throw StructuralError("z_free_solutions: annihilator involves another coefficient variable");
      }
    }
    qms.emplace_back(hats[l], zv[l]);
    Dl.push_back(qms.back().degree());
  }
  Polynomial delta = leading_product(qms);
  long pdeg = 0;
  for (const auto& g : full.gens) {
    for (const auto& c : g.comps()) pdeg = std::max(pdeg, c.degree_in(zv));
  }
  CoefficientBounds bd = coefficient_bounds(Dl, M, pdeg);
  log.add("D_lambda", join(Dl));
  log.add("D1*", static_cast<long>(bd.D1));
  log.add("D2*", static_cast<long>(bd.D2));
  log.add("D3*", join(bd.D3));
  log.add("D4*", static_cast<long>(bd.D4));

  std::vector<unsigned> box;
  for (unsigned d : Dl) box.push_back(K * d - 1);
  auto Abox = box_monomials(nv, zv, box);
  RowSpace rs(R, zv, xy);
  for (std::size_t j = 0; j < J; ++j) rs.touch(j, Monomial(nv));
  std::vector<RowSpace::Column> acols, bcols;
  for (const auto& g : full.gens) {
    for (const auto& beta : Abox) acols.push_back(rs.expand(g * Polynomial::monomial(R, beta)));
  }
  for (std::size_t l = 0; l < zv.size(); ++l) {
    Polynomial hK = hats[l].pow(K);
    for (const auto& eta : total_monomials(nv, zv, bd.D3[l])) {
      Polynomial h = hK * Polynomial::monomial(R, eta);
      for (std::size_t j = 0; j < J; ++j) acols.push_back(rs.expand(scalar_at(R, J, j, h)));
    }
  }
  for (std::size_t j = 0; j < J; ++j) bcols.push_back(rs.expand(PolyVec::unit(R, J, j)));
  PolyMatrix A = rs.matrix(acols), B = rs.matrix(bcols);
  log.add("system", std::to_string(A.rows) + "x" + std::to_string(A.cols) + "+" + std::to_string(B.cols));
  CriticalL c = critical_l(A, B, rs.to_base(delta));
  log.add("l0", static_cast<long>(c.l0));
  out.module = c.module;
  log.add("generators", static_cast<long>(out.module.gens.size()));
  return out;
}

// ---- per-stratum algorithms --------------------------------------------------

RingPtr xy_ring(const Stratum& s) {
  if (s.p == 0) return s.ring;
  std::vector<std::string> names(s.ring->names().begin(), s.ring->names().begin() + (s.n + s.m));
  MonomialOrder ord = s.ring->order();
  if (ord.kind() == OrderKind::Block && ord.split() >= s.n + s.m) ord = MonomialOrder::grevlex();
  return Ring::make(names, ord);
}

SubmoduleBasis embed_prefix(const SubmoduleBasis& M, const RingPtr& target) {
  if (same_ring(M.ring, target)) return M;
  const std::size_t q = M.ring->nvars();
  if (q > target->nvars()) throw StructuralError("embed_prefix: target ring is smaller");
  std::vector<std::size_t> map(q);
  for (std::size_t v = 0; v < q; ++v) {
    if (M.ring->name(v) != target->name(v)) throw StructuralError("embed_prefix: variable names differ");
    map[v] = v;
  }
  SubmoduleBasis out(target, M.rank);
  for (const auto& g : M.gens) out.add(g.map_vars(target, map));
  return out;
}

ModuleResult algorithm_I(const Stratum& s, const LinearDiffOp& L, const WitnessOptions& opts) {
  s.validate();
  if (s.p != 0) throw StructuralError("algorithm_I: stratum has coefficient variables");
  return algorithm_I(s, complexify(s, false, opts), L);
}

ModuleResult algorithm_I(const Stratum& s, const ComplexifyResult& c, const LinearDiffOp& L) {
  if (s.p != 0) throw StructuralError("algorithm_I: stratum has coefficient variables");
  ModuleResult r = graph_solutions(s.ring, y_vars(s), c.annihilators, c.ideal, L);
  ProvenanceLog log;
  log.add("stage", "I");
  log.append(r.log, "I.");
  r.log = log;
  return r;
}

ModuleResult algorithm_II(const Stratum& s, const LinearDiffOp& L, const WitnessOptions& opts) {
  s.validate();
  return algorithm_II(s, complexify(s, true, opts), L);
}

ModuleResult algorithm_II(const Stratum& s, const ComplexifyResult& c, const LinearDiffOp& L) {
  if (c.coefficients.size() != s.p) throw StructuralError("algorithm_II: complexification lacks coefficient data");
  std::vector<std::size_t> gv = y_vars(s), zv = z_vars(s);
  gv.insert(gv.end(), zv.begin(), zv.end());
  std::vector<Polynomial> anns = c.annihilators;
  anns.insert(anns.end(), c.coefficients.begin(), c.coefficients.end());
  ModuleResult full = graph_solutions(s.ring, gv, anns, c.ideal, L);
  ModuleResult r = z_free_solutions(full.module, xy_ring(s), zv, c.coefficients, L.order());
  ModuleResult out;
  out.module = r.module;
  out.log.add("stage", "II");
  out.log.append(full.log, "II.graph.");
  out.log.append(r.log, "II.z.");
  return out;
}

ModuleResult algorithm_IV(const Stratum& s, const LinearDiffOp& L, const WitnessOptions& opts) {
  s.validate();
  return algorithm_IV(s, complexify(s, true, opts), L);
}

ModuleResult algorithm_IV(const Stratum& s, const ComplexifyResult& c, const LinearDiffOp& L) {
  require_same_ring(L.ring(), s.ring, "algorithm_IV");
  TangentFrame frame = build_tangent_frame(s, c, s.p > 0);
  XRewrite rw = eliminate_x_derivatives(L, frame);
  ModuleResult out;
  out.log.add("stage", "IV");
  out.log.add("IV.D", static_cast<long>(rw.D));
  out.log.add("IV.parts", static_cast<long>(rw.parts.size()));
  RingPtr xy = xy_ring(s);
  std::optional<SubmoduleBasis> acc;
  std::size_t k = 0;
  for (const auto& [alpha, La] : rw.parts) {
    if (La.is_zero()) continue;
    ModuleResult r = algorithm_II(s, c, La);
    std::string prefix = "IV.part[" + std::to_string(k++) + "].";
    std::string a;
    for (std::size_t i = 0; i < alpha.size(); ++i) a += (i ? "," : "") + std::to_string(alpha[i]);
    out.log.add(prefix + "alpha", "(" + a + ")");
    out.log.append(r.log, prefix);
    acc = acc ? intersect(*acc, r.module) : r.module;
  }
  out.module = acc ? groebner_basis(*acc) : groebner_basis(SubmoduleBasis::full(xy, L.arity()));
  out.log.add("IV.generators", static_cast<long>(out.module.gens.size()));
  return out;
}

// ---- stratified operators --------------------------------------------------------

void StratifiedOperator::validate() const {
  if (!ring) throw StructuralError("stratified operator: missing ring");
  if (arity == 0) throw StructuralError("stratified operator: arity must be positive");
  for (std::size_t k = 0; k < strata.size(); ++k) {
    const Stratum& s = strata[k];
    s.validate();
    if (s.n + s.m != ring->nvars()) {
      throw StructuralError("stratum " + std::to_string(k) + ": n + m differs from the ambient dimension");
    }
    if (s.coefficients.size() != s.p) throw StructuralError("stratum " + std::to_string(k) + ": coefficient count");
    for (const auto& e : s.omega) {
      if (e.component >= arity) throw StructuralError("stratum " + std::to_string(k) + ": omega component out of range");
    }
  }
}

LinearDiffOp lifted_operator(const Stratum& s, std::size_t arity) {
  return lift_operator(s.ring, s.n + s.m, s.omega, s.p, arity);
}

ModuleResult main_mclosure(const StratifiedOperator& op, const WitnessOptions& opts) {
  op.validate();
  ModuleResult out;
  out.log.add("strata", static_cast<long>(op.strata.size()));
  SubmoduleBasis acc = groebner_basis(SubmoduleBasis::full(op.ring, op.arity));
  for (std::size_t k = 0; k < op.strata.size(); ++k) {
    const Stratum& s = op.strata[k];
    ComplexifyResult c = complexify(s, true, opts);
    ModuleResult r = algorithm_IV(s, c, lifted_operator(s, op.arity));
    SubmoduleBasis local = embed_prefix(r.module, s.ring);
    SubmoduleBasis global(op.ring, op.arity);
    for (const auto& g : local.gens) global.add(s.pull_back(g, op.ring));
    global = groebner_basis(global);
    std::string prefix = "stratum[" + std::to_string(k) + "].";
    out.log.append(r.log, prefix);
    out.log.add(prefix + "module", static_cast<long>(global.gens.size()));
    acc = intersect(acc, global);
    out.log.add(prefix + "running", static_cast<long>(acc.gens.size()));
  }
  out.module = groebner_basis(acc);
  out.log.add("generators", static_cast<long>(out.module.gens.size()));
  return out;
}

ModuleResult intersect_operator_modules(const std::vector<ModuleResult>& results) {
  if (results.empty()) throw StructuralError("intersect_operator_modules: no inputs");
  ModuleResult out;
  SubmoduleBasis acc = results[0].module;
  for (std::size_t k = 0; k < results.size(); ++k) {
    const SubmoduleBasis& m = results[k].module;
    if (m.ring->names() != acc.ring->names() || m.rank != acc.rank) {
      throw StructuralError("intersect_operator_modules: ring or vector length mismatch");
    }
    out.log.append(results[k].log, "input[" + std::to_string(k) + "].");
    if (k > 0) acc = intersect(acc, SubmoduleBasis(acc.ring, m.rank, [&] {
                                 std::vector<PolyVec> g;
                                 for (const auto& v : m.gens) g.push_back(v.reorder(acc.ring));
                                 return g;
                               }()));
  }
  out.module = groebner_basis(acc);
  out.log.add("generators", static_cast<long>(out.module.gens.size()));
  return out;
}

StratifiedOperator indicator_operator(const std::vector<Stratum>& strata, const RingPtr& global) {
  StratifiedOperator op;
  op.ring = global;
  op.arity = 1;
  for (const auto& s0 : strata) {
    if (s0.p != 0) throw StructuralError("indicator_operator: strata of E carry no coefficients");
    std::vector<std::string> names = s0.ring->names();
    std::string h = "h";
    for (int k = 1; std::find(names.begin(), names.end(), h) != names.end(); ++k) h = "h" + std::to_string(k);
    names.push_back(h);
    RingPtr r = Ring::make(names, s0.ring->order());
    std::vector<std::size_t> id(s0.ring->nvars());
    for (std::size_t v = 0; v < id.size(); ++v) id[v] = v;
    Stratum s = s0;
    s.ring = r;
    s.p = 1;
    for (auto& a : s.annihilators) a = a.map_vars(r, id);
    s.coefficients = {Polynomial::variable(r, names.size() - 1) - Polynomial::constant(r, 1)};
    if (s.witness && s.witness->size() == s.n + s.m) s.witness->push_back(Rational(1));
    s.omega = {OmegaEntry{0, Monomial(s.n + s.m), 0, Rational(1)}};
    op.strata.push_back(std::move(s));
  }
  return op;
}

std::size_t soundness_failures(const LinearDiffOp& L, const SubmoduleBasis& ideal, const SubmoduleBasis& module,
                               std::mt19937_64& rng, unsigned samples, unsigned degree) {
  const RingPtr& R = L.ring();
  SubmoduleBasis M = embed_prefix(module, R);
  std::size_t failures = 0;
  std::uniform_int_distribution<int> coef(-5, 5), nterms(1, 4);
  std::uniform_int_distribution<unsigned> deg(0, degree);
  std::uniform_int_distribution<std::size_t> var(0, R->nvars() ? R->nvars() - 1 : 0);
  for (const auto& g : M.gens) {
    for (unsigned t = 0; t < samples; ++t) {
      std::vector<Term> ts;
      for (int k = nterms(rng); k > 0; --k) {
        Monomial m(R->nvars());
        for (unsigned d = deg(rng); d > 0 && R->nvars(); --d) m[var(rng)] += 1;
        ts.push_back({m, Rational(coef(rng))});
      }
      Polynomial Q = Polynomial::from_terms(R, ts);
      if (Q.is_zero()) Q = Polynomial::constant(R, 1);
      if (!normal_form(apply(L, g * Q), ideal).is_zero()) ++failures;
    }
  }
  return failures;
}

}  // namespace mclosure
