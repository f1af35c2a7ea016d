#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mclosure/diffop.hpp"
#include "mclosure/vanishing.hpp"

namespace mclosure {

// Ordered key=value lines.
struct ProvenanceLog {
  std::vector<std::pair<std::string, std::string>> entries;

  void add(const std::string& key, const std::string& value) { entries.emplace_back(key, value); }
  void add(const std::string& key, long value) { add(key, std::to_string(value)); }
  void append(const ProvenanceLog& o, const std::string& prefix = "");
  // First value recorded under key.
  std::optional<std::string> get(const std::string& key) const;
  std::string to_string() const;
};

struct ModuleResult {
  SubmoduleBasis module;
  ProvenanceLog log;
};

// Degree constants of the solution step for graph annihilators of degrees
// Dmu, an operator of order M and coefficient graph-degree cL, and an ideal
// basis of graph-degree sdeg.
struct GraphBounds {
  unsigned D1 = 0, D2 = 0, D3 = 0;
  std::vector<unsigned> D4;  // per annihilator, D3 - D_mu
};
GraphBounds graph_bounds(const std::vector<unsigned>& Dmu, unsigned M, long cL, long sdeg);

// z-degree constants for removing z: A_k in the box z_lambda <= K D_lambda - 1,
// H_lambda of total z-degree <= D3[lambda]; D4 = max(D1, D3).
struct CoefficientBounds {
  unsigned D1 = 0, D2 = 0, D4 = 0;
  std::vector<unsigned> D3;
};
CoefficientBounds coefficient_bounds(const std::vector<unsigned>& Dlambda, unsigned M, long pdeg);

// { P : L(Q P) = 0 on V for all Q } over ring, for L differentiating only
// graph_vars; anns[mu] is quasi-monic in graph_vars[mu], ideal a Groebner
// basis of I(V). The other variables are the base coordinates.
ModuleResult graph_solutions(const RingPtr& ring, const std::vector<std::size_t>& graph_vars,
                             const std::vector<Polynomial>& anns, const SubmoduleBasis& ideal,
                             const LinearDiffOp& L);

// The z-free elements of `full` over xy, whose variables are the first ones
// of full's ring, given coefficient annihilators hats[lambda] in
// z_vars[lambda] and the order M of the operator that defined `full`.
ModuleResult z_free_solutions(const SubmoduleBasis& full, const RingPtr& xy, const std::vector<std::size_t>& z_vars,
                              const std::vector<Polynomial>& hats, unsigned M);

// Ring of the first n + m stratum variables (the stratum ring when p = 0).
RingPtr xy_ring(const Stratum& s);
// Extends a module over a prefix ring of target's variables into target.
SubmoduleBasis embed_prefix(const SubmoduleBasis& M, const RingPtr& target);

ModuleResult algorithm_I(const Stratum& s, const LinearDiffOp& L, const WitnessOptions& opts = {});
ModuleResult algorithm_I(const Stratum& s, const ComplexifyResult& c, const LinearDiffOp& L);
ModuleResult algorithm_II(const Stratum& s, const LinearDiffOp& L, const WitnessOptions& opts = {});
ModuleResult algorithm_II(const Stratum& s, const ComplexifyResult& c, const LinearDiffOp& L);
ModuleResult algorithm_IV(const Stratum& s, const LinearDiffOp& L, const WitnessOptions& opts = {});
ModuleResult algorithm_IV(const Stratum& s, const ComplexifyResult& c, const LinearDiffOp& L);

// Strata carry their coefficient annihilators (p = K) and Omega tables in
// local coordinates; `ring` is the global ring.
struct StratifiedOperator {
  RingPtr ring;
  std::size_t arity = 1;
  std::vector<Stratum> strata;
  void validate() const;
};

// Lifted operator of one stratum.
LinearDiffOp lifted_operator(const Stratum& s, std::size_t arity);

ModuleResult main_mclosure(const StratifiedOperator& op, const WitnessOptions& opts = {});
ModuleResult intersect_operator_modules(const std::vector<ModuleResult>& results);

// L = 1_E f: coefficient 1 on every stratum of E, P^ = z - 1.
StratifiedOperator indicator_operator(const std::vector<Stratum>& strata_of_E, const RingPtr& global);

// Number of (generator, Q) pairs with NF(L(Q g), ideal) != 0 among
// `samples` random Q of total degree <= degree per generator. The
// generators are embedded into L's ring by variable prefix.
std::size_t soundness_failures(const LinearDiffOp& L, const SubmoduleBasis& ideal, const SubmoduleBasis& module,
                               std::mt19937_64& rng, unsigned samples, unsigned degree);

}  // namespace mclosure
