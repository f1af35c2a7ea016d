#pragma once

#include <optional>
#include <vector>

#include "mclosure/polyvec.hpp"

namespace mclosure {

// Reduced, monic Groebner basis in the ring's monomial order extended to
// R^J by `kind`. Output generators are sorted by ascending leading term.
SubmoduleBasis groebner_basis(const SubmoduleBasis& M,
                              ModuleOrderKind kind = ModuleOrderKind::TermOverPosition);

// Remainder of full division by the generators of B (in B's orders). When B
// is a Groebner basis the result is the unique normal form.
PolyVec normal_form(const PolyVec& f, const SubmoduleBasis& B);
Polynomial normal_form(const Polynomial& f, const SubmoduleBasis& B);

// S-vector of two module elements; zero when leading components differ.
PolyVec s_vector(const PolyVec& f, const PolyVec& g, ModuleOrderKind kind);
// Every S-vector of B reduces to zero modulo B.
bool satisfies_buchberger_criterion(const SubmoduleBasis& B);

bool module_contains(const SubmoduleBasis& M, const PolyVec& v);
bool module_contains(const SubmoduleBasis& M, const Polynomial& f);
bool module_subset(const SubmoduleBasis& A, const SubmoduleBasis& B);
bool module_equal(const SubmoduleBasis& A, const SubmoduleBasis& B);

// Generators of { s : sum_k s_k gens_k = 0 } in R^K, K = gens.size().
// `rank` is the common rank of the generators.
SubmoduleBasis syzygy_module(const RingPtr& ring, std::size_t rank, const std::vector<PolyVec>& gens);

// Some P with A P = Q, or nullopt. The solution is checked exactly.
std::optional<PolyVec> solve_inhomogeneous(const PolyMatrix& A, const PolyVec& Q);

SubmoduleBasis intersect(const SubmoduleBasis& A, const SubmoduleBasis& B);
// M : f = { P : f P in M }.
SubmoduleBasis colon(const SubmoduleBasis& M, const Polynomial& f);
// M : f^infinity by iterated colon. f = 0 is a domain error.
SubmoduleBasis saturate(const SubmoduleBasis& M, const Polynomial& f, std::size_t* rounds = nullptr);

// Drops the variables with indices `drop`, which must be exactly the first k
// variables of a ring whose order eliminates them (lex or block:k).
// The result lives in the ring of the remaining variables.
SubmoduleBasis eliminate(const SubmoduleBasis& M, const std::vector<std::size_t>& drop);

// { P in R^K : delta^l B P in image(A) }. A is I x N, B is I x K.
SubmoduleBasis solution_module(const PolyMatrix& A, const PolyMatrix& B, const Polynomial& delta,
                               unsigned l);

struct CriticalL {
  unsigned l0 = 0;
  SubmoduleBasis module;  // M_{l0}, reduced Groebner basis (TOP)
};

// Smallest l0 with M_{l0} = M_{l0+1}, tested for l = 0, 1, 2, ...
// Throws DomainError for delta = 0, UnsupportedInput past `max_l`.
CriticalL critical_l(const PolyMatrix& A, const PolyMatrix& B, const Polynomial& delta,
                     unsigned max_l = 64);

}  // namespace mclosure
