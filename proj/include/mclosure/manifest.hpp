#pragma once

#include <string>
#include <vector>

#include "mclosure/diffop.hpp"
#include "mclosure/pipeline.hpp"
#include "mclosure/vanishing.hpp"

namespace mclosure {

// Line-oriented document:
//
//   kind polynomials|strata|operator|system
//   ring x, y, z
//   order grevlex          (optional; lex, grevlex, block:k)
//   rank 1                 (optional; vector length or operator arity)
//   [section]
//   one entry per line
//
// Blank lines and lines starting with # are ignored.
struct ManifestLine {
  std::size_t line = 0;  // 1-based source line, 0 when built in memory
  std::string text;
};

struct ManifestSection {
  std::string name;
  std::size_t line = 0;
  std::vector<ManifestLine> lines;
};

struct Manifest {
  std::string kind;
  std::vector<std::string> ring;
  std::string order = "grevlex";
  std::size_t rank = 1;
  std::vector<ManifestSection> sections;

  // Text equality; source line numbers are ignored.
  bool operator==(const Manifest& o) const;
  bool operator!=(const Manifest& o) const { return !(*this == o); }

  std::vector<const ManifestSection*> named(const std::string& name) const;
  // Exactly one section called name, else ParseError.
  const ManifestSection& only(const std::string& name) const;
  ManifestSection& add_section(const std::string& name);
};

// Unknown header keys and sections not allowed for the kind are ParseErrors
// naming the line.
Manifest parse_manifest(const std::string& text);
std::string print_manifest(const Manifest& m);

RingPtr manifest_ring(const Manifest& m);

std::vector<PolyVec> decode_vectors(const RingPtr& ring, std::size_t rank, const ManifestSection& s);
SubmoduleBasis decode_module(const RingPtr& ring, std::size_t rank, const ManifestSection& s);
void encode_vectors(ManifestSection& s, const std::vector<PolyVec>& v);
// A polynomials manifest holding M's generators.
Manifest module_manifest(const SubmoduleBasis& M, const std::string& section = "generators");

// Matrix rows "p1, ..., pN", all of the same length.
PolyMatrix decode_matrix(const RingPtr& ring, const ManifestSection& s);

// [stratum] sections with keys base, graph, coefficients, U, annihilator,
// coefficient, witness, T (rows separated by ';') and omega
// (`lambda ; (alpha) ; component ; value`, 1-based lambda and component).
Stratum decode_stratum(const ManifestSection& s);
ManifestSection encode_stratum(const Stratum& s);
std::vector<Stratum> decode_strata(const Manifest& m);

StratifiedOperator decode_stratified_operator(const Manifest& m);
// The single [operator] section over the manifest ring.
LinearDiffOp decode_operator(const Manifest& m);

void append_log(Manifest& m, const ProvenanceLog& log);

}  // namespace mclosure
