#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mclosure/groebner.hpp"
#include "mclosure/parse.hpp"
#include "mclosure/vanishing.hpp"
#include "test_util.hpp"

namespace mclosure::fixtures {

using mclosure::testing::P;

inline std::vector<Rational> Q(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* s : xs) out.push_back(parse_rational(s));
  return out;
}

inline SubmoduleBasis ideal(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(P(r, s));
  return groebner_basis(SubmoduleBasis::from_ideal(r, g));
}

// Local ring lists the base names, then the graph names.
inline Stratum make_stratum(const std::vector<std::string>& base, const std::vector<std::string>& graph,
                            const std::string& U, const std::vector<std::string>& anns,
                            std::optional<std::vector<Rational>> witness = std::nullopt) {
  Stratum s;
  std::vector<std::string> names = base;
  names.insert(names.end(), graph.begin(), graph.end());
  s.ring = Ring::make(names);
  s.base_ring = Ring::make(base);
  s.n = base.size();
  s.m = graph.size();
  s.U = SemialgebraicDescription::parse(s.base_ring, U);
  for (const auto& a : anns) s.annihilators.push_back(parse_polynomial(s.ring, a));
  s.witness = std::move(witness);
  return s;
}

inline std::vector<Stratum> example_one(bool positive) {
  std::vector<Stratum> out;
  if (positive) {
    // Two sheets x = +-sqrt(z) y over each sign of y, 0 < z < 1.
    out.push_back(make_stratum({"y", "z"}, {"x"}, "y > 0 & z > 0 & z < 1", {"x^2 - z*y^2"}, Q({"1", "1/4", "1/2"})));
    out.push_back(make_stratum({"y", "z"}, {"x"}, "y > 0 & z > 0 & z < 1", {"x^2 - z*y^2"}, Q({"1", "1/4", "-1/2"})));
    out.push_back(make_stratum({"y", "z"}, {"x"}, "y < 0 & z > 0 & z < 1", {"x^2 - z*y^2"}, Q({"-1", "1/4", "1/2"})));
    out.push_back(make_stratum({"y", "z"}, {"x"}, "y < 0 & z > 0 & z < 1", {"x^2 - z*y^2"}, Q({"-1", "1/4", "-1/2"})));
    out.push_back(make_stratum({"z"}, {"x", "y"}, "z < 0", {"x", "y"}));
    out.push_back(make_stratum({"y"}, {"x", "z"}, "y != 0", {"x", "z"}));
    out.push_back(make_stratum({"y"}, {"z", "x"}, "y > 0", {"z - 1", "x - y"}));
    out.push_back(make_stratum({"y"}, {"z", "x"}, "y > 0", {"z - 1", "x + y"}));
  } else {
    out.push_back(make_stratum({"z"}, {"x", "y"}, "z < -1", {"x", "y"}));
    out.push_back(make_stratum({}, {"x", "y", "z"}, "true", {"x", "y", "z + 1"}));
  }
  return out;
}


// Appends coefficient variables with annihilators hats (parsed over the
// extended ring) and the Omega table.
inline Stratum with_coefficients(Stratum s, const std::vector<std::string>& znames,
                                 const std::vector<std::string>& hats, std::vector<OmegaEntry> omega) {
  std::vector<std::string> names = s.ring->names();
  names.insert(names.end(), znames.begin(), znames.end());
  RingPtr r = Ring::make(names);
  std::vector<std::size_t> id(s.ring->nvars());
  for (std::size_t v = 0; v < id.size(); ++v) id[v] = v;
  for (auto& a : s.annihilators) a = a.map_vars(r, id);
  s.ring = r;
  s.p = znames.size();
  s.coefficients.clear();
  for (const auto& h : hats) s.coefficients.push_back(parse_polynomial(r, h));
  s.omega = std::move(omega);
  return s;
}
}  // namespace mclosure::fixtures
