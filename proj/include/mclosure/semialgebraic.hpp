#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mclosure/polynomial.hpp"

namespace mclosure {

enum class Relation { Positive, Negative, Zero };

struct SignCondition {
  Polynomial p;
  Relation rel;

  SignCondition(Polynomial poly, Relation r);
  bool holds(const std::vector<Rational>& point) const;
  std::string to_string() const;
};

// Closed rational interval.
struct QInterval {
  Rational lo, hi;
  static QInterval point(const Rational& a) { return {a, a}; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

QInterval operator+(const QInterval& a, const QInterval& b);
QInterval operator*(const QInterval& a, const QInterval& b);
QInterval pow(const QInterval& a, unsigned e);
// Enclosure of p over a box (one interval per ring variable).
QInterval eval_interval(const Polynomial& p, const std::vector<QInterval>& box);

// Three-valued truth over a box.
enum class Tri { False, True, Unknown };

struct Literal {
  SignCondition cond;
  bool negated;
};

// Boolean combination of sign conditions.
class SemialgebraicDescription {
 public:
  enum class Kind { True, False, Atom, And, Or, Not };

  explicit SemialgebraicDescription(RingPtr ring);  // `true`
  static SemialgebraicDescription constant(RingPtr ring, bool value);
  static SemialgebraicDescription atom(SignCondition c);
  static SemialgebraicDescription conj(std::vector<SemialgebraicDescription> parts);
  static SemialgebraicDescription disj(std::vector<SemialgebraicDescription> parts);
  static SemialgebraicDescription negate(SemialgebraicDescription d);

  // Grammar: or := and ('|' and)*, and := not ('&' not)*,
  // not := '!' not | '(' or ')' | 'true' | 'false' | expr REL expr,
  // REL one of > < = >= <= !=.
  static SemialgebraicDescription parse(const RingPtr& ring, const std::string& text);

  const RingPtr& ring() const { return ring_; }
  std::size_t dimension() const;
  Kind kind() const { return kind_; }
  const SignCondition& condition() const;
  const std::vector<SemialgebraicDescription>& children() const { return children_; }

  bool eval(const std::vector<Rational>& point) const;
  Tri eval_box(const std::vector<QInterval>& box) const;

  // Disjunctive normal form: each cell is a conjunction of literals.
  // An empty cell list is the empty set; an empty cell is everything.
  std::vector<std::vector<Literal>> cells() const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  Kind kind_ = Kind::True;
  std::shared_ptr<SignCondition> atom_;
  std::vector<SemialgebraicDescription> children_;
};

struct WitnessOptions {
  std::uint64_t budget = 200000;  // evaluations (points and boxes)
  unsigned max_height = 64;
};

// Bounded search for a rational point of desc at which every avoid
// polynomial is nonzero. The returned point is verified exactly.
std::optional<std::vector<Rational>> find_witness_point(const SemialgebraicDescription& desc,
                                                        const std::vector<Polynomial>& avoid,
                                                        const WitnessOptions& opts = {});

// Same search, additionally requiring accept(point); the first accepted
// candidate in search order is returned.
std::optional<std::vector<Rational>> find_witness_point(const SemialgebraicDescription& desc,
                                                        const std::vector<Polynomial>& avoid,
                                                        const WitnessOptions& opts,
                                                        const std::function<bool(const std::vector<Rational>&)>& accept);

}  // namespace mclosure
