#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mclosure/monomial.hpp"

namespace mclosure {

enum class OrderKind { Lex, GrevLex, Block };

// Lex, graded reverse lex, or a two-block elimination order: grevlex on the
// first `split` variables, ties broken by grevlex on the rest.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::GrevLex, 0); }
  static MonomialOrder block(std::size_t split) { return MonomialOrder(OrderKind::Block, split); }

  OrderKind kind() const { return kind_; }
  std::size_t split() const { return split_; }

  // -1, 0, +1. Throws StructuralError on length mismatch.
  int compare(const Monomial& a, const Monomial& b) const;

  // True when every monomial involving one of the first k variables dominates
  // every monomial free of them.
  bool eliminates_prefix(std::size_t k) const;

  std::string to_string() const;
  // "lex", "grevlex", "block:k".
  static MonomialOrder parse(const std::string& text);

  bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && split_ == o.split_; }

 private:
  MonomialOrder(OrderKind k, std::size_t s) : kind_(k), split_(s) {}
  OrderKind kind_ = OrderKind::GrevLex;
  std::size_t split_ = 0;
};

int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Variable names plus a monomial order.
class Ring {
 public:
  Ring(std::vector<std::string> names, MonomialOrder order);
  static RingPtr make(std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex());

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const MonomialOrder& order() const { return order_; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  // Throws StructuralError when absent.
  std::size_t require_index(const std::string& name) const;

  RingPtr with_order(MonomialOrder order) const;

  bool operator==(const Ring& o) const { return names_ == o.names_ && order_ == o.order_; }

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

}  // namespace mclosure
