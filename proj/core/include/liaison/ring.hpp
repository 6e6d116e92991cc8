#pragma once

#include <memory>
#include <string>
#include <vector>

#include "liaison/field.hpp"
#include "liaison/monomial.hpp"

namespace liaison {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Polynomial ring k[x_1,...,x_n] with a fixed global monomial order.
/// Immutable; shared by every value built over it.
class PolyRing {
 public:
  static RingPtr make(FieldSpec field, std::vector<std::string> var_names,
                      MonomialOrder order = MonomialOrder::grevlex());

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& var_names() const { return names_; }
  const std::string& var_name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  int var_index(const std::string& name) const;  // -1 when absent
  const MonomialOrder& order() const { return order_; }
  const FieldSpec& field() const { return field_; }

  bool same_as(const PolyRing& o) const;
  std::string to_string() const;

 private:
  PolyRing(FieldSpec field, std::vector<std::string> names, MonomialOrder order)
      : field_(field), names_(std::move(names)), order_(std::move(order)) {}

  FieldSpec field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace liaison
