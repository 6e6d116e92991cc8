#include "liaison/ring.hpp"

#include <set>
#include <stdexcept>

namespace liaison {

RingPtr PolyRing::make(FieldSpec field, std::vector<std::string> var_names, MonomialOrder order) {
  if (var_names.empty()) throw std::invalid_argument("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : var_names) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name: " + n);
  }
  order.check_arity(static_cast<int>(var_names.size()));
  return RingPtr(new PolyRing(field, std::move(var_names), std::move(order)));
}

int PolyRing::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

bool PolyRing::same_as(const PolyRing& o) const {
  return field_ == o.field_ && names_ == o.names_ && order_ == o.order_;
}

std::string PolyRing::to_string() const {
  std::string s = field_.to_string() + "[";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) s += ",";
    s += names_[i];
  }
  s += "]";
  if (!(order_ == MonomialOrder::grevlex())) s += " order " + order_.to_string();
  return s;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b))
    throw std::invalid_argument("ring mismatch: " + (a ? a->to_string() : "<null>") + " vs " +
                                (b ? b->to_string() : "<null>"));
}

}  // namespace liaison
