#pragma once

#include <memory>
#include <vector>

#include "liaison/groebner.hpp"
#include "liaison/polynomial.hpp"

namespace liaison {

/// Ideal given by a generator list, with a lazily computed reduced Groebner
/// basis cached behind the value (copies share the cache; installation is
/// guarded and idempotent).
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  const GroebnerBasis& groebner() const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool equals(const Ideal& other) const;
  bool is_zero_ideal() const { return groebner().is_zero(); }
  bool is_unit_ideal() const { return groebner().is_unit(); }
  bool is_homogeneous() const;  // every generator homogeneous

  std::string to_string() const;

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& a, int e);  // e >= 1; e == 0 is an error
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal colon(const Ideal& a, const Polynomial& f);  // f != 0
Ideal colon(const Ideal& a, const Ideal& b);       // b != (0)
Ideal saturate(const Ideal& a, const Polynomial& f);
/// Contraction to the subring on the trailing variables, via a block-order
/// Groebner basis; result lives in the same ring.
Ideal eliminate(const Ideal& a, int leading_vars);

/// Drops every generator contained in the ideal of the others, removing
/// higher-degree generators first.
Ideal minimalized(const Ideal& a);

/// Same ring contents under a different monomial order.
Ideal with_order(const Ideal& a, const MonomialOrder& order);

/// Rebuilds a polynomial in another ring; var_map[i] is the target index of
/// source variable i.
Polynomial transplant(const Polynomial& f, const RingPtr& target, const std::vector<int>& var_map);

}  // namespace liaison
