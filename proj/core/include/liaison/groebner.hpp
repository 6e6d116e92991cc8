#pragma once

#include <span>
#include <vector>

#include "liaison/polynomial.hpp"

namespace liaison {

/// The reduced Groebner basis of an ideal: monic elements, auto-reduced (no
/// term of any element divisible by another's leading monomial), sorted by
/// leading monomial descending. Unique per (ideal, order), so recomputation
/// from any generating set of the same ideal yields structurally identical
/// output.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> reduced)
      : ring_(std::move(ring)), elems_(std::move(reduced)) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elems_; }
  bool is_zero() const { return elems_.empty(); }
  bool is_unit() const { return elems_.size() == 1 && elems_[0].is_nonzero_constant(); }
  /// Smallest total degree among elements; -1 for the zero ideal.
  std::int64_t min_degree() const;

  bool operator==(const GroebnerBasis& o) const { return elems_ == o.elems_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> elems_;
};

/// Buchberger's algorithm with normal pair selection; returns the reduced
/// Groebner basis. Zero generators are dropped.
GroebnerBasis buchberger(const RingPtr& ring, std::vector<Polynomial> gens);

/// Fully reduced normal form: no term of the result is divisible by any
/// leading monomial of G; f - result lies in the ideal of G.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

struct Division {
  Polynomial remainder;
  std::vector<Polynomial> quotients;  // f = sum quotients[i] * divisors[i] + remainder
};

/// Multivariate division with cofactor tracking.
Division divide(const Polynomial& f, std::span<const Polynomial> divisors);

/// Exact division by a single nonzero polynomial; throws if the remainder is
/// nonzero.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// Deterministic structural order on polynomials of one ring (leading
/// monomials first); used to keep generator lists stable.
bool poly_before(const Polynomial& a, const Polynomial& b);

}  // namespace liaison
