#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "liaison/field.hpp"
#include "liaison/monomial.hpp"
#include "liaison/ring.hpp"

namespace liaison {

struct Term {
  Scalar coef;
  Monomial mono;
};

struct Homogeneity {
  bool homogeneous;
  std::int64_t degree;  // -1 sentinel for the zero polynomial
};

/// Canonical multivariate polynomial: terms with nonzero coefficients, sorted
/// strictly descending under the ring order. Two polynomials representing the
/// same element are structurally identical. Immutable after construction.
class Polynomial {
 public:
  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial constant(RingPtr ring, Scalar c);
  static Polynomial variable(RingPtr ring, int index);
  static Polynomial term(RingPtr ring, Scalar c, Monomial m);
  /// Normalizes an arbitrary term list (sorts, merges, drops zeros).
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const;      // throws on zero
  const Monomial& leading_monomial() const;
  const Scalar& leading_coefficient() const;
  bool is_constant() const;  // zero or degree-0
  bool is_nonzero_constant() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial scaled(const Scalar& c) const;
  /// this + c * m * g, the reduction workhorse (single merge pass).
  static Polynomial fma(const Polynomial& f, const Scalar& c, const Monomial& m,
                        const Polynomial& g);
  Polynomial times_monomial(const Monomial& m) const;
  Polynomial pow(int e) const;  // e >= 0
  Polynomial monic() const;     // zero stays zero

  Homogeneity homogeneity() const;
  std::int64_t degree() const;  // max term degree; -1 for zero

  std::string to_string() const;
  std::size_t hash() const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace liaison
