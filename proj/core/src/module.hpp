#pragma once

// Internal free-module Groebner engine: elements of R^c with a
// term-over-position order, Buchberger with representation tracking, and
// division with cofactors. Backs syzygy computation and subquotient
// presentations; not part of the installed API.

#include <optional>
#include <span>
#include <vector>

#include "liaison/matrix.hpp"
#include "liaison/polynomial.hpp"

namespace liaison::detail {

struct MTerm {
  Scalar coef;
  Monomial mono;
  int comp;
};

/// Element of a free module R^c; terms strictly descending: ring order on the
/// monomial first, ties broken by smaller component index ranking higher.
class ModPoly {
 public:
  static ModPoly zero(RingPtr ring, int ncomp);
  static ModPoly from_terms(RingPtr ring, int ncomp, std::vector<MTerm> terms);
  static ModPoly from_column(const PolyMatrix& m, int col);
  static ModPoly basis_vector(RingPtr ring, int ncomp, int comp);

  const RingPtr& ring() const { return ring_; }
  int ncomp() const { return ncomp_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<MTerm>& terms() const { return terms_; }
  const MTerm& leading() const;

  /// f + c * m * g (merge pass).
  static ModPoly fma(const ModPoly& f, const Scalar& c, const Monomial& m, const ModPoly& g);
  ModPoly monic() const;
  bool operator==(const ModPoly& o) const;

  /// Coordinate polynomials (length ncomp).
  std::vector<Polynomial> to_columns() const;
  /// Uniform value of entry-degree + twist; nullopt when inhomogeneous.
  /// Zero elements report nullopt as well.
  std::optional<std::int64_t> graded_degree(const std::vector<std::int64_t>& comp_twists) const;

 private:
  ModPoly(RingPtr ring, int ncomp, std::vector<MTerm> terms)
      : ring_(std::move(ring)), ncomp_(ncomp), terms_(std::move(terms)) {}
  RingPtr ring_;
  int ncomp_;
  std::vector<MTerm> terms_;
};

bool mterm_less(const RingPtr& ring, const MTerm& a, const MTerm& b);

struct ModDivision {
  ModPoly remainder;
  std::vector<Polynomial> quotients;  // f = sum quotients[k] * basis[k] + remainder
};

ModDivision mod_divide(const ModPoly& f, std::span<const ModPoly> basis);

struct ModGB {
  std::vector<ModPoly> elements;  // reduced: monic, auto-reduced, sorted descending
  /// elements[k] == sum reps[k][j] * gens[j]; filled only when tracking.
  std::vector<std::vector<Polynomial>> reps;
};

/// Reduced Groebner basis of the submodule generated by gens (zero generators
/// ignored); tracks representations in terms of the input when requested.
ModGB module_groebner(const RingPtr& ring, int ncomp, std::span<const ModPoly> gens, bool track);

bool submodule_contains(const ModGB& gb, const ModPoly& elem);

}  // namespace liaison::detail
