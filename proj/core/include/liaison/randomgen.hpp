#pragma once

#include <cstdint>
#include <vector>

#include "liaison/ideal.hpp"

namespace liaison {

/// Deterministic splitmix64 stream; identical across platforms for a seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform-ish value in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Derive an independent stream for a labelled subtask.
  Rng fork(std::uint64_t label) const;

 private:
  std::uint64_t state_;
};

/// All monomials of the given total degree, in a fixed enumeration order.
std::vector<Monomial> monomials_of_degree(int nvars, std::int64_t degree);

/// Dense random homogeneous form: every degree-d monomial gets a random
/// coefficient (possibly zero). Over the rationals coefficients are small
/// integers.
Polynomial random_form(const RingPtr& ring, std::int64_t degree, Rng& rng);

/// Same, but resampled until nonzero.
Polynomial random_nonzero_form(const RingPtr& ring, std::int64_t degree, Rng& rng);

}  // namespace liaison
