#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "liaison/ideal.hpp"

namespace liaison {

/// Hilbert series of R/I written as N(t)/(1-t)^dim with N(1) != 0.
/// N(1) is the multiplicity for proper ideals.
struct HilbertSeries {
  std::vector<std::int64_t> numerator;
  int dim;
  std::int64_t multiplicity() const;
  std::string to_string() const;
};

/// Ideal of leading monomials of the reduced Groebner basis.
Ideal leading_ideal(const Ideal& I);

/// Requires a homogeneous ideal.
HilbertSeries hilbert_series(const Ideal& I);

/// Krull dimension of R/I; nvars for (0), -1 sentinel for the unit ideal.
int dimension(const Ideal& I);

/// Height of I: nvars - dimension(R/I).
int codimension(const Ideal& I);

/// N(1); requires I homogeneous and proper.
std::int64_t multiplicity(const Ideal& I);

/// Homogeneous forms are a regular sequence iff the ideal they generate has
/// height equal to their number. Entries must be homogeneous, nonzero
/// non-units; the list must be nonempty.
bool is_regular_sequence(std::span<const Polynomial> fs);

}  // namespace liaison
