#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "liaison/ideal.hpp"

namespace liaison {

/// Result of computing the direct link (z) : I.
struct LinkResult {
  std::vector<Polynomial> sequence;  // the regular sequence z, z ⊆ source
  Ideal source;
  Ideal linked;  // (z) : source
  bool sequence_in_source;
  bool sequence_regular;
  bool multiplicity_complementary;  // e(R/(z)) == e(R/source) + e(R/linked)
  bool verified() const {
    return sequence_in_source && sequence_regular && multiplicity_complementary;
  }
};

/// Random homogeneous combinations of degree-matched multiples of I's
/// generators forming a regular sequence; deterministic for a seed, bounded
/// retries. degrees.size() must equal codim(I), and I must contain elements
/// of each requested degree.
std::vector<Polynomial> find_regular_sequence(const Ideal& I,
                                              std::span<const std::int64_t> degrees,
                                              std::uint64_t seed, int max_tries = 64);

/// Direct link (z):I for a regular sequence z inside I of length codim(I).
LinkResult link(const Ideal& I, std::vector<Polynomial> z);

/// Top-dimensional component via the double link (z) : ((z) : J) along a
/// lowest-degree regular sequence found inside J. Idempotent; preserves
/// height and multiplicity; contains J.
Ideal unmixed_part(const Ideal& J, std::uint64_t seed = 1);

bool is_unmixed(const Ideal& I, std::uint64_t seed = 1);

struct LinkPairReport {
  bool a_equals_colon_b;
  bool b_equals_colon_a;
  bool multiplicity_ok;
  std::int64_t e_sequence, e_a, e_b;
  bool ok() const { return a_equals_colon_b && b_equals_colon_a && multiplicity_ok; }
};

/// Checks A = (z):B, B = (z):A and e(R/(z)) = e(R/A) + e(R/B).
LinkPairReport verify_link_pair(const Ideal& A, const Ideal& B, std::span<const Polynomial> z);

}  // namespace liaison
