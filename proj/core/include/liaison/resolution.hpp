#pragma once

#include <map>
#include <string>
#include <vector>

#include "liaison/ideal.hpp"
#include "liaison/matrix.hpp"

namespace liaison {

/// Chain of graded free modules F_0 <- F_1 <- ... with maps[i]: F_{i+1} -> F_i.
/// Consecutive composites are zero.
struct FreeResolution {
  RingPtr ring;
  std::vector<std::int64_t> f0_twists;
  std::vector<PolyMatrix> maps;

  int length() const { return static_cast<int>(maps.size()); }
  /// Throws unless shapes/twists chain correctly and all composites vanish.
  void validate() const;
};

/// Betti table of a minimal resolution: (homological index, internal degree)
/// -> rank.
struct BettiTable {
  std::map<std::pair<int, std::int64_t>, int> entries;
  int pd() const;
  int total_rank(int homological_index) const;
  std::string to_string() const;
};

/// Columns generate ker(m) as a submodule of the free module on m's columns;
/// the result is a minimal generating set (graded input required).
PolyMatrix syzygies(const PolyMatrix& m);

/// Minimal graded free resolution of R/I by iterated syzygies; I homogeneous.
FreeResolution resolve_quotient(const Ideal& I);

/// Free resolution of coker(presentation).
FreeResolution resolve_cokernel(const PolyMatrix& presentation);

/// Cancels unit entries until none remain; idempotent.
FreeResolution minimize(FreeResolution res);

BettiTable betti(const FreeResolution& res);

/// Length of the minimal resolution of R/I.
int pd_quotient(const Ideal& I);

/// Presentation matrix of A/B over the given generators of A; requires B ⊆ A.
PolyMatrix subquotient_presentation(const Ideal& A, const Ideal& B);

/// Length of the minimal resolution of coker(presentation).
int pd_module(const PolyMatrix& presentation);

struct AcyclicityStep {
  int index;                  // homological position i (1-based)
  int rank;                   // computed rank of the i-th map
  bool rank_condition;        // rank phi_i + rank phi_{i+1} == rank F_i
  std::int64_t minors_codim;  // codim of the rank-sized minors ideal
  bool depth_condition;       // minors_codim >= i
};

struct AcyclicityReport {
  bool acyclic;
  std::vector<AcyclicityStep> steps;
  std::string to_string() const;
};

/// Exactness test for a finite graded complex ending in R.
AcyclicityReport check_buchsbaum_eisenbud(const FreeResolution& res);

/// Test support: membership of a coordinate column in the column span of a
/// matrix, and equality of generated submodules.
bool submodule_contains_column(const PolyMatrix& gens, const std::vector<Polynomial>& column);
bool submodule_equal(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace liaison
