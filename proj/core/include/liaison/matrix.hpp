#pragma once

#include <cstdint>
#include <vector>

#include "liaison/ideal.hpp"
#include "liaison/polynomial.hpp"

namespace liaison {

/// Dense matrix of polynomials between graded free modules. Column j collects
/// the coordinates of the j-th generator image; every nonzero entry (i,j) is
/// homogeneous of degree col_twists[j] - row_twists[i].
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::vector<std::int64_t> row_twists,
             std::vector<std::int64_t> col_twists);

  int rows() const { return static_cast<int>(row_twists_.size()); }
  int cols() const { return static_cast<int>(col_twists_.size()); }
  const RingPtr& ring() const { return ring_; }
  const std::vector<std::int64_t>& row_twists() const { return row_twists_; }
  const std::vector<std::int64_t>& col_twists() const { return col_twists_; }

  const Polynomial& at(int i, int j) const;
  /// Enforces the graded-consistency invariant.
  void set(int i, int j, Polynomial p);

  bool is_zero() const;
  std::vector<Polynomial> column(int j) const;

  static PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<std::int64_t> row_twists_, col_twists_;
  std::vector<Polynomial> entries_;  // row-major
};

/// Ideal of all r x r minors; 1 <= r <= min(rows, cols).
Ideal minors(const PolyMatrix& m, int r);

/// Largest r with a nonvanishing r x r minor (0 for the zero matrix).
int rank(const PolyMatrix& m);

}  // namespace liaison
