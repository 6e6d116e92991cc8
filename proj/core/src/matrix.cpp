#include "liaison/matrix.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "liaison/ideal.hpp"

namespace liaison {

PolyMatrix::PolyMatrix(RingPtr ring, std::vector<std::int64_t> row_twists,
                       std::vector<std::int64_t> col_twists)
    : ring_(std::move(ring)),
      row_twists_(std::move(row_twists)),
      col_twists_(std::move(col_twists)),
      entries_(row_twists_.size() * col_twists_.size(), Polynomial::zero(ring_)) {}

const Polynomial& PolyMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows() || j < 0 || j >= cols()) throw std::out_of_range("matrix index");
  return entries_[static_cast<std::size_t>(i) * col_twists_.size() + static_cast<std::size_t>(j)];
}

void PolyMatrix::set(int i, int j, Polynomial p) {
  if (i < 0 || i >= rows() || j < 0 || j >= cols()) throw std::out_of_range("matrix index");
  require_same_ring(ring_, p.ring());
  if (!p.is_zero()) {
    Homogeneity h = p.homogeneity();
    if (!h.homogeneous || h.degree != col_twists_[static_cast<std::size_t>(j)] -
                                          row_twists_[static_cast<std::size_t>(i)])
      throw std::invalid_argument("entry degree violates graded consistency at (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
  }
  entries_[static_cast<std::size_t>(i) * col_twists_.size() + static_cast<std::size_t>(j)] =
      std::move(p);
}

bool PolyMatrix::is_zero() const {
  for (const Polynomial& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

std::vector<Polynomial> PolyMatrix::column(int j) const {
  std::vector<Polynomial> c;
  c.reserve(static_cast<std::size_t>(rows()));
  for (int i = 0; i < rows(); ++i) c.push_back(at(i, j));
  return c;
}

PolyMatrix PolyMatrix::multiply(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix r(a.ring_, a.row_twists_, b.col_twists_);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Polynomial s = Polynomial::zero(a.ring_);
      for (int k = 0; k < a.cols(); ++k) s = s + a.at(i, k) * b.at(k, j);
      r.set(i, j, std::move(s));
    }
  return r;
}

std::string PolyMatrix::to_string() const {
  std::string s;
  for (int i = 0; i < rows(); ++i) {
    s += i ? "\n[" : "[";
    for (int j = 0; j < cols(); ++j) {
      if (j) s += ", ";
      s += at(i, j).to_string();
    }
    s += "]";
  }
  return s;
}

namespace {

// Cofactor expansion along the subset row with the most zero entries.
Polynomial det_recursive(const PolyMatrix& m, std::vector<int> rs, std::vector<int> cs) {
  const RingPtr& R = m.ring();
  std::size_t n = rs.size();
  if (n == 1) return m.at(rs[0], cs[0]);

  std::size_t best_row = 0, best_zeros = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t z = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (m.at(rs[i], cs[j]).is_zero()) ++z;
    if (z >= best_zeros) {
      best_zeros = z;
      best_row = i;
    }
  }
  if (best_zeros == n) return Polynomial::zero(R);

  std::vector<int> sub_rows;
  for (std::size_t i = 0; i < n; ++i)
    if (i != best_row) sub_rows.push_back(rs[i]);

  Polynomial det = Polynomial::zero(R);
  for (std::size_t j = 0; j < n; ++j) {
    const Polynomial& e = m.at(rs[best_row], cs[j]);
    if (e.is_zero()) continue;
    std::vector<int> sub_cols;
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) sub_cols.push_back(cs[k]);
    Polynomial minor = det_recursive(m, sub_rows, sub_cols);
    if (minor.is_zero()) continue;
    Polynomial term = e * minor;
    det = ((best_row + j) % 2 == 0) ? det + term : det - term;
  }
  return det;
}

void subsets(int n, int r, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> pick(static_cast<std::size_t>(r));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == r) {
      f(pick);
      return;
    }
    for (int i = start; i <= n - (r - depth); ++i) {
      pick[static_cast<std::size_t>(depth)] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

Ideal minors(const PolyMatrix& m, int r) {
  if (r < 1 || r > std::min(m.rows(), m.cols()))
    throw std::invalid_argument("minor size out of range");
  std::vector<Polynomial> gens;
  subsets(m.rows(), r, [&](const std::vector<int>& rs) {
    subsets(m.cols(), r, [&](const std::vector<int>& cs) {
      Polynomial d = det_recursive(m, rs, cs);
      if (!d.is_zero() && std::find(gens.begin(), gens.end(), d) == gens.end())
        gens.push_back(std::move(d));
    });
  });
  return Ideal(m.ring(), std::move(gens));
}

int rank(const PolyMatrix& m) {
  int cap = std::min(m.rows(), m.cols());
  int rk = 0;
  for (int r = 1; r <= cap; ++r) {
    bool found = false;
    subsets(m.rows(), r, [&](const std::vector<int>& rs) {
      if (found) return;
      subsets(m.cols(), r, [&](const std::vector<int>& cs) {
        if (found) return;
        if (!det_recursive(m, rs, cs).is_zero()) found = true;
      });
    });
    if (!found) break;
    rk = r;
  }
  return rk;
}

}  // namespace liaison
