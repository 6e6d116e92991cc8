#include "liaison/linkage.hpp"

#include <algorithm>
#include <stdexcept>

#include "liaison/invariants.hpp"
#include "liaison/randomgen.hpp"

namespace liaison {

namespace {

void require_proper_homogeneous(const Ideal& I, const char* op) {
  if (!I.is_homogeneous())
    throw std::invalid_argument(std::string(op) + " requires a homogeneous ideal");
  if (I.is_zero_ideal()) throw std::invalid_argument(std::string(op) + " requires a nonzero ideal");
  if (I.is_unit_ideal()) throw std::invalid_argument(std::string(op) + " requires a proper ideal");
}

// One random homogeneous element of degree d inside I.
Polynomial random_element_of_degree(const Ideal& I, std::int64_t d, Rng& rng) {
  Polynomial f = Polynomial::zero(I.ring());
  for (const Polynomial& g : I.gens()) {
    std::int64_t gd = g.degree();
    if (gd > d) continue;
    Polynomial h = random_form(I.ring(), d - gd, rng);
    if (!h.is_zero()) f = f + h * g;
  }
  return f;
}

Ideal ideal_of(const std::vector<Polynomial>& fs, const RingPtr& R) {
  return Ideal(R, fs);
}

}  // namespace

std::vector<Polynomial> find_regular_sequence(const Ideal& I,
                                              std::span<const std::int64_t> degrees,
                                              std::uint64_t seed, int max_tries) {
  require_proper_homogeneous(I, "find_regular_sequence");
  int c = codimension(I);
  if (static_cast<int>(degrees.size()) != c)
    throw std::invalid_argument("degree list length must equal the height (" + std::to_string(c) +
                                ")");
  std::int64_t lowest = I.groebner().min_degree();
  for (std::int64_t d : degrees)
    if (d < lowest)
      throw std::invalid_argument("ideal has no elements of degree " + std::to_string(d));

  Rng rng(seed);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<Polynomial> z;
    bool bad = false;
    for (std::int64_t d : degrees) {
      Polynomial f = random_element_of_degree(I, d, rng);
      if (f.is_zero()) {
        bad = true;
        break;
      }
      z.push_back(std::move(f));
      // Incremental height check prunes doomed draws early.
      if (codimension(ideal_of(z, I.ring())) != static_cast<int>(z.size())) {
        bad = true;
        break;
      }
    }
    if (!bad) return z;
  }
  throw std::runtime_error("no regular sequence of the requested degrees found after " +
                           std::to_string(max_tries) + " tries");
}

LinkResult link(const Ideal& I, std::vector<Polynomial> z) {
  require_proper_homogeneous(I, "link");
  int c = codimension(I);
  if (static_cast<int>(z.size()) != c)
    throw std::invalid_argument("link needs a maximal regular sequence: expected length " +
                                std::to_string(c) + ", got " + std::to_string(z.size()));
  for (const Polynomial& f : z)
    if (!I.contains(f))
      throw std::invalid_argument("sequence entry " + f.to_string() + " is not in the ideal");
  if (!is_regular_sequence(z))
    throw std::invalid_argument("the given sequence is not regular");

  Ideal ci(I.ring(), z);
  Ideal linked = colon(ci, I);
  std::int64_t e_ci = multiplicity(ci);
  std::int64_t e_src = multiplicity(I);
  std::int64_t e_link = linked.is_unit_ideal() ? 0 : multiplicity(linked);
  return LinkResult{std::move(z), I,     std::move(linked), true, true,
                    e_ci == e_src + e_link};
}

namespace {

// Ascending tuples (d_1 <= ... <= d_c), ordered by total then entries.
std::vector<std::vector<std::int64_t>> degree_tuples(std::int64_t lo, std::int64_t hi, int c) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(c));
  auto rec = [&](auto&& self, int pos, std::int64_t min) -> void {
    if (pos == c) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t d = min; d <= hi; ++d) {
      cur[static_cast<std::size_t>(pos)] = d;
      self(self, pos + 1, d);
    }
  };
  rec(rec, 0, lo);
  std::stable_sort(out.begin(), out.end(),
                   [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
                     std::int64_t sa = 0, sb = 0;
                     for (std::int64_t x : a) sa += x;
                     for (std::int64_t x : b) sb += x;
                     if (sa != sb) return sa < sb;
                     return a < b;
                   });
  return out;
}

}  // namespace

Ideal unmixed_part(const Ideal& J, std::uint64_t seed) {
  require_proper_homogeneous(J, "unmixed_part");
  int c = codimension(J);

  std::int64_t lo = J.groebner().min_degree();
  std::int64_t hi = lo;
  for (const Polynomial& g : minimalized(J).gens()) hi = std::max(hi, g.degree());

  std::vector<Polynomial> z;
  bool found = false;
  std::uint64_t tuple_no = 0;
  for (const auto& degs : degree_tuples(lo, hi, c)) {
    ++tuple_no;
    try {
      z = find_regular_sequence(J, degs, Rng(seed).fork(tuple_no).next(), 16);
      found = true;
      break;
    } catch (const std::runtime_error&) {
      continue;  // no regular sequence at these degrees; move up
    }
  }
  if (!found) {
    // Top degrees always work for a generic draw; give them the full budget.
    std::vector<std::int64_t> degs(static_cast<std::size_t>(c), hi);
    z = find_regular_sequence(J, degs, Rng(seed).fork(0).next(), 64);
  }

  Ideal ci(J.ring(), z);
  if (ci.equals(J)) return J;  // complete intersection: already unmixed
  Ideal first = colon(ci, J);
  return minimalized(colon(ci, first));
}

bool is_unmixed(const Ideal& I, std::uint64_t seed) {
  return I.equals(unmixed_part(I, seed));
}

LinkPairReport verify_link_pair(const Ideal& A, const Ideal& B, std::span<const Polynomial> z) {
  require_same_ring(A.ring(), B.ring());
  if (z.empty()) throw std::invalid_argument("empty sequence");
  for (const Polynomial& f : z)
    if (!A.contains(f) || !B.contains(f))
      throw std::invalid_argument("sequence is not inside both ideals");
  if (!is_regular_sequence(z)) throw std::invalid_argument("sequence is not regular");
  if (A.is_unit_ideal() || B.is_unit_ideal())
    throw std::invalid_argument("link pair requires proper ideals");

  Ideal ci(A.ring(), std::vector<Polynomial>(z.begin(), z.end()));
  LinkPairReport r{};
  r.a_equals_colon_b = colon(ci, B).equals(A);
  r.b_equals_colon_a = colon(ci, A).equals(B);
  r.e_sequence = multiplicity(ci);
  r.e_a = multiplicity(A);
  r.e_b = multiplicity(B);
  r.multiplicity_ok = r.e_sequence == r.e_a + r.e_b;
  return r;
}

}  // namespace liaison
