#include "liaison/randomgen.hpp"

#include <stdexcept>

namespace liaison {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("empty range");
  return next() % n;
}

Rng Rng::fork(std::uint64_t label) const {
  Rng r(state_ ^ (label * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull));
  r.next();
  return r;
}

std::vector<Monomial> monomials_of_degree(int nvars, std::int64_t degree) {
  std::vector<Monomial> out;
  std::vector<std::int32_t> exp(static_cast<std::size_t>(nvars), 0);
  // Lexicographic enumeration of compositions of `degree` into nvars parts.
  auto rec = [&](auto&& self, int var, std::int64_t rest) -> void {
    if (var == nvars - 1) {
      exp[static_cast<std::size_t>(var)] = static_cast<std::int32_t>(rest);
      out.emplace_back(exp);
      return;
    }
    for (std::int64_t e = rest; e >= 0; --e) {
      exp[static_cast<std::size_t>(var)] = static_cast<std::int32_t>(e);
      self(self, var + 1, rest - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

Polynomial random_form(const RingPtr& ring, std::int64_t degree, Rng& rng) {
  const FieldSpec& F = ring->field();
  std::vector<Term> terms;
  for (Monomial& m : monomials_of_degree(ring->nvars(), degree)) {
    Scalar c = F.is_prime_field()
                   ? Scalar::from_int(F, static_cast<std::int64_t>(rng.below(F.characteristic())))
                   : Scalar::from_int(F, static_cast<std::int64_t>(rng.below(21)) - 10);
    if (!c.is_zero()) terms.push_back({std::move(c), std::move(m)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial random_nonzero_form(const RingPtr& ring, std::int64_t degree, Rng& rng) {
  for (int tries = 0; tries < 64; ++tries) {
    Polynomial f = random_form(ring, degree, rng);
    if (!f.is_zero()) return f;
  }
  throw std::runtime_error("failed to draw a nonzero form");
}

}  // namespace liaison
