#include "liaison/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace liaison {

std::int64_t GroebnerBasis::min_degree() const {
  std::int64_t d = -1;
  for (const Polynomial& g : elems_) {
    std::int64_t gd = g.degree();
    if (d < 0 || gd < d) d = gd;
  }
  return d;
}

namespace {

// One reduction step plus term-by-term remainder construction.
struct Reducer {
  const MonomialOrder& ord;
  std::span<const Polynomial> basis;

  // Returns the fully reduced remainder; when quotients != nullptr it must
  // have basis.size() entries and receives the cofactors.
  Polynomial run(const Polynomial& f, std::vector<Polynomial>* quotients) const {
    Polynomial h = f;
    std::vector<Term> rem;
    while (!h.is_zero()) {
      const Term& lt = h.leading_term();
      bool reduced = false;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const Polynomial& g = basis[i];
        if (g.is_zero()) continue;
        if (!Monomial::divides(g.leading_monomial(), lt.mono)) continue;
        Scalar c = lt.coef / g.leading_coefficient();
        Monomial q = Monomial::quotient(lt.mono, g.leading_monomial());
        if (quotients)
          (*quotients)[i] = (*quotients)[i] + Polynomial::term(f.ring(), c, q);
        h = Polynomial::fma(h, -c, q, g);
        reduced = true;
        break;
      }
      if (!reduced) {
        rem.push_back(lt);
        h = Polynomial::fma(h, -lt.coef, Monomial::one(lt.mono.nvars()),
                            Polynomial::term(f.ring(), Scalar::one(lt.coef.field()), lt.mono));
      }
    }
    return Polynomial::from_terms(f.ring(), std::move(rem));
  }
};

struct Pair {
  std::int64_t lcm_degree;
  int i, j;
  bool operator<(const Pair& o) const {
    if (lcm_degree != o.lcm_degree) return lcm_degree < o.lcm_degree;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  Reducer red{f.ring()->order(), basis};
  return red.run(f, nullptr);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  require_same_ring(f.ring(), G.ring());
  return normal_form(f, std::span<const Polynomial>(G.elements()));
}

Division divide(const Polynomial& f, std::span<const Polynomial> divisors) {
  std::vector<Polynomial> quotients(divisors.size(), Polynomial::zero(f.ring()));
  Reducer red{f.ring()->order(), divisors};
  Polynomial r = red.run(f, &quotients);
  return Division{std::move(r), std::move(quotients)};
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Polynomial gs[] = {g};
  Division d = divide(f, gs);
  if (!d.remainder.is_zero()) throw std::domain_error("inexact polynomial division");
  return d.quotients[0];
}

bool poly_before(const Polynomial& a, const Polynomial& b) {
  const MonomialOrder& ord = a.ring()->order();
  std::size_t n = std::min(a.term_count(), b.term_count());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = mono_cmp(a.terms()[i].mono, b.terms()[i].mono, ord);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::greater;
  }
  return a.term_count() > b.term_count();
}

GroebnerBasis buchberger(const RingPtr& ring, std::vector<Polynomial> gens) {
  for (const Polynomial& g : gens) require_same_ring(ring, g.ring());

  std::vector<Polynomial> basis;
  for (Polynomial& g : gens)
    if (!g.is_zero()) basis.push_back(g.monic());

  // Deterministic start: sort the nonzero generators.
  std::sort(basis.begin(), basis.end(), poly_before);
  basis.erase(std::unique(basis.begin(), basis.end(),
                          [](const Polynomial& a, const Polynomial& b) { return a == b; }),
              basis.end());

  std::set<Pair> queue;
  std::set<std::pair<int, int>> processed;
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
      queue.insert({l.total_degree(), i, j});
    }
  };
  for (int j = 0; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    const Polynomial &fi = basis[p.i], &fj = basis[p.j];
    const Monomial &mi = fi.leading_monomial(), &mj = fj.leading_monomial();
    processed.insert({p.i, p.j});

    // Product criterion.
    if (Monomial::coprime(mi, mj)) continue;
    // Chain criterion, restricted to pairs already processed.
    Monomial l = Monomial::lcm(mi, mj);
    bool skip = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!Monomial::divides(basis[k].leading_monomial(), l)) continue;
      auto a = std::minmax(p.i, k), b = std::minmax(p.j, k);
      if (processed.count({a.first, a.second}) && processed.count({b.first, b.second})) skip = true;
    }
    if (skip) continue;

    Scalar one = Scalar::one(ring->field());
    Polynomial s = Polynomial::fma(Polynomial::zero(ring), one, Monomial::quotient(l, mi), fi);
    s = Polynomial::fma(s, -one, Monomial::quotient(l, mj), fj);
    Polynomial r = normal_form(s, std::span<const Polynomial>(basis));
    if (!r.is_zero()) {
      basis.push_back(r.monic());
      push_pairs(static_cast<int>(basis.size()) - 1);
    }
  }

  // Minimalize: keep only elements whose leading monomial no other kept
  // element's leading monomial divides.
  std::vector<int> order_idx(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) order_idx[i] = static_cast<int>(i);
  std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
    auto c = mono_cmp(basis[a].leading_monomial(), basis[b].leading_monomial(), ring->order());
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return a < b;
  });
  std::vector<Polynomial> minimal;
  for (int idx : order_idx) {
    bool redundant = false;
    for (const Polynomial& kept : minimal)
      if (Monomial::divides(kept.leading_monomial(), basis[idx].leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(basis[idx]);
  }

  // Interreduce tails: leading monomials are pairwise indivisible, so one
  // full normal form per element against the others suffices.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(normal_form(minimal[i], std::span<const Polynomial>(others)).monic());
  }

  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return mono_cmp(a.leading_monomial(), b.leading_monomial(), ring->order()) ==
           std::strong_ordering::greater;
  });
  return GroebnerBasis(ring, std::move(reduced));
}

}  // namespace liaison
