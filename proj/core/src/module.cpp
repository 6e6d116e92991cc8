#include "module.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace liaison::detail {

bool mterm_less(const RingPtr& ring, const MTerm& a, const MTerm& b) {
  auto c = mono_cmp(a.mono, b.mono, ring->order());
  if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
  return a.comp > b.comp;  // smaller component ranks higher
}

ModPoly ModPoly::zero(RingPtr ring, int ncomp) { return ModPoly(std::move(ring), ncomp, {}); }

ModPoly ModPoly::from_terms(RingPtr ring, int ncomp, std::vector<MTerm> terms) {
  for (const MTerm& t : terms)
    if (t.comp < 0 || t.comp >= ncomp) throw std::out_of_range("module component");
  std::sort(terms.begin(), terms.end(),
            [&ring](const MTerm& a, const MTerm& b) { return mterm_less(ring, b, a); });
  std::vector<MTerm> out;
  out.reserve(terms.size());
  for (MTerm& t : terms) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coef = out.back().coef + t.coef;
      if (out.back().coef.is_zero()) out.pop_back();
    } else if (!t.coef.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return ModPoly(std::move(ring), ncomp, std::move(out));
}

ModPoly ModPoly::from_column(const PolyMatrix& m, int col) {
  std::vector<MTerm> terms;
  for (int i = 0; i < m.rows(); ++i)
    for (const Term& t : m.at(i, col).terms()) terms.push_back({t.coef, t.mono, i});
  return from_terms(m.ring(), m.rows(), std::move(terms));
}

ModPoly ModPoly::basis_vector(RingPtr ring, int ncomp, int comp) {
  std::vector<MTerm> t;
  t.push_back({Scalar::one(ring->field()), Monomial::one(ring->nvars()), comp});
  return from_terms(std::move(ring), ncomp, std::move(t));
}

const MTerm& ModPoly::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero module element");
  return terms_.front();
}

ModPoly ModPoly::fma(const ModPoly& f, const Scalar& c, const Monomial& m, const ModPoly& g) {
  if (f.ncomp_ != g.ncomp_) throw std::invalid_argument("module rank mismatch");
  if (c.is_zero() || g.is_zero()) return f;
  const RingPtr& ring = f.ring_;
  std::vector<MTerm> out;
  out.reserve(f.terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < f.terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.push_back(f.terms_[i++]);
      continue;
    }
    MTerm gt{g.terms_[j].coef * c, Monomial::mul(g.terms_[j].mono, m), g.terms_[j].comp};
    if (i == f.terms_.size()) {
      if (!gt.coef.is_zero()) out.push_back(std::move(gt));
      ++j;
      continue;
    }
    const MTerm& ft = f.terms_[i];
    if (ft.comp == gt.comp && ft.mono == gt.mono) {
      Scalar s = ft.coef + gt.coef;
      if (!s.is_zero()) out.push_back({std::move(s), gt.mono, gt.comp});
      ++i;
      ++j;
    } else if (mterm_less(ring, gt, ft)) {
      out.push_back(ft);
      ++i;
    } else {
      out.push_back(std::move(gt));
      ++j;
    }
  }
  return ModPoly(ring, f.ncomp_, std::move(out));
}

ModPoly ModPoly::monic() const {
  if (is_zero()) return *this;
  Scalar inv = terms_.front().coef.inverse();
  std::vector<MTerm> t = terms_;
  for (MTerm& x : t) x.coef = x.coef * inv;
  return ModPoly(ring_, ncomp_, std::move(t));
}

bool ModPoly::operator==(const ModPoly& o) const {
  if (ncomp_ != o.ncomp_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].comp != o.terms_[i].comp || terms_[i].mono != o.terms_[i].mono ||
        !(terms_[i].coef == o.terms_[i].coef))
      return false;
  return true;
}

std::vector<Polynomial> ModPoly::to_columns() const {
  std::vector<std::vector<Term>> parts(static_cast<std::size_t>(ncomp_));
  for (const MTerm& t : terms_) parts[static_cast<std::size_t>(t.comp)].push_back({t.coef, t.mono});
  std::vector<Polynomial> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(Polynomial::from_terms(ring_, std::move(p)));
  return out;
}

std::optional<std::int64_t> ModPoly::graded_degree(
    const std::vector<std::int64_t>& comp_twists) const {
  std::optional<std::int64_t> d;
  for (const MTerm& t : terms_) {
    std::int64_t td = t.mono.total_degree() + comp_twists[static_cast<std::size_t>(t.comp)];
    if (!d) d = td;
    else if (*d != td) return std::nullopt;
  }
  return d;
}

ModDivision mod_divide(const ModPoly& f, std::span<const ModPoly> basis) {
  const RingPtr& ring = f.ring();
  std::vector<Polynomial> quotients(basis.size(), Polynomial::zero(ring));
  ModPoly h = f;
  std::vector<MTerm> rem;
  while (!h.is_zero()) {
    const MTerm& lt = h.leading();
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const ModPoly& g = basis[k];
      if (g.is_zero()) continue;
      const MTerm& gl = g.leading();
      if (gl.comp != lt.comp || !Monomial::divides(gl.mono, lt.mono)) continue;
      Scalar c = lt.coef / gl.coef;
      Monomial q = Monomial::quotient(lt.mono, gl.mono);
      quotients[k] = quotients[k] + Polynomial::term(ring, c, q);
      h = ModPoly::fma(h, -c, q, g);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(lt);
      ModPoly unit = ModPoly::basis_vector(ring, h.ncomp(), lt.comp);
      h = ModPoly::fma(h, -lt.coef, lt.mono, unit);
    }
  }
  return ModDivision{ModPoly::from_terms(ring, f.ncomp(), std::move(rem)), std::move(quotients)};
}

namespace {

struct Pair {
  std::int64_t lcm_degree;
  int i, j;
  bool operator<(const Pair& o) const {
    if (lcm_degree != o.lcm_degree) return lcm_degree < o.lcm_degree;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

struct Tracked {
  ModPoly elem;
  std::vector<Polynomial> rep;
};

}  // namespace

ModGB module_groebner(const RingPtr& ring, int ncomp, std::span<const ModPoly> gens, bool track) {
  std::size_t ngens = gens.size();
  auto zero_rep = [&] { return std::vector<Polynomial>(ngens, Polynomial::zero(ring)); };

  std::vector<Tracked> basis;
  for (std::size_t j = 0; j < ngens; ++j) {
    if (gens[j].is_zero()) continue;
    Tracked t{gens[j], {}};
    if (track) {
      t.rep = zero_rep();
      t.rep[j] = Polynomial::constant(ring, 1);
    }
    basis.push_back(std::move(t));
  }

  std::set<Pair> queue;
  std::set<std::pair<int, int>> processed;
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      const MTerm &a = basis[i].elem.leading(), &b = basis[j].elem.leading();
      if (a.comp != b.comp) continue;
      queue.insert({Monomial::lcm(a.mono, b.mono).total_degree(), i, j});
    }
  };
  for (int j = 0; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

  // Reduce h by the current basis, updating its representation alongside.
  auto reduce_tracked = [&](Tracked h) {
    std::vector<MTerm> rem;
    while (!h.elem.is_zero()) {
      const MTerm& lt = h.elem.leading();
      bool reduced = false;
      for (const Tracked& g : basis) {
        const MTerm& gl = g.elem.leading();
        if (gl.comp != lt.comp || !Monomial::divides(gl.mono, lt.mono)) continue;
        Scalar c = lt.coef / gl.coef;
        Monomial q = Monomial::quotient(lt.mono, gl.mono);
        h.elem = ModPoly::fma(h.elem, -c, q, g.elem);
        if (track) {
          Polynomial qp = Polynomial::term(ring, c, q);
          for (std::size_t r = 0; r < ngens; ++r) h.rep[r] = h.rep[r] - qp * g.rep[r];
        }
        reduced = true;
        break;
      }
      if (!reduced) {
        rem.push_back(lt);
        ModPoly unit = ModPoly::basis_vector(ring, ncomp, lt.comp);
        h.elem = ModPoly::fma(h.elem, -lt.coef, lt.mono, unit);
      }
    }
    h.elem = ModPoly::from_terms(ring, ncomp, std::move(rem));
    return h;
  };

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    processed.insert({p.i, p.j});
    const MTerm& li = basis[p.i].elem.leading();
    const MTerm& lj = basis[p.j].elem.leading();
    Monomial l = Monomial::lcm(li.mono, lj.mono);

    // Chain criterion (no product criterion for modules).
    bool skip = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      const MTerm& lk = basis[k].elem.leading();
      if (lk.comp != li.comp || !Monomial::divides(lk.mono, l)) continue;
      auto a = std::minmax(p.i, k), b = std::minmax(p.j, k);
      if (processed.count({a.first, a.second}) && processed.count({b.first, b.second})) skip = true;
    }
    if (skip) continue;

    Monomial qi = Monomial::quotient(l, li.mono);
    Monomial qj = Monomial::quotient(l, lj.mono);
    Scalar ci = li.coef.inverse();
    Scalar cj = lj.coef.inverse();
    Tracked s{ModPoly::zero(ring, ncomp), track ? zero_rep() : std::vector<Polynomial>{}};
    s.elem = ModPoly::fma(s.elem, ci, qi, basis[p.i].elem);
    s.elem = ModPoly::fma(s.elem, -cj, qj, basis[p.j].elem);
    if (track) {
      Polynomial pi = Polynomial::term(ring, ci, qi);
      Polynomial pj = Polynomial::term(ring, cj, qj);
      for (std::size_t r = 0; r < ngens; ++r)
        s.rep[r] = pi * basis[p.i].rep[r] - pj * basis[p.j].rep[r];
    }
    Tracked r = reduce_tracked(std::move(s));
    if (!r.elem.is_zero()) {
      Scalar inv = r.elem.leading().coef.inverse();
      r.elem = r.elem.monic();
      if (track) {
        Polynomial scale = Polynomial::constant(ring, inv);
        for (std::size_t k = 0; k < ngens; ++k) r.rep[k] = scale * r.rep[k];
      }
      basis.push_back(std::move(r));
      push_pairs(static_cast<int>(basis.size()) - 1);
    }
  }

  // Minimalize by leading terms.
  std::vector<int> order_idx(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) order_idx[i] = static_cast<int>(i);
  std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
    const MTerm &ta = basis[a].elem.leading(), &tb = basis[b].elem.leading();
    if (mterm_less(ring, ta, tb)) return true;
    if (mterm_less(ring, tb, ta)) return false;
    return a < b;
  });
  std::vector<Tracked> minimal;
  for (int idx : order_idx) {
    const MTerm& lt = basis[idx].elem.leading();
    bool redundant = false;
    for (const Tracked& kept : minimal) {
      const MTerm& kl = kept.elem.leading();
      if (kl.comp == lt.comp && Monomial::divides(kl.mono, lt.mono)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[idx]);
  }

  // Interreduce tails with representation updates.
  ModGB out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<ModPoly> others;
    others.reserve(minimal.size() - 1);
    std::vector<std::size_t> other_idx;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) {
        others.push_back(minimal[j].elem);
        other_idx.push_back(j);
      }
    ModDivision d = mod_divide(minimal[i].elem, others);
    ModPoly reduced = d.remainder;
    std::vector<Polynomial> rep;
    if (track) {
      rep = minimal[i].rep;
      for (std::size_t k = 0; k < others.size(); ++k) {
        if (d.quotients[k].is_zero()) continue;
        const std::vector<Polynomial>& orep = minimal[other_idx[k]].rep;
        for (std::size_t r = 0; r < ngens; ++r) rep[r] = rep[r] - d.quotients[k] * orep[r];
      }
      Scalar inv = reduced.leading().coef.inverse();
      Polynomial scale = Polynomial::constant(ring, inv);
      for (std::size_t r = 0; r < ngens; ++r) rep[r] = scale * rep[r];
    }
    out.elements.push_back(reduced.monic());
    out.reps.push_back(std::move(rep));
  }

  // Sort descending by leading term for a canonical result.
  std::vector<int> fin(out.elements.size());
  for (std::size_t i = 0; i < fin.size(); ++i) fin[i] = static_cast<int>(i);
  std::sort(fin.begin(), fin.end(), [&](int a, int b) {
    return mterm_less(ring, out.elements[b].leading(), out.elements[a].leading());
  });
  ModGB sorted;
  for (int i : fin) {
    sorted.elements.push_back(std::move(out.elements[static_cast<std::size_t>(i)]));
    sorted.reps.push_back(std::move(out.reps[static_cast<std::size_t>(i)]));
  }
  return sorted;
}

bool submodule_contains(const ModGB& gb, const ModPoly& elem) {
  return mod_divide(elem, gb.elements).remainder.is_zero();
}

}  // namespace liaison::detail
