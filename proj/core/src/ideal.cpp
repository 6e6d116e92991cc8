#include "liaison/ideal.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace liaison {

struct Ideal::Cache {
  std::mutex m;
  std::shared_ptr<const GroebnerBasis> gb;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  gens_.reserve(gens.size());
  for (Polynomial& g : gens) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  std::vector<Polynomial> g;
  g.push_back(Polynomial::constant(ring, 1));
  return Ideal(std::move(ring), std::move(g));
}

const GroebnerBasis& Ideal::groebner() const {
  std::lock_guard<std::mutex> lock(cache_->m);
  if (!cache_->gb)
    cache_->gb = std::make_shared<const GroebnerBasis>(buchberger(ring_, gens_));
  return *cache_->gb;
}

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(ring_, f.ring());
  return normal_form(f, groebner()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(ring_, other.ring_);
  const GroebnerBasis& G = groebner();
  for (const Polynomial& g : other.gens_)
    if (!normal_form(g, G).is_zero()) return false;
  return true;
}

bool Ideal::equals(const Ideal& other) const {
  require_same_ring(ring_, other.ring_);
  return groebner() == other.groebner();
}

bool Ideal::is_homogeneous() const {
  for (const Polynomial& g : gens_)
    if (!g.homogeneity().homogeneous) return false;
  return true;
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.gens();
  for (const Polynomial& g : b.gens())
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.gens())
    for (const Polynomial& g : b.gens()) {
      Polynomial p = f * g;
      if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
    }
  return Ideal(a.ring(), std::move(gens));
}

Ideal power(const Ideal& a, int e) {
  if (e < 1)
    throw std::invalid_argument("ideal power requires a positive exponent");
  Ideal r = a;
  for (int k = 1; k < e; ++k) r = product(r, a);
  return r;
}

Polynomial transplant(const Polynomial& f, const RingPtr& target, const std::vector<int>& var_map) {
  std::vector<Term> terms;
  terms.reserve(f.term_count());
  for (const Term& t : f.terms()) {
    std::vector<std::int32_t> e(static_cast<std::size_t>(target->nvars()), 0);
    for (int v = 0; v < t.mono.nvars(); ++v) {
      std::int32_t ev = t.mono.exponent(v);
      if (ev == 0) continue;
      int tv = var_map[static_cast<std::size_t>(v)];
      if (tv < 0) throw std::domain_error("polynomial involves a variable absent from target ring");
      e[static_cast<std::size_t>(tv)] = ev;
    }
    Scalar c = t.coef.field() == target->field()
                   ? t.coef
                   : (t.coef.field().is_rationals()
                          ? Scalar::from_rational(target->field(), t.coef.rational())
                          : Scalar::from_int(target->field(), t.coef.residue()));
    terms.push_back({std::move(c), Monomial(std::move(e))});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

namespace {

// Fresh name not already used by the ring.
std::string fresh_var_name(const PolyRing& ring) {
  std::string base = "@t";
  std::string name = base;
  int k = 0;
  while (ring.var_index(name) >= 0) name = base + std::to_string(k++);
  return name;
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const RingPtr& R = a.ring();
  if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal::zero(R);

  // Adjoin one auxiliary variable t up front under a block order and compute
  // t*I + (1-t)*J; the generators free of t cut out the intersection.
  std::vector<std::string> names = R->var_names();
  names.insert(names.begin(), fresh_var_name(*R));
  RingPtr E = PolyRing::make(R->field(), names, MonomialOrder::block(1, R->order()));

  std::vector<int> up(static_cast<std::size_t>(R->nvars()));
  for (int i = 0; i < R->nvars(); ++i) up[static_cast<std::size_t>(i)] = i + 1;

  Polynomial t = Polynomial::variable(E, 0);
  Polynomial one_minus_t = Polynomial::constant(E, 1) - t;
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.gens()) gens.push_back(t * transplant(f, E, up));
  for (const Polynomial& g : b.gens()) gens.push_back(one_minus_t * transplant(g, E, up));

  GroebnerBasis G = buchberger(E, std::move(gens));
  std::vector<int> down(static_cast<std::size_t>(E->nvars()));
  down[0] = -1;
  for (int i = 1; i < E->nvars(); ++i) down[static_cast<std::size_t>(i)] = i - 1;

  std::vector<Polynomial> kept;
  for (const Polynomial& g : G.elements()) {
    bool free_of_t = true;
    for (const Term& term : g.terms())
      if (term.mono.exponent(0) != 0) {
        free_of_t = false;
        break;
      }
    if (free_of_t) kept.push_back(transplant(g, R, down));
  }
  return minimalized(Ideal(R, std::move(kept)));
}

Ideal colon(const Ideal& a, const Polynomial& f) {
  require_same_ring(a.ring(), f.ring());
  if (f.is_zero()) throw std::invalid_argument("colon by zero polynomial");
  if (f.is_nonzero_constant()) return a;
  std::vector<Polynomial> fs;
  fs.push_back(f);
  Ideal principal(a.ring(), std::move(fs));
  Ideal meet = intersect(a, principal);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : meet.gens()) gens.push_back(divide_exact(g, f));
  return minimalized(Ideal(a.ring(), std::move(gens)));
}

Ideal colon(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.gens().empty()) throw std::invalid_argument("colon by the zero ideal");
  bool first = true;
  Ideal acc = Ideal::zero(a.ring());
  for (const Polynomial& f : b.gens()) {
    Ideal c = colon(a, f);
    acc = first ? c : intersect(acc, c);
    first = false;
    if (acc.is_zero_ideal()) break;
  }
  return acc;
}

Ideal saturate(const Ideal& a, const Polynomial& f) {
  require_same_ring(a.ring(), f.ring());
  if (f.is_zero()) throw std::invalid_argument("saturation at zero polynomial");
  Ideal cur = a;
  for (;;) {
    Ideal next = colon(cur, f);
    if (next.equals(cur)) return cur;
    cur = next;
  }
}

Ideal eliminate(const Ideal& a, int leading_vars) {
  const RingPtr& R = a.ring();
  if (leading_vars < 0 || leading_vars >= R->nvars())
    throw std::invalid_argument("eliminate: leading variable count out of range");
  if (leading_vars == 0) return a;

  RingPtr E = PolyRing::make(R->field(), R->var_names(),
                             MonomialOrder::block(leading_vars, MonomialOrder::grevlex()));
  std::vector<int> id(static_cast<std::size_t>(R->nvars()));
  for (int i = 0; i < R->nvars(); ++i) id[static_cast<std::size_t>(i)] = i;

  std::vector<Polynomial> gens;
  for (const Polynomial& g : a.gens()) gens.push_back(transplant(g, E, id));
  GroebnerBasis G = buchberger(E, std::move(gens));

  std::vector<Polynomial> kept;
  for (const Polynomial& g : G.elements()) {
    bool free_of_block = true;
    for (const Term& term : g.terms())
      for (int v = 0; v < leading_vars && free_of_block; ++v)
        if (term.mono.exponent(v) != 0) free_of_block = false;
    if (free_of_block) kept.push_back(transplant(g, R, id));
  }
  return Ideal(R, std::move(kept));
}

Ideal minimalized(const Ideal& a) {
  std::vector<Polynomial> gens = a.gens();
  std::sort(gens.begin(), gens.end(), poly_before);
  gens.erase(std::unique(gens.begin(), gens.end(),
                         [](const Polynomial& x, const Polynomial& y) { return x == y; }),
             gens.end());
  // Try to drop generators from the highest degree down.
  std::vector<std::size_t> idx(gens.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t x, std::size_t y) { return gens[x].degree() > gens[y].degree(); });
  std::vector<bool> removed(gens.size(), false);
  for (std::size_t k : idx) {
    std::vector<Polynomial> rest;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != k && !removed[j]) rest.push_back(gens[j]);
    if (rest.empty()) continue;
    if (normal_form(gens[k], buchberger(a.ring(), rest)).is_zero()) removed[k] = true;
  }
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (!removed[j]) out.push_back(gens[j]);
  return Ideal(a.ring(), std::move(out));
}

Ideal with_order(const Ideal& a, const MonomialOrder& order) {
  RingPtr R2 = PolyRing::make(a.ring()->field(), a.ring()->var_names(), order);
  std::vector<int> id(static_cast<std::size_t>(R2->nvars()));
  for (int i = 0; i < R2->nvars(); ++i) id[static_cast<std::size_t>(i)] = i;
  std::vector<Polynomial> gens;
  for (const Polynomial& g : a.gens()) gens.push_back(transplant(g, R2, id));
  return Ideal(R2, std::move(gens));
}

}  // namespace liaison
