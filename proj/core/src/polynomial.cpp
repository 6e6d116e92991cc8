#include "liaison/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace liaison {

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  return constant(ring, Scalar::from_int(ring->field(), c));
}

Polynomial Polynomial::constant(RingPtr ring, Scalar c) {
  if (c.is_zero()) return zero(std::move(ring));
  int n = ring->nvars();
  std::vector<Term> t;
  t.push_back({std::move(c), Monomial::one(n)});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
  int n = ring->nvars();
  std::vector<Term> t;
  t.push_back({Scalar::one(ring->field()), Monomial::variable(n, index)});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::term(RingPtr ring, Scalar c, Monomial m) {
  if (m.nvars() != ring->nvars()) throw std::invalid_argument("monomial arity mismatch");
  if (c.is_zero()) return zero(std::move(ring));
  std::vector<Term> t;
  t.push_back({std::move(c), std::move(m)});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const MonomialOrder& ord = ring->order();
  for (const Term& t : terms)
    if (t.mono.nvars() != ring->nvars()) throw std::invalid_argument("monomial arity mismatch");
  std::sort(terms.begin(), terms.end(), [&ord](const Term& a, const Term& b) {
    return mono_cmp(a.mono, b.mono, ord) == std::strong_ordering::greater;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef = out.back().coef + t.coef;
      if (out.back().coef.is_zero()) out.pop_back();
    } else if (!t.coef.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return Polynomial(std::move(ring), std::move(out));
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.front();
}

const Monomial& Polynomial::leading_monomial() const { return leading_term().mono; }
const Scalar& Polynomial::leading_coefficient() const { return leading_term().coef; }

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_nonzero_constant() const {
  return terms_.size() == 1 && terms_[0].mono.is_one();
}

namespace {

// Merge two descending term streams, the second scaled by (c, m).
std::vector<Term> merge_scaled(const RingPtr& ring, const std::vector<Term>& a,
                               const std::vector<Term>& b, const Scalar* c, const Monomial* m) {
  const MonomialOrder& ord = ring->order();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial bm = m ? Monomial::mul(b[j].mono, *m) : b[j].mono;
    if (i == a.size()) {
      Scalar bc = c ? b[j].coef * *c : b[j].coef;
      if (!bc.is_zero()) out.push_back({std::move(bc), std::move(bm)});
      ++j;
      continue;
    }
    auto cmp = mono_cmp(a[i].mono, bm, ord);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (cmp == std::strong_ordering::less) {
      Scalar bc = c ? b[j].coef * *c : b[j].coef;
      if (!bc.is_zero()) out.push_back({std::move(bc), std::move(bm)});
      ++j;
    } else {
      Scalar s = c ? a[i].coef + b[j].coef * *c : a[i].coef + b[j].coef;
      if (!s.is_zero()) out.push_back({std::move(s), std::move(bm)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  return Polynomial(ring_, merge_scaled(ring_, terms_, o.terms_, nullptr, nullptr));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  Scalar neg = -Scalar::one(ring_->field());
  return Polynomial(ring_, merge_scaled(ring_, terms_, o.terms_, &neg, nullptr));
}

Polynomial Polynomial::fma(const Polynomial& f, const Scalar& c, const Monomial& m,
                           const Polynomial& g) {
  require_same_ring(f.ring_, g.ring_);
  if (c.is_zero() || g.is_zero()) return f;
  return Polynomial(f.ring_, merge_scaled(f.ring_, f.terms_, g.terms_, &c, &m));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return zero(ring_);
  // Accumulate into a term list and renormalize; polynomials stay small here.
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : o.terms_) acc.push_back({a.coef * b.coef, Monomial::mul(a.mono, b.mono)});
  return from_terms(ring_, std::move(acc));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> t = terms_;
  for (Term& x : t) x.coef = -x.coef;
  return Polynomial(ring_, std::move(t));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || !(terms_[i].coef == o.terms_[i].coef)) return false;
  return true;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return zero(ring_);
  std::vector<Term> t = terms_;
  for (Term& x : t) x.coef = x.coef * c;
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  std::vector<Term> t = terms_;
  for (Term& x : t) x.mono = Monomial::mul(x.mono, m);
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  Polynomial r = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = (e >>= 1) ? base * base : base;
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coefficient().inverse());
}

Homogeneity Polynomial::homogeneity() const {
  if (terms_.empty()) return {true, -1};
  std::int64_t d = terms_[0].mono.total_degree();
  for (const Term& t : terms_)
    if (t.mono.total_degree() != d) return {false, -1};
  return {true, d};
}

std::int64_t Polynomial::degree() const {
  std::int64_t d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    bool neg = t.coef.prints_negative();
    if (i == 0) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    std::string coef = t.coef.abs_string();
    std::string piece;
    if (coef != "1" || t.mono.is_one()) piece = coef;
    for (int v = 0; v < t.mono.nvars(); ++v) {
      std::int32_t e = t.mono.exponent(v);
      if (e == 0) continue;
      if (!piece.empty()) piece += "*";
      piece += ring_->var_name(v);
      if (e > 1) piece += "^" + std::to_string(e);
    }
    s += piece;
  }
  return s;
}

std::size_t Polynomial::hash() const {
  std::size_t h = 14695981039346656037ull;
  for (const Term& t : terms_) {
    h ^= t.mono.hash();
    h *= 1099511628211ull;
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace liaison
