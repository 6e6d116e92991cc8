#include "liaison/monomial.hpp"

#include <limits>
#include <stdexcept>

namespace liaison {

namespace {
constexpr std::int64_t kMaxExponent = std::numeric_limits<std::int32_t>::max();
}

Monomial::Monomial(std::vector<std::int32_t> exps) : exp_(std::move(exps)), degree_(0) {
  for (std::int32_t e : exp_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::one(int nvars) {
  return Monomial(std::vector<std::int32_t>(static_cast<std::size_t>(nvars), 0));
}

Monomial Monomial::variable(int nvars, int index, std::int32_t e) {
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index");
  std::vector<std::int32_t> v(static_cast<std::size_t>(nvars), 0);
  v[static_cast<std::size_t>(index)] = e;
  return Monomial(std::move(v));
}

Monomial Monomial::mul(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial arity mismatch");
  std::vector<std::int32_t> v(a.exp_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::int64_t e = static_cast<std::int64_t>(a.exp_[i]) + b.exp_[i];
    if (e > kMaxExponent) throw std::overflow_error("exponent overflow");
    v[i] = static_cast<std::int32_t>(e);
  }
  return Monomial(std::move(v));
}

bool Monomial::divides(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial arity mismatch");
  for (std::size_t i = 0; i < a.exp_.size(); ++i)
    if (a.exp_[i] > b.exp_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) throw std::domain_error("monomial quotient is not exact");
  std::vector<std::int32_t> v(a.exp_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = b.exp_[i] - a.exp_[i];
  return Monomial(std::move(v));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial arity mismatch");
  std::vector<std::int32_t> v(a.exp_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(a.exp_[i], b.exp_[i]);
  return Monomial(std::move(v));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial arity mismatch");
  std::vector<std::int32_t> v(a.exp_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::min(a.exp_[i], b.exp_[i]);
  return Monomial(std::move(v));
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial arity mismatch");
  for (std::size_t i = 0; i < a.exp_.size(); ++i)
    if (a.exp_[i] > 0 && b.exp_[i] > 0) return false;
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::int32_t e : exp_) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

MonomialOrder MonomialOrder::block(int leading, MonomialOrder inner) {
  if (leading <= 0) throw std::invalid_argument("block order needs a positive leading count");
  return MonomialOrder(Kind::block, leading,
                       std::make_shared<const MonomialOrder>(std::move(inner)));
}

void MonomialOrder::check_arity(int nvars) const {
  if (nvars <= 0) throw std::invalid_argument("order arity must be positive");
  if (kind_ == Kind::block) {
    if (block_ >= nvars) throw std::invalid_argument("block order eliminates all variables");
    inner_->check_arity(nvars - block_);
  }
}

bool MonomialOrder::operator==(const MonomialOrder& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ != Kind::block) return true;
  return block_ == o.block_ && *inner_ == *o.inner_;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::grevlex: return "grevlex";
    case Kind::lex: return "lex";
    case Kind::block:
      return "block(" + std::to_string(block_) + "," + inner_->to_string() + ")";
  }
  return "?";
}

namespace {

// Grevlex on a slice [lo, hi): degree first, then the last nonzero entry of
// the difference vector negative means greater.
std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b, int lo, int hi) {
  std::int64_t da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.exponent(i);
    db += b.exponent(i);
  }
  if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
  for (int i = hi - 1; i >= lo; --i) {
    std::int32_t ea = a.exponent(i), eb = b.exponent(i);
    if (ea != eb) return ea > eb ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex_cmp(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int i = lo; i < hi; ++i) {
    std::int32_t ea = a.exponent(i), eb = b.exponent(i);
    if (ea != eb) return ea < eb ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering cmp_slice(const Monomial& a, const Monomial& b, const MonomialOrder& ord,
                               int lo, int hi) {
  switch (ord.kind()) {
    case MonomialOrder::Kind::grevlex:
      return grevlex_cmp(a, b, lo, hi);
    case MonomialOrder::Kind::lex:
      return lex_cmp(a, b, lo, hi);
    case MonomialOrder::Kind::block: {
      int split = lo + ord.block_size();
      auto c = grevlex_cmp(a, b, lo, split);
      if (c != std::strong_ordering::equal) return c;
      return cmp_slice(a, b, ord.inner(), split, hi);
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial arity mismatch");
  return cmp_slice(a, b, order, 0, a.nvars());
}

}  // namespace liaison
