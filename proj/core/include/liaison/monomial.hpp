#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace liaison {

/// Exponent vector with cached total degree.
class Monomial {
 public:
  explicit Monomial(std::vector<std::int32_t> exps);
  static Monomial one(int nvars);
  static Monomial variable(int nvars, int index, std::int32_t e = 1);

  int nvars() const { return static_cast<int>(exp_.size()); }
  std::int32_t exponent(int i) const { return exp_[static_cast<std::size_t>(i)]; }
  std::int64_t total_degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  const std::vector<std::int32_t>& exponents() const { return exp_; }

  static Monomial mul(const Monomial& a, const Monomial& b);
  static bool divides(const Monomial& a, const Monomial& b);  // a | b
  static Monomial quotient(const Monomial& b, const Monomial& a);  // b / a
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return exp_ == o.exp_; }
  bool operator!=(const Monomial& o) const { return exp_ != o.exp_; }
  std::size_t hash() const;

 private:
  std::vector<std::int32_t> exp_;
  std::int64_t degree_;
};

/// Monomial order: grevlex, lex, or a block order that ranks any monomial
/// involving one of the first k variables above every monomial free of them
/// (the sub-vector on the first k variables is compared by grevlex, ties by
/// the inner order on the remaining variables).
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0, nullptr); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0, nullptr); }
  static MonomialOrder block(int leading, MonomialOrder inner);

  Kind kind() const { return kind_; }
  int block_size() const { return block_; }
  const MonomialOrder& inner() const { return *inner_; }

  /// Throws unless the order is well formed for an n-variable ring.
  void check_arity(int nvars) const;
  bool operator==(const MonomialOrder& o) const;
  std::string to_string() const;

 private:
  MonomialOrder(Kind k, int b, std::shared_ptr<const MonomialOrder> inner)
      : kind_(k), block_(b), inner_(std::move(inner)) {}
  Kind kind_;
  int block_;
  std::shared_ptr<const MonomialOrder> inner_;
};

/// Total order on monomials of equal arity; compatible with multiplication.
std::strong_ordering mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& order);

}  // namespace liaison
