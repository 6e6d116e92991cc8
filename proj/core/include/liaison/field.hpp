#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace liaison {

/// Coefficient field of a polynomial ring: the rationals, or a prime field
/// F_p with 2 < p < 2^31. Primality is checked at construction.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec prime_field(std::uint32_t p);

  bool is_prime_field() const { return p_ != 0; }
  bool is_rationals() const { return p_ == 0; }
  /// 0 for the rationals, p for F_p.
  std::uint32_t characteristic() const { return p_; }

  bool operator==(const FieldSpec&) const = default;
  std::string to_string() const;

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// Field element in canonical form: a fully reduced fraction with positive
/// denominator over the rationals, or the least nonnegative residue mod p.
/// Canonical form is unique per mathematical value, so equality is structural.
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()), v_(mpq_class(0)) {}

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_int(const FieldSpec& f, std::int64_t n);
  /// den must be nonzero; over F_p this is n * den^{-1}.
  static Scalar from_fraction(const FieldSpec& f, std::int64_t num, std::int64_t den);
  static Scalar from_rational(const FieldSpec& f, const mpq_class& q);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // o must be nonzero
  Scalar operator-() const;
  Scalar inverse() const;  // must be nonzero

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Prime-field residue in [0, p); only valid for prime fields.
  std::int64_t residue() const;
  /// Rational value; only valid over the rationals.
  const mpq_class& rational() const;

  std::string to_string() const;
  /// True when the canonical value prints more naturally with a leading
  /// minus sign (negative rational, or residue above p/2).
  bool prints_negative() const;
  /// String of the displayed magnitude, e.g. "1/2" for -1/2, "3" for p-3.
  std::string abs_string() const;

 private:
  Scalar(FieldSpec f, std::int64_t r) : field_(f), v_(r) {}
  Scalar(FieldSpec f, mpq_class q) : field_(f), v_(std::move(q)) {}
  void check_same_field(const Scalar& o) const;

  FieldSpec field_;
  std::variant<std::int64_t, mpq_class> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace liaison
