#include "liaison/field.hpp"

#include <ostream>
#include <stdexcept>

namespace liaison {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod_pos(std::int64_t n, std::int64_t p) {
  std::int64_t r = n % p;
  return r < 0 ? r + p : r;
}

// Extended Euclid; a in [1, p).
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::domain_error("element not invertible mod p");
  return mod_pos(old_s, p);
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (p <= 2 || p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("prime field characteristic must be an odd prime below 2^31, got " +
                                std::to_string(p));
  return FieldSpec(p);
}

std::string FieldSpec::to_string() const {
  return is_prime_field() ? "ZZ/" + std::to_string(p_) : "QQ";
}

Scalar Scalar::zero(const FieldSpec& f) { return from_int(f, 0); }
Scalar Scalar::one(const FieldSpec& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldSpec& f, std::int64_t n) {
  if (f.is_prime_field()) return Scalar(f, mod_pos(n, f.characteristic()));
  return Scalar(f, mpq_class(static_cast<long>(n)));
}

Scalar Scalar::from_fraction(const FieldSpec& f, std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return from_int(f, num) / from_int(f, den);
}

Scalar Scalar::from_rational(const FieldSpec& f, const mpq_class& q) {
  if (f.is_rationals()) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(f, std::move(c));
  }
  std::int64_t p = f.characteristic();
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  std::int64_t n = mod_pos(num.get_si(), p);
  std::int64_t d = mod_pos(den.get_si(), p);
  if (d == 0) throw std::domain_error("denominator vanishes mod p");
  return Scalar(f, n * mod_inverse(d, p) % p);
}

bool Scalar::is_zero() const {
  if (field_.is_prime_field()) return std::get<std::int64_t>(v_) == 0;
  return std::get<mpq_class>(v_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime_field()) return std::get<std::int64_t>(v_) == 1;
  return std::get<mpq_class>(v_) == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw std::invalid_argument("scalar field mismatch: " + field_.to_string() + " vs " +
                                o.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_prime_field()) {
    std::int64_t p = field_.characteristic();
    std::int64_t r = std::get<std::int64_t>(v_) + std::get<std::int64_t>(o.v_);
    if (r >= p) r -= p;
    return Scalar(field_, r);
  }
  return Scalar(field_, mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_prime_field()) {
    std::int64_t p = field_.characteristic();
    std::int64_t r = std::get<std::int64_t>(v_) - std::get<std::int64_t>(o.v_);
    if (r < 0) r += p;
    return Scalar(field_, r);
  }
  return Scalar(field_, mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_)));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_prime_field()) {
    std::int64_t p = field_.characteristic();
    return Scalar(field_, std::get<std::int64_t>(v_) * std::get<std::int64_t>(o.v_) % p);
  }
  return Scalar(field_, mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (field_.is_prime_field()) {
    std::int64_t r = std::get<std::int64_t>(v_);
    return Scalar(field_, r == 0 ? 0 : field_.characteristic() - r);
  }
  return Scalar(field_, mpq_class(-std::get<mpq_class>(v_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (field_.is_prime_field())
    return Scalar(field_, mod_inverse(std::get<std::int64_t>(v_), field_.characteristic()));
  return Scalar(field_, mpq_class(1 / std::get<mpq_class>(v_)));
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  if (field_.is_prime_field()) return std::get<std::int64_t>(v_) == std::get<std::int64_t>(o.v_);
  return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
}

std::int64_t Scalar::residue() const { return std::get<std::int64_t>(v_); }
const mpq_class& Scalar::rational() const { return std::get<mpq_class>(v_); }

std::string Scalar::to_string() const {
  if (field_.is_prime_field()) return std::to_string(std::get<std::int64_t>(v_));
  return std::get<mpq_class>(v_).get_str();
}

bool Scalar::prints_negative() const {
  if (field_.is_prime_field())
    return std::get<std::int64_t>(v_) > field_.characteristic() / 2;
  return std::get<mpq_class>(v_) < 0;
}

std::string Scalar::abs_string() const {
  if (field_.is_prime_field()) {
    std::int64_t r = std::get<std::int64_t>(v_);
    if (r > field_.characteristic() / 2) r = field_.characteristic() - r;
    return std::to_string(r);
  }
  return mpq_class(abs(std::get<mpq_class>(v_))).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace liaison
