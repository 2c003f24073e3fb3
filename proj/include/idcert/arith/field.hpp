#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace idcert {

/// Largest prime below 2^30; default modulus of the probabilistic mode.
inline constexpr std::uint32_t kDefaultPrime = 1073741789u;

/// Element of Z/pZ. Carries its modulus so that mixing fields is detected.
class ModP {
 public:
  ModP() = default;
  /// `value` is reduced modulo `modulus`.
  ModP(std::uint64_t value, std::uint32_t modulus)
      : value_(static_cast<std::uint32_t>(value % modulus)), modulus_(modulus) {}

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  ModP operator-() const { return {value_ == 0 ? 0u : modulus_ - value_, modulus_, raw_tag{}}; }
  ModP& operator+=(const ModP& o);
  ModP& operator-=(const ModP& o);
  ModP& operator*=(const ModP& o);
  ModP& operator/=(const ModP& o);

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend bool operator==(const ModP&, const ModP&) = default;

  /// Throws DomainError on zero.
  ModP inverse() const;

 private:
  struct raw_tag {};
  ModP(std::uint32_t value, std::uint32_t modulus, raw_tag) : value_(value), modulus_(modulus) {}
  void check_same_field(const ModP& o) const;

  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline bool is_zero(const ModP& x) { return x.is_zero(); }
mpq_class inverse(const mpq_class& x);
inline ModP inverse(const ModP& x) { return x.inverse(); }
std::string to_string(const mpq_class& x);
std::string to_string(const ModP& x);

/// The rationals. Stateless.
class RationalField {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_integer(long v) const { return Element(v); }
  Element from_integer(const mpz_class& v) const { return Element(v); }
  Element from_rational(const mpq_class& v) const { return v; }

  bool exact() const noexcept { return true; }
  std::uint32_t characteristic() const noexcept { return 0; }
  std::string name() const { return "qq"; }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// Z/pZ for a prime 2 < p < 2^31.
class PrimeField {
 public:
  using Element = ModP;

  /// Throws DomainError unless `p` is an odd prime below 2^31.
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  Element zero() const { return Element(0, p_); }
  Element one() const { return Element(1, p_); }
  Element from_integer(long v) const;
  Element from_integer(const mpz_class& v) const;
  /// Throws DomainError if the denominator vanishes modulo p.
  Element from_rational(const mpq_class& v) const;

  bool exact() const noexcept { return false; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const { return "fp:" + std::to_string(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace idcert
