#include "idcert/arith/field.hpp"

#include "idcert/errors.hpp"

namespace idcert {

void ModP::check_same_field(const ModP& o) const {
  if (modulus_ != o.modulus_) {
    throw DomainError("arithmetic between different prime fields (" + std::to_string(modulus_) +
                      " vs " + std::to_string(o.modulus_) + ")");
  }
}

ModP& ModP::operator+=(const ModP& o) {
  check_same_field(o);
  std::uint32_t s = value_ + o.value_;  // < 2^32 since p < 2^31
  value_ = s >= modulus_ ? s - modulus_ : s;
  return *this;
}

ModP& ModP::operator-=(const ModP& o) {
  check_same_field(o);
  value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + (modulus_ - o.value_);
  return *this;
}

ModP& ModP::operator*=(const ModP& o) {
  check_same_field(o);
  value_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(value_) * o.value_ % modulus_);
  return *this;
}

ModP& ModP::operator/=(const ModP& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

ModP ModP::inverse() const {
  if (value_ == 0) throw DomainError("inverse of zero in F_" + std::to_string(modulus_));
  // extended Euclid on (value, p)
  std::int64_t r0 = modulus_, r1 = value_, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t0 < 0) t0 += modulus_;
  return ModP(static_cast<std::uint32_t>(t0), modulus_, raw_tag{});
}

mpq_class inverse(const mpq_class& x) {
  if (sgn(x) == 0) throw DomainError("inverse of zero rational");
  return mpq_class(1) / x;
}

std::string to_string(const mpq_class& x) { return x.get_str(); }
std::string to_string(const ModP& x) { return std::to_string(x.value()); }

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 31)) {
    throw DomainError("prime modulus must lie in [3, 2^31), got " + std::to_string(p));
  }
  mpz_class z(p);
  if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) {
    throw DomainError("modulus " + std::to_string(p) + " is not prime");
  }
}

PrimeField::Element PrimeField::from_integer(long v) const {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return Element(static_cast<std::uint64_t>(r), p_);
}

PrimeField::Element PrimeField::from_integer(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return Element(r.get_ui(), p_);
}

PrimeField::Element PrimeField::from_rational(const mpq_class& v) const {
  Element den = from_integer(v.get_den());
  if (den.is_zero()) {
    throw DomainError("denominator " + v.get_den().get_str() + " vanishes modulo " +
                      std::to_string(p_));
  }
  return from_integer(v.get_num()) / den;
}

}  // namespace idcert
