#include "idcert/poly/monomial.hpp"

#include <algorithm>

#include "idcert/errors.hpp"

namespace idcert {

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVariables) {
    throw DomainError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 0xffffu) throw DomainError("exponent too large");
    exps_[i] = static_cast<std::uint16_t>(exponents[i]);
  }
  refresh();
}

void Monomial::set(std::size_t var, unsigned exponent) {
  if (var >= kMaxVariables) throw DomainError("variable index out of range");
  if (exponent > 0xffffu) throw DomainError("exponent too large");
  exps_[var] = static_cast<std::uint16_t>(exponent);
  refresh();
}

void Monomial::refresh() noexcept {
  degree_ = 0;
  support_ = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    degree_ += exps_[i];
    if (exps_[i] != 0) support_ |= (1u << i);
  }
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_ || (support_ & ~other.support_) != 0) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    r.exps_[i] = static_cast<std::uint16_t>(exps_[i] + other.exps_[i]);
  r.degree_ = degree_ + other.degree_;
  r.support_ = support_ | other.support_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - divisor.exps_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  r.refresh();
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

int grevlex_compare(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = Monomial::kMaxVariables; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace idcert
