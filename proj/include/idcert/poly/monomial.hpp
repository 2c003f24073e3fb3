#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace idcert {

/// Exponent vector over at most kMaxVariables variables. Unused slots are zero.
class Monomial {
 public:
  static constexpr std::size_t kMaxVariables = 32;

  Monomial() = default;
  /// Throws DomainError if more than kMaxVariables exponents are given.
  explicit Monomial(std::span<const unsigned> exponents);

  unsigned operator[](std::size_t var) const noexcept { return exps_[var]; }
  void set(std::size_t var, unsigned exponent);
  unsigned degree() const noexcept { return degree_; }
  /// Bit i set iff variable i occurs.
  std::uint32_t support() const noexcept { return support_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept { return (support_ & other.support_) == 0; }

  Monomial operator*(const Monomial& other) const noexcept;
  /// Precondition: divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const noexcept;
  static Monomial lcm(const Monomial& a, const Monomial& b) noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const noexcept;

 private:
  void refresh() noexcept;

  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
  std::uint32_t support_ = 0;
};

/// Graded reverse lexicographic comparison with x_0 > x_1 > ... ; returns the sign
/// of (a - b) in that order.
int grevlex_compare(const Monomial& a, const Monomial& b) noexcept;

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return grevlex_compare(a, b) > 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace idcert
