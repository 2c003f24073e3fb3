#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "idcert/poly/monomial.hpp"

namespace idcert {

using Multidegree = std::vector<unsigned>;

/// Sym^{d_1} V_1 (x) ... (x) Sym^{d_p} V_p, viewed as multihomogeneous polynomials of
/// multidegree (d_1, ..., d_p) in p groups of variables. Group i has n_i + 1
/// variables named x<i>_0 .. x<i>_<n_i> (groups numbered from 1).
class TensorSpace {
 public:
  /// Throws DomainError unless p >= 1, every size >= 2, every degree >= 1, and the
  /// total variable count fits in a Monomial.
  TensorSpace(std::vector<unsigned> group_sizes, Multidegree degrees);

  std::size_t factor_count() const noexcept { return sizes_.size(); }
  const std::vector<unsigned>& group_sizes() const noexcept { return sizes_; }
  const Multidegree& degrees() const noexcept { return degrees_; }
  bool symmetric() const noexcept { return sizes_.size() == 1; }

  unsigned projective_dimension(std::size_t group) const { return sizes_.at(group) - 1; }
  /// n = n_1 + ... + n_p, the dimension of the Segre-Veronese variety.
  unsigned total_projective_dimension() const noexcept;
  std::size_t variable_count() const noexcept { return offsets_.back(); }
  std::size_t group_offset(std::size_t group) const { return offsets_.at(group); }
  std::size_t group_of(std::size_t var) const;

  Multidegree multidegree_of(const Monomial& m) const;
  std::string variable_name(std::size_t var) const;

  friend bool operator==(const TensorSpace& a, const TensorSpace& b) {
    return a.sizes_ == b.sizes_ && a.degrees_ == b.degrees_;
  }

 private:
  std::vector<unsigned> sizes_;
  Multidegree degrees_;
  std::vector<std::size_t> offsets_;  // p + 1 entries
};

mpz_class binomial(unsigned n, unsigned k);

/// Prod_i binom(n_i + deg_i, n_i): the number of monomials of multidegree deg.
std::uint64_t monomial_count(const TensorSpace& space, const Multidegree& deg);

/// N(n, d), the dimension of the ambient coefficient space of the tensor space.
std::uint64_t ambient_dimension(const TensorSpace& space);

/// All monomials of multidegree `deg`, grevlex-descending within each group, groups
/// varying slowest-first (group 1 is the most significant key).
std::vector<Monomial> monomial_basis(const TensorSpace& space, const Multidegree& deg);

/// Prod over groups of deg_g! / prod_j e_j!: the coefficient of x^m in
/// prod_g (sum_j x_j)^{deg_g}.
mpz_class multinomial_weight(const TensorSpace& space, const Monomial& m);

std::string format_multidegree(const Multidegree& deg);

}  // namespace idcert
