#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "idcert/poly/monomial.hpp"
#include "idcert/poly/tensor_space.hpp"

namespace idcert {

/// Numerator K of the multigraded Hilbert series of S/M for a monomial ideal M:
///   H(S/M; t) = K(t) / prod_i (1 - t_i)^(n_i + 1),
/// stored as exponent vector (one entry per group) -> integer coefficient.
using KPolynomial = std::map<Multidegree, mpz_class>;

/// Pivot recursion K(M) = K(M + x^e) + t^deg(x^e) K(M : x^e), with the coprime
/// product formula as base case.
KPolynomial hilbert_numerator(const TensorSpace& space, std::vector<Monomial> generators);

/// dim_k (S/M)_deg, exact for every multidegree.
mpz_class hilbert_value(const TensorSpace& space, const KPolynomial& k, const Multidegree& deg);

/// Brute-force count of standard monomials; test oracle for small degrees.
std::uint64_t count_standard_monomials(const TensorSpace& space, const std::vector<Monomial>& leading,
                                       const Multidegree& deg);

/// Hilbert function along t * direction, with the exact large-t behaviour read off
/// from the numerator.
struct DiagonalProfile {
  /// (t, value) for t = 0 .. stable_from + dimension bound + 1
  std::vector<std::pair<unsigned, std::uint64_t>> trace;
  /// values are polynomial in t from here on
  unsigned stable_from = 0;
  /// degree of the diagonal Hilbert polynomial; -1 if it vanishes
  int dimension = -1;
  /// leading finite difference: the length for dimension 0, the degree otherwise
  mpz_class degree = 0;
};

/// `direction[i]` is 1 for groups that take part in the diagonal and 0 otherwise.
DiagonalProfile diagonal_profile(const TensorSpace& space, const KPolynomial& k,
                                 const std::vector<unsigned>& direction);

}  // namespace idcert
