#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "idcert/flattening.hpp"

namespace idcert {

/// Dimension of the Segre-Veronese variety of multidegree b: the sum of n_i over the
/// factors with b_i > 0.
unsigned variety_dimension(const TensorSpace& space, const Multidegree& b);

/// (sum n_i)! / prod n_i! * prod b_i^{n_i}, over the factors with b_i > 0.
mpz_class segre_veronese_degree(const TensorSpace& space, const Multidegree& b);

/// Whether the flattening criterion is effective for this split: the general
/// h-secant space meets the rank-one variety of V_B in exactly h points as soon as
/// dim V_B > h + dim SV_b.
bool effective_range(const TensorSpace& space, const Split& split, std::size_t h);

enum class BoundFamily {
  /// params = (n, d_1, ..., d_p), n = dim V_i: h < prod binom(n-1+m_i, n-1) - p(n-1)
  mixed_symmetric,
  /// params = (n, d_1, ..., d_p): h < prod binom(n, m_i) - prod m_i (n - m_i)
  skew,
  /// params = (n, p): h < n^m - m(n-1), m = floor(p/2)
  segre,
  /// params = (n_1, ..., n_p), p >= 2: h < prod_{i>=2} n_i - sum_{i>=2} (n_i - 1);
  /// requires n_1 > 1 + prod_{i>=2} n_i - sum_{i>=2} (n_i - 1)
  unbalanced_segre,
};

struct FamilyBound {
  /// the criterion is effective for every h < bound
  mpz_class bound;
  bool holds = false;
};

/// Evaluates the closed-form effectiveness bound of a tensor family (m_i = floor(d_i/2)).
/// Throws DomainError on malformed parameters or a violated unbalancedness condition.
FamilyBound family_bound(BoundFamily family, const std::vector<unsigned>& params, std::size_t h);

BoundFamily parse_bound_family(const std::string& name);
std::string to_string(BoundFamily family);

}  // namespace idcert
