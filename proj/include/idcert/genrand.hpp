#pragma once

#include <cstdint>
#include <random>

#include "idcert/criteria/decomposition.hpp"

namespace idcert {

/// Coefficients are integers drawn uniformly from [-bound, bound] by a
/// std::mt19937_64 seeded with `seed`; range reduction is by rejection, so streams
/// are reproducible across platforms.
struct RandomConfig {
  std::uint64_t seed = 0;
  long bound = 1L << 15;
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

/// Throws DomainError if bound < 2.
void validate(const RandomConfig& cfg);

/// One nonzero linear form per group.
RankOneTerm random_rank_one(const TensorSpace& space, Rng& rng, long bound);
RankOneTerm random_rank_one(const TensorSpace& space, const RandomConfig& cfg);

struct RandomTensor {
  MPoly<RationalField> tensor;
  Decomposition decomposition;
};

/// Sum of h random rank-one terms together with the terms. Proportional draws are
/// redrawn so the decomposition is valid.
RandomTensor random_tensor(const TensorSpace& space, std::size_t h, const RandomConfig& cfg);

/// A form with every monomial coefficient drawn independently (generic rank).
MPoly<RationalField> random_dense_form(const TensorSpace& space, const RandomConfig& cfg);

}  // namespace idcert
