#include "idcert/genrand.hpp"

#include "idcert/errors.hpp"

namespace idcert {

long Rng::uniform(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // largest multiple of span that fits, to avoid modulo bias
  const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
  std::uint64_t x;
  do x = engine_();
  while (limit != 0 && x >= limit);
  return lo + static_cast<long>(span == 0 ? x : x % span);
}

void validate(const RandomConfig& cfg) {
  if (cfg.bound < 2) throw DomainError("coefficient bound must be at least 2");
}

RankOneTerm random_rank_one(const TensorSpace& space, Rng& rng, long bound) {
  RankOneTerm term;
  for (std::size_t g = 0; g < space.factor_count(); ++g) {
    std::vector<mpq_class> form(space.group_sizes()[g]);
    bool nonzero = false;
    while (!nonzero) {
      for (auto& c : form) {
        c = rng.uniform(-bound, bound);
        nonzero = nonzero || sgn(c) != 0;
      }
    }
    term.forms.push_back(std::move(form));
  }
  return term;
}

RankOneTerm random_rank_one(const TensorSpace& space, const RandomConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed);
  return random_rank_one(space, rng, cfg.bound);
}

RandomTensor random_tensor(const TensorSpace& space, std::size_t h, const RandomConfig& cfg) {
  if (h < 1) throw DomainError("h must be positive");
  validate(cfg);
  Rng rng(cfg.seed);
  Decomposition dec{space, {}};
  while (dec.terms.size() < h) {
    dec.terms.push_back(random_rank_one(space, rng, cfg.bound));
    try {
      validate(dec);
    } catch (const DomainError&) {
      dec.terms.pop_back();
    }
  }
  RandomTensor out{expand(dec, RationalField{}), std::move(dec)};
  return out;
}

MPoly<RationalField> random_dense_form(const TensorSpace& space, const RandomConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed);
  const auto basis = monomial_basis(space, space.degrees());
  std::vector<mpq_class> coeffs(basis.size());
  bool nonzero = false;
  while (!nonzero) {
    for (auto& c : coeffs) {
      c = rng.uniform(-cfg.bound, cfg.bound);
      nonzero = nonzero || sgn(c) != 0;
    }
  }
  return from_coefficient_vector(RationalField{}, basis, coeffs);
}

}  // namespace idcert
