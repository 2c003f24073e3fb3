#pragma once

#include <vector>

#include <gmpxx.h>

#include "idcert/poly/mpoly.hpp"

namespace idcert {

/// lambda * prod_g (forms[g] . x_g)^{d_g}
struct RankOneTerm {
  std::vector<std::vector<mpq_class>> forms;
  mpq_class lambda = 1;
};

/// T = sum of the terms.
struct Decomposition {
  TensorSpace space;
  std::vector<RankOneTerm> terms;

  std::size_t size() const noexcept { return terms.size(); }
};

/// Throws DomainError unless there is at least one term, every form is nonzero with
/// one coefficient per variable of its group, lambda is nonzero, and no two terms
/// are proportional.
void validate(const Decomposition& dec);

template <class Field>
MPoly<Field> expand_term(const RankOneTerm& term, const TensorSpace& space, const Field& field);

template <class Field>
MPoly<Field> expand(const Decomposition& dec, const Field& field);

extern template MPoly<RationalField> expand_term(const RankOneTerm&, const TensorSpace&, const RationalField&);
extern template MPoly<PrimeField> expand_term(const RankOneTerm&, const TensorSpace&, const PrimeField&);
extern template MPoly<RationalField> expand(const Decomposition&, const RationalField&);
extern template MPoly<PrimeField> expand(const Decomposition&, const PrimeField&);

}  // namespace idcert
