#pragma once

#include <cstddef>
#include <vector>

#include "idcert/poly/mpoly.hpp"

namespace idcert {

enum class MonomialOrder {
  /// graded reverse lexicographic on x1_0 > x1_1 > ... > x2_0 > ...
  grevlex,
};

struct GroebnerOptions {
  /// Maximum number of critical pairs reduced before giving up.
  std::size_t pair_budget = 500000;
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t pairs_discarded = 0;
};

template <class Field>
struct GroebnerBasis {
  MonomialOrder order = MonomialOrder::grevlex;
  /// reduced, monic, sorted by increasing leading monomial
  std::vector<MPoly<Field>> polys;
  GroebnerStats stats;

  std::vector<Monomial> leading_monomials() const;
};

/// Buchberger's algorithm with the Gebauer-Moeller criteria and sugar selection.
/// Throws ResourceLimitExceeded when more than options.pair_budget pairs are reduced.
template <class Field>
GroebnerBasis<Field> buchberger(const std::vector<MPoly<Field>>& generators,
                                const GroebnerOptions& options = {});

/// Full normal form of f modulo `divisors` (not necessarily a Groebner basis).
template <class Field>
MPoly<Field> normal_form(const MPoly<Field>& f, const std::vector<MPoly<Field>>& divisors);

/// S-polynomial of two nonzero polynomials.
template <class Field>
MPoly<Field> s_polynomial(const MPoly<Field>& f, const MPoly<Field>& g);

extern template struct GroebnerBasis<RationalField>;
extern template struct GroebnerBasis<PrimeField>;
extern template GroebnerBasis<RationalField> buchberger(const std::vector<MPoly<RationalField>>&,
                                                        const GroebnerOptions&);
extern template GroebnerBasis<PrimeField> buchberger(const std::vector<MPoly<PrimeField>>&,
                                                     const GroebnerOptions&);
extern template MPoly<RationalField> normal_form(const MPoly<RationalField>&,
                                                 const std::vector<MPoly<RationalField>>&);
extern template MPoly<PrimeField> normal_form(const MPoly<PrimeField>&,
                                              const std::vector<MPoly<PrimeField>>&);
extern template MPoly<RationalField> s_polynomial(const MPoly<RationalField>&,
                                                  const MPoly<RationalField>&);
extern template MPoly<PrimeField> s_polynomial(const MPoly<PrimeField>&, const MPoly<PrimeField>&);

}  // namespace idcert
