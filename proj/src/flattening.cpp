#include "idcert/flattening.hpp"

#include <algorithm>

#include "idcert/errors.hpp"

namespace idcert {

Split make_split(const TensorSpace& space, Multidegree a) {
  if (a.size() != space.factor_count()) throw DomainError("split has the wrong number of factors");
  Multidegree b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > space.degrees()[i]) {
      throw DomainError("split part a_" + std::to_string(i + 1) + " = " + std::to_string(a[i]) +
                        " exceeds d_" + std::to_string(i + 1) + " = " +
                        std::to_string(space.degrees()[i]));
    }
    b[i] = space.degrees()[i] - a[i];
  }
  Split s;
  s.dim_a = monomial_count(space, a);
  s.dim_b = monomial_count(space, b);
  s.a = std::move(a);
  s.b = std::move(b);
  return s;
}

Split choose_split(const TensorSpace& space, std::size_t h, SplitMode mode) {
  if (h < 1) throw DomainError("h must be positive");
  if (mode == SplitMode::minimal) {
    if (!space.symmetric()) throw DomainError("the minimal split is defined for a single group only");
    const unsigned d = space.degrees()[0];
    for (unsigned s = 0; s <= d; ++s) {
      Split sp = make_split(space, {s});
      if (sp.dim_a >= h) return sp;
    }
    throw DomainError("no split with dim V_A >= " + std::to_string(h) + " (largest is " +
                      std::to_string(ambient_dimension(space)) + ")");
  }
  const std::size_t p = space.factor_count();
  Multidegree a(p);
  bool b_vanishes = true;
  for (std::size_t i = 0; i < p; ++i) {
    a[i] = (space.degrees()[i] + 1) / 2;
    if (space.degrees()[i] / 2 > 0) b_vanishes = false;
  }
  if (b_vanishes && p > 1) {
    for (std::size_t i = 0; i < p; ++i) a[i] = i < (p + 1) / 2 ? 1u : 0u;
  }
  Split sp = make_split(space, std::move(a));
  if (sp.dim_a < h) {
    throw DomainError("balanced split has dim V_A = " + std::to_string(sp.dim_a) + " < h = " +
                      std::to_string(h));
  }
  return sp;
}

Split default_split(const TensorSpace& space, std::size_t h) {
  return choose_split(space, h, space.symmetric() ? SplitMode::minimal : SplitMode::balanced);
}

template <class Field>
void require_characteristic(const Field& field, const TensorSpace& space) {
  const std::uint32_t p = field.characteristic();
  if (p == 0) return;
  const unsigned dmax = *std::max_element(space.degrees().begin(), space.degrees().end());
  if (p <= dmax) {
    throw DomainError("prime modulus " + std::to_string(p) + " must exceed the largest degree " +
                      std::to_string(dmax));
  }
}

template <class Field>
Flattening<Field> flatten(const MPoly<Field>& t, const TensorSpace& space, const Split& split) {
  require_characteristic(t.field(), space);
  if (!t.is_zero()) {
    auto deg = homogeneous_multidegree(t, space);
    if (!deg || *deg != space.degrees()) {
      throw DomainError("tensor is not multihomogeneous of multidegree " +
                        format_multidegree(space.degrees()));
    }
  }
  const auto rows_basis = monomial_basis(space, split.a);
  const auto cols_basis = monomial_basis(space, split.b);
  const auto col_index = index_basis(cols_basis);
  Flattening<Field> fl{split, DenseMatrix<Field>(t.field(), rows_basis.size(), cols_basis.size()), 0};
  for (std::size_t r = 0; r < rows_basis.size(); ++r) {
    const auto partial = differentiate(t, rows_basis[r]);
    for (const auto& term : partial.terms()) {
      auto it = col_index.find(term.monomial);
      if (it == col_index.end()) throw DomainError("derivative left the multidegree-b basis");
      fl.matrix(r, it->second) = term.coeff;
    }
  }
  fl.rank = rank(fl.matrix);
  return fl;
}

template <class Field>
DenseMatrix<Field> image_span(const Flattening<Field>& fl) {
  return row_space_basis(fl.matrix);
}

template Flattening<RationalField> flatten(const MPoly<RationalField>&, const TensorSpace&, const Split&);
template Flattening<PrimeField> flatten(const MPoly<PrimeField>&, const TensorSpace&, const Split&);
template DenseMatrix<RationalField> image_span(const Flattening<RationalField>&);
template DenseMatrix<PrimeField> image_span(const Flattening<PrimeField>&);
template void require_characteristic(const RationalField&, const TensorSpace&);
template void require_characteristic(const PrimeField&, const TensorSpace&);

}  // namespace idcert
