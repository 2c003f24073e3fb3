#pragma once

#include <cstddef>
#include <cstdint>

#include "idcert/arith/linalg.hpp"
#include "idcert/poly/mpoly.hpp"

namespace idcert {

/// Per-factor split d_i = a_i + b_i of a tensor space. The flattening maps V_A^* to
/// V_B with V_A = (x)_i Sym^{a_i} V_i and V_B = (x)_i Sym^{b_i} V_i.
struct Split {
  Multidegree a;
  Multidegree b;
  std::uint64_t dim_a = 0;
  std::uint64_t dim_b = 0;

  friend bool operator==(const Split&, const Split&) = default;
};

/// Throws DomainError unless 0 <= a_i <= d_i.
Split make_split(const TensorSpace& space, Multidegree a);

enum class SplitMode {
  /// single group only: the least s with binom(n+s, n) >= h
  minimal,
  /// a_i = ceil(d_i / 2), b_i = floor(d_i / 2)
  balanced,
};

/// Throws DomainError if no admissible split (dim V_A >= h) exists for the mode.
/// A balanced split whose b part vanishes (all d_i = 1) instead groups the first
/// ceil(p/2) factors into A, which is the Segre flattening.
Split choose_split(const TensorSpace& space, std::size_t h, SplitMode mode);

/// The default split used when the caller gives none: minimal for one group,
/// balanced otherwise.
Split default_split(const TensorSpace& space, std::size_t h);

template <class Field>
struct Flattening {
  Split split;
  /// rows: multidegree-a differentiation monomials; columns: multidegree-b basis
  DenseMatrix<Field> matrix;
  std::size_t rank = 0;
};

/// Row k holds the coefficients of the k-th mixed partial of T of order a.
/// Throws DomainError if T is not multihomogeneous of the space's degree, or if the
/// field characteristic does not exceed max d_i.
template <class Field>
Flattening<Field> flatten(const MPoly<Field>& t, const TensorSpace& space, const Split& split);

/// Row-space basis of the flattening: spans the image inside V_B.
template <class Field>
DenseMatrix<Field> image_span(const Flattening<Field>& fl);

/// Throws DomainError if 0 < char(field) <= max_i d_i.
template <class Field>
void require_characteristic(const Field& field, const TensorSpace& space);

extern template Flattening<RationalField> flatten(const MPoly<RationalField>&, const TensorSpace&,
                                                  const Split&);
extern template Flattening<PrimeField> flatten(const MPoly<PrimeField>&, const TensorSpace&,
                                               const Split&);
extern template DenseMatrix<RationalField> image_span(const Flattening<RationalField>&);
extern template DenseMatrix<PrimeField> image_span(const Flattening<PrimeField>&);
extern template void require_characteristic(const RationalField&, const TensorSpace&);
extern template void require_characteristic(const PrimeField&, const TensorSpace&);

}  // namespace idcert
