#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idcert/arith/linalg.hpp"
#include "idcert/ideal/groebner.hpp"
#include "idcert/ideal/hilbert.hpp"
#include "idcert/poly/mpoly.hpp"

namespace idcert {

/// Multihomogeneous ideal on the product of projective spaces of a tensor space.
template <class Field>
struct Ideal {
  TensorSpace space;
  /// multidegree of the generators; classification only uses which entries are
  /// nonzero (the factors the section lives on)
  Multidegree degree;
  std::vector<MPoly<Field>> generators;
};

/// Linear section of the Segre-Veronese variety of multidegree b by the span of
/// `span`'s rows, pulled back to the source product of projective spaces: each
/// linear form sum_m c_m z_m vanishing on the span becomes
/// sum_m c_m w_m x^m, where w_m is the multinomial weight (the coefficient of x^m in
/// the coefficient vector of a power product). Throws DomainError if the column
/// count differs from the size of the multidegree-b basis.
template <class Field>
Ideal<Field> pullback_linear_section(const DenseMatrix<Field>& span, const TensorSpace& space,
                                     const Multidegree& b);

enum class SchemeStatus { empty, zero_dimensional, positive_dimensional, inconclusive };

struct SchemeReport {
  SchemeStatus status = SchemeStatus::inconclusive;
  /// zero-dimensional: the length; positive-dimensional: the degree
  std::uint64_t length = 0;
  /// -1 when empty or inconclusive
  int dimension = -1;
  /// "hilbert-series" or "binary-gcd"
  std::string method;
  std::vector<std::pair<unsigned, std::uint64_t>> trace;
  /// polynomial regime of the trace starts here
  unsigned stable_from = 0;
  std::size_t generator_count = 0;
  std::size_t basis_size = 0;
  std::string note;

  /// "Empty", "ZeroDim(6)", "PositiveDim(1)" or "Inconclusive"
  std::string describe() const;
  friend bool operator==(const SchemeReport&, const SchemeReport&) = default;
};

struct SectionOptions {
  GroebnerOptions groebner;
  /// binary ideals go through the gcd instead of Groebner bases
  bool binary_fast_path = true;
};

/// Decides Empty / ZeroDim(length) / PositiveDim for the scheme cut by I. The groups
/// with zero degree in I are left out (the section lives on the remaining factors).
/// A Groebner budget overrun yields Inconclusive.
template <class Field>
SchemeReport classify_linear_section(const Ideal<Field>& ideal,
                                     std::optional<std::uint64_t> expected_length = std::nullopt,
                                     const SectionOptions& options = {});

/// Same decision for one group of two variables, via the gcd of the generators.
/// Throws DomainError if the ideal is not binary.
template <class Field>
SchemeReport binary_fast_path(const Ideal<Field>& ideal);

/// Dense univariate polynomial, coefficients from degree 0 upward, no trailing zeros.
template <class Field>
using UPoly = std::vector<typename Field::Element>;

/// Monic gcd (Euclid). The gcd of two zero polynomials is zero (empty).
template <class Field>
UPoly<Field> upoly_gcd(const Field& field, UPoly<Field> a, UPoly<Field> b);

/// Homogeneous gcd of binary forms given as polynomials in one group of two
/// variables; returned as its degree.
template <class Field>
unsigned binary_form_gcd_degree(const std::vector<MPoly<Field>>& forms, std::size_t offset);

#define IDCERT_SECTION_EXTERN(F)                                                                 \
  extern template Ideal<F> pullback_linear_section(const DenseMatrix<F>&, const TensorSpace&,    \
                                                   const Multidegree&);                          \
  extern template SchemeReport classify_linear_section(const Ideal<F>&, std::optional<std::uint64_t>, \
                                                       const SectionOptions&);                   \
  extern template SchemeReport binary_fast_path(const Ideal<F>&);                                \
  extern template UPoly<F> upoly_gcd(const F&, UPoly<F>, UPoly<F>);                              \
  extern template unsigned binary_form_gcd_degree(const std::vector<MPoly<F>>&, std::size_t);
IDCERT_SECTION_EXTERN(RationalField)
IDCERT_SECTION_EXTERN(PrimeField)
#undef IDCERT_SECTION_EXTERN

}  // namespace idcert
