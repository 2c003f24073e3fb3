#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "idcert/arith/field.hpp"
#include "idcert/poly/monomial.hpp"
#include "idcert/poly/tensor_space.hpp"

namespace idcert {

template <class Field>
struct Term {
  Monomial monomial;
  typename Field::Element coeff;
};

/// Sparse polynomial: terms strictly decreasing in grevlex, no zero coefficients.
template <class Field>
class MPoly {
 public:
  using Element = typename Field::Element;
  using TermType = Term<Field>;

  explicit MPoly(Field field = Field{}) : field_(field) {}

  /// Combines like terms, drops zeros and sorts.
  static MPoly from_terms(Field field, std::vector<TermType> terms);
  static MPoly constant(Field field, const Element& c);
  static MPoly monomial(Field field, const Monomial& m, const Element& c);
  /// x_var
  static MPoly variable(Field field, std::size_t var);

  const Field& field() const noexcept { return field_; }
  const std::vector<TermType>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const TermType& leading() const { return terms_.front(); }
  Element coefficient(const Monomial& m) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) { return a.times(b); }
  MPoly operator-() const { return scaled(-field_.one()); }

  MPoly times(const MPoly& o) const;
  MPoly scaled(const Element& c) const;
  MPoly times_term(const Monomial& m, const Element& c) const;
  MPoly pow(unsigned e) const;
  /// Divides by the leading coefficient; no-op on zero.
  void make_monic();

  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    return true;
  }

  /// Takes ownership of already canonical terms (decreasing, nonzero).
  static MPoly from_sorted(Field field, std::vector<TermType> terms) {
    MPoly p(field);
    p.terms_ = std::move(terms);
    return p;
  }

 private:
  MPoly combine(const MPoly& o, bool subtract) const;

  Field field_;
  std::vector<TermType> terms_;
};

/// The common multidegree of all terms, or nullopt if F is not multihomogeneous
/// (the zero polynomial is homogeneous of any degree and yields nullopt too).
template <class Field>
std::optional<Multidegree> homogeneous_multidegree(const MPoly<Field>& f, const TensorSpace& space);

/// Iterated partial derivative by the multi-index `by` (no factorial scaling).
template <class Field>
MPoly<Field> differentiate(const MPoly<Field>& f, const Monomial& by);

/// All order-s partials of a single-group polynomial, ordered as monomial_basis({s}).
/// Throws DomainError if the space has several groups or s exceeds the degree.
template <class Field>
std::vector<MPoly<Field>> partial_derivatives(const MPoly<Field>& f, const TensorSpace& space,
                                              unsigned s);

/// One partial per monomial of multidegree a (in monomial_basis order).
template <class Field>
std::vector<MPoly<Field>> mixed_partial_derivatives(const MPoly<Field>& t, const TensorSpace& space,
                                                    const Multidegree& a);

using MonomialIndex = std::unordered_map<Monomial, std::size_t, MonomialHash>;
MonomialIndex index_basis(const std::vector<Monomial>& basis);

/// Coefficients of f aligned to `basis`. Throws DomainError naming the first
/// monomial of f that is missing from the basis.
template <class Field>
std::vector<typename Field::Element> coefficient_vector(const MPoly<Field>& f,
                                                        const std::vector<Monomial>& basis);
template <class Field>
std::vector<typename Field::Element> coefficient_vector(const MPoly<Field>& f,
                                                        const MonomialIndex& index,
                                                        std::size_t basis_size);

/// Sum_i coeffs[i] * basis[i].
template <class Field>
MPoly<Field> from_coefficient_vector(Field field, const std::vector<Monomial>& basis,
                                     const std::vector<typename Field::Element>& coeffs);

/// prod_g (forms[g] . x_g)^{exponents[g]}, forms[g] holding one coefficient per variable
/// of group g.
template <class Field>
MPoly<Field> power_product(Field field, const TensorSpace& space,
                           const std::vector<std::vector<typename Field::Element>>& forms,
                           const Multidegree& exponents);

/// Maps rational coefficients into another field.
template <class Field>
MPoly<Field> map_coefficients(const MPoly<RationalField>& f, const Field& field);

std::string format_monomial(const Monomial& m, const TensorSpace& space);
template <class Field>
std::string format_poly(const MPoly<Field>& f, const TensorSpace& space);

#define IDCERT_MPOLY_EXTERN(F)                                                                    \
  extern template class MPoly<F>;                                                                 \
  extern template std::optional<Multidegree> homogeneous_multidegree(const MPoly<F>&,             \
                                                                     const TensorSpace&);         \
  extern template MPoly<F> differentiate(const MPoly<F>&, const Monomial&);                       \
  extern template std::vector<MPoly<F>> partial_derivatives(const MPoly<F>&, const TensorSpace&,  \
                                                            unsigned);                            \
  extern template std::vector<MPoly<F>> mixed_partial_derivatives(                                \
      const MPoly<F>&, const TensorSpace&, const Multidegree&);                                   \
  extern template std::vector<F::Element> coefficient_vector(const MPoly<F>&,                     \
                                                             const std::vector<Monomial>&);       \
  extern template std::vector<F::Element> coefficient_vector(const MPoly<F>&,                     \
                                                             const MonomialIndex&, std::size_t);  \
  extern template MPoly<F> from_coefficient_vector(F, const std::vector<Monomial>&,               \
                                                   const std::vector<F::Element>&);               \
  extern template MPoly<F> power_product(F, const TensorSpace&,                                   \
                                         const std::vector<std::vector<F::Element>>&,             \
                                         const Multidegree&);                                     \
  extern template MPoly<F> map_coefficients(const MPoly<RationalField>&, const F&);               \
  extern template std::string format_poly(const MPoly<F>&, const TensorSpace&);

IDCERT_MPOLY_EXTERN(RationalField)
IDCERT_MPOLY_EXTERN(PrimeField)
#undef IDCERT_MPOLY_EXTERN

}  // namespace idcert
