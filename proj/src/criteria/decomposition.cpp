#include "idcert/criteria/decomposition.hpp"

#include "idcert/errors.hpp"

namespace idcert {

namespace {

bool proportional(const std::vector<mpq_class>& u, const std::vector<mpq_class>& v) {
  // u x v = 0 in every 2x2 minor
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  return true;
}

}  // namespace

void validate(const Decomposition& dec) {
  const TensorSpace& space = dec.space;
  if (dec.terms.empty()) throw DomainError("decomposition has no terms");
  for (std::size_t t = 0; t < dec.terms.size(); ++t) {
    const RankOneTerm& term = dec.terms[t];
    const std::string where = "term " + std::to_string(t + 1);
    if (term.forms.size() != space.factor_count()) {
      throw DomainError(where + " has " + std::to_string(term.forms.size()) + " factors, expected " +
                        std::to_string(space.factor_count()));
    }
    if (sgn(term.lambda) == 0) throw DomainError(where + " has a zero coefficient");
    for (std::size_t g = 0; g < term.forms.size(); ++g) {
      const auto& form = term.forms[g];
      if (form.size() != space.group_sizes()[g]) {
        throw DomainError(where + ", factor " + std::to_string(g + 1) + ": expected " +
                          std::to_string(space.group_sizes()[g]) + " coefficients, got " +
                          std::to_string(form.size()));
      }
      bool nonzero = false;
      for (const auto& c : form) nonzero = nonzero || sgn(c) != 0;
      if (!nonzero) throw DomainError(where + ", factor " + std::to_string(g + 1) + " is zero");
    }
  }
  for (std::size_t s = 0; s < dec.terms.size(); ++s) {
    for (std::size_t t = s + 1; t < dec.terms.size(); ++t) {
      bool same = true;
      for (std::size_t g = 0; g < space.factor_count() && same; ++g)
        same = proportional(dec.terms[s].forms[g], dec.terms[t].forms[g]);
      if (same) {
        throw DomainError("terms " + std::to_string(s + 1) + " and " + std::to_string(t + 1) +
                          " are proportional");
      }
    }
  }
}

template <class Field>
MPoly<Field> expand_term(const RankOneTerm& term, const TensorSpace& space, const Field& field) {
  std::vector<std::vector<typename Field::Element>> forms;
  forms.reserve(term.forms.size());
  for (const auto& f : term.forms) {
    std::vector<typename Field::Element> row;
    row.reserve(f.size());
    for (const auto& c : f) row.push_back(field.from_rational(c));
    forms.push_back(std::move(row));
  }
  MPoly<Field> u = power_product(field, space, forms, space.degrees());
  if (term.lambda != 1) u = u.scaled(field.from_rational(term.lambda));
  return u;
}

template <class Field>
MPoly<Field> expand(const Decomposition& dec, const Field& field) {
  MPoly<Field> t(field);
  for (const auto& term : dec.terms) t += expand_term(term, dec.space, field);
  return t;
}

template MPoly<RationalField> expand_term(const RankOneTerm&, const TensorSpace&, const RationalField&);
template MPoly<PrimeField> expand_term(const RankOneTerm&, const TensorSpace&, const PrimeField&);
template MPoly<RationalField> expand(const Decomposition&, const RationalField&);
template MPoly<PrimeField> expand(const Decomposition&, const PrimeField&);

}  // namespace idcert
