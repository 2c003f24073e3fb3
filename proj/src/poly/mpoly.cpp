#include "idcert/poly/mpoly.hpp"

#include <algorithm>

#include "idcert/errors.hpp"

namespace idcert {

template <class Field>
MPoly<Field> MPoly<Field>::from_terms(Field field, std::vector<TermType> terms) {
  std::sort(terms.begin(), terms.end(), [](const TermType& a, const TermType& b) {
    return grevlex_compare(a.monomial, b.monomial) > 0;
  });
  std::vector<TermType> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && idcert::is_zero(out.back().coeff)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && idcert::is_zero(out.back().coeff)) out.pop_back();
  return from_sorted(field, std::move(out));
}

template <class Field>
MPoly<Field> MPoly<Field>::constant(Field field, const Element& c) {
  return monomial(field, Monomial{}, c);
}

template <class Field>
MPoly<Field> MPoly<Field>::monomial(Field field, const Monomial& m, const Element& c) {
  MPoly p(field);
  if (!idcert::is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

template <class Field>
MPoly<Field> MPoly<Field>::variable(Field field, std::size_t var) {
  Monomial m;
  m.set(var, 1);
  return monomial(field, m, field.one());
}

template <class Field>
typename MPoly<Field>::Element MPoly<Field>::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const TermType& t, const Monomial& x) {
    return grevlex_compare(t.monomial, x) > 0;
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return field_.zero();
}

template <class Field>
MPoly<Field> MPoly<Field>::combine(const MPoly& o, bool subtract) const {
  std::vector<TermType> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int cmp = i == terms_.size()     ? -1
              : j == o.terms_.size() ? 1
                                     : grevlex_compare(terms_[i].monomial, o.terms_[j].monomial);
    if (cmp > 0) {
      out.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.push_back(o.terms_[j]);
      if (subtract) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Element c = terms_[i].coeff;
      if (subtract) c -= o.terms_[j].coeff;
      else c += o.terms_[j].coeff;
      if (!idcert::is_zero(c)) out.push_back({terms_[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return from_sorted(field_, std::move(out));
}

template <class Field>
MPoly<Field>& MPoly<Field>::operator+=(const MPoly& o) {
  *this = combine(o, false);
  return *this;
}

template <class Field>
MPoly<Field>& MPoly<Field>::operator-=(const MPoly& o) {
  *this = combine(o, true);
  return *this;
}

template <class Field>
MPoly<Field> MPoly<Field>::times(const MPoly& o) const {
  std::unordered_map<Monomial, Element, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      auto [it, fresh] = acc.try_emplace(a.monomial * b.monomial, a.coeff * b.coeff);
      if (!fresh) it->second += a.coeff * b.coeff;
    }
  }
  std::vector<TermType> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!idcert::is_zero(c)) terms.push_back({m, c});
  return from_terms(field_, std::move(terms));
}

template <class Field>
MPoly<Field> MPoly<Field>::scaled(const Element& c) const {
  if (idcert::is_zero(c)) return MPoly(field_);
  MPoly out(field_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.monomial, t.coeff * c});
  return out;
}

template <class Field>
MPoly<Field> MPoly<Field>::times_term(const Monomial& m, const Element& c) const {
  if (idcert::is_zero(c)) return MPoly(field_);
  MPoly out(field_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.monomial * m, t.coeff * c});
  return out;
}

template <class Field>
MPoly<Field> MPoly<Field>::pow(unsigned e) const {
  MPoly result = constant(field_, field_.one());
  MPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result.times(base);
    e >>= 1;
    if (e > 0) base = base.times(base);
  }
  return result;
}

template <class Field>
void MPoly<Field>::make_monic() {
  if (terms_.empty()) return;
  const Element inv = inverse(terms_.front().coeff);
  for (auto& t : terms_) t.coeff *= inv;
}

template <class Field>
std::optional<Multidegree> homogeneous_multidegree(const MPoly<Field>& f, const TensorSpace& space) {
  if (f.is_zero()) return std::nullopt;
  Multidegree deg = space.multidegree_of(f.terms().front().monomial);
  for (const auto& t : f.terms())
    if (space.multidegree_of(t.monomial) != deg) return std::nullopt;
  return deg;
}

template <class Field>
MPoly<Field> differentiate(const MPoly<Field>& f, const Monomial& by) {
  const Field& field = f.field();
  std::vector<Term<Field>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    if (!by.divides(t.monomial)) continue;
    mpz_class scale = 1;
    for (std::size_t v = 0; v < Monomial::kMaxVariables; ++v) {
      for (unsigned k = 0; k < by[v]; ++k) scale *= t.monomial[v] - k;
    }
    typename Field::Element c = t.coeff * field.from_integer(scale);
    if (!idcert::is_zero(c)) out.push_back({t.monomial / by, std::move(c)});
  }
  return MPoly<Field>::from_sorted(field, std::move(out));
}

template <class Field>
std::vector<MPoly<Field>> mixed_partial_derivatives(const MPoly<Field>& t, const TensorSpace& space,
                                                    const Multidegree& a) {
  if (a.size() != space.factor_count()) throw DomainError("derivative multidegree length mismatch");
  for (std::size_t g = 0; g < a.size(); ++g) {
    if (a[g] > space.degrees()[g]) {
      throw DomainError("derivative order " + std::to_string(a[g]) + " exceeds degree " +
                        std::to_string(space.degrees()[g]) + " in group " + std::to_string(g + 1));
    }
  }
  std::vector<MPoly<Field>> out;
  for (const auto& m : monomial_basis(space, a)) out.push_back(differentiate(t, m));
  return out;
}

template <class Field>
std::vector<MPoly<Field>> partial_derivatives(const MPoly<Field>& f, const TensorSpace& space,
                                              unsigned s) {
  if (!space.symmetric()) throw DomainError("partial_derivatives expects a single variable group");
  return mixed_partial_derivatives(f, space, Multidegree{s});
}

MonomialIndex index_basis(const std::vector<Monomial>& basis) {
  MonomialIndex index;
  index.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  return index;
}

template <class Field>
std::vector<typename Field::Element> coefficient_vector(const MPoly<Field>& f,
                                                        const MonomialIndex& index,
                                                        std::size_t basis_size) {
  std::vector<typename Field::Element> v(basis_size, f.field().zero());
  for (const auto& t : f.terms()) {
    auto it = index.find(t.monomial);
    if (it == index.end()) throw DomainError("monomial of the polynomial is missing from the basis");
    v[it->second] = t.coeff;
  }
  return v;
}

template <class Field>
std::vector<typename Field::Element> coefficient_vector(const MPoly<Field>& f,
                                                        const std::vector<Monomial>& basis) {
  return coefficient_vector(f, index_basis(basis), basis.size());
}

template <class Field>
MPoly<Field> from_coefficient_vector(Field field, const std::vector<Monomial>& basis,
                                     const std::vector<typename Field::Element>& coeffs) {
  if (basis.size() != coeffs.size()) throw DomainError("coefficient vector length mismatch");
  std::vector<Term<Field>> terms;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!idcert::is_zero(coeffs[i])) terms.push_back({basis[i], coeffs[i]});
  return MPoly<Field>::from_terms(field, std::move(terms));
}

template <class Field>
MPoly<Field> power_product(Field field, const TensorSpace& space,
                           const std::vector<std::vector<typename Field::Element>>& forms,
                           const Multidegree& exponents) {
  using Element = typename Field::Element;
  const std::size_t p = space.factor_count();
  if (forms.size() != p || exponents.size() != p) throw DomainError("one linear form per group expected");
  std::vector<Term<Field>> acc{{Monomial{}, field.one()}};
  for (std::size_t g = 0; g < p; ++g) {
    const auto& form = forms[g];
    const unsigned vars = space.group_sizes()[g];
    const unsigned e = exponents[g];
    if (form.size() != vars) throw DomainError("linear form has the wrong number of coefficients");
    // powers[j][k] = form[j]^k
    std::vector<std::vector<Element>> powers(vars);
    for (unsigned j = 0; j < vars; ++j) {
      powers[j].push_back(field.one());
      for (unsigned k = 1; k <= e; ++k) powers[j].push_back(powers[j].back() * form[j]);
    }
    std::vector<Term<Field>> group_terms;
    std::vector<unsigned> exps(vars, 0);
    const std::size_t off = space.group_offset(g);
    auto rec = [&](auto&& self, unsigned j, unsigned left, const mpz_class& coeff_int,
                   const Element& coeff) -> void {
      if (j + 1 == vars) {
        exps[j] = left;
        Element c = coeff * powers[j][left];
        if (idcert::is_zero(c)) return;
        Monomial m;
        for (unsigned k = 0; k < vars; ++k)
          if (exps[k]) m.set(off + k, exps[k]);
        group_terms.push_back({m, c * field.from_integer(coeff_int)});
        return;
      }
      for (unsigned k = 0; k <= left; ++k) {
        if (k > 0 && idcert::is_zero(form[j])) break;
        exps[j] = k;
        self(self, j + 1, left - k, coeff_int * binomial(left, k), coeff * powers[j][k]);
      }
    };
    rec(rec, 0, e, mpz_class(1), field.one());
    std::vector<Term<Field>> next;
    next.reserve(acc.size() * group_terms.size());
    for (const auto& a : acc)
      for (const auto& b : group_terms) next.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
    acc = std::move(next);
  }
  return MPoly<Field>::from_terms(field, std::move(acc));
}

template <class Field>
MPoly<Field> map_coefficients(const MPoly<RationalField>& f, const Field& field) {
  std::vector<Term<Field>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    auto c = field.from_rational(t.coeff);
    if (!idcert::is_zero(c)) out.push_back({t.monomial, std::move(c)});
  }
  return MPoly<Field>::from_sorted(field, std::move(out));
}

std::string format_monomial(const Monomial& m, const TensorSpace& space) {
  std::string s;
  for (std::size_t v = 0; v < space.variable_count(); ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += space.variable_name(v);
    if (m[v] > 1) s += "^" + std::to_string(m[v]);
  }
  return s.empty() ? "1" : s;
}

template <class Field>
std::string format_poly(const MPoly<Field>& f, const TensorSpace& space) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& t : f.terms()) {
    std::string c = to_string(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (t.monomial.is_one()) {
      s += c;
    } else {
      if (c != "1") s += c + "*";
      s += format_monomial(t.monomial, space);
    }
  }
  return s;
}

#define IDCERT_MPOLY_INSTANTIATE(F)                                                               \
  template class MPoly<F>;                                                                        \
  template std::optional<Multidegree> homogeneous_multidegree(const MPoly<F>&, const TensorSpace&); \
  template MPoly<F> differentiate(const MPoly<F>&, const Monomial&);                              \
  template std::vector<MPoly<F>> partial_derivatives(const MPoly<F>&, const TensorSpace&, unsigned); \
  template std::vector<MPoly<F>> mixed_partial_derivatives(const MPoly<F>&, const TensorSpace&,   \
                                                           const Multidegree&);                   \
  template std::vector<F::Element> coefficient_vector(const MPoly<F>&, const std::vector<Monomial>&); \
  template std::vector<F::Element> coefficient_vector(const MPoly<F>&, const MonomialIndex&,      \
                                                      std::size_t);                               \
  template MPoly<F> from_coefficient_vector(F, const std::vector<Monomial>&,                      \
                                            const std::vector<F::Element>&);                      \
  template MPoly<F> power_product(F, const TensorSpace&, const std::vector<std::vector<F::Element>>&, \
                                  const Multidegree&);                                            \
  template MPoly<F> map_coefficients(const MPoly<RationalField>&, const F&);                      \
  template std::string format_poly(const MPoly<F>&, const TensorSpace&);

IDCERT_MPOLY_INSTANTIATE(RationalField)
IDCERT_MPOLY_INSTANTIATE(PrimeField)

}  // namespace idcert
