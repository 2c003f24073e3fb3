#include "idcert/ideal/section.hpp"

#include <algorithm>

#include "idcert/errors.hpp"

namespace idcert {

std::string SchemeReport::describe() const {
  switch (status) {
    case SchemeStatus::empty:
      return "Empty";
    case SchemeStatus::zero_dimensional:
      return "ZeroDim(" + std::to_string(length) + ")";
    case SchemeStatus::positive_dimensional:
      return "PositiveDim(" + std::to_string(dimension) + ")";
    case SchemeStatus::inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

template <class Field>
Ideal<Field> pullback_linear_section(const DenseMatrix<Field>& span, const TensorSpace& space,
                                     const Multidegree& b) {
  const auto basis = monomial_basis(space, b);
  if (span.cols() != basis.size()) {
    throw DomainError("span has " + std::to_string(span.cols()) + " columns but the multidegree " +
                      format_multidegree(b) + " basis has " + std::to_string(basis.size()) + " monomials");
  }
  const Field& field = span.field();
  std::vector<typename Field::Element> weights;
  weights.reserve(basis.size());
  for (const auto& m : basis) weights.push_back(field.from_integer(multinomial_weight(space, m)));

  const auto kernel = kernel_basis(span);
  Ideal<Field> ideal{space, b, {}};
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    std::vector<Term<Field>> terms;
    for (std::size_t c = 0; c < basis.size(); ++c) {
      if (is_zero(kernel(r, c))) continue;
      terms.push_back({basis[c], kernel(r, c) * weights[c]});
    }
    auto g = MPoly<Field>::from_terms(field, std::move(terms));
    if (!g.is_zero()) ideal.generators.push_back(std::move(g));
  }
  return ideal;
}

template <class Field>
UPoly<Field> upoly_gcd(const Field& field, UPoly<Field> a, UPoly<Field> b) {
  auto trim = [](UPoly<Field>& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
  };
  auto monic = [&](UPoly<Field>& p) {
    if (p.empty()) return;
    const auto inv = inverse(p.back());
    for (auto& c : p) c *= inv;
  };
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  monic(b);
  while (!b.empty()) {
    // a <- a mod b, with b monic
    while (a.size() >= b.size()) {
      const auto lead = a.back();
      const std::size_t shift = a.size() - b.size();
      if (!is_zero(lead))
        for (std::size_t i = 0; i + 1 < b.size(); ++i) a[shift + i] -= lead * b[i];
      a.pop_back();
      trim(a);
    }
    monic(a);
    std::swap(a, b);
  }
  (void)field;
  return a;
}

template <class Field>
unsigned binary_form_gcd_degree(const std::vector<MPoly<Field>>& forms, std::size_t offset) {
  std::optional<UPoly<Field>> g;
  unsigned infinity_multiplicity = ~0u;
  const Field* field = nullptr;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    field = &f.field();
    const unsigned k = f.leading().monomial.degree();
    unsigned ord = k;
    for (const auto& t : f.terms()) ord = std::min(ord, t.monomial[offset + 1]);
    // dehomogenize at x_{offset+1} = 1: coefficient of u^i is that of x0^i x1^(k-i)
    UPoly<Field> u(k - ord + 1, f.field().zero());
    for (const auto& t : f.terms()) u[t.monomial[offset]] = t.coeff;
    infinity_multiplicity = std::min(infinity_multiplicity, ord);
    g = g ? upoly_gcd(f.field(), std::move(*g), std::move(u)) : upoly_gcd(f.field(), std::move(u), {});
  }
  if (field == nullptr) throw DomainError("gcd of zero forms is undefined");
  return static_cast<unsigned>(g->size() - 1) + infinity_multiplicity;
}

template <class Field>
SchemeReport binary_fast_path(const Ideal<Field>& ideal) {
  if (!ideal.space.symmetric() || ideal.space.group_sizes()[0] != 2) {
    throw DomainError("binary fast path needs a single group of two variables");
  }
  SchemeReport rep;
  rep.method = "binary-gcd";
  rep.generator_count = ideal.generators.size();
  const bool all_zero = std::all_of(ideal.generators.begin(), ideal.generators.end(),
                                    [](const auto& g) { return g.is_zero(); });
  if (all_zero) {
    rep.status = SchemeStatus::positive_dimensional;
    rep.dimension = 1;
    rep.length = 1;
    return rep;
  }
  const unsigned deg = binary_form_gcd_degree(ideal.generators, 0);
  if (deg == 0) {
    rep.status = SchemeStatus::empty;
  } else {
    rep.status = SchemeStatus::zero_dimensional;
    rep.dimension = 0;
    rep.length = deg;
  }
  return rep;
}

template <class Field>
SchemeReport classify_linear_section(const Ideal<Field>& ideal, std::optional<std::uint64_t> expected_length,
                                     const SectionOptions& options) {
  const TensorSpace& space = ideal.space;
  const bool binary = space.symmetric() && space.group_sizes()[0] == 2;
  SchemeReport rep;
  if (binary && options.binary_fast_path && !ideal.degree.empty() && ideal.degree[0] > 0) {
    rep = binary_fast_path(ideal);
  } else {
    rep.method = "hilbert-series";
    rep.generator_count = ideal.generators.size();
    GroebnerBasis<Field> gb;
    try {
      gb = buchberger(ideal.generators, options.groebner);
    } catch (const ResourceLimitExceeded& e) {
      rep.status = SchemeStatus::inconclusive;
      rep.note = e.what();
      return rep;
    }
    rep.basis_size = gb.polys.size();
    std::vector<unsigned> direction(space.factor_count(), 1);
    for (std::size_t i = 0; i < direction.size() && i < ideal.degree.size(); ++i)
      direction[i] = ideal.degree[i] > 0 ? 1 : 0;
    const auto profile = diagonal_profile(space, hilbert_numerator(space, gb.leading_monomials()), direction);
    rep.trace = profile.trace;
    rep.stable_from = profile.stable_from;
    rep.dimension = profile.dimension;
    if (profile.dimension < 0) {
      rep.status = SchemeStatus::empty;
    } else {
      rep.status = profile.dimension == 0 ? SchemeStatus::zero_dimensional : SchemeStatus::positive_dimensional;
      if (!profile.degree.fits_ulong_p()) throw DomainError("scheme degree out of range");
      rep.length = profile.degree.get_ui();
    }
  }
  if (expected_length && rep.status == SchemeStatus::zero_dimensional && rep.length != *expected_length) {
    rep.note = "length " + std::to_string(rep.length) + ", expected " + std::to_string(*expected_length);
  }
  return rep;
}

#define IDCERT_SECTION_INSTANTIATE(F)                                                             \
  template Ideal<F> pullback_linear_section(const DenseMatrix<F>&, const TensorSpace&, const Multidegree&); \
  template SchemeReport classify_linear_section(const Ideal<F>&, std::optional<std::uint64_t>,    \
                                                const SectionOptions&);                           \
  template SchemeReport binary_fast_path(const Ideal<F>&);                                        \
  template UPoly<F> upoly_gcd(const F&, UPoly<F>, UPoly<F>);                                      \
  template unsigned binary_form_gcd_degree(const std::vector<MPoly<F>>&, std::size_t);
IDCERT_SECTION_INSTANTIATE(RationalField)
IDCERT_SECTION_INSTANTIATE(PrimeField)

}  // namespace idcert
