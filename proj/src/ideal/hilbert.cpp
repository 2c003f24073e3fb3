#include "idcert/ideal/hilbert.hpp"

#include <algorithm>

#include "idcert/errors.hpp"

namespace idcert {
namespace {

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out) {
      if (o.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

void add_term(KPolynomial& k, const Multidegree& e, const mpz_class& c) {
  auto [it, fresh] = k.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) k.erase(it);
  }
}

KPolynomial shift(const KPolynomial& k, const Multidegree& by) {
  KPolynomial out;
  for (const auto& [e, c] : k) {
    Multidegree s = e;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += by[i];
    out.emplace(std::move(s), c);
  }
  return out;
}

KPolynomial numerator(const TensorSpace& space, std::vector<Monomial> gens) {
  const std::size_t p = space.factor_count();
  minimalize(gens);
  KPolynomial k;
  if (gens.empty()) {
    k.emplace(Multidegree(p, 0), mpz_class(1));
    return k;
  }
  // variable occurring in the most generators
  std::vector<unsigned> occurrences(Monomial::kMaxVariables, 0);
  for (const auto& g : gens)
    for (std::size_t v = 0; v < Monomial::kMaxVariables; ++v)
      if (g[v] > 0) ++occurrences[v];
  const auto best = std::max_element(occurrences.begin(), occurrences.end());
  if (*best <= 1) {
    // pairwise coprime: K = prod (1 - t^deg g)
    k.emplace(Multidegree(p, 0), mpz_class(1));
    for (const auto& g : gens) {
      KPolynomial next = k;
      for (const auto& [e, c] : shift(k, space.multidegree_of(g))) add_term(next, e, -c);
      k = std::move(next);
    }
    return k;
  }
  const std::size_t var = static_cast<std::size_t>(best - occurrences.begin());
  unsigned e = 0;
  for (const auto& g : gens)
    if (g[var] > 0 && (e == 0 || g[var] < e)) e = g[var];
  Monomial pivot;
  pivot.set(var, e);

  std::vector<Monomial> sum = gens;
  sum.push_back(pivot);
  std::vector<Monomial> quotient;
  quotient.reserve(gens.size());
  for (const auto& g : gens) {
    Monomial q = g;
    q.set(var, g[var] > e ? g[var] - e : 0);
    quotient.push_back(q);
  }
  k = numerator(space, std::move(sum));
  for (const auto& [ex, c] : shift(numerator(space, std::move(quotient)), space.multidegree_of(pivot)))
    add_term(k, ex, c);
  return k;
}

}  // namespace

KPolynomial hilbert_numerator(const TensorSpace& space, std::vector<Monomial> generators) {
  return numerator(space, std::move(generators));
}

mpz_class hilbert_value(const TensorSpace& space, const KPolynomial& k, const Multidegree& deg) {
  const std::size_t p = space.factor_count();
  if (deg.size() != p) throw DomainError("multidegree length mismatch");
  mpz_class total = 0;
  for (const auto& [e, c] : k) {
    mpz_class term = c;
    for (std::size_t i = 0; i < p && term != 0; ++i) {
      if (deg[i] < e[i]) {
        term = 0;
      } else {
        const unsigned n = space.projective_dimension(i);
        term *= binomial(deg[i] - e[i] + n, n);
      }
    }
    total += term;
  }
  return total;
}

std::uint64_t count_standard_monomials(const TensorSpace& space, const std::vector<Monomial>& leading,
                                       const Multidegree& deg) {
  std::uint64_t count = 0;
  for (const auto& m : monomial_basis(space, deg)) {
    bool standard = true;
    for (const auto& l : leading) {
      if (l.divides(m)) {
        standard = false;
        break;
      }
    }
    if (standard) ++count;
  }
  return count;
}

DiagonalProfile diagonal_profile(const TensorSpace& space, const KPolynomial& k,
                                 const std::vector<unsigned>& direction) {
  const std::size_t p = space.factor_count();
  if (direction.size() != p) throw DomainError("direction length mismatch");
  DiagonalProfile prof;
  unsigned dim_bound = 0;
  for (std::size_t i = 0; i < p; ++i)
    if (direction[i]) dim_bound += space.projective_dimension(i);
  for (const auto& [e, c] : k)
    for (std::size_t i = 0; i < p; ++i)
      if (direction[i]) prof.stable_from = std::max(prof.stable_from, e[i]);

  const unsigned last = prof.stable_from + dim_bound + 1;
  std::vector<mpz_class> values;
  for (unsigned t = 0; t <= last; ++t) {
    Multidegree deg(p);
    for (std::size_t i = 0; i < p; ++i) deg[i] = direction[i] * t;
    mpz_class v = hilbert_value(space, k, deg);
    if (sgn(v) < 0 || !v.fits_ulong_p()) throw DomainError("Hilbert value out of range");
    prof.trace.emplace_back(t, v.get_ui());
    values.push_back(v);
  }
  // finite differences over the polynomial window [stable_from, last]
  std::vector<mpz_class> diff(values.begin() + prof.stable_from, values.end());
  int order = 0;
  int dimension = -1;
  mpz_class leading = 0;
  while (!diff.empty()) {
    const bool all_zero = std::all_of(diff.begin(), diff.end(), [](const mpz_class& v) { return v == 0; });
    if (all_zero) break;
    dimension = order;
    leading = diff.front();
    std::vector<mpz_class> next;
    for (std::size_t i = 1; i < diff.size(); ++i) next.push_back(diff[i] - diff[i - 1]);
    diff = std::move(next);
    ++order;
  }
  prof.dimension = dimension;
  prof.degree = leading;
  return prof;
}

}  // namespace idcert
