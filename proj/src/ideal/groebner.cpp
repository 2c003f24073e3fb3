#include "idcert/ideal/groebner.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "idcert/errors.hpp"

namespace idcert {

template <class Field>
std::vector<Monomial> GroebnerBasis<Field>::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(polys.size());
  for (const auto& g : polys) out.push_back(g.leading().monomial);
  return out;
}

namespace {

template <class Field>
const MPoly<Field>* find_reducer(const Monomial& m, const std::vector<const MPoly<Field>*>& divisors) {
  for (const auto* g : divisors)
    if (g->leading().monomial.divides(m)) return g;
  return nullptr;
}

template <class Field>
MPoly<Field> reduce(const MPoly<Field>& f, const std::vector<const MPoly<Field>*>& divisors) {
  using Element = typename Field::Element;
  std::map<Monomial, Element, GrevlexGreater> work;
  for (const auto& t : f.terms()) work.emplace(t.monomial, t.coeff);
  std::vector<Term<Field>> remainder;
  Element scaled;
  while (!work.empty()) {
    auto it = work.begin();
    Monomial m = it->first;
    Element c = std::move(it->second);
    work.erase(it);
    const MPoly<Field>* g = find_reducer(m, divisors);
    if (g == nullptr) {
      remainder.push_back({m, std::move(c)});
      continue;
    }
    const auto& gt = g->terms();
    const Monomial q = m / gt.front().monomial;
    const Element factor = c / gt.front().coeff;
    for (std::size_t k = 1; k < gt.size(); ++k) {
      scaled = factor * gt[k].coeff;
      auto [jt, fresh] = work.try_emplace(q * gt[k].monomial, -scaled);
      if (!fresh) {
        jt->second -= scaled;
        if (is_zero(jt->second)) work.erase(jt);
      }
    }
  }
  return MPoly<Field>::from_sorted(f.field(), std::move(remainder));
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  unsigned sugar;
};

template <class Field>
class BuchbergerRun {
 public:
  BuchbergerRun(const GroebnerOptions& options) : options_(options) {}

  GroebnerBasis<Field> run(const std::vector<MPoly<Field>>& generators) {
    for (const auto& g : generators) {
      if (g.is_zero()) continue;
      pending_.push_back(g);
      pending_sugar_.push_back(g.leading().monomial.degree());
    }
    Field field = generators.empty() ? Field{} : generators.front().field();
    while (true) {
      // lowest sugar first; among equals prefer input generators, then smaller lcm
      std::size_t best_gen = pending_.size();
      for (std::size_t k = 0; k < pending_.size(); ++k)
        if (best_gen == pending_.size() || pending_sugar_[k] < pending_sugar_[best_gen]) best_gen = k;
      std::size_t best_pair = pairs_.size();
      for (std::size_t k = 0; k < pairs_.size(); ++k) {
        if (best_pair == pairs_.size() || pairs_[k].sugar < pairs_[best_pair].sugar ||
            (pairs_[k].sugar == pairs_[best_pair].sugar &&
             grevlex_compare(pairs_[k].lcm, pairs_[best_pair].lcm) < 0))
          best_pair = k;
      }
      if (best_gen == pending_.size() && best_pair == pairs_.size()) break;

      MPoly<Field> h(field);
      unsigned sugar;
      if (best_gen != pending_.size() &&
          (best_pair == pairs_.size() || pending_sugar_[best_gen] <= pairs_[best_pair].sugar)) {
        h = std::move(pending_[best_gen]);
        sugar = pending_sugar_[best_gen];
        pending_.erase(pending_.begin() + static_cast<std::ptrdiff_t>(best_gen));
        pending_sugar_.erase(pending_sugar_.begin() + static_cast<std::ptrdiff_t>(best_gen));
      } else {
        Pair pr = pairs_[best_pair];
        pairs_[best_pair] = pairs_.back();
        pairs_.pop_back();
        if (++stats_.pairs_reduced > options_.pair_budget) {
          throw ResourceLimitExceeded("Groebner pair budget of " +
                                      std::to_string(options_.pair_budget) + " exhausted");
        }
        h = s_polynomial(basis_[pr.i], basis_[pr.j]);
        sugar = pr.sugar;
      }
      h = reduce(h, active_divisors());
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      h.make_monic();
      update(std::move(h), sugar);
    }

    // the active set is minimal; one tail-reduction pass makes it reduced
    GroebnerBasis<Field> out;
    std::vector<std::size_t> act;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) act.push_back(k);
    for (std::size_t k : act) {
      std::vector<const MPoly<Field>*> others;
      for (std::size_t l : act)
        if (l != k) others.push_back(&basis_[l]);
      const auto& lead = basis_[k].leading();
      MPoly<Field> tail = MPoly<Field>::from_sorted(
          field, std::vector<Term<Field>>(basis_[k].terms().begin() + 1, basis_[k].terms().end()));
      MPoly<Field> g = MPoly<Field>::monomial(field, lead.monomial, lead.coeff) + reduce(tail, others);
      out.polys.push_back(std::move(g));
    }
    std::sort(out.polys.begin(), out.polys.end(), [](const auto& a, const auto& b) {
      return grevlex_compare(a.leading().monomial, b.leading().monomial) < 0;
    });
    out.stats = stats_;
    return out;
  }

 private:
  std::vector<const MPoly<Field>*> active_divisors() const {
    std::vector<const MPoly<Field>*> out;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) out.push_back(&basis_[k]);
    return out;
  }

  Pair make_pair(std::size_t i, std::size_t j) const {
    const Monomial& li = basis_[i].leading().monomial;
    const Monomial& lj = basis_[j].leading().monomial;
    Monomial l = Monomial::lcm(li, lj);
    unsigned s = std::max(sugar_[i] + l.degree() - li.degree(), sugar_[j] + l.degree() - lj.degree());
    return {i, j, l, s};
  }

  // Gebauer-Moeller update with the new element h.
  void update(MPoly<Field> h, unsigned sugar) {
    const std::size_t hi = basis_.size();
    basis_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);
    const Monomial& lh = basis_[hi].leading().monomial;

    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k]) candidates.push_back(make_pair(k, hi));

    // chain criterion among the new pairs
    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& pc = candidates[c];
      const bool coprime = basis_[pc.i].leading().monomial.coprime(lh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t o = c + 1; o < candidates.size() && !dominated; ++o)
          dominated = candidates[o].lcm.divides(pc.lcm);
        for (std::size_t o = 0; o < kept.size() && !dominated; ++o) dominated = kept[o].lcm.divides(pc.lcm);
      }
      if (dominated) {
        ++stats_.pairs_discarded;
      } else {
        kept.push_back(pc);
      }
    }
    // product criterion
    std::vector<Pair> fresh;
    for (auto& pc : kept) {
      if (basis_[pc.i].leading().monomial.coprime(lh)) {
        ++stats_.pairs_discarded;
      } else {
        fresh.push_back(pc);
      }
    }
    // old pairs made redundant by h
    std::vector<Pair> survivors;
    for (auto& po : pairs_) {
      const Monomial lih = Monomial::lcm(basis_[po.i].leading().monomial, lh);
      const Monomial ljh = Monomial::lcm(basis_[po.j].leading().monomial, lh);
      if (lh.divides(po.lcm) && !(lih == po.lcm) && !(ljh == po.lcm)) {
        ++stats_.pairs_discarded;
      } else {
        survivors.push_back(po);
      }
    }
    pairs_ = std::move(survivors);
    pairs_.insert(pairs_.end(), fresh.begin(), fresh.end());

    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k] && lh.divides(basis_[k].leading().monomial)) active_[k] = false;
  }

  GroebnerOptions options_;
  GroebnerStats stats_;
  std::vector<MPoly<Field>> basis_;
  std::vector<unsigned> sugar_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::vector<MPoly<Field>> pending_;
  std::vector<unsigned> pending_sugar_;
};

}  // namespace

template <class Field>
MPoly<Field> s_polynomial(const MPoly<Field>& f, const MPoly<Field>& g) {
  const auto& lf = f.leading();
  const auto& lg = g.leading();
  const Monomial l = Monomial::lcm(lf.monomial, lg.monomial);
  return f.times_term(l / lf.monomial, inverse(lf.coeff)) - g.times_term(l / lg.monomial, inverse(lg.coeff));
}

template <class Field>
MPoly<Field> normal_form(const MPoly<Field>& f, const std::vector<MPoly<Field>>& divisors) {
  std::vector<const MPoly<Field>*> ptrs;
  for (const auto& d : divisors)
    if (!d.is_zero()) ptrs.push_back(&d);
  return reduce(f, ptrs);
}

template <class Field>
GroebnerBasis<Field> buchberger(const std::vector<MPoly<Field>>& generators,
                                const GroebnerOptions& options) {
  return BuchbergerRun<Field>(options).run(generators);
}

template struct GroebnerBasis<RationalField>;
template struct GroebnerBasis<PrimeField>;
template GroebnerBasis<RationalField> buchberger(const std::vector<MPoly<RationalField>>&,
                                                 const GroebnerOptions&);
template GroebnerBasis<PrimeField> buchberger(const std::vector<MPoly<PrimeField>>&, const GroebnerOptions&);
template MPoly<RationalField> normal_form(const MPoly<RationalField>&, const std::vector<MPoly<RationalField>>&);
template MPoly<PrimeField> normal_form(const MPoly<PrimeField>&, const std::vector<MPoly<PrimeField>>&);
template MPoly<RationalField> s_polynomial(const MPoly<RationalField>&, const MPoly<RationalField>&);
template MPoly<PrimeField> s_polynomial(const MPoly<PrimeField>&, const MPoly<PrimeField>&);

}  // namespace idcert
