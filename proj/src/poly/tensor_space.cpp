#include "idcert/poly/tensor_space.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "idcert/errors.hpp"

namespace idcert {

TensorSpace::TensorSpace(std::vector<unsigned> group_sizes, Multidegree degrees)
    : sizes_(std::move(group_sizes)), degrees_(std::move(degrees)) {
  if (sizes_.empty()) throw DomainError("a tensor space needs at least one factor");
  if (sizes_.size() != degrees_.size()) {
    throw DomainError("group sizes and degrees differ in length");
  }
  offsets_.push_back(0);
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (sizes_[i] < 2) throw DomainError("every group needs at least 2 variables");
    if (degrees_[i] < 1) throw DomainError("every degree must be positive");
    offsets_.push_back(offsets_.back() + sizes_[i]);
  }
  if (offsets_.back() > Monomial::kMaxVariables) {
    throw DomainError("tensor space has " + std::to_string(offsets_.back()) +
                      " variables; at most " + std::to_string(Monomial::kMaxVariables) +
                      " are supported");
  }
}

unsigned TensorSpace::total_projective_dimension() const noexcept {
  unsigned n = 0;
  for (auto s : sizes_) n += s - 1;
  return n;
}

std::size_t TensorSpace::group_of(std::size_t var) const {
  for (std::size_t g = 0; g < sizes_.size(); ++g)
    if (var < offsets_[g + 1]) return g;
  throw DomainError("variable index out of range");
}

Multidegree TensorSpace::multidegree_of(const Monomial& m) const {
  Multidegree deg(sizes_.size(), 0);
  for (std::size_t g = 0; g < sizes_.size(); ++g)
    for (std::size_t v = offsets_[g]; v < offsets_[g + 1]; ++v) deg[g] += m[v];
  return deg;
}

std::string TensorSpace::variable_name(std::size_t var) const {
  const std::size_t g = group_of(var);
  return "x" + std::to_string(g + 1) + "_" + std::to_string(var - offsets_[g]);
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::uint64_t monomial_count(const TensorSpace& space, const Multidegree& deg) {
  if (deg.size() != space.factor_count()) throw DomainError("multidegree length mismatch");
  mpz_class total = 1;
  for (std::size_t g = 0; g < deg.size(); ++g) {
    const unsigned n = space.projective_dimension(g);
    total *= binomial(n + deg[g], n);
  }
  if (!total.fits_ulong_p()) throw DomainError("monomial count overflows 64 bits");
  return total.get_ui();
}

std::uint64_t ambient_dimension(const TensorSpace& space) {
  return monomial_count(space, space.degrees());
}

namespace {

// exponent vectors of degree `deg` in `vars` variables, grevlex-descending
std::vector<std::vector<unsigned>> group_exponents(unsigned vars, unsigned deg) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(vars, 0);
  auto rec = [&](auto&& self, unsigned var, unsigned left) -> void {
    if (var + 1 == vars) {
      cur[var] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[var] = e;
      self(self, var + 1, left - e);
    }
  };
  rec(rec, 0, deg);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return grevlex_compare(Monomial(a), Monomial(b)) > 0;
  });
  return out;
}

}  // namespace

std::vector<Monomial> monomial_basis(const TensorSpace& space, const Multidegree& deg) {
  const std::size_t p = space.factor_count();
  if (deg.size() != p) throw DomainError("multidegree length mismatch");
  std::vector<std::vector<std::vector<unsigned>>> per_group;
  per_group.reserve(p);
  for (std::size_t g = 0; g < p; ++g) per_group.push_back(group_exponents(space.group_sizes()[g], deg[g]));

  std::vector<Monomial> out;
  out.reserve(monomial_count(space, deg));
  std::vector<unsigned> exps(space.variable_count(), 0);
  auto rec = [&](auto&& self, std::size_t g) -> void {
    if (g == p) {
      out.emplace_back(exps);
      return;
    }
    for (const auto& e : per_group[g]) {
      std::copy(e.begin(), e.end(), exps.begin() + static_cast<std::ptrdiff_t>(space.group_offset(g)));
      self(self, g + 1);
    }
  };
  rec(rec, 0);
  return out;
}

mpz_class multinomial_weight(const TensorSpace& space, const Monomial& m) {
  mpz_class w = 1;
  for (std::size_t g = 0; g < space.factor_count(); ++g) {
    unsigned left = 0;
    for (std::size_t v = space.group_offset(g); v < space.group_offset(g + 1); ++v) left += m[v];
    for (std::size_t v = space.group_offset(g); v < space.group_offset(g + 1); ++v) {
      w *= binomial(left, m[v]);
      left -= m[v];
    }
  }
  return w;
}

std::string format_multidegree(const Multidegree& deg) {
  std::string s = "{";
  for (std::size_t i = 0; i < deg.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(deg[i]);
  }
  return s + "}";
}

}  // namespace idcert
