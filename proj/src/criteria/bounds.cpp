#include "idcert/criteria/bounds.hpp"

#include "idcert/errors.hpp"

namespace idcert {

unsigned variety_dimension(const TensorSpace& space, const Multidegree& b) {
  unsigned n = 0;
  for (std::size_t i = 0; i < space.factor_count(); ++i)
    if (b.at(i) > 0) n += space.projective_dimension(i);
  return n;
}

mpz_class segre_veronese_degree(const TensorSpace& space, const Multidegree& b) {
  mpz_class num, den = 1, powers = 1;
  unsigned n = 0;
  for (std::size_t i = 0; i < space.factor_count(); ++i) {
    if (b.at(i) == 0) continue;
    const unsigned ni = space.projective_dimension(i);
    n += ni;
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), ni);
    den *= f;
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), b[i], ni);
    powers *= pw;
  }
  mpz_fac_ui(num.get_mpz_t(), n);
  return num / den * powers;
}

bool effective_range(const TensorSpace& space, const Split& split, std::size_t h) {
  return split.dim_b > h + variety_dimension(space, split.b);
}

namespace {

unsigned floor_half(unsigned d) { return d / 2; }

}  // namespace

FamilyBound family_bound(BoundFamily family, const std::vector<unsigned>& params, std::size_t h) {
  FamilyBound out;
  switch (family) {
    case BoundFamily::mixed_symmetric:
    case BoundFamily::skew: {
      if (params.size() < 2) throw DomainError("expected parameters (n, d_1, ..., d_p)");
      const unsigned n = params[0];
      if (n < 1) throw DomainError("vector space dimension must be positive");
      const std::size_t p = params.size() - 1;
      if (family == BoundFamily::mixed_symmetric) {
        mpz_class prod = 1;
        for (std::size_t i = 1; i <= p; ++i) prod *= binomial(n - 1 + floor_half(params[i]), n - 1);
        out.bound = prod - mpz_class(static_cast<unsigned long>(p)) * (n - 1);
      } else {
        mpz_class prod = 1, defect = 1;
        for (std::size_t i = 1; i <= p; ++i) {
          const unsigned m = floor_half(params[i]);
          if (params[i] > n) throw DomainError("skew degree exceeds the space dimension");
          prod *= binomial(n, m);
          defect *= mpz_class(m) * (n - m);
        }
        out.bound = prod - defect;
      }
      break;
    }
    case BoundFamily::segre: {
      if (params.size() != 2) throw DomainError("expected parameters (n, p)");
      const unsigned n = params[0];
      const unsigned m = params[1] / 2;
      mpz_class pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), n, m);
      out.bound = pw - mpz_class(m) * (mpz_class(n) - 1);
      break;
    }
    case BoundFamily::unbalanced_segre: {
      if (params.size() < 2) throw DomainError("expected parameters (n_1, ..., n_p) with p >= 2");
      mpz_class prod = 1, sum = 0;
      for (std::size_t i = 1; i < params.size(); ++i) {
        prod *= params[i];
        sum += mpz_class(params[i]) - 1;
      }
      out.bound = prod - sum;
      if (!(mpz_class(params[0]) > 1 + out.bound)) {
        throw DomainError("not unbalanced: n_1 = " + std::to_string(params[0]) + " must exceed " +
                          mpz_class(1 + out.bound).get_str());
      }
      break;
    }
  }
  out.holds = mpz_class(static_cast<unsigned long>(h)) < out.bound;
  return out;
}

BoundFamily parse_bound_family(const std::string& name) {
  if (name == "mixed-symmetric") return BoundFamily::mixed_symmetric;
  if (name == "skew") return BoundFamily::skew;
  if (name == "segre") return BoundFamily::segre;
  if (name == "unbalanced-segre" || name == "unbalanced") return BoundFamily::unbalanced_segre;
  throw DomainError("unknown bound family '" + name + "'");
}

std::string to_string(BoundFamily family) {
  switch (family) {
    case BoundFamily::mixed_symmetric:
      return "mixed-symmetric";
    case BoundFamily::skew:
      return "skew";
    case BoundFamily::segre:
      return "segre";
    case BoundFamily::unbalanced_segre:
      return "unbalanced-segre";
  }
  return "?";
}

}  // namespace idcert
