#include <gtest/gtest.h>

#include "bound_oracle.hpp"
#include "idcert/criteria/bounds.hpp"
#include "idcert/errors.hpp"
#include "test_support.hpp"

using namespace idcert;
using namespace idcert::testing;

namespace {

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  if (neg) v = -v;
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  } while (v > 0);
  return mpz_class((neg ? "-" : "") + s);
}

}  // namespace

TEST(EffectiveRange, Examples) {
  const TensorSpace t({3}, {5});
  EXPECT_TRUE(effective_range(t, make_split(t, {2}), 6));
  const TensorSpace m({2, 5, 4}, {3, 2, 3});
  const Split bal = choose_split(m, 5, SplitMode::balanced);
  EXPECT_EQ(bal.dim_b, 40u);
  EXPECT_EQ(variety_dimension(m, bal.b), 8u);
  EXPECT_TRUE(effective_range(m, bal, 5));
  const TensorSpace q({3}, {4});
  EXPECT_FALSE(effective_range(q, make_split(q, {2}), 8));
}

TEST(EffectiveRange, MatchesOracle) {
  TestRng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t p = rng.uniform(1, 3);
    std::vector<unsigned> sizes;
    Multidegree d, a;
    std::vector<long> ls, lb;
    for (std::size_t i = 0; i < p; ++i) {
      sizes.push_back(rng.uniform(2, 5));
      d.push_back(rng.uniform(1, 6));
      a.push_back(rng.uniform(0, d.back()));
      ls.push_back(sizes.back());
      lb.push_back(d.back() - a.back());
    }
    const TensorSpace s(sizes, d);
    const long h = rng.uniform(1, 60);
    EXPECT_EQ(effective_range(s, make_split(s, a), h), effective_oracle(ls, lb, h));
  }
}

TEST(SegreVeroneseDegree, ClosedForm) {
  EXPECT_EQ(segre_veronese_degree(TensorSpace({4}, {4}), {2}), 8);   // 2^3
  EXPECT_EQ(segre_veronese_degree(TensorSpace({3}, {6}), {3}), 9);   // 3^2
  EXPECT_EQ(segre_veronese_degree(TensorSpace({2, 2}, {1, 1}), {1, 1}), 2);  // quadric surface
  EXPECT_EQ(segre_veronese_degree(TensorSpace({3, 2}, {2, 3}), {1, 2}), 6);  // 3!/(2!1!) * 1 * 2
  EXPECT_EQ(segre_veronese_degree(TensorSpace({3, 2}, {2, 3}), {0, 2}), 2);
}

TEST(FamilyBound, Examples) {
  auto segre = family_bound(BoundFamily::segre, {3, 4}, 4);
  EXPECT_EQ(segre.bound, 5);
  EXPECT_TRUE(segre.holds);
  EXPECT_FALSE(family_bound(BoundFamily::segre, {3, 4}, 5).holds);
  auto unb = family_bound(BoundFamily::unbalanced_segre, {7, 3, 3}, 4);
  EXPECT_EQ(unb.bound, 5);
  EXPECT_THROW(family_bound(BoundFamily::unbalanced_segre, {6, 3, 3}, 4), DomainError);
  auto degenerate = family_bound(BoundFamily::mixed_symmetric, {1, 1}, 1);
  EXPECT_EQ(degenerate.bound, 1);
  EXPECT_FALSE(degenerate.holds);
  EXPECT_FALSE(family_bound(BoundFamily::mixed_symmetric, {3, 1}, 1).holds);
  EXPECT_THROW(family_bound(BoundFamily::segre, {3}, 1), DomainError);
  EXPECT_THROW(family_bound(BoundFamily::skew, {3, 5}, 1), DomainError);
}

TEST(FamilyBound, MatchesOracleOnRandomParameters) {
  TestRng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const long n = rng.uniform(2, 9);
    const std::size_t p = rng.uniform(1, 4);
    std::vector<unsigned> params{static_cast<unsigned>(n)};
    std::vector<long> d;
    for (std::size_t i = 0; i < p; ++i) {
      d.push_back(rng.uniform(1, 8));
      params.push_back(d.back());
    }
    const long h = rng.uniform(1, 400);
    const auto ms = family_bound(BoundFamily::mixed_symmetric, params, h);
    EXPECT_EQ(ms.bound, to_mpz(mixed_symmetric_bound(n, d)));
    EXPECT_EQ(ms.holds, h < mixed_symmetric_bound(n, d));

    std::vector<unsigned> skew{static_cast<unsigned>(n)};
    std::vector<long> ds;
    for (std::size_t i = 0; i < p; ++i) {
      ds.push_back(rng.uniform(1, n));
      skew.push_back(ds.back());
    }
    EXPECT_EQ(family_bound(BoundFamily::skew, skew, h).bound, to_mpz(skew_bound(n, ds)));

    const long pf = rng.uniform(2, 8);
    EXPECT_EQ(family_bound(BoundFamily::segre, {static_cast<unsigned>(n), static_cast<unsigned>(pf)}, h).bound,
              to_mpz(segre_bound(n, pf)));

    std::vector<long> rest;
    std::vector<unsigned> up{0};
    for (std::size_t i = 0; i < p; ++i) {
      rest.push_back(rng.uniform(2, 5));
      up.push_back(rest.back());
    }
    const i128 ub = unbalanced_bound(rest);
    up[0] = static_cast<unsigned>(ub + 1 + rng.uniform(1, 5));
    EXPECT_EQ(family_bound(BoundFamily::unbalanced_segre, up, h).bound, to_mpz(ub));
  }
}

TEST(FamilyBound, Names) {
  for (auto f : {BoundFamily::mixed_symmetric, BoundFamily::skew, BoundFamily::segre, BoundFamily::unbalanced_segre})
    EXPECT_EQ(parse_bound_family(to_string(f)), f);
  EXPECT_EQ(parse_bound_family("unbalanced"), BoundFamily::unbalanced_segre);
  EXPECT_THROW(parse_bound_family("grassmann"), DomainError);
}
