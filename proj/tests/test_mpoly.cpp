#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "idcert/errors.hpp"
#include "idcert/poly/mpoly.hpp"
#include "test_support.hpp"

using namespace idcert;
using namespace idcert::testing;

namespace {

const RationalField Q;

QPoly var(const TensorSpace&, std::size_t v) { return QPoly::variable(Q, v); }
QPoly cst(long c) { return QPoly::constant(Q, mpq_class(c)); }

std::vector<mpq_class> qv(std::initializer_list<long> v) {
  std::vector<mpq_class> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

QPoly random_form(TestRng& rng, const TensorSpace& s, const Multidegree& d, long bound) {
  const auto basis = monomial_basis(s, d);
  std::vector<mpq_class> c;
  for (std::size_t i = 0; i < basis.size(); ++i) c.push_back(rng.coeff(bound));
  return from_coefficient_vector(Q, basis, c);
}

}  // namespace

TEST(MonomialBasis, Counts) {
  const TensorSpace mixed({2, 5, 4}, {3, 2, 3});
  EXPECT_EQ(monomial_basis(mixed, {3, 2, 3}).size(), 1200u);
  EXPECT_EQ(monomial_basis(TensorSpace({3}, {5}), {5}).size(), 21u);
  const auto one = monomial_basis(mixed, {0, 0, 0});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one[0].is_one());
}

TEST(MonomialBasis, OrderAndClosedForm) {
  TestRng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t p = rng.uniform(1, 3);
    std::vector<unsigned> sizes;
    Multidegree deg;
    for (std::size_t i = 0; i < p; ++i) {
      sizes.push_back(rng.uniform(2, 4));
      deg.push_back(rng.uniform(0, 4));
    }
    Multidegree d1 = deg;
    for (auto& x : d1) x = std::max(1u, x);
    const TensorSpace s(sizes, d1);
    const auto basis = monomial_basis(s, deg);
    std::uint64_t expect = 1;
    for (std::size_t i = 0; i < p; ++i) expect *= binomial(sizes[i] - 1 + deg[i], sizes[i] - 1).get_ui();
    EXPECT_EQ(basis.size(), expect);
    std::set<std::size_t> hashes;
    for (const auto& m : basis) EXPECT_EQ(s.multidegree_of(m), deg);
    for (std::size_t i = 0; i + 1 < basis.size(); ++i) EXPECT_FALSE(basis[i] == basis[i + 1]);
  }
  // binary quadrics in grevlex order
  const TensorSpace b({2}, {2});
  const auto q = monomial_basis(b, {2});
  EXPECT_EQ(format_monomial(q[0], b), "x1_0^2");
  EXPECT_EQ(format_monomial(q[1], b), "x1_0*x1_1");
  EXPECT_EQ(format_monomial(q[2], b), "x1_1^2");
}

TEST(PartialDerivatives, Examples) {
  const TensorSpace s({2}, {3});
  const QPoly x0 = var(s, 0), x1 = var(s, 1);
  auto d = partial_derivatives(x0.pow(3), s, 1);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0], x0.pow(2).scaled(3));
  EXPECT_TRUE(d[1].is_zero());

  const TensorSpace s2({2}, {2});
  d = partial_derivatives(x0 * x1, s2, 1);
  EXPECT_EQ(d[0], x1);
  EXPECT_EQ(d[1], x0);

  d = partial_derivatives(x0.pow(2) + x1.pow(2), s2, 2);
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[0], cst(2));
  EXPECT_TRUE(d[1].is_zero());
  EXPECT_EQ(d[2], cst(2));

  EXPECT_THROW(partial_derivatives(x0.pow(3), s, 4), DomainError);
  EXPECT_THROW(partial_derivatives(x0, TensorSpace({2, 2}, {1, 1}), 0), DomainError);
}

TEST(MixedPartials, Examples) {
  const TensorSpace s({2, 2}, {2, 1});
  const QPoly x0 = var(s, 0), y0 = var(s, 2);
  const QPoly t = x0.pow(2) * y0;
  auto d = mixed_partial_derivatives(t, s, {1, 0});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0], (x0 * y0).scaled(2));
  EXPECT_TRUE(d[1].is_zero());
  d = mixed_partial_derivatives(t, s, {0, 0});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0], t);
  EXPECT_THROW(mixed_partial_derivatives(t, s, {3, 0}), DomainError);
}

TEST(MixedPartials, RankOneTermsStayRankOne) {
  TestRng rng(17);
  const TensorSpace s({3, 2}, {3, 2});
  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<std::vector<mpq_class>> forms{rng.nonzero_vector(3, 5), rng.nonzero_vector(2, 5)};
    const QPoly t = power_product(Q, s, forms, s.degrees());
    for (const Multidegree& a : {Multidegree{1, 0}, Multidegree{2, 1}, Multidegree{1, 2}}) {
      Multidegree b{3 - a[0], 2 - a[1]};
      const QPoly target = power_product(Q, s, forms, b);
      for (const auto& d : mixed_partial_derivatives(t, s, a)) {
        if (d.is_zero()) continue;
        // d = c * target for c = ratio of leading coefficients
        const mpq_class c = d.leading().coeff / target.coefficient(d.leading().monomial);
        EXPECT_EQ(d, target.scaled(c));
      }
    }
  }
}

TEST(PartialDerivatives, Linearity) {
  TestRng rng(8);
  const TensorSpace s({3}, {4});
  for (int trial = 0; trial < 10; ++trial) {
    const QPoly f = random_form(rng, s, {4}, 50), g = random_form(rng, s, {4}, 50);
    const mpq_class a = rng.coeff(9), b = rng.coeff(9);
    const auto lhs = partial_derivatives(f.scaled(a) + g.scaled(b), s, 2);
    const auto df = partial_derivatives(f, s, 2), dg = partial_derivatives(g, s, 2);
    for (std::size_t i = 0; i < lhs.size(); ++i) EXPECT_EQ(lhs[i], df[i].scaled(a) + dg[i].scaled(b));
  }
}

TEST(CoefficientVector, Examples) {
  const TensorSpace s({2}, {2});
  const auto basis = monomial_basis(s, {2});
  const QPoly x0 = var(s, 0), x1 = var(s, 1);
  EXPECT_EQ(coefficient_vector(QPoly(Q), basis), qv({0, 0, 0}));
  EXPECT_EQ(coefficient_vector((x0 * x1).scaled(2), basis), qv({0, 2, 0}));
  EXPECT_EQ(coefficient_vector(x0.pow(2) + x1.pow(2), basis), qv({1, 0, 1}));
  EXPECT_THROW(coefficient_vector(x0.pow(3), basis), DomainError);
}

TEST(CoefficientVector, RoundTrip) {
  TestRng rng(12);
  const TensorSpace s({2, 3}, {2, 3});
  const auto basis = monomial_basis(s, s.degrees());
  for (int trial = 0; trial < 10; ++trial) {
    const QPoly f = random_form(rng, s, s.degrees(), 100);
    EXPECT_EQ(from_coefficient_vector(Q, basis, coefficient_vector(f, basis)), f);
  }
}

TEST(PowerProduct, Examples) {
  const TensorSpace s({2}, {3});
  const QPoly x0 = var(s, 0), x1 = var(s, 1);
  EXPECT_EQ(power_product(Q, s, {qv({1, 0})}, {3}), x0.pow(3));
  const TensorSpace s2({2}, {2});
  EXPECT_EQ(power_product(Q, s2, {qv({1, 1})}, {2}), x0.pow(2) + (x0 * x1).scaled(2) + x1.pow(2));
  const TensorSpace s3({2, 2}, {1, 1});
  const QPoly y0 = var(s3, 2), y1 = var(s3, 3);
  EXPECT_EQ(power_product(Q, s3, {qv({1, 0}), qv({1, 1})}, {1, 1}), x0 * y0 + x0 * y1);
}

TEST(PowerProduct, MatchesRepeatedMultiplication) {
  TestRng rng(4);
  const TensorSpace s({3, 2}, {4, 3});
  for (int trial = 0; trial < 5; ++trial) {
    const auto f1 = rng.nonzero_vector(3, 7), f2 = rng.nonzero_vector(2, 7);
    QPoly l1(Q), l2(Q);
    for (std::size_t j = 0; j < 3; ++j) l1 += var(s, j).scaled(f1[j]);
    for (std::size_t j = 0; j < 2; ++j) l2 += var(s, 3 + j).scaled(f2[j]);
    EXPECT_EQ(power_product(Q, s, {f1, f2}, {4, 3}), l1.pow(4) * l2.pow(3));
  }
}

TEST(MPoly, ArithmeticAndHomogeneity) {
  const TensorSpace s({2, 2}, {1, 1});
  const QPoly x0 = var(s, 0), y1 = var(s, 3);
  const QPoly f = x0 * y1 - x0 * y1;
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(homogeneous_multidegree(x0 * y1, s), (Multidegree{1, 1}));
  EXPECT_FALSE(homogeneous_multidegree(x0 + x0 * y1, s).has_value());
  EXPECT_EQ(format_poly((x0 * y1).scaled(-3) + cst(2), s), "-3*x1_0*x2_1 + 2");
  auto m = (x0.scaled(4) + y1).pow(2);
  m.make_monic();
  EXPECT_EQ(m.leading().coeff, 1);
}

TEST(MPoly, MapToPrimeField) {
  const TensorSpace s({2}, {1});
  const QPoly f = var(s, 0).scaled(mpq_class(1, 3)) - var(s, 1);
  const PrimeField fp(7);
  const auto g = map_coefficients(f, fp);
  EXPECT_EQ(g.terms()[0].coeff.value(), 5u);  // 1/3 = 5 mod 7
  EXPECT_EQ(g.terms()[1].coeff.value(), 6u);
}
