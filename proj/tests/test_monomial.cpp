#include <gtest/gtest.h>

#include <vector>

#include "idcert/errors.hpp"
#include "idcert/poly/monomial.hpp"
#include "idcert/poly/tensor_space.hpp"

using namespace idcert;

namespace {

Monomial mono(std::vector<unsigned> e) { return Monomial(e); }

}  // namespace

TEST(Monomial, Basics) {
  const Monomial a = mono({2, 1, 0}), b = mono({1, 1, 3});
  EXPECT_EQ(a.degree(), 3u);
  EXPECT_EQ(a.support(), 0b011u);
  EXPECT_EQ(a * b, mono({3, 2, 3}));
  EXPECT_EQ(Monomial::lcm(a, b), mono({2, 1, 3}));
  EXPECT_TRUE(mono({1, 1, 0}).divides(a));
  EXPECT_FALSE(b.divides(a));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_TRUE(mono({1, 0, 0}).coprime(mono({0, 2, 1})));
  EXPECT_TRUE(Monomial().is_one());
  EXPECT_THROW(Monomial(std::vector<unsigned>(33, 1)), DomainError);
}

TEST(Monomial, GrevlexOrder) {
  // degree first
  EXPECT_GT(grevlex_compare(mono({0, 0, 2}), mono({1, 0, 0})), 0);
  // same degree: smaller power of the last variable wins
  EXPECT_GT(grevlex_compare(mono({2, 1, 0}), mono({2, 0, 1})), 0);
  EXPECT_GT(grevlex_compare(mono({2, 0, 1}), mono({1, 1, 1})), 0);
  EXPECT_GT(grevlex_compare(mono({2, 0, 0}), mono({1, 1, 0})), 0);
  EXPECT_GT(grevlex_compare(mono({0, 2, 0}), mono({1, 0, 1})), 0);
  EXPECT_EQ(grevlex_compare(mono({1, 2}), mono({1, 2})), 0);
}

TEST(TensorSpace, Validation) {
  EXPECT_THROW(TensorSpace({}, {}), DomainError);
  EXPECT_THROW(TensorSpace({1}, {3}), DomainError);
  EXPECT_THROW(TensorSpace({2}, {0}), DomainError);
  EXPECT_THROW(TensorSpace({2, 2}, {1}), DomainError);
  EXPECT_THROW(TensorSpace({20, 20}, {1, 1}), DomainError);
  TensorSpace s({2, 5, 4}, {3, 2, 3});
  EXPECT_EQ(s.variable_count(), 11u);
  EXPECT_EQ(s.total_projective_dimension(), 8u);
  EXPECT_EQ(s.group_offset(2), 7u);
  EXPECT_EQ(s.group_of(8), 2u);
  EXPECT_EQ(s.variable_name(7), "x3_0");
}

TEST(TensorSpace, AmbientDimension) {
  EXPECT_EQ(ambient_dimension(TensorSpace({2, 5, 4}, {3, 2, 3})), 1200u);
  EXPECT_EQ(ambient_dimension(TensorSpace({3}, {5})), 21u);
  EXPECT_EQ(binomial(7, 2), 21);
}

TEST(TensorSpace, MultinomialWeight) {
  TensorSpace s({3, 2}, {3, 2});
  // x1_0^2 x1_1 * x2_0 x2_1: 3!/(2!1!) * 2!/(1!1!) = 6
  Monomial m;
  m.set(0, 2);
  m.set(1, 1);
  m.set(3, 1);
  m.set(4, 1);
  EXPECT_EQ(multinomial_weight(s, m), 6);
}
