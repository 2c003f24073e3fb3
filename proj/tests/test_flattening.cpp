#include <gtest/gtest.h>

#include "idcert/errors.hpp"
#include "idcert/flattening.hpp"
#include "idcert/genrand.hpp"
#include "test_support.hpp"

using namespace idcert;
using namespace idcert::testing;

namespace {

const RationalField Q;

QPoly random_sum(const TensorSpace& s, std::size_t h, std::uint64_t seed) {
  return random_tensor(s, h, RandomConfig{seed, 1L << 15}).tensor;
}

std::vector<Split> all_splits(const TensorSpace& s) {
  std::vector<Split> out;
  Multidegree a(s.factor_count(), 0);
  while (true) {
    out.push_back(make_split(s, a));
    std::size_t i = 0;
    while (i < a.size() && a[i] == s.degrees()[i]) a[i++] = 0;
    if (i == a.size()) break;
    ++a[i];
  }
  return out;
}

}  // namespace

TEST(Flatten, RankOneCubic) {
  const TensorSpace s({2}, {3});
  const auto fl = flatten(QPoly::variable(Q, 0).pow(3), s, make_split(s, {1}));
  EXPECT_EQ(fl.matrix.rows(), 2u);
  EXPECT_EQ(fl.matrix.cols(), 3u);
  EXPECT_EQ(fl.rank, 1u);
}

TEST(Flatten, SumOfTwoCubes) {
  const TensorSpace s({2}, {3});
  const QPoly f = QPoly::variable(Q, 0).pow(3) + QPoly::variable(Q, 1).pow(3);
  const auto fl = flatten(f, s, make_split(s, {1}));
  EXPECT_EQ(fl.rank, 2u);
  // rows: d/dx0 -> 3 x0^2, d/dx1 -> 3 x1^2
  EXPECT_EQ(fl.matrix, qmat({{3, 0, 0}, {0, 0, 3}}));
  EXPECT_EQ(image_span(fl), qmat({{1, 0, 0}, {0, 0, 1}}));
}

TEST(Flatten, SevenTernaryQuinticsGiveFullCatalecticant) {
  const TensorSpace s({3}, {5});
  const auto fl = flatten(random_sum(s, 7, 1), s, make_split(s, {2}));
  EXPECT_EQ(fl.matrix.rows(), 6u);
  EXPECT_EQ(fl.matrix.cols(), 10u);
  EXPECT_EQ(fl.rank, 6u);
}

TEST(Flatten, ImageSpanOfPowerAndZero) {
  const TensorSpace s({2}, {4});
  const auto fl = flatten(QPoly::variable(Q, 0).pow(4), s, make_split(s, {2}));
  ASSERT_EQ(image_span(fl).rows(), 1u);
  EXPECT_EQ(image_span(fl), qmat({{1, 0, 0}}));
  EXPECT_EQ(image_span(flatten(QPoly(Q), s, make_split(s, {2}))).rows(), 0u);
}

TEST(Flatten, Errors) {
  const TensorSpace s({2}, {3});
  EXPECT_THROW(flatten(QPoly::variable(Q, 0).pow(2), s, make_split(s, {1})), DomainError);
  EXPECT_THROW(make_split(s, {4}), DomainError);
  const auto fp = map_coefficients(QPoly::variable(Q, 0).pow(3), PrimeField(3));
  EXPECT_THROW(flatten(fp, s, make_split(s, {1})), DomainError);
  const auto f5 = map_coefficients(QPoly::variable(Q, 0).pow(3), PrimeField(5));
  EXPECT_EQ(flatten(f5, s, make_split(s, {1})).rank, 1u);
}

TEST(ChooseSplit, Examples) {
  const Split m = choose_split(TensorSpace({3}, {5}), 6, SplitMode::minimal);
  EXPECT_EQ(m.a, (Multidegree{2}));
  EXPECT_EQ(m.dim_a, 6u);
  const Split b = choose_split(TensorSpace({2, 5, 4}, {3, 2, 3}), 5, SplitMode::balanced);
  EXPECT_EQ(b.a, (Multidegree{2, 1, 2}));
  EXPECT_EQ(b.b, (Multidegree{1, 1, 1}));
  EXPECT_EQ(b.dim_b, 40u);
  EXPECT_THROW(choose_split(TensorSpace({2}, {3}), 5, SplitMode::minimal), DomainError);
  EXPECT_THROW(choose_split(TensorSpace({2}, {3}), 0, SplitMode::minimal), DomainError);
}

TEST(ChooseSplit, SegreFlatteningWhenAllDegreesAreOne) {
  const Split b = choose_split(TensorSpace({3, 3, 3}, {1, 1, 1}), 3, SplitMode::balanced);
  EXPECT_EQ(b.a, (Multidegree{1, 1, 0}));
  EXPECT_EQ(b.dim_a, 9u);
  EXPECT_EQ(b.dim_b, 3u);
}

TEST(ChooseSplit, MinimalSandwich) {
  for (unsigned size = 2; size <= 5; ++size)
    for (unsigned d = 1; d <= 6; ++d) {
      const TensorSpace s({size}, {d});
      const unsigned n = size - 1;
      for (std::size_t h = 1; h <= ambient_dimension(s); ++h) {
        const Split sp = choose_split(s, h, SplitMode::minimal);
        const unsigned s_ = sp.a[0];
        EXPECT_GE(binomial(n + s_, n), h);
        if (s_ > 0) EXPECT_LT(binomial(n + s_ - 1, n), h);
      }
    }
}

TEST(FlatteningLaws, LinearityRankBoundAndTransposition) {
  const std::vector<TensorSpace> spaces{TensorSpace({3}, {4}), TensorSpace({2, 3}, {2, 2}),
                                        TensorSpace({2, 2, 2}, {1, 2, 1})};
  TestRng rng(41);
  for (const auto& s : spaces) {
    for (int trial = 0; trial < 4; ++trial) {
      const std::size_t h = rng.uniform(1, 4);
      const QPoly t = random_sum(s, h, 100 + trial), u = random_sum(s, 2, 200 + trial);
      const mpq_class a = rng.coeff(20), b = rng.coeff(20);
      for (const Split& sp : all_splits(s)) {
        const auto ft = flatten(t, s, sp), fu = flatten(u, s, sp);
        const auto fsum = flatten(t.scaled(a) + u.scaled(b), s, sp);
        for (std::size_t r = 0; r < fsum.matrix.rows(); ++r)
          for (std::size_t c = 0; c < fsum.matrix.cols(); ++c)
            ASSERT_EQ(fsum.matrix(r, c), a * ft.matrix(r, c) + b * fu.matrix(r, c));
        EXPECT_LE(ft.rank, h);
        EXPECT_LE(ft.rank, std::min(ft.matrix.rows(), ft.matrix.cols()));
        Multidegree swapped = sp.b;
        EXPECT_EQ(flatten(t, s, make_split(s, swapped)).rank, ft.rank);
      }
    }
  }
}
