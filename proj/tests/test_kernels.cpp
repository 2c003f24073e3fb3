#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "idcert/kernels/modp_kernels.hpp"

using namespace idcert::kernels;

namespace {

std::vector<std::uint32_t> random_vec(std::mt19937_64& g, std::size_t n, std::uint32_t p) {
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = static_cast<std::uint32_t>(g() % p);
  return v;
}

const std::uint32_t kPrimes[] = {3, 65521, 1073741789u, 2147483629u, 2147483647u};

}  // namespace

TEST(ModpKernels, ScalarMatchesWideArithmetic) {
  std::mt19937_64 g(7);
  for (std::uint32_t p : kPrimes) {
    for (std::size_t n : {0, 1, 5, 33}) {
      auto dst = random_vec(g, n, p), src = random_vec(g, n, p);
      const std::uint32_t c = static_cast<std::uint32_t>(g() % p);
      auto expect = dst;
      for (std::size_t i = 0; i < n; ++i)
        expect[i] = static_cast<std::uint32_t>((dst[i] + std::uint64_t{c} * src[i]) % p);
      axpy_mod_scalar(dst.data(), src.data(), n, c, p);
      EXPECT_EQ(dst, expect);
      auto v = src;
      scale_mod_scalar(v.data(), n, c, p);
      for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(v[i], std::uint64_t{c} * src[i] % p);
    }
  }
}

TEST(ModpKernels, Avx2MatchesScalar) {
  if (!isa_supported(Isa::avx2)) GTEST_SKIP() << "host has no AVX2";
  std::mt19937_64 g(11);
  for (std::uint32_t p : kPrimes) {
    for (std::size_t n = 0; n < 70; ++n) {
      for (std::uint32_t c : {0u, 1u, p - 1, static_cast<std::uint32_t>(g() % p)}) {
        auto a = random_vec(g, n, p), src = random_vec(g, n, p);
        auto b = a;
        axpy_mod_scalar(a.data(), src.data(), n, c, p);
        axpy_mod_avx2(b.data(), src.data(), n, c, p);
        ASSERT_EQ(a, b) << "p=" << p << " n=" << n << " c=" << c;
        auto s1 = src, s2 = src;
        scale_mod_scalar(s1.data(), n, c, p);
        scale_mod_avx2(s2.data(), n, c, p);
        ASSERT_EQ(s1, s2) << "p=" << p << " n=" << n << " c=" << c;
      }
    }
  }
}

TEST(ModpKernels, ExtremeValues) {
  if (!isa_supported(Isa::avx2)) GTEST_SKIP() << "host has no AVX2";
  const std::uint32_t p = 2147483647u;
  std::vector<std::uint32_t> a(19, p - 1), src(19, p - 1), b = a;
  axpy_mod_scalar(a.data(), src.data(), a.size(), p - 1, p);
  axpy_mod_avx2(b.data(), src.data(), b.size(), p - 1, p);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a[0], 0u);  // (p-1) + (p-1)^2 = p(p-1) = 0
}

TEST(ModpKernels, Dispatch) {
  EXPECT_TRUE(isa_supported(Isa::scalar));
  EXPECT_EQ(modp_kernels(Isa::scalar).isa, Isa::scalar);
  const ModpKernels& best = modp_kernels();
  EXPECT_TRUE(isa_supported(best.isa));
  EXPECT_STREQ(isa_name(Isa::scalar), "scalar");
  EXPECT_STREQ(isa_name(Isa::avx2), "avx2");
}
