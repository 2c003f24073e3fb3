#include "idcert/kernels/modp_kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

// Shoup multiplication: for a fixed multiplier c and precomputed
// c_shoup = floor(c * 2^32 / p), the product c*x mod p equals
// c*x - hi32(c_shoup*x)*p up to one final subtraction of p. With p < 2^31 the
// intermediate fits in 32 bits, so the whole lane arithmetic is 32-bit except the
// high-half product.

namespace idcert::kernels {
namespace {

__attribute__((target("avx2"))) inline __m256i reduce_once(__m256i r, __m256i p) {
  // r in [0, 2p): min(r, r - p) as unsigned picks the reduced value.
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

__attribute__((target("avx2"))) inline __m256i mulmod_shoup(__m256i x, __m256i c,
                                                          __m256i c_shoup, __m256i p) {
  __m256i even = _mm256_mul_epu32(x, c_shoup);
  __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), c_shoup);
  __m256i q = _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0b10101010);
  __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(x, c), _mm256_mullo_epi32(q, p));
  return reduce_once(r, p);
}

inline std::uint32_t shoup_constant(std::uint32_t c, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p);
}

}  // namespace

__attribute__((target("avx2"))) void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src,
                                                   std::size_t n, std::uint32_t c,
                                                   std::uint32_t p) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vcs = _mm256_set1_epi32(static_cast<int>(shoup_constant(c, p)));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_add_epi32(d, mulmod_shoup(x, vc, vcs, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce_once(s, vp));
  }
  if (i < n) axpy_mod_scalar(dst + i, src + i, n - i, c, p);
}

__attribute__((target("avx2"))) void scale_mod_avx2(std::uint32_t* v, std::size_t n,
                                                    std::uint32_t c, std::uint32_t p) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vcs = _mm256_set1_epi32(static_cast<int>(shoup_constant(c, p)));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v + i), mulmod_shoup(x, vc, vcs, vp));
  }
  if (i < n) scale_mod_scalar(v + i, n - i, c, p);
}

}  // namespace idcert::kernels

#endif
