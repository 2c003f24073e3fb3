#pragma once

// Row kernels for dense elimination over Z/pZ.
//
// Every kernel has a portable scalar reference and an AVX2 variant; the variant is
// picked once at runtime from the host CPU. All entries must already lie in [0, p)
// and p must be below 2^31.

#include <cstddef>
#include <cstdint>

namespace idcert::kernels {

enum class Isa { scalar, avx2 };

/// dst[i] <- (dst[i] + c * src[i]) mod p
using AxpyFn = void (*)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                        std::uint32_t c, std::uint32_t p);
/// v[i] <- (c * v[i]) mod p
using ScaleFn = void (*)(std::uint32_t* v, std::size_t n, std::uint32_t c, std::uint32_t p);

struct ModpKernels {
  Isa isa;
  AxpyFn axpy;
  ScaleFn scale;
};

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                     std::uint32_t c, std::uint32_t p);
void scale_mod_scalar(std::uint32_t* v, std::size_t n, std::uint32_t c, std::uint32_t p);

#if defined(__x86_64__) || defined(__i386__)
void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
                   std::uint32_t p);
void scale_mod_avx2(std::uint32_t* v, std::size_t n, std::uint32_t c, std::uint32_t p);
#endif

/// True if the host can run `isa`.
bool isa_supported(Isa isa);

/// Kernels for an explicit instruction set. Throws DomainError if unsupported.
const ModpKernels& modp_kernels(Isa isa);

/// Best kernels for this host. Setting IDCERT_SIMD=off in the environment pins the
/// scalar reference.
const ModpKernels& modp_kernels();

const char* isa_name(Isa isa);

}  // namespace idcert::kernels
