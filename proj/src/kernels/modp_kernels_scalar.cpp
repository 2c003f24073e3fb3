#include "idcert/kernels/modp_kernels.hpp"

namespace idcert::kernels {

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                     std::uint32_t c, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t t = static_cast<std::uint64_t>(c) * src[i] + dst[i];
    dst[i] = static_cast<std::uint32_t>(t % p);
  }
}

void scale_mod_scalar(std::uint32_t* v, std::size_t n, std::uint32_t c, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * v[i] % p);
  }
}

}  // namespace idcert::kernels
