#include <cstdlib>
#include <cstring>

#include "idcert/errors.hpp"
#include "idcert/kernels/modp_kernels.hpp"

namespace idcert::kernels {
namespace {

constexpr ModpKernels kScalar{Isa::scalar, &axpy_mod_scalar, &scale_mod_scalar};
#if defined(__x86_64__) || defined(__i386__)
constexpr ModpKernels kAvx2{Isa::avx2, &axpy_mod_avx2, &scale_mod_avx2};
#endif

const ModpKernels& select_best() {
  const char* env = std::getenv("IDCERT_SIMD");
  if (env != nullptr && std::strcmp(env, "off") == 0) return kScalar;
  if (isa_supported(Isa::avx2)) return modp_kernels(Isa::avx2);
  return kScalar;
}

}  // namespace

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

const ModpKernels& modp_kernels(Isa isa) {
  if (!isa_supported(isa)) throw DomainError(std::string("unsupported ISA: ") + isa_name(isa));
#if defined(__x86_64__) || defined(__i386__)
  if (isa == Isa::avx2) return kAvx2;
#endif
  return kScalar;
}

const ModpKernels& modp_kernels() {
  static const ModpKernels& best = select_best();
  return best;
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace idcert::kernels
