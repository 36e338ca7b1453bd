#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"
#include "snreorder/kernels.hpp"

namespace snr::kernels {
namespace {

const KernelSet kScalar{"scalar", &scalar::potrf, &scalar::trsm,
                        &scalar::syrk, &scalar::gemm};

#ifdef SNREORDER_HAVE_AVX2
const KernelSet kAvx2{"avx2", &avx2::potrf, &avx2::trsm, &avx2::syrk,
                      &avx2::gemm};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

}  // namespace

const KernelSet& scalar_kernels() { return kScalar; }

const KernelSet* avx2_kernels() {
#ifdef SNREORDER_HAVE_AVX2
  static const bool ok = cpu_has_avx2();
  return ok ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet* find_kernels(std::string_view name) {
  if (name == "scalar") return &kScalar;
  if (name == "avx2") return avx2_kernels();
  return nullptr;
}

const KernelSet& active_kernels() {
  static const KernelSet* chosen = [] {
    const char* env = std::getenv("SNREORDER_KERNELS");
    if (env != nullptr && std::string_view(env) == "scalar") return &kScalar;
    const KernelSet* fast = avx2_kernels();
    return fast != nullptr ? fast : &kScalar;
  }();
  return *chosen;
}

}  // namespace snr::kernels
