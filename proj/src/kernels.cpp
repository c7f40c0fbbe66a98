#include "qwalk/kernels.hpp"

#include <array>

namespace qwalk::kernels {

namespace {

constexpr std::array kKernels = {
    KernelInfo{"scalar", &apply_coin_scalar},
#if defined(QWALK_KERNEL_AVX2)
    KernelInfo{"avx2", &apply_coin_avx2},
#endif
#if defined(QWALK_KERNEL_NEON)
    KernelInfo{"neon", &apply_coin_neon},
#endif
};

bool cpu_supports(std::string_view name) {
  if (name == "scalar") {
    return true;
  }
#if defined(QWALK_KERNEL_AVX2)
  if (name == "avx2") {
    return __builtin_cpu_supports("avx2") != 0;
  }
#endif
#if defined(QWALK_KERNEL_NEON)
  if (name == "neon") {
    return true;  // baseline on aarch64
  }
#endif
  return false;
}

const KernelInfo* pick_default() {
  // Last supported entry wins; kKernels is ordered scalar -> SIMD.
  const KernelInfo* best = &kKernels[0];
  for (const KernelInfo& k : kKernels) {
    if (cpu_supports(k.name)) {
      best = &k;
    }
  }
  return best;
}

const KernelInfo* g_active = nullptr;

const KernelInfo* active_info() {
  if (g_active == nullptr) {
    g_active = pick_default();
  }
  return g_active;
}

}  // namespace

std::span<const KernelInfo> available_kernels() { return kKernels; }

bool supported(std::string_view name) { return cpu_supports(name); }

ApplyCoinFn active_kernel() { return active_info()->fn; }

std::string_view active_kernel_name() { return active_info()->name; }

bool set_active_kernel(std::string_view name) {
  if (name == "auto") {
    g_active = pick_default();
    return true;
  }
  for (const KernelInfo& k : kKernels) {
    if (k.name == name && cpu_supports(name)) {
      g_active = &k;
      return true;
    }
  }
  return false;
}

}  // namespace qwalk::kernels
